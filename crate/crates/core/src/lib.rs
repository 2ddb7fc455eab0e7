//! Ordered factorizations, perfect partitions and perfect overpartitions.
//!
//! The crate counts and constructs three families of objects that are tied
//! together by MacMahon's bijection between ordered factorizations of `n + 1`
//! and perfect partitions of `n`:
//!
//! - [`factorize`]: ordered factorizations of `N`, the counts `f(N)`,
//!   `f(N, k)` and `f_v(N)` (factorizations with exactly `v` factors equal
//!   to 2), each computable by closed form, recurrence and exhaustive
//!   enumeration.
//! - [`perfect`]: perfect partitions, the bijection and its inverse, and a
//!   definition-level perfectness check.
//! - [`overperfect`]: perfect overpartitions, built by overlining the
//!   singleton part sizes of perfect partitions, with counting formulas for
//!   `p̄(n, r)` and `p̄(n)`.
//!
//! All counts are exact ([`Count`] is an unbounded integer).
//!
//! ```
//! use perfover::{factorize, overperfect};
//!
//! assert_eq!(factorize::f_total(24).to_string(), "20");
//! assert_eq!(overperfect::count_pop_total(479).to_string(), "5898");
//! ```

pub mod count;
pub mod error;
pub mod factorize;
pub mod numkit;
pub mod overperfect;
pub mod partition;
pub mod perfect;

pub use count::Count;
pub use error::{Error, Result};
pub use factorize::{
    FactorClass, FactorCounter, OrderedFactorization, OrderedFactorizations, PowerMix,
};
pub use numkit::PrimeFactorization;
pub use overperfect::{OverGroup, Overlines, Overpartition, PopRow};
pub use partition::{Partition, Partitions};
pub use perfect::{PerfectPartition, Perfectness};
