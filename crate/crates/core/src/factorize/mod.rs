//! Ordered factorizations and the counting functions `f(N, k)`, `f(N)` and
//! `f_v(N)`.
//!
//! Every count here is available along independent routes: the exhaustive
//! enumerator in this module, the divisor-sum recurrences in [`FactorCounter`],
//! and the binomial closed forms in [`closed`].

use std::fmt;

use crate::count::Count;
use crate::error::{Error, Result};
use crate::numkit::{divisors, two_adic_split};

pub mod closed;
mod counts;

pub use closed::{
    f_prime_power, f_sm1_closed, f_sm2_closed, f_squarefree, f_v1_closed, f_v2_closed, f_v3_closed,
    f_v_closed, f_v_formula, g_s_closed,
};
pub use counts::{
    f_nk, f_nk_of, f_pow2_v, f_total, f_total_by_parts, f_v_recursive, FactorCounter,
};

/// A sequence of factors, each at least 2, whose product is `product`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrderedFactorization {
    factors: Vec<u64>,
    product: u64,
}

impl OrderedFactorization {
    pub fn new(factors: Vec<u64>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::domain("ordered factorization", "no factors"));
        }
        if let Some(&bad) = factors.iter().find(|&&a| a < 2) {
            return Err(Error::domain(
                "ordered factorization",
                format!("factor {bad} is below 2"),
            ));
        }
        let product = factors
            .iter()
            .try_fold(1u64, |acc, &a| acc.checked_mul(a))
            .ok_or_else(|| Error::domain("ordered factorization", "product overflows u64"))?;
        Ok(OrderedFactorization { factors, product })
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn product(&self) -> u64 {
        self.product
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Number of factors equal to 2.
    pub fn twos(&self) -> u32 {
        self.factors.iter().filter(|&&a| a == 2).count() as u32
    }

    pub fn contains_class(&self, class: FactorClass) -> bool {
        self.factors.iter().any(|&a| FactorClass::of(a) == class)
    }

    /// Which of the three disjoint families of factorizations with a given
    /// number of 2's this one belongs to.
    pub fn power_mix(&self) -> PowerMix {
        let higher = self.contains_class(FactorClass::HigherPow2);
        let even_other = self.contains_class(FactorClass::EvenNonPow2);
        match (higher, even_other) {
            (false, _) => PowerMix::NoHigherPowers,
            (true, false) => PowerMix::HigherPowersOnly,
            (true, true) => PowerMix::Mixed,
        }
    }
}

impl fmt::Display for OrderedFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str("·")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

/// Kind of a single factor, relative to the prime 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FactorClass {
    Two,
    /// `2^a` with `a ≥ 2`.
    HigherPow2,
    /// Even with odd part greater than 1.
    EvenNonPow2,
    Odd,
}

impl FactorClass {
    pub fn of(factor: u64) -> Self {
        if factor % 2 == 1 {
            return FactorClass::Odd;
        }
        let (_, odd) = two_adic_split(factor);
        match (factor, odd) {
            (2, _) => FactorClass::Two,
            (_, 1) => FactorClass::HigherPow2,
            _ => FactorClass::EvenNonPow2,
        }
    }
}

/// Partition of `{f_v(N)}` for even non-powers of 2 `N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PowerMix {
    /// No factor `2^a` with `a ≥ 2`.
    NoHigherPowers,
    /// Some higher powers of 2, no even non-powers of 2.
    HigherPowersOnly,
    /// Both higher powers of 2 and even non-powers of 2.
    Mixed,
}

/// Lexicographic stream of all ordered factorizations of a number.
///
/// `N = 1` yields nothing; `f(1) = 1` is a counting convention only.
#[derive(Debug, Clone)]
pub struct OrderedFactorizations {
    target: u64,
    candidates: Vec<u64>,
    // (index into candidates, remaining cofactor before this factor)
    path: Vec<(usize, u64)>,
    started: bool,
    finished: bool,
}

pub fn enumerate_ordered_factorizations(n: u64) -> Result<OrderedFactorizations> {
    let candidates = divisors(n)?.into_iter().filter(|&d| d >= 2).collect();
    Ok(OrderedFactorizations {
        target: n,
        candidates,
        path: Vec::new(),
        started: false,
        finished: n < 2,
    })
}

impl OrderedFactorizations {
    fn remaining(&self) -> u64 {
        match self.path.last() {
            Some(&(idx, before)) => before / self.candidates[idx],
            None => self.target,
        }
    }

    fn first_dividing(&self, from: usize, rem: u64) -> Option<usize> {
        self.candidates[from..]
            .iter()
            .take_while(|&&d| d <= rem)
            .position(|&d| rem.is_multiple_of(d))
            .map(|p| p + from)
    }

    // Extends the path with the smallest factor at every step until the
    // cofactor is exhausted.
    fn descend(&mut self) {
        loop {
            let rem = self.remaining();
            if rem == 1 {
                return;
            }
            let idx = self
                .first_dividing(0, rem)
                .expect("a divisor of the target always has a factor among its divisors");
            self.path.push((idx, rem));
        }
    }

    fn current(&self) -> OrderedFactorization {
        OrderedFactorization {
            factors: self.path.iter().map(|&(i, _)| self.candidates[i]).collect(),
            product: self.target,
        }
    }
}

impl Iterator for OrderedFactorizations {
    type Item = OrderedFactorization;

    fn next(&mut self) -> Option<OrderedFactorization> {
        if self.finished {
            return None;
        }
        if !self.started {
            self.started = true;
            self.descend();
            return Some(self.current());
        }
        while let Some((idx, before)) = self.path.pop() {
            if let Some(next) = self.first_dividing(idx + 1, before) {
                self.path.push((next, before));
                self.descend();
                return Some(self.current());
            }
        }
        self.finished = true;
        None
    }
}

/// `f_v(N)` by exhaustive enumeration: factorizations with exactly `v` 2's.
pub fn f_v_oracle(n: u64, v: u32) -> Result<Count> {
    let hits = enumerate_ordered_factorizations(n)?
        .filter(|of| of.twos() == v)
        .count();
    Ok(Count::from(hits))
}

/// `[f_0(N), f_1(N), ..., f_s(N)]` by one pass of enumeration, `s = ν₂(N)`.
pub fn twos_distribution_oracle(n: u64) -> Result<Vec<Count>> {
    if n == 0 {
        return Err(Error::ZeroInput);
    }
    let (s, _) = two_adic_split(n);
    let mut buckets = vec![0u64; s as usize + 1];
    for of in enumerate_ordered_factorizations(n)? {
        buckets[of.twos() as usize] += 1;
    }
    Ok(buckets.into_iter().map(Count::from).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seqs(n: u64) -> Vec<Vec<u64>> {
        enumerate_ordered_factorizations(n)
            .unwrap()
            .map(|of| of.factors().to_vec())
            .collect()
    }

    #[test]
    fn twelve_in_lexicographic_order() {
        assert_eq!(
            seqs(12),
            vec![
                vec![2, 2, 3],
                vec![2, 3, 2],
                vec![2, 6],
                vec![3, 2, 2],
                vec![3, 4],
                vec![4, 3],
                vec![6, 2],
                vec![12],
            ]
        );
    }

    #[test]
    fn six_and_primes() {
        let mut six = seqs(6);
        six.sort();
        assert_eq!(six, vec![vec![2, 3], vec![3, 2], vec![6]]);
        for p in [2u64, 3, 5, 7, 97, 7919] {
            assert_eq!(seqs(p), vec![vec![p]]);
        }
    }

    #[test]
    fn degenerate_inputs() {
        assert_eq!(enumerate_ordered_factorizations(1).unwrap().count(), 0);
        assert!(enumerate_ordered_factorizations(0).is_err());
        assert!(OrderedFactorization::new(vec![2, 1]).is_err());
        assert!(OrderedFactorization::new(vec![]).is_err());
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(f_v_oracle(12, 0).unwrap(), 3u32);
        assert_eq!(f_v_oracle(12, 1).unwrap(), 2u32);
        assert_eq!(f_v_oracle(12, 2).unwrap(), 3u32);
        assert_eq!(f_v_oracle(12, 3).unwrap(), 0u32);
        assert_eq!(f_v_oracle(45, 0).unwrap(), f_total(45));
        assert_eq!(
            twos_distribution_oracle(480).unwrap(),
            [138u32, 266, 255, 204, 65, 48].map(Count::from).to_vec()
        );
    }

    #[test]
    fn factor_classes() {
        assert_eq!(FactorClass::of(2), FactorClass::Two);
        assert_eq!(FactorClass::of(4), FactorClass::HigherPow2);
        assert_eq!(FactorClass::of(64), FactorClass::HigherPow2);
        assert_eq!(FactorClass::of(6), FactorClass::EvenNonPow2);
        assert_eq!(FactorClass::of(40), FactorClass::EvenNonPow2);
        assert_eq!(FactorClass::of(9), FactorClass::Odd);
    }

    #[test]
    fn display() {
        let of = OrderedFactorization::new(vec![3, 2, 2]).unwrap();
        assert_eq!(of.to_string(), "3·2·2");
        assert_eq!(of.product(), 12);
        assert_eq!(of.twos(), 2);
    }
}
