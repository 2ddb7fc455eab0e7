use std::collections::HashMap;

use num_bigint::BigInt;

use crate::count::Count;
use crate::error::{Error, Result};
use crate::numkit::{binomial, divisors, prime_factorize, two_adic_split, PrimeFactorization};

/// `f(N, k)` by inclusion–exclusion over the prime exponents of `N`:
///
/// `f(N,k) = Σ_{i=0}^{k−1} (−1)^i C(k,i) Π_j C(α_j + k − i − 1, α_j)`.
pub fn f_nk(n: u64, k: u32) -> Result<Count> {
    if n <= 1 {
        return Err(Error::domain("f(N, k)", format!("requires N > 1, got {n}")));
    }
    if k == 0 {
        return Err(Error::domain("f(N, k)", "requires k >= 1"));
    }
    Ok(f_nk_of(&prime_factorize(n)?, k))
}

/// `f(N, k)` for an already factored `N > 1`.
pub fn f_nk_of(pf: &PrimeFactorization, k: u32) -> Count {
    if k == 0 || k > pf.big_omega() {
        return Count::zero();
    }
    let k = i64::from(k);
    let mut acc = BigInt::from(0);
    for i in 0..k {
        let mut term = binomial(k, i).to_signed();
        for alpha in pf.exponents() {
            let alpha = i64::from(alpha);
            term *= binomial(alpha + k - i - 1, alpha).to_signed();
        }
        if i % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Count::from_signed(acc)
}

/// `f(N) = f(N,1) + ... + f(N,Ω(N))`, with `f(1) = 1` and `f(0) = 0`.
pub fn f_total_by_parts(n: u64) -> Count {
    match n {
        0 => Count::zero(),
        1 => Count::one(),
        _ => {
            let pf = prime_factorize(n).expect("nonzero");
            (1..=pf.big_omega()).map(|k| f_nk_of(&pf, k)).sum()
        }
    }
}

/// `f(N)` by the divisor-sum recurrence `f(N) = Σ_{d|N, d<N} f(d)`.
pub fn f_total(n: u64) -> Count {
    FactorCounter::new().total(n)
}

/// `f_v(2^s)`: ordered factorizations of `2^s` with exactly `v` 2's.
///
/// `δ_{vs} + Σ_{i=1}^{⌊(s−v)/2⌋} C(v+i, v)·C(s−v−i−1, i−1)`.
pub fn f_pow2_v(s: u32, v: u32) -> Result<Count> {
    if v > s {
        return Err(Error::domain(
            "f_v(2^s)",
            format!("requires v <= s, got v = {v}, s = {s}"),
        ));
    }
    Ok(pow2_twos(s, v))
}

pub(crate) fn pow2_twos(s: u32, v: u32) -> Count {
    if v > s {
        return Count::zero();
    }
    let (s, v) = (i64::from(s), i64::from(v));
    let delta = if v == s { Count::one() } else { Count::zero() };
    delta
        + (1..=(s - v) / 2)
            .map(|i| binomial(v + i, v) * binomial(s - v - i - 1, i - 1))
            .sum::<Count>()
}

/// `f_v(N)` by the divisor recurrences, one fresh memo per call.
pub fn f_v_recursive(n: u64, v: u32) -> Count {
    FactorCounter::new().twos(n, v)
}

/// Memoized recurrences for `f(N)` and `f_v(N)`.
///
/// - odd `N`: `f_v(N) = f(N)·δ_{v0}`;
/// - `N = 2^s`: the closed form of [`f_pow2_v`];
/// - otherwise, for `v > 0`: `f_v(N) = f_{v−1}(N/2) + Σ_{d|N, 2d<N} f_v(d)`,
///   and `f_0(N) = 1 + Σ_{d>1, d|N, 2d<N} f_0(d)`.
///
/// In the `v > 0` sum only divisors with `ν₂(d) ≥ v` can contribute; those
/// are the only ones visited unless pruning is switched off.
///
/// The caches are plain maps owned by the counter, so a counter is a
/// single-threaded object; build one per thread.
#[derive(Debug, Clone)]
pub struct FactorCounter {
    totals: HashMap<u64, Count>,
    by_twos: HashMap<(u64, u32), Count>,
    prune: bool,
}

impl Default for FactorCounter {
    fn default() -> Self {
        Self::new()
    }
}

impl FactorCounter {
    pub fn new() -> Self {
        FactorCounter {
            totals: HashMap::new(),
            by_twos: HashMap::new(),
            prune: true,
        }
    }

    /// A counter that sums over every divisor in the `v > 0` recurrence.
    pub fn unpruned() -> Self {
        FactorCounter {
            prune: false,
            ..Self::new()
        }
    }

    pub fn total(&mut self, n: u64) -> Count {
        if n <= 1 {
            return Count::from(n);
        }
        if let Some(c) = self.totals.get(&n) {
            return c.clone();
        }
        let ds = divisors(n).expect("nonzero");
        let mut acc = Count::zero();
        for &d in &ds[..ds.len() - 1] {
            acc += self.total(d);
        }
        self.totals.insert(n, acc.clone());
        acc
    }

    pub fn twos(&mut self, n: u64, v: u32) -> Count {
        if n == 0 {
            return Count::zero();
        }
        let (s, odd) = two_adic_split(n);
        if v > s {
            return Count::zero();
        }
        if odd == 1 {
            return pow2_twos(s, v);
        }
        if s == 0 {
            return self.total(n);
        }
        if let Some(c) = self.by_twos.get(&(n, v)) {
            return c.clone();
        }
        let ds = divisors(n).expect("nonzero");
        let proper = ds.iter().copied().filter(|&d| 2 * d < n);
        let value = if v > 0 {
            let mut acc = self.twos(n / 2, v - 1);
            for d in proper {
                if self.prune && d.trailing_zeros() < v {
                    continue;
                }
                acc += self.twos(d, v);
            }
            acc
        } else {
            let mut acc = Count::one();
            for d in proper.filter(|&d| d > 1) {
                acc += self.twos(d, 0);
            }
            acc
        };
        self.by_twos.insert((n, v), value.clone());
        value
    }

    /// `[f_0(N), ..., f_s(N)]` with `s = ν₂(N)`.
    pub fn twos_distribution(&mut self, n: u64) -> Vec<Count> {
        let (s, _) = two_adic_split(n.max(1));
        (0..=s).map(|v| self.twos(n, v)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factorize::{enumerate_ordered_factorizations, twos_distribution_oracle};

    #[test]
    fn f_nk_examples() {
        assert_eq!(f_nk(12, 1).unwrap(), 1u32);
        assert_eq!(f_nk(12, 2).unwrap(), 4u32);
        assert_eq!(f_nk(12, 3).unwrap(), 3u32);
        assert_eq!(f_nk(12, 4).unwrap(), 0u32);
        for p in [2u64, 3, 101] {
            assert_eq!(f_nk(p, 1).unwrap(), 1u32);
        }
        assert!(f_nk(1, 1).is_err());
        assert!(f_nk(0, 1).is_err());
    }

    #[test]
    fn f_nk_matches_enumeration_by_length() {
        for n in 2..=600u64 {
            let mut by_len = [0u64; 12];
            for of in enumerate_ordered_factorizations(n).unwrap() {
                by_len[of.len()] += 1;
            }
            for (k, &want) in by_len.iter().enumerate().skip(1) {
                assert_eq!(f_nk(n, k as u32).unwrap(), want, "f({n},{k})");
            }
        }
    }

    #[test]
    fn totals() {
        assert_eq!(f_total(1), 1u32);
        assert_eq!(f_total(0), 0u32);
        assert_eq!(f_total(12), 8u32);
        assert_eq!(f_total(24), 20u32);
        assert_eq!(f_total(480), 976u32);
        assert_eq!(f_total_by_parts(12), 8u32);
        assert_eq!(f_total_by_parts(6), 3u32);
        assert_eq!(f_total_by_parts(1), 1u32);
        assert_eq!(f_total_by_parts(480), 976u32);
    }

    #[test]
    fn twenty_four_chain() {
        let mut fc = FactorCounter::new();
        let chain: Vec<_> = [1u64, 2, 3, 4, 6, 8, 12]
            .iter()
            .map(|&d| fc.total(d).to_u64().unwrap())
            .collect();
        assert_eq!(chain, vec![1, 1, 1, 2, 3, 4, 8]);
        assert_eq!(chain.iter().sum::<u64>(), 20);
        assert_eq!(fc.total(24), 20u32);
    }

    #[test]
    fn pow2_examples() {
        assert_eq!(f_pow2_v(4, 0).unwrap(), 2u32);
        for s in 0..20 {
            assert_eq!(f_pow2_v(s, s).unwrap(), 1u32);
        }
        assert_eq!(
            f_pow2_v(5, 1).unwrap(),
            twos_distribution_oracle(32).unwrap()[1]
        );
        assert!(f_pow2_v(2, 3).is_err());
    }

    #[test]
    fn recursive_table_480() {
        let got: Vec<_> = (0..=5).map(|v| f_v_recursive(480, v)).collect();
        assert_eq!(
            got,
            [138u32, 266, 255, 204, 65, 48].map(Count::from).to_vec()
        );
        assert_eq!(f_v_recursive(12, 2), 3u32);
        assert_eq!(f_v_recursive(480, 6), 0u32);
    }

    #[test]
    fn pruning_is_transparent() {
        let mut pruned = FactorCounter::new();
        let mut full = FactorCounter::unpruned();
        for n in 1..=3000u64 {
            assert_eq!(
                pruned.twos_distribution(n),
                full.twos_distribution(n),
                "N = {n}"
            );
        }
    }

    #[test]
    fn twice_odd_difference() {
        for m in (3..400u64).step_by(2) {
            let n = 2 * m;
            let diff = f_v_recursive(n, 1).to_signed() - f_v_recursive(n, 0).to_signed();
            assert_eq!(diff, f_total(m).to_signed(), "N = {n}");
        }
    }
}
