//! Exact arithmetic primitives: factorization, divisors, binomials,
//! Stirling numbers, composition counts and the 2-adic valuation.
//!
//! Factorization is deterministic trial division up to `√n`. It is meant for
//! desk-scale inputs (up to about `10^9`); every input below `2^64` is
//! handled correctly, just slowly near the top of the range.

use std::fmt;

use num_bigint::BigUint;

use crate::count::Count;
use crate::error::{Error, Result};

/// Prime-power factorization `p_1^a_1 ... p_r^a_r`, ascending by prime.
///
/// The empty list represents 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct PrimeFactorization {
    entries: Vec<(u64, u32)>,
}

impl PrimeFactorization {
    pub fn entries(&self) -> &[(u64, u32)] {
        &self.entries
    }

    pub fn exponents(&self) -> impl Iterator<Item = u32> + '_ {
        self.entries.iter().map(|&(_, e)| e)
    }

    /// `Ω(n)`: number of prime factors counted with multiplicity.
    pub fn big_omega(&self) -> u32 {
        self.exponents().sum()
    }

    /// Number of distinct primes.
    pub fn distinct(&self) -> usize {
        self.entries.len()
    }

    pub fn exponent_of(&self, p: u64) -> u32 {
        self.entries
            .iter()
            .find(|&&(q, _)| q == p)
            .map_or(0, |&(_, e)| e)
    }

    /// The represented integer, or `None` if it does not fit in `u64`.
    pub fn value(&self) -> Option<u64> {
        self.entries
            .iter()
            .try_fold(1u64, |acc, &(p, e)| acc.checked_mul(p.checked_pow(e)?))
    }

    pub fn is_squarefree(&self) -> bool {
        self.exponents().all(|e| e == 1)
    }
}

impl fmt::Display for PrimeFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "1");
        }
        for (i, &(p, e)) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, "·")?;
            }
            if e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

pub fn prime_factorize(n: u64) -> Result<PrimeFactorization> {
    if n == 0 {
        return Err(Error::ZeroInput);
    }
    let mut entries = Vec::new();
    let mut rest = n;
    let tz = rest.trailing_zeros();
    if tz > 0 {
        entries.push((2, tz));
        rest >>= tz;
    }
    let mut p = 3u64;
    while p <= rest / p {
        if rest.is_multiple_of(p) {
            let mut e = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                e += 1;
            }
            entries.push((p, e));
        }
        p += 2;
    }
    if rest > 1 {
        entries.push((rest, 1));
    }
    Ok(PrimeFactorization { entries })
}

pub fn big_omega(pf: &PrimeFactorization) -> u32 {
    pf.big_omega()
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut p = 3u64;
    while p <= n / p {
        if n.is_multiple_of(p) {
            return false;
        }
        p += 2;
    }
    true
}

/// `ν₂(n)` by Legendre's formula: `Σ_{i≥1} (⌊n/2^i⌋ − ⌊(n−1)/2^i⌋)`.
///
/// The sum stops at `i = ⌊log₂ n⌋`; every later term is zero.
pub fn nu2_legendre(n: u64) -> Result<u32> {
    if n == 0 {
        return Err(Error::ZeroInput);
    }
    let top = 63 - n.leading_zeros();
    let s = (1..=top).map(|i| (n >> i) - ((n - 1) >> i)).sum::<u64>();
    Ok(s as u32)
}

/// Splits `n = 2^s · m` with `m` odd. `n` must be nonzero.
pub fn two_adic_split(n: u64) -> (u32, u64) {
    debug_assert!(n > 0);
    let s = n.trailing_zeros();
    (s, n >> s)
}

/// `C(n, k)`, taken to be 0 whenever `k < 0`, `k > n` or `n < 0`.
pub fn binomial(n: i64, k: i64) -> Count {
    if n < 0 || k < 0 || k > n {
        return Count::zero();
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    let mut acc = BigUint::from(1u32);
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    Count::from(acc)
}

/// Number of compositions of `n` into `k` parts: `C(n−1, k−1)`.
pub fn compositions_count(n: u64, k: u64) -> Count {
    binomial(n as i64 - 1, k as i64 - 1)
}

/// Number of compositions of `n` into `k` parts, all at least 2: `C(n−k−1, k−1)`.
pub fn compositions_no_ones_count(n: u64, k: u64) -> Count {
    binomial(n as i64 - k as i64 - 1, k as i64 - 1)
}

/// Stirling number of the second kind via `S(t,j) = j·S(t−1,j) + S(t−1,j−1)`.
pub fn stirling2(t: u32, j: u32) -> Count {
    if j > t {
        return Count::zero();
    }
    let width = j as usize + 1;
    let mut row = vec![BigUint::from(0u32); width];
    row[0] = BigUint::from(1u32);
    for _ in 0..t {
        for k in (1..width).rev() {
            let carried = &row[k] * (k as u64);
            row[k] = carried + &row[k - 1];
        }
        row[0] = BigUint::from(0u32);
    }
    Count::from(row.swap_remove(j as usize))
}

pub fn factorial(n: u32) -> Count {
    let mut acc = BigUint::from(1u32);
    for i in 2..=n as u64 {
        acc *= i;
    }
    Count::from(acc)
}

/// All divisors of `n` in ascending order.
pub fn divisors(n: u64) -> Result<Vec<u64>> {
    if n == 0 {
        return Err(Error::ZeroInput);
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d <= n / d {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Ok(small)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn enumerate_compositions(n: u64, k: u64, min_part: u64) -> u64 {
        if k == 0 {
            return u64::from(n == 0);
        }
        (min_part..=n)
            .map(|first| enumerate_compositions(n - first, k - 1, min_part))
            .sum()
    }

    // Ordered set partitions of {0..t}: assign each element a block label,
    // keep assignments whose labels used are exactly 0..j (surjections).
    fn surjections(t: u32, j: u32) -> u64 {
        if j == 0 {
            return u64::from(t == 0);
        }
        let mut count = 0;
        let total = (j as u64).pow(t);
        for code in 0..total {
            let mut seen = vec![false; j as usize];
            let mut c = code;
            for _ in 0..t {
                seen[(c % j as u64) as usize] = true;
                c /= j as u64;
            }
            if seen.iter().all(|&s| s) {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn factorize_examples() {
        assert_eq!(prime_factorize(12).unwrap().entries(), &[(2, 2), (3, 1)]);
        assert_eq!(prime_factorize(1).unwrap().entries(), &[]);
        assert_eq!(
            prime_factorize(480).unwrap().entries(),
            &[(2, 5), (3, 1), (5, 1)]
        );
        assert_eq!(prime_factorize(0), Err(Error::ZeroInput));
        assert_eq!(
            prime_factorize(999_999_937).unwrap().entries(),
            &[(999_999_937, 1)]
        );
    }

    #[test]
    fn big_omega_examples() {
        assert_eq!(big_omega(&prime_factorize(12).unwrap()), 3);
        assert_eq!(big_omega(&prime_factorize(1).unwrap()), 0);
        assert_eq!(big_omega(&prime_factorize(480).unwrap()), 7);
    }

    #[test]
    fn legendre_examples() {
        assert_eq!(nu2_legendre(480).unwrap(), 5);
        assert_eq!(nu2_legendre(12).unwrap(), 2);
        assert_eq!(nu2_legendre(1).unwrap(), 0);
        for n in (1..200).step_by(2) {
            assert_eq!(nu2_legendre(n).unwrap(), 0);
        }
        assert_eq!(nu2_legendre(1 << 40).unwrap(), 40);
        assert!(nu2_legendre(0).is_err());
    }

    #[test]
    fn legendre_matches_factorization_up_to_a_million() {
        for n in 1..=1_000_000u64 {
            let from_pf = prime_factorize(n).unwrap().exponent_of(2);
            assert_eq!(nu2_legendre(n).unwrap(), from_pf, "n = {n}");
        }
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(5, 2), 10u32);
        assert_eq!(binomial(3, 5), 0u32);
        assert_eq!(binomial(0, 0), 1u32);
        assert_eq!(binomial(-1, 0), 0u32);
        assert_eq!(binomial(4, -1), 0u32);
        assert_eq!(
            binomial(100, 50).to_string(),
            "100891344545564193334812497256"
        );
    }

    #[test]
    fn vandermonde_convolution() {
        for x in 0..=30i64 {
            for y in 0..=30i64 {
                let lhs: Count = (0..=x.max(y))
                    .map(|i| binomial(x, i) * binomial(y, y - i))
                    .sum();
                assert_eq!(lhs, binomial(x + y, y), "X={x} Y={y}");
            }
        }
    }

    #[test]
    fn composition_counts() {
        assert_eq!(compositions_count(2, 1), 1u32);
        assert_eq!(compositions_count(2, 2), 1u32);
        assert_eq!(compositions_count(5, 3), 6u32);
        assert_eq!(compositions_count(4, 5), 0u32);
        assert_eq!(compositions_no_ones_count(4, 2), 1u32);
        assert_eq!(compositions_no_ones_count(4, 1), 1u32);
        assert_eq!(compositions_no_ones_count(3, 2), 0u32);
        assert_eq!(compositions_no_ones_count(1, 1), 0u32);
        for n in 1..=12 {
            for k in 1..=13 {
                assert_eq!(compositions_count(n, k), enumerate_compositions(n, k, 1));
                assert_eq!(
                    compositions_no_ones_count(n, k),
                    enumerate_compositions(n, k, 2)
                );
            }
        }
    }

    #[test]
    fn stirling_examples() {
        assert_eq!(stirling2(3, 2), 3u32);
        assert_eq!(stirling2(0, 0), 1u32);
        for t in 1..10 {
            assert_eq!(stirling2(t, t), 1u32);
            assert_eq!(stirling2(t, 0), 0u32);
        }
        assert_eq!(stirling2(10, 4), 34105u32);
    }

    #[test]
    fn stirling_counts_ordered_set_partitions() {
        for t in 0..=6 {
            let fubini: Count = (0..=t).map(|j| factorial(j) * stirling2(t, j)).sum();
            let brute: u64 = (0..=t).map(|j| surjections(t, j)).sum();
            assert_eq!(fubini, brute, "t = {t}");
        }
    }

    #[test]
    fn divisor_examples() {
        assert_eq!(divisors(12).unwrap(), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1).unwrap(), vec![1]);
        assert_eq!(divisors(24).unwrap(), vec![1, 2, 3, 4, 6, 8, 12, 24]);
        assert_eq!(divisors(49).unwrap(), vec![1, 7, 49]);
    }

    proptest! {
        #[test]
        fn divisors_pair_up(n in 1u64..200_000) {
            let ds = divisors(n).unwrap();
            prop_assert!(ds.windows(2).all(|w| w[0] < w[1]));
            for &d in &ds {
                prop_assert_eq!(n % d, 0);
                prop_assert!(ds.binary_search(&(n / d)).is_ok());
            }
        }

        #[test]
        fn factorization_reconstructs(n in 1u64..10_000_000) {
            let pf = prime_factorize(n).unwrap();
            prop_assert_eq!(pf.value(), Some(n));
            prop_assert!(pf.entries().windows(2).all(|w| w[0].0 < w[1].0));
            prop_assert!(pf.entries().iter().all(|&(p, e)| is_prime(p) && e >= 1));
        }
    }
}
