//! Binomial closed forms for `f_v(N)`.
//!
//! Write `N = 2^s·m` with `m` odd and `m > 1`, and let `f(m, j)` be the
//! number of ordered factorizations of the odd part into `j` factors. The
//! factorizations with exactly `v` 2's split into three disjoint families
//! (see [`PowerMix`](super::PowerMix)), each with its own sum over `j`.
//! Sums run over the index bounds as printed; out-of-range binomials are 0.

use super::counts::{f_nk_of, f_total_by_parts, pow2_twos};
use crate::count::Count;
use crate::error::{Error, Result};
use crate::numkit::{
    binomial, factorial, is_prime, prime_factorize, stirling2, two_adic_split, PrimeFactorization,
};

/// `N = 2^s·m` with the odd part factored.
struct Split {
    s: i64,
    odd: PrimeFactorization,
}

impl Split {
    fn of(n: u64, what: &'static str) -> Result<Split> {
        if n == 0 {
            return Err(Error::ZeroInput);
        }
        let (s, m) = two_adic_split(n);
        if m == 1 {
            return Err(Error::domain(
                what,
                format!("N = {n} is a power of 2; the odd part must exceed 1"),
            ));
        }
        Ok(Split {
            s: i64::from(s),
            odd: prime_factorize(m)?,
        })
    }

    fn even(n: u64, what: &'static str) -> Result<Split> {
        let split = Self::of(n, what)?;
        if split.s == 0 {
            return Err(Error::domain(what, format!("N = {n} is odd")));
        }
        Ok(split)
    }

    /// `Σ_{j=1}^{Ω(m)} weight(j)·f(m, j)`.
    fn sum_over_odd<F>(&self, mut weight: F) -> Count
    where
        F: FnMut(i64) -> Count,
    {
        (1..=self.odd.big_omega())
            .map(|j| weight(i64::from(j)) * f_nk_of(&self.odd, j))
            .sum()
    }
}

/// Factorizations of `N = 2^s·m` (`m > 1`) with exactly `s` 2's:
/// `Σ_j C(s+j, s)·f(m, j)`.
pub fn g_s_closed(n: u64) -> Result<Count> {
    let sp = Split::of(n, "g_s(N)")?;
    let s = sp.s;
    Ok(sp.sum_over_odd(|j| binomial(s + j, s)))
}

/// `f_{s−1}(N) = Σ_j j·C(j+s−1, s−1)·f(m, j)`, `s ≥ 1`.
pub fn f_sm1_closed(n: u64) -> Result<Count> {
    let sp = Split::even(n, "f_{s-1}(N)")?;
    let s = sp.s;
    Ok(sp.sum_over_odd(|j| binomial(j + s - 1, s - 1) * j as u64))
}

/// `f_{s−2}(N) = Σ_j [(s−1)·C(j+s−1, s−1) + C(j+1, 2)·C(j+s−2, s−2)]·f(m, j)`,
/// `s ≥ 2`.
pub fn f_sm2_closed(n: u64) -> Result<Count> {
    let sp = Split::even(n, "f_{s-2}(N)")?;
    let s = sp.s;
    if s < 2 {
        return Err(Error::domain(
            "f_{s-2}(N)",
            format!("requires ν₂(N) >= 2, got {s}"),
        ));
    }
    Ok(sp.sum_over_odd(|j| {
        binomial(j + s - 1, s - 1) * (s - 1) as u64
            + binomial(j + 1, 2) * binomial(j + s - 2, s - 2)
    }))
}

/// Factorizations with `v` 2's and no factor `2^a`, `a ≥ 2`:
///
/// `Σ_j C(v+j, v)·C(j+s−v−1, s−v)·f(m, j)`, for `0 ≤ v ≤ s` (0 beyond).
pub fn f_v1_closed(n: u64, v: u32) -> Result<Count> {
    let sp = Split::even(n, "f_v(N)_1")?;
    let (s, v) = (sp.s, i64::from(v));
    if v > s {
        return Ok(Count::zero());
    }
    Ok(sp.sum_over_odd(|j| binomial(v + j, v) * binomial(j + s - v - 1, s - v)))
}

/// Factorizations with `v` 2's, some higher powers of 2 and no even
/// non-powers of 2, for `0 ≤ v ≤ s−2` (0 beyond):
///
/// `Σ_j Σ_{i=1}^{⌊(s−v)/2⌋} C(v+i+j, j)·C(v+i, v)·C(s−v−i−1, i−1)·f(m, j)`.
pub fn f_v2_closed(n: u64, v: u32) -> Result<Count> {
    let sp = Split::even(n, "f_v(N)_2")?;
    let (s, v) = (sp.s, i64::from(v));
    if v > s - 2 {
        return Ok(Count::zero());
    }
    Ok(sp.sum_over_odd(|j| {
        (1..=(s - v) / 2)
            .map(|i| binomial(v + i + j, j) * binomial(v + i, v) * binomial(s - v - i - 1, i - 1))
            .sum()
    }))
}

/// Factorizations with `v` 2's, some higher powers of 2 and some even
/// non-powers of 2, for `0 ≤ v ≤ s−3` (0 beyond). The exponent `s − v` is
/// split as `r` (into higher powers) plus `s − v − r` (into even non-powers):
///
/// `Σ_j Σ_{r=2}^{s−v−1} Σ_{i=1}^{⌊(s−v)/2⌋}
///     C(v+i+j, j)·f(m, j)·C(v+i, i)·C(r−i−1, i−1)·C(j+s−v−r−1, s−v−r)`.
pub fn f_v3_closed(n: u64, v: u32) -> Result<Count> {
    let sp = Split::even(n, "f_v(N)_3")?;
    let (s, v) = (sp.s, i64::from(v));
    if v > s - 3 {
        return Ok(Count::zero());
    }
    Ok(sp.sum_over_odd(|j| {
        let mut acc = Count::zero();
        for r in 2..=s - v - 1 {
            let spread = binomial(j + s - v - r - 1, s - v - r);
            for i in 1..=(s - v) / 2 {
                acc += binomial(v + i + j, j)
                    * binomial(v + i, i)
                    * binomial(r - i - 1, i - 1)
                    * &spread;
            }
        }
        acc
    }))
}

/// `f_v(N)` for an even non-power of 2 as the sum of the three families,
/// with `v = s` handled by [`g_s_closed`].
pub fn f_v_closed(n: u64, v: u32) -> Result<Count> {
    let sp = Split::even(n, "f_v(N)")?;
    let s = sp.s as u32;
    if v > s {
        return Err(Error::domain(
            "f_v(N)",
            format!("requires v <= ν₂(N) = {s}, got {v}"),
        ));
    }
    if v == s {
        return g_s_closed(n);
    }
    Ok(f_v1_closed(n, v)? + f_v2_closed(n, v)? + f_v3_closed(n, v)?)
}

/// `f_v(N)` for any `N ≥ 1` using only closed forms: the odd rule
/// `f(N)·δ_{v0}` (with `f` from the `f(N, k)` sum), the power-of-2 formula,
/// or [`f_v_closed`]. Values of `v` above `ν₂(N)` give 0.
pub fn f_v_formula(n: u64, v: u32) -> Count {
    if n == 0 {
        return Count::zero();
    }
    let (s, m) = two_adic_split(n);
    if v > s {
        Count::zero()
    } else if m == 1 {
        pow2_twos(s, v)
    } else if s == 0 {
        f_total_by_parts(n)
    } else {
        f_v_closed(n, v).expect("domain checked above")
    }
}

/// `f(p^α, j) = C(α−1, j−1)` for an odd prime `p`.
pub fn f_prime_power(p: u64, alpha: u32, j: u32) -> Result<Count> {
    if p.is_multiple_of(2) || !is_prime(p) {
        return Err(Error::domain(
            "f(p^α, j)",
            format!("p = {p} is not an odd prime"),
        ));
    }
    Ok(binomial(i64::from(alpha) - 1, i64::from(j) - 1))
}

/// `f(p_1⋯p_t, j) = j!·S(t, j)` for `t` distinct primes.
pub fn f_squarefree(t: u32, j: u32) -> Count {
    factorial(j) * stirling2(t, j)
}
