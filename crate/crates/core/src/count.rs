//! Exact counting results.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, MulAssign};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{ToPrimitive, Zero};

/// An unbounded nonnegative integer. Arithmetic never wraps.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Count(BigUint);

impl Count {
    pub fn zero() -> Self {
        Count(BigUint::zero())
    }

    pub fn one() -> Self {
        Count(BigUint::from(1u32))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }

    pub fn as_biguint(&self) -> &BigUint {
        &self.0
    }

    pub fn to_signed(&self) -> BigInt {
        BigInt::from(self.0.clone())
    }

    /// Converts the result of a signed sum back into a count.
    ///
    /// Alternating formulas must land on a nonnegative value; a negative
    /// result means the formula was evaluated outside its domain.
    pub(crate) fn from_signed(value: BigInt) -> Self {
        match value.sign() {
            Sign::Minus => panic!("signed counting formula produced a negative value: {value}"),
            _ => Count(value.to_biguint().expect("nonnegative")),
        }
    }

    /// `2^exp`.
    pub fn pow2(exp: u32) -> Self {
        Count(BigUint::from(1u32) << exp)
    }
}

impl fmt::Display for Count {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl FromStr for Count {
    type Err = num_bigint::ParseBigIntError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.parse::<BigUint>().map(Count)
    }
}

macro_rules! from_unsigned {
    ($($t:ty),*) => {$(
        impl From<$t> for Count {
            fn from(v: $t) -> Self {
                Count(BigUint::from(v))
            }
        }

        impl PartialEq<$t> for Count {
            fn eq(&self, other: &$t) -> bool {
                self.0 == BigUint::from(*other)
            }
        }
    )*};
}

from_unsigned!(u8, u32, u64, u128, usize);

impl From<BigUint> for Count {
    fn from(v: BigUint) -> Self {
        Count(v)
    }
}

impl Add for Count {
    type Output = Count;
    fn add(self, rhs: Count) -> Count {
        Count(self.0 + rhs.0)
    }
}

impl<'a> Add<&'a Count> for Count {
    type Output = Count;
    fn add(self, rhs: &'a Count) -> Count {
        Count(self.0 + &rhs.0)
    }
}

impl<'a> Add<&'a Count> for &'a Count {
    type Output = Count;
    fn add(self, rhs: &'a Count) -> Count {
        Count(&self.0 + &rhs.0)
    }
}

impl AddAssign for Count {
    fn add_assign(&mut self, rhs: Count) {
        self.0 += rhs.0;
    }
}

impl<'a> AddAssign<&'a Count> for Count {
    fn add_assign(&mut self, rhs: &'a Count) {
        self.0 += &rhs.0;
    }
}

impl Mul for Count {
    type Output = Count;
    fn mul(self, rhs: Count) -> Count {
        Count(self.0 * rhs.0)
    }
}

impl<'a> Mul<&'a Count> for Count {
    type Output = Count;
    fn mul(self, rhs: &'a Count) -> Count {
        Count(self.0 * &rhs.0)
    }
}

impl<'a> Mul<&'a Count> for &'a Count {
    type Output = Count;
    fn mul(self, rhs: &'a Count) -> Count {
        Count(&self.0 * &rhs.0)
    }
}

impl Mul<u64> for Count {
    type Output = Count;
    fn mul(self, rhs: u64) -> Count {
        Count(self.0 * rhs)
    }
}

impl MulAssign<&Count> for Count {
    fn mul_assign(&mut self, rhs: &Count) {
        self.0 *= &rhs.0;
    }
}

impl Sum for Count {
    fn sum<I: Iterator<Item = Count>>(iter: I) -> Count {
        iter.fold(Count::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Count> for Count {
    fn sum<I: Iterator<Item = &'a Count>>(iter: I) -> Count {
        iter.fold(Count::zero(), |acc, x| acc + x)
    }
}
