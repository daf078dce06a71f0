//! Exact scalars: arbitrary-precision integers and rationals, plus the
//! cyclotomic field Q(ω) with ω a primitive cube root of unity.
//!
//! Elements of Q(ω) are stored in the basis {1, ω} and multiplied with the
//! relation ω² = −1 − ω, so Binet-type expressions built from the cube roots
//! of unity evaluate to exact values.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// Rational from an integer.
pub fn rat(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

/// Reduced rational `num / den`. Panics if `den` is zero.
pub fn ratio(num: impl Into<BigInt>, den: impl Into<BigInt>) -> BigRational {
    BigRational::new(num.into(), den.into())
}

/// `2^k` as a big integer.
pub fn pow2(k: u64) -> BigInt {
    BigInt::one() << k
}

/// Converts a rational to an integer, failing unless the denominator is 1.
pub fn to_integer(x: &BigRational, context: &str) -> Result<BigInt> {
    if x.is_integer() {
        Ok(x.to_integer())
    } else {
        Err(Error::InexactDivision(format!("{context}: {x} is not an integer")))
    }
}

/// Exact division of a big integer, failing if `den` does not divide `num`.
pub fn exact_div(num: &BigInt, den: &BigInt, context: &str) -> Result<BigInt> {
    let (q, r) = num.div_rem(den);
    if r.is_zero() {
        Ok(q)
    } else {
        Err(Error::InexactDivision(format!("{context}: {den} does not divide {num}")))
    }
}

/// An element `re1 + re_w·ω` of Q(ω), where ω² + ω + 1 = 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EisensteinRational {
    pub re1: BigRational,
    pub re_w: BigRational,
}

impl EisensteinRational {
    pub fn new(re1: BigRational, re_w: BigRational) -> Self {
        Self { re1, re_w }
    }

    pub fn from_ints(a: i64, b: i64) -> Self {
        Self::new(rat(a), rat(b))
    }

    pub fn from_rational(re1: BigRational) -> Self {
        Self::new(re1, BigRational::zero())
    }

    /// ω, identified with the root (−1 + i√3)/2.
    pub fn omega() -> Self {
        Self::from_ints(0, 1)
    }

    /// ω² = −1 − ω, the conjugate root (−1 − i√3)/2.
    pub fn omega_sq() -> Self {
        Self::from_ints(-1, -1)
    }

    /// i√3 = ω − ω² = 1 + 2ω.
    pub fn i_sqrt3() -> Self {
        Self::from_ints(1, 2)
    }

    /// Complex conjugation, which swaps ω and ω²: (a + bω)‾ = (a − b) − bω.
    pub fn conj(&self) -> Self {
        Self::new(&self.re1 - &self.re_w, -&self.re_w)
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        Self::new(&self.re1 * k, &self.re_w * k)
    }

    pub fn is_rational(&self) -> bool {
        self.re_w.is_zero()
    }

    /// `self^n` by square-and-multiply.
    pub fn pow(&self, mut n: u64) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// The rational value, or `NotRational` if the ω coefficient is nonzero.
    pub fn to_rational(&self) -> Result<BigRational> {
        if self.is_rational() {
            Ok(self.re1.clone())
        } else {
            Err(Error::NotRational(self.to_string()))
        }
    }
}

/// (a+bω)(c+dω) = (ac − bd) + (ad + bc − bd)ω.
pub fn eis_mul(x: &EisensteinRational, y: &EisensteinRational) -> EisensteinRational {
    let bd = &x.re_w * &y.re_w;
    EisensteinRational::new(
        &x.re1 * &y.re1 - &bd,
        &x.re1 * &y.re_w + &x.re_w * &y.re1 - bd,
    )
}

pub fn eis_pow(x: &EisensteinRational, n: u64) -> EisensteinRational {
    x.pow(n)
}

pub fn eis_to_rational(x: &EisensteinRational) -> Result<BigRational> {
    x.to_rational()
}

impl Zero for EisensteinRational {
    fn zero() -> Self {
        Self::new(BigRational::zero(), BigRational::zero())
    }

    fn is_zero(&self) -> bool {
        self.re1.is_zero() && self.re_w.is_zero()
    }
}

impl One for EisensteinRational {
    fn one() -> Self {
        Self::new(BigRational::one(), BigRational::zero())
    }
}

impl<'a> Add<&'a EisensteinRational> for &'a EisensteinRational {
    type Output = EisensteinRational;
    fn add(self, rhs: &EisensteinRational) -> EisensteinRational {
        EisensteinRational::new(&self.re1 + &rhs.re1, &self.re_w + &rhs.re_w)
    }
}

impl<'a> Sub<&'a EisensteinRational> for &'a EisensteinRational {
    type Output = EisensteinRational;
    fn sub(self, rhs: &EisensteinRational) -> EisensteinRational {
        EisensteinRational::new(&self.re1 - &rhs.re1, &self.re_w - &rhs.re_w)
    }
}

impl<'a> Mul<&'a EisensteinRational> for &'a EisensteinRational {
    type Output = EisensteinRational;
    fn mul(self, rhs: &EisensteinRational) -> EisensteinRational {
        eis_mul(self, rhs)
    }
}

impl Add for EisensteinRational {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl Sub for EisensteinRational {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl Mul for EisensteinRational {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        eis_mul(&self, &rhs)
    }
}

impl Neg for EisensteinRational {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.re1, -self.re_w)
    }
}

impl fmt::Display for EisensteinRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}*w", self.re1, self.re_w)
    }
}
