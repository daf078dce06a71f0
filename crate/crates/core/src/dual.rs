//! Dual numbers `a + εb` with ε² = 0 over an arbitrary commutative scalar ring.
//!
//! - `(a₁ + εb₁) + (a₂ + εb₂) = (a₁ + a₂) + ε(b₁ + b₂)`
//! - `(a₁ + εb₁)(a₂ + εb₂) = a₁a₂ + ε(a₁b₂ + a₂b₁)`
//! - `(a₁ + εb₁)/(a₂ + εb₂) = a₁/a₂ + ε(b₁a₂ − a₁b₂)/a₂²`, defined for a₂ ≠ 0
//! - `conj(a + εb) = a − εb`
//!
//! Elements with zero real part are zero divisors, so division by them fails
//! with [`Error::DivisionByPureDual`].

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Scalar ring the dual numbers are built over.
pub trait Ring:
    Clone
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
}

impl<T> Ring for T where
    T: Clone
        + PartialEq
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
{
}

/// A dual number `real + ε·dual`. Equality is componentwise.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Dual<T> {
    pub real: T,
    pub dual: T,
}

impl<T> Dual<T> {
    pub const fn new(real: T, dual: T) -> Self {
        Self { real, dual }
    }

    pub fn map<U>(self, mut f: impl FnMut(T) -> U) -> Dual<U> {
        Dual::new(f(self.real), f(self.dual))
    }

    pub fn try_map<U, E>(self, mut f: impl FnMut(T) -> std::result::Result<U, E>) -> std::result::Result<Dual<U>, E> {
        Ok(Dual::new(f(self.real)?, f(self.dual)?))
    }
}

impl<T: Ring> Dual<T> {
    pub fn from_real(real: T) -> Self {
        Self::new(real, T::zero())
    }

    /// The dual unit ε.
    pub fn epsilon() -> Self {
        Self::new(T::zero(), T::one())
    }

    pub fn conj(&self) -> Self {
        Self::new(self.real.clone(), -self.dual.clone())
    }

    pub fn scale(&self, k: &T) -> Self {
        Self::new(self.real.clone() * k.clone(), self.dual.clone() * k.clone())
    }

    pub fn is_pure_dual(&self) -> bool {
        self.real.is_zero()
    }

    /// The product with the ε-coefficient `a₁b₂ + a₂b₂` exactly as misprinted in
    /// the source formula. Neither commutative nor unital; kept only so the
    /// discrepancy can be demonstrated.
    pub fn mul_as_printed(&self, rhs: &Self) -> Self {
        Self::new(
            self.real.clone() * rhs.real.clone(),
            self.real.clone() * rhs.dual.clone() + rhs.real.clone() * rhs.dual.clone(),
        )
    }
}

impl<T: Ring + Div<Output = T>> Dual<T> {
    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.real.is_zero() {
            return Err(Error::DivisionByPureDual);
        }
        let a2 = rhs.real.clone();
        let real = self.real.clone() / a2.clone();
        let dual = (self.dual.clone() * a2.clone() - self.real.clone() * rhs.dual.clone())
            / (a2.clone() * a2);
        Ok(Self::new(real, dual))
    }
}

pub fn dual_add<T: Ring>(x: &Dual<T>, y: &Dual<T>) -> Dual<T> {
    x.clone() + y.clone()
}

pub fn dual_mul<T: Ring>(x: &Dual<T>, y: &Dual<T>) -> Dual<T> {
    x.clone() * y.clone()
}

pub fn dual_div<T: Ring + Div<Output = T>>(x: &Dual<T>, y: &Dual<T>) -> Result<Dual<T>> {
    x.checked_div(y)
}

pub fn dual_conj<T: Ring>(x: &Dual<T>) -> Dual<T> {
    x.conj()
}

impl<T: Ring> Add for Dual<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.real + rhs.real, self.dual + rhs.dual)
    }
}

impl<T: Ring> Sub for Dual<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.real - rhs.real, self.dual - rhs.dual)
    }
}

impl<T: Ring> Mul for Dual<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let dual = self.real.clone() * rhs.dual + self.dual * rhs.real.clone();
        Self::new(self.real * rhs.real, dual)
    }
}

impl<T: Ring> Neg for Dual<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.real, -self.dual)
    }
}

impl<'a, T: Ring> Add<&'a Dual<T>> for &'a Dual<T> {
    type Output = Dual<T>;
    fn add(self, rhs: &Dual<T>) -> Dual<T> {
        self.clone() + rhs.clone()
    }
}

impl<'a, T: Ring> Sub<&'a Dual<T>> for &'a Dual<T> {
    type Output = Dual<T>;
    fn sub(self, rhs: &Dual<T>) -> Dual<T> {
        self.clone() - rhs.clone()
    }
}

impl<'a, T: Ring> Mul<&'a Dual<T>> for &'a Dual<T> {
    type Output = Dual<T>;
    fn mul(self, rhs: &Dual<T>) -> Dual<T> {
        self.clone() * rhs.clone()
    }
}

impl<T: Ring> Zero for Dual<T> {
    fn zero() -> Self {
        Self::new(T::zero(), T::zero())
    }

    fn is_zero(&self) -> bool {
        self.real.is_zero() && self.dual.is_zero()
    }
}

impl<T: Ring> One for Dual<T> {
    fn one() -> Self {
        Self::from_real(T::one())
    }
}

impl<T: Ring + Div<Output = T>> Div for Dual<T> {
    type Output = Self;

    /// Panics on a pure-dual divisor; use [`Dual::checked_div`] to handle that case.
    fn div(self, rhs: Self) -> Self {
        self.checked_div(&rhs).expect("division by a pure dual number")
    }
}

/// Renders as `re + du*eps`, or just `re` when the dual part is zero.
impl<T: fmt::Display + Zero> fmt::Display for Dual<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.real)?;
        if self.dual.is_zero() {
            return Ok(());
        }
        let du = self.dual.to_string();
        if du.contains(' ') {
            write!(f, " + ({du})*eps")
        } else if let Some(abs) = du.strip_prefix('-') {
            write!(f, " - {abs}*eps")
        } else {
            write!(f, " + {du}*eps")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, ratio, BigInt, BigRational};
    use proptest::prelude::*;

    fn d(a: i64, b: i64) -> Dual<BigRational> {
        Dual::new(rat(a), rat(b))
    }

    #[test]
    fn addition() {
        let x = Dual::new(ratio(2, 3), ratio(-1, 5));
        assert_eq!(dual_add(&Dual::zero(), &x), x);
        assert_eq!(dual_add(&d(1, 2), &d(3, 4)), d(4, 6));
        // JD₀ + JD₁
        assert_eq!(dual_add(&d(0, 1), &d(1, 1)), d(1, 2));
    }

    #[test]
    fn multiplication() {
        let x = Dual::new(ratio(2, 3), ratio(-1, 5));
        assert_eq!(dual_mul(&Dual::one(), &x), x);
        assert_eq!(dual_mul(&d(0, 1), &d(0, 1)), d(0, 0));
        assert_eq!(dual_mul(&d(1, 2), &d(3, 4)), d(3, 10));
    }

    #[test]
    fn division() {
        let x = Dual::new(ratio(2, 3), ratio(-1, 5));
        assert_eq!(dual_div(&x, &Dual::one()), Ok(x));
        let q = dual_div(&d(1, 2), &d(2, 1)).unwrap();
        assert_eq!(q, Dual::new(ratio(1, 2), ratio(3, 4)));
        assert_eq!(dual_mul(&q, &d(2, 1)), d(1, 2));
        assert_eq!(dual_div(&d(1, 1), &d(0, 1)), Err(Error::DivisionByPureDual));
    }

    #[test]
    fn conjugate() {
        assert_eq!(dual_conj(&d(7, 0)), d(7, 0));
        assert_eq!(dual_conj(&dual_conj(&d(3, -8))), d(3, -8));
        assert_eq!(dual_conj(&d(1, 2)), d(1, -2));
    }

    #[test]
    fn printed_product_differs() {
        let x = d(1, 2);
        let y = d(3, 4);
        assert_ne!(x.mul_as_printed(&y), y.mul_as_printed(&x));
        assert_ne!(Dual::one().mul_as_printed(&x), x);
    }

    #[test]
    fn rendering() {
        assert_eq!(Dual::new(BigInt::from(1), BigInt::from(2)).to_string(), "1 + 2*eps");
        assert_eq!(Dual::new(BigInt::from(1), BigInt::from(-2)).to_string(), "1 - 2*eps");
        assert_eq!(Dual::new(BigInt::from(-3), BigInt::from(0)).to_string(), "-3");
        assert_eq!(Dual::new(ratio(9, 5), ratio(9, 25)).to_string(), "9/5 + 9/25*eps");
    }

    fn arb_rat() -> impl Strategy<Value = BigRational> {
        (-200i64..200, 1i64..30).prop_map(|(n, q)| ratio(n, q))
    }

    fn arb_dual() -> impl Strategy<Value = Dual<BigRational>> {
        (arb_rat(), arb_rat()).prop_map(|(a, b)| Dual::new(a, b))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn commutative_ring(x in arb_dual(), y in arb_dual(), z in arb_dual()) {
            prop_assert_eq!(&x + &y, &y + &x);
            prop_assert_eq!(&x * &y, &y * &x);
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        }

        #[test]
        fn division_inverts_multiplication(x in arb_dual(), y in arb_dual()) {
            prop_assume!(!x.real.is_zero());
            let yx = &y * &x;
            let q = dual_div(&yx, &x).unwrap();
            prop_assert_eq!(&q, &y);
            prop_assert_eq!(dual_mul(&x, &q), yx);
        }

        #[test]
        fn product_with_conjugate_is_real(x in arb_dual()) {
            let p = &x * &x.conj();
            prop_assert_eq!(p, Dual::from_real(x.real.clone() * x.real.clone()));
        }

        #[test]
        fn pure_duals_are_nilpotent(a in arb_rat(), b in arb_rat()) {
            let p = Dual::new(rat(0), a) * Dual::new(rat(0), b);
            prop_assert!(p.is_zero());
        }
    }
}
