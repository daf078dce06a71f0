//! Dual 3-vectors `a⃗ + εb⃗` and the dual third-order Jacobsthal vectors
//! `JD⃗_n = (JD_n, JD_{n+1}, JD_{n+2}) = J⃗_n + εJ⃗_{n+1}`.

use std::fmt;

use num_traits::{ToPrimitive, Zero};

use crate::check::{Evaluation, IdentityId, Value};
use crate::dual::{Dual, Ring};
use crate::dual_sequences::{dual_j3, ud, DualInt};
use crate::error::{Error, Result};
use crate::scalar::{exact_div, pow2, BigInt, BigRational};
use crate::sequences::{u, w, Jacobsthal3Cache};

/// Three dual components `(d₁, d₂, d₃)`, `d_i = a_i + εb_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DualVec3<T>(pub [Dual<T>; 3]);

impl<T> DualVec3<T> {
    pub fn map<U>(self, mut f: impl FnMut(T) -> U) -> DualVec3<U> {
        let [x, y, z] = self.0;
        DualVec3([x.map(&mut f), y.map(&mut f), z.map(&mut f)])
    }
}

impl<T: Ring> DualVec3<T> {
    pub fn new(components: [Dual<T>; 3]) -> Self {
        Self(components)
    }

    /// Builds `a⃗ + εb⃗` from its real and dual vector parts.
    pub fn from_parts(a: [T; 3], b: [T; 3]) -> Self {
        let [a1, a2, a3] = a;
        let [b1, b2, b3] = b;
        Self([Dual::new(a1, b1), Dual::new(a2, b2), Dual::new(a3, b3)])
    }

    pub fn zero() -> Self {
        Self::from_parts(
            [T::zero(), T::zero(), T::zero()],
            [T::zero(), T::zero(), T::zero()],
        )
    }

    /// The real vector part `a⃗`.
    pub fn real_part(&self) -> [T; 3] {
        self.0.clone().map(|d| d.real)
    }

    /// The dual vector part `b⃗`.
    pub fn dual_part(&self) -> [T; 3] {
        self.0.clone().map(|d| d.dual)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }
}

impl<T: Ring> std::ops::Add for DualVec3<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let [a, b, c] = self.0;
        let [x, y, z] = rhs.0;
        Self([a + x, b + y, c + z])
    }
}

impl<T: Ring> std::ops::Sub for DualVec3<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let [a, b, c] = self.0;
        let [x, y, z] = rhs.0;
        Self([a - x, b - y, c - z])
    }
}

impl<T: Ring> std::ops::Neg for DualVec3<T> {
    type Output = Self;
    fn neg(self) -> Self {
        let [a, b, c] = self.0;
        Self([-a, -b, -c])
    }
}

impl<T: fmt::Display + Zero> fmt::Display for DualVec3<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = &self.0;
        write!(f, "({a}, {b}, {c})")
    }
}

fn dot3<T: Ring>(a: &[T; 3], b: &[T; 3]) -> T {
    a.iter()
        .zip(b)
        .fold(T::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

fn cross3<T: Ring>(a: &[T; 3], b: &[T; 3]) -> [T; 3] {
    let c = |i: usize, j: usize| a[i].clone() * b[j].clone() - a[j].clone() * b[i].clone();
    [c(1, 2), c(2, 0), c(0, 1)]
}

fn add3<T: Ring>(a: [T; 3], b: [T; 3]) -> [T; 3] {
    let [a1, a2, a3] = a;
    let [b1, b2, b3] = b;
    [a1 + b1, a2 + b2, a3 + b3]
}

/// `JD⃗_n`.
pub fn jd_vector(cache: &Jacobsthal3Cache, n: u64) -> DualVec3<BigInt> {
    DualVec3([dual_j3(cache, n), dual_j3(cache, n + 1), dual_j3(cache, n + 2)])
}

/// The real vector `J⃗_n = (J_n, J_{n+1}, J_{n+2})`.
pub fn j_vector(cache: &Jacobsthal3Cache, n: u64) -> [BigInt; 3] {
    [0, 1, 2].map(|k| cache.j3(n + k).clone())
}

/// `λ·v`, componentwise.
pub fn scalar_mul<T: Ring>(lambda: &Dual<T>, v: &DualVec3<T>) -> DualVec3<T> {
    DualVec3(v.0.clone().map(|d| lambda.clone() * d))
}

/// `⟨a⃗₁, a⃗₂⟩ + ε(⟨a⃗₁, b⃗₂⟩ + ⟨b⃗₁, a⃗₂⟩)`.
pub fn dual_dot<T: Ring>(x: &DualVec3<T>, y: &DualVec3<T>) -> Dual<T> {
    let (a1, b1) = (x.real_part(), x.dual_part());
    let (a2, b2) = (y.real_part(), y.dual_part());
    Dual::new(dot3(&a1, &a2), dot3(&a1, &b2) + dot3(&b1, &a2))
}

/// `a⃗₁ × a⃗₂ + ε(a⃗₁ × b⃗₂ + b⃗₁ × a⃗₂)`.
pub fn dual_cross<T: Ring>(x: &DualVec3<T>, y: &DualVec3<T>) -> DualVec3<T> {
    let (a1, b1) = (x.real_part(), x.dual_part());
    let (a2, b2) = (y.real_part(), y.dual_part());
    DualVec3::from_parts(
        cross3(&a1, &a2),
        add3(cross3(&a1, &b2), cross3(&b1, &a2)),
    )
}

/// `(‖a⃗‖², ⟨a⃗, b⃗⟩)`, exactly.
pub fn norm_sq_exact<T: Ring>(v: &DualVec3<T>) -> (T, T) {
    let (a, b) = (v.real_part(), v.dual_part());
    (dot3(&a, &a), dot3(&a, &b))
}

/// `‖a⃗‖ + ε⟨a⃗, b⃗⟩/‖a⃗‖` in floating point, returned as `(real, dual)`.
pub fn dual_norm<T: Ring + ToPrimitive>(v: &DualVec3<T>) -> Result<(f64, f64)> {
    let (sq, inner) = norm_sq_exact(v);
    if sq.is_zero() {
        return Err(Error::ZeroRealPart);
    }
    let len = sq.to_f64().unwrap_or(f64::INFINITY).sqrt();
    let inner = inner.to_f64().unwrap_or(f64::NAN);
    Ok((len, inner / len))
}

/// The dual unit test for `JD⃗_n` via closed forms `c1`, `c2`, with the
/// underlying quantities computed directly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitConditions {
    /// `3·2^{2(n+1)} − 2^{n+2}U_n`.
    pub c1: BigInt,
    /// `3·2^{2n+3} − 2^{n+1}(U_n − U_{n+2})`.
    pub c2: BigInt,
    /// `c1 = 5` and `c2 = 1`.
    pub is_unit: bool,
    /// `‖J⃗_n‖²`, summed directly.
    pub norm_sq: BigInt,
    /// `⟨J⃗_n, J⃗_{n+1}⟩`, summed directly.
    pub inner: BigInt,
}

impl UnitConditions {
    /// `7‖J⃗_n‖² = c1 + 2` and `7⟨J⃗_n, J⃗_{n+1}⟩ = c2 − 1`.
    pub fn closed_forms_hold(&self) -> bool {
        BigInt::from(7) * &self.norm_sq == &self.c1 + 2 && BigInt::from(7) * &self.inner == &self.c2 - 1
    }

    /// Whether `JD⃗_n` is a dual unit vector, decided from the direct values.
    pub fn is_unit_direct(&self) -> bool {
        self.norm_sq == BigInt::from(1) && self.inner.is_zero()
    }
}

pub fn unit_conditions(cache: &Jacobsthal3Cache, n: u64) -> UnitConditions {
    let ni = n as i64;
    let c1 = 3 * pow2(2 * (n + 1)) - pow2(n + 2) * u(ni);
    let c2 = 3 * pow2(2 * n + 3) - pow2(n + 1) * (u(ni) - u(ni + 2));
    let is_unit = c1 == BigInt::from(5) && c2 == BigInt::from(1);
    let (norm_sq, inner) = norm_sq_exact(&jd_vector(cache, n));
    UnitConditions { c1, c2, is_unit, norm_sq, inner }
}

/// `Z_n = (2U_{n+1}, W_{n+1}, U_n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ZVector(pub [BigInt; 3]);

pub fn z_vector(n: i64) -> ZVector {
    ZVector([2 * u(n + 1), w(n + 1), u(n)])
}

/// `ZD_n = Z_n + εZ_{n+1}`.
pub fn zd_vector(n: i64) -> DualVec3<BigInt> {
    DualVec3::from_parts(z_vector(n).0, z_vector(n + 1).0)
}

fn eps(x: BigInt) -> DualInt {
    Dual::new(BigInt::zero(), x)
}

fn div7(d: DualInt, what: &str) -> Result<DualInt> {
    let seven = BigInt::from(7);
    d.try_map(|x| exact_div(&x, &seven, what))
}

fn dot_numerator(n: u64, m: u64, third_term_coeff: i64) -> DualInt {
    let (ni, mi) = (n as i64, m as i64);
    let lead = Dual::new(BigInt::from(1), BigInt::from(4)).scale(&(3 * pow2(n + m + 2)));
    let from_m = (ud(mi) + eps(2 * u(mi))).scale(&pow2(n + 1));
    let from_n = (ud(ni) + eps(third_term_coeff * u(ni))).scale(&pow2(m + 1));
    let tail = Dual::new(BigInt::from(1), BigInt::from(-1)).scale(&w(ni - mi));
    lead - from_m - from_n + tail
}

/// `⟨JD⃗_n, JD⃗_m⟩` by closed form:
/// `(1/7)(3·2^{n+m+2}(1+4ε) − 2^{n+1}(UD_m + 2εU_m) − 2^{m+1}(UD_n + 2εU_n) + W_{n−m}(1−ε))`.
pub fn dot_closed_form(n: u64, m: u64) -> Result<DualInt> {
    div7(dot_numerator(n, m, 2), "dot product closed form")
}

/// The same with the asymmetric third term `2^{m+1}(UD_n + εU_n)`; generally
/// not integral.
pub fn dot_closed_form_as_printed(n: u64, m: u64) -> Dual<BigRational> {
    dot_numerator(n, m, 1).map(|x| BigRational::new(x, 7.into()))
}

/// `JD⃗_n × JD⃗_m` by closed form:
/// `(1/7)(2^{n+1}(ZD_{m+1} + 2εZ_{m+1}) − 2^{m+1}(ZD_{n+1} + 2εZ_{n+1}) + U_{n−m}(1−ε)(i+j+k))`.
pub fn cross_closed_form(n: u64, m: u64) -> Result<DualVec3<BigInt>> {
    let (ni, mi) = (n as i64, m as i64);
    let shifted = |k: i64| {
        let z = z_vector(k).0;
        zd_vector(k) + DualVec3::from_parts([0, 0, 0].map(BigInt::from), z.map(|c| 2 * c))
    };
    let scale = |v: DualVec3<BigInt>, k: BigInt| scalar_mul(&Dual::from_real(k), &v);
    let diag = u(ni - mi);
    let ones = DualVec3::from_parts(
        [diag.clone(), diag.clone(), diag.clone()],
        [-&diag, -&diag, -diag],
    );
    let numerator = scale(shifted(mi + 1), pow2(n + 1)) - scale(shifted(ni + 1), pow2(m + 1)) + ones;
    let [x, y, z] = numerator.0;
    Ok(DualVec3([
        div7(x, "cross product closed form")?,
        div7(y, "cross product closed form")?,
        div7(z, "cross product closed form")?,
    ]))
}

pub(crate) fn evaluate_vector(
    cache: &Jacobsthal3Cache,
    id: IdentityId,
    n: u64,
    m: Option<u64>,
) -> Result<Evaluation> {
    let eval = match id {
        IdentityId::Thm4 => {
            let uc = unit_conditions(cache, n);
            let seven = BigInt::from(7);
            Evaluation::new(
                Value::pair(uc.norm_sq, uc.inner),
                Value::Pair(
                    BigRational::new(uc.c1 + 2, seven.clone()),
                    BigRational::new(uc.c2 - 1, seven),
                ),
            )
        }
        IdentityId::Thm5 | IdentityId::Thm5AsPrinted | IdentityId::Thm6 => {
            let m = m.expect("vector identities require m");
            let (vn, vm) = (jd_vector(cache, n), jd_vector(cache, m));
            match id {
                IdentityId::Thm5 => Evaluation::new(
                    Value::dual_int(dual_dot(&vn, &vm)),
                    Value::dual_int(dot_closed_form(n, m)?),
                ),
                IdentityId::Thm5AsPrinted => Evaluation::new(
                    Value::dual_int(dual_dot(&vn, &vm)),
                    Value::Dual(dot_closed_form_as_printed(n, m)),
                ),
                _ => Evaluation::new(
                    Value::vector_int(dual_cross(&vn, &vm)),
                    Value::vector_int(cross_closed_form(n, m)?),
                ),
            }
        }
        other => unreachable!("{other} is not a vector identity"),
    };
    Ok(eval)
}
