//! Third-order Jacobsthal numbers `J_n` and Jacobsthal-Lucas numbers `j_n`.
//!
//! Both satisfy `s_{n+3} = s_{n+2} + s_{n+1} + 2s_n`, with `J = 0, 1, 1, ...`
//! and `j = 2, 1, 5, ...`. The characteristic polynomial `x³ − x² − x − 2`
//! has roots 2, ω and ω², so every closed form is a power of two plus a
//! period-3 correction drawn from the family [`HSeq`].
//!
//! [`Jacobsthal3Cache`] computes the terms by direct recurrence and is the
//! reference every closed form here is compared against.

use num_traits::One;

use crate::check::{Evaluation, IdentityId, Value};
use crate::error::Result;
use crate::scalar::{exact_div, pow2, ratio, to_integer, BigInt, BigRational, EisensteinRational};

/// Recurrence tables for `J_n` and `j_n`. Extend once to the largest index you
/// need, then share it read-only.
#[derive(Debug, Clone)]
pub struct Jacobsthal3Cache {
    j3: Vec<BigInt>,
    jl3: Vec<BigInt>,
}

impl Default for Jacobsthal3Cache {
    fn default() -> Self {
        Self::new()
    }
}

impl Jacobsthal3Cache {
    pub fn new() -> Self {
        Self {
            j3: vec![0.into(), 1.into(), 1.into()],
            jl3: vec![2.into(), 1.into(), 5.into()],
        }
    }

    /// A cache holding at least indices `0..=max_index`.
    pub fn with_max_index(max_index: usize) -> Self {
        let mut cache = Self::new();
        cache.extend_to(max_index);
        cache
    }

    pub fn extend_to(&mut self, max_index: usize) {
        fn step(v: &mut Vec<BigInt>, upto: usize) {
            while v.len() <= upto {
                let k = v.len();
                let next = &v[k - 1] + &v[k - 2] + (&v[k - 3] << 1);
                v.push(next);
            }
        }
        step(&mut self.j3, max_index);
        step(&mut self.jl3, max_index);
    }

    /// Largest index available without extending.
    pub fn max_index(&self) -> usize {
        self.j3.len() - 1
    }

    /// `J_n`. Panics if `n` lies beyond the warmed range.
    pub fn j3(&self, n: u64) -> &BigInt {
        self.j3
            .get(n as usize)
            .unwrap_or_else(|| panic!("J_{n} beyond cache (max index {})", self.max_index()))
    }

    /// `j_n`. Panics if `n` lies beyond the warmed range.
    pub fn jl3(&self, n: u64) -> &BigInt {
        self.jl3
            .get(n as usize)
            .unwrap_or_else(|| panic!("j_{n} beyond cache (max index {})", self.max_index()))
    }

    /// `Σ_{k=0}^{n} J_k`, summed term by term.
    pub fn j3_prefix_sum(&self, n: u64) -> BigInt {
        (0..=n).map(|k| self.j3(k)).sum()
    }
}

/// `J_n` by direct recurrence.
pub fn j3(n: u64) -> BigInt {
    Jacobsthal3Cache::with_max_index(n as usize).j3(n).clone()
}

/// `j_n` by direct recurrence.
pub fn jl3(n: u64) -> BigInt {
    Jacobsthal3Cache::with_max_index(n as usize).jl3(n).clone()
}

/// The period-3 sequence `H_n(a, b)`: `a, b, −(a+b)` for `n ≡ 0, 1, 2 (mod 3)`.
///
/// Defined for every integer `n` through the nonnegative residue, so it also
/// satisfies `H_{n+2} = −H_{n+1} − H_n` across zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HSeq {
    pub a: i64,
    pub b: i64,
}

impl HSeq {
    /// `U_n = H_n(0, 1)`.
    pub const U: HSeq = HSeq::new(0, 1);
    /// `V_n = H_n(2, −3)`.
    pub const V: HSeq = HSeq::new(2, -3);
    /// `W_n = H_n(2, −1) = ω^n + ω^{2n}`.
    pub const W: HSeq = HSeq::new(2, -1);
    /// `V_{−n} = H_n(2, 1)`.
    pub const V_NEG: HSeq = HSeq::new(2, 1);

    pub const fn new(a: i64, b: i64) -> Self {
        Self { a, b }
    }

    pub fn at(&self, n: i64) -> BigInt {
        BigInt::from(self.at_i64(n))
    }

    pub fn at_i64(&self, n: i64) -> i64 {
        match n.rem_euclid(3) {
            0 => self.a,
            1 => self.b,
            _ => -(self.a + self.b),
        }
    }
}

pub fn h_seq(a: &BigInt, b: &BigInt, n: i64) -> BigInt {
    match n.rem_euclid(3) {
        0 => a.clone(),
        1 => b.clone(),
        _ => -(a + b),
    }
}

pub fn u(n: i64) -> BigInt {
    HSeq::U.at(n)
}

pub fn v(n: i64) -> BigInt {
    HSeq::V.at(n)
}

pub fn w(n: i64) -> BigInt {
    HSeq::W.at(n)
}

/// `V_{−n}`, i.e. `H_n(2, 1)`.
pub fn v_neg(n: i64) -> BigInt {
    HSeq::V_NEG.at(n)
}

/// `J_n = (2^{n+1} − V_n)/7`.
pub fn j3_closed(n: u64) -> Result<BigInt> {
    exact_div(&(pow2(n + 1) - v(n as i64)), &7.into(), "J closed form")
}

/// `j_n = (2^{n+3} + 3V_n)/7`.
pub fn jl3_closed(n: u64) -> Result<BigInt> {
    exact_div(&(pow2(n + 3) + 3 * v(n as i64)), &7.into(), "j closed form")
}

/// Binet coefficient `(3 + 2i√3)/21` attached to ω^n in `J_n`.
pub(crate) fn binet_coeff() -> EisensteinRational {
    let three = EisensteinRational::from_ints(3, 0);
    let two_i_sqrt3 = EisensteinRational::i_sqrt3().scale(&ratio(2, 1));
    (&three + &two_i_sqrt3).scale(&ratio(1, 21))
}

/// `(2/7)·2^n`, `−c`, `−c̄`: the coefficients of `2^n`, `ω^n`, `ω^{2n}` in `J_n`.
pub(crate) fn j3_binet_coeffs() -> (BigRational, EisensteinRational, EisensteinRational) {
    let c = binet_coeff();
    (ratio(2, 7), -c.clone(), -c.conj())
}

/// `(8/7)`, `3c`, `3c̄`: the same for `j_n`.
pub(crate) fn jl3_binet_coeffs() -> (BigRational, EisensteinRational, EisensteinRational) {
    let c = binet_coeff().scale(&ratio(3, 1));
    (ratio(8, 7), c.clone(), c.conj())
}

fn binet_eval(
    (k2, k1, k2w): (BigRational, EisensteinRational, EisensteinRational),
    n: u64,
) -> Result<BigInt> {
    let two_n = EisensteinRational::from_rational(BigRational::from_integer(pow2(n)) * k2);
    let w1 = EisensteinRational::omega().pow(n);
    let w2 = EisensteinRational::omega_sq().pow(n);
    let total = &(&two_n + &(&k1 * &w1)) + &(&k2w * &w2);
    to_integer(&total.to_rational()?, "Binet evaluation")
}

/// `J_n` from the Binet formula, evaluated exactly in Q(ω).
pub fn j3_binet(n: u64) -> Result<BigInt> {
    binet_eval(j3_binet_coeffs(), n)
}

/// `j_n` from the Binet formula, evaluated exactly in Q(ω).
pub fn jl3_binet(n: u64) -> Result<BigInt> {
    binet_eval(jl3_binet_coeffs(), n)
}

/// `Σ_{k=0}^{n} J_k` by its closed form: `J_{n+1}`, less one when `3 | n`.
pub fn j3_prefix_sum(cache: &Jacobsthal3Cache, n: u64) -> BigInt {
    let next = cache.j3(n + 1).clone();
    if n.is_multiple_of(3) {
        next - 1
    } else {
        next
    }
}

fn by_residue(n: u64, table: [i64; 3]) -> BigInt {
    table[(n % 3) as usize].into()
}

/// Evaluates both sides of a scalar identity at `(n, m)`.
///
/// The caller is responsible for domain validation and for a cache covering
/// index `2·max(n, m) + 4`.
pub(crate) fn evaluate_scalar(
    cache: &Jacobsthal3Cache,
    id: IdentityId,
    n: u64,
    m: Option<u64>,
) -> Result<Evaluation> {
    let c = cache;
    let jj = |k: u64| c.j3(k).clone();
    let jl = |k: u64| c.jl3(k).clone();
    let ni = n as i64;
    let int = Value::int;
    let eval = match id {
        IdentityId::B1 => Evaluation::new(
            Value::pair(jj(n), jj(n)),
            Value::pair(j3_closed(n)?, j3_binet(n)?),
        ),
        IdentityId::B2 => Evaluation::new(
            Value::pair(jl(n), jl(n)),
            Value::pair(jl3_closed(n)?, jl3_binet(n)?),
        ),
        IdentityId::E4 => Evaluation::new(int(3 * jj(n) + jl(n)), int(pow2(n + 1))),
        IdentityId::E5 => Evaluation::new(int(jl(n) - 3 * jj(n)), int(2 * jl(n - 3))),
        IdentityId::Ec5 => Evaluation::new(
            int(jj(n + 2) - 4 * jj(n)),
            int(by_residue(n, [1, -2, 1])),
        ),
        IdentityId::E6 => Evaluation::new(int(jl(n) - 4 * jj(n)), int(by_residue(n, [2, -3, 1]))),
        IdentityId::E7 => Evaluation::new(int(jl(n + 1) + jl(n)), int(3 * jj(n + 2))),
        IdentityId::E8 => Evaluation::new(int(jl(n) - jj(n + 2)), int(by_residue(n, [1, -1, 0]))),
        IdentityId::E9 => {
            let back = jl(n - 3);
            Evaluation::new(int(&back * &back + 3 * jj(n) * jl(n)), int(BigInt::one() << (2 * n)))
        }
        IdentityId::E10 => Evaluation::new(int(c.j3_prefix_sum(n)), int(j3_prefix_sum(c, n))),
        IdentityId::E12 => {
            let (big, small) = (jl(n), jj(n));
            Evaluation::new(
                int(&big * &big - 9 * &small * &small),
                int(pow2(n + 2) * jl(n - 3)),
            )
        }
        IdentityId::P4 => {
            let m = m.expect("p4 requires m");
            let mi = m as i64;
            let lhs = jj(m) * jj(n + 1) - jj(m + 1) * jj(n);
            let rhs = pow2(m + 1) * u(ni + 1) - pow2(n + 1) * u(mi + 1) + u(mi - ni);
            Evaluation::new(int(lhs), Value::Scalar(BigRational::new(rhs, 7.into())))
        }
        IdentityId::P5 => {
            let lhs = jj(n + 2) * jj(n) - jj(n + 1) * jj(n + 1);
            let rhs = pow2(n + 1) * v_neg(ni + 2) - 1;
            Evaluation::new(int(lhs), Value::Scalar(BigRational::new(rhs, 7.into())))
        }
        other => unreachable!("{other} is not a scalar identity"),
    };
    Ok(eval)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent oracle: plain i128 unrolling of the recurrence.
    fn unrolled(init: [i128; 3], count: usize) -> Vec<i128> {
        let mut v = init.to_vec();
        while v.len() < count {
            let k = v.len();
            v.push(v[k - 1] + v[k - 2] + 2 * v[k - 3]);
        }
        v
    }

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn initial_values() {
        let c = Jacobsthal3Cache::with_max_index(9);
        let js: Vec<_> = (0..10).map(|n| c.j3(n).clone()).collect();
        assert_eq!(js, big(&[0, 1, 1, 2, 5, 9, 18, 37, 73, 146]));
        let ls: Vec<_> = (0..8).map(|n| c.jl3(n).clone()).collect();
        assert_eq!(ls, big(&[2, 1, 5, 10, 17, 37, 74, 145]));
    }

    #[test]
    fn cache_matches_unrolled_oracle() {
        let j = unrolled([0, 1, 1], 100);
        let l = unrolled([2, 1, 5], 100);
        let c = Jacobsthal3Cache::with_max_index(99);
        for n in 0..100 {
            assert_eq!(c.j3(n as u64), &BigInt::from(j[n]));
            assert_eq!(c.jl3(n as u64), &BigInt::from(l[n]));
        }
    }

    #[test]
    fn extension_is_idempotent() {
        let mut a = Jacobsthal3Cache::with_max_index(50);
        let b = a.clone();
        a.extend_to(20);
        a.extend_to(50);
        assert_eq!(a.max_index(), 50);
        assert_eq!(a.j3(50), b.j3(50));
        assert_eq!(j3(40), a.j3(40).clone());
        assert_eq!(jl3(40), a.jl3(40).clone());
    }

    #[test]
    fn h_family_values() {
        let h = HSeq::new(7, -4);
        assert_eq!(h.at(0), BigInt::from(7));
        let us: Vec<_> = (0..6).map(u).collect();
        assert_eq!(us, big(&[0, 1, -1, 0, 1, -1]));
        assert_eq!(v_neg(3), BigInt::from(2));
        assert_eq!(v(-3), BigInt::from(2));
        assert_eq!(h_seq(&5.into(), &6.into(), -1), BigInt::from(-11));
    }

    #[test]
    fn negative_index_of_v_is_v_neg() {
        for n in -30..=30 {
            assert_eq!(v(-n), v_neg(n), "n={n}");
        }
    }

    #[test]
    fn h_recurrence_across_zero() {
        for (a, b) in [(0, 1), (2, -3), (5, 11), (-7, 4)] {
            let h = HSeq::new(a, b);
            for n in -30..=30 {
                assert_eq!(h.at(n + 2), -h.at(n + 1) - h.at(n));
            }
        }
    }

    #[test]
    fn h_family_auxiliary_identities() {
        for n in 0..=60i64 {
            assert_eq!(7 * u(n), 3 * v(n + 2) + v(n + 1));
            // Printed without the factor 7; only the scaled form holds.
            assert_eq!(v(n) + 5 * v(n + 2), 7 * (u(n) - u(n + 2)));
            assert_ne!(v(n) + 5 * v(n + 2), u(n) - u(n + 2));
            assert_eq!(u(n + 1) + 2 * u(n), -w(n + 1));
            assert_eq!(w(n) + w(n + 2), -w(n + 1));
            assert_eq!(u(n) - 4 * u(n + 1), v_neg(n) + 2 * v_neg(n + 2));
            assert_eq!(u(n) - 4 * u(n + 1), HSeq::new(-4, 5).at(n));
            assert_eq!(v_neg(n), u(n) - 2 * u(n + 2));
            let sq = v(n) * v(n) + v(n + 1) * v(n + 1) + v(n + 2) * v(n + 2);
            assert_eq!(sq, BigInt::from(14));
            let cross = v(n) * v(n + 1) + v(n + 1) * v(n + 2) + v(n + 2) * v(n + 3);
            assert_eq!(cross, BigInt::from(-7));
        }
    }

    #[test]
    fn w_is_sum_of_root_powers() {
        for n in 0..=60u64 {
            let s = &EisensteinRational::omega().pow(n) + &EisensteinRational::omega_sq().pow(n);
            assert_eq!(s, EisensteinRational::from_rational(BigRational::from_integer(w(n as i64))));
        }
    }

    #[test]
    fn closed_forms() {
        assert_eq!(j3_closed(0), Ok(0.into()));
        assert_eq!(j3_closed(4), Ok(5.into()));
        assert_eq!(jl3_closed(2), Ok(5.into()));
    }

    #[test]
    fn binet_forms() {
        assert_eq!(j3_binet(0), Ok(0.into()));
        assert_eq!(j3_binet(7), Ok(37.into()));
        assert_eq!(jl3_binet(5), Ok(37.into()));
    }

    #[test]
    fn three_way_agreement() {
        let c = Jacobsthal3Cache::with_max_index(200);
        for n in 0..=200 {
            let oracle = c.j3(n);
            assert_eq!(&j3_closed(n).unwrap(), oracle);
            assert_eq!(&j3_binet(n).unwrap(), oracle);
            let oracle = c.jl3(n);
            assert_eq!(&jl3_closed(n).unwrap(), oracle);
            assert_eq!(&jl3_binet(n).unwrap(), oracle);
        }
    }

    #[test]
    fn prefix_sums() {
        let c = Jacobsthal3Cache::with_max_index(10);
        assert_eq!(j3_prefix_sum(&c, 0), BigInt::from(0));
        assert_eq!(j3_prefix_sum(&c, 4), BigInt::from(9));
        assert_eq!(j3_prefix_sum(&c, 6), BigInt::from(36));
        for n in 0..9 {
            assert_eq!(j3_prefix_sum(&c, n), c.j3_prefix_sum(n));
        }
    }
}
