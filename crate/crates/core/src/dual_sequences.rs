//! Dual third-order Jacobsthal numbers `JD_n = J_n + εJ_{n+1}` and
//! Jacobsthal-Lucas numbers `jD_n = j_n + εj_{n+1}`.

use num_traits::{One, Signed, Zero};

use crate::check::{Evaluation, IdentityId, Value};
use crate::dual::Dual;
use crate::error::Result;
use crate::scalar::{pow2, to_integer, BigInt, BigRational, EisensteinRational};
use crate::sequences::{j3_binet_coeffs, jl3_binet_coeffs, u, v_neg, Jacobsthal3Cache};

/// A dual number with integer components; every `JD_n`, `jD_n`, `UD_n`.
pub type DualInt = Dual<BigInt>;

pub fn dual_j3(cache: &Jacobsthal3Cache, n: u64) -> DualInt {
    Dual::new(cache.j3(n).clone(), cache.j3(n + 1).clone())
}

pub fn dual_jl3(cache: &Jacobsthal3Cache, n: u64) -> DualInt {
    Dual::new(cache.jl3(n).clone(), cache.jl3(n + 1).clone())
}

/// `T_n = JD_n + 2JD_{n−1}`, for `n ≥ 1`.
pub fn t_seq(cache: &Jacobsthal3Cache, n: u64) -> DualInt {
    assert!(n >= 1, "T_n needs n >= 1");
    dual_j3(cache, n) + dual_j3(cache, n - 1).scale(&2.into())
}

/// `UD_n = U_n + εU_{n+1}`.
pub fn ud(n: i64) -> DualInt {
    Dual::new(u(n), u(n + 1))
}

fn dual_binet(
    (k2, k1, k2w): (BigRational, EisensteinRational, EisensteinRational),
    n: u64,
) -> Result<DualInt> {
    type DualEis = Dual<EisensteinRational>;
    let lift = |x: EisensteinRational| DualEis::from_real(x);
    let alpha = DualEis::new(EisensteinRational::one(), EisensteinRational::from_ints(2, 0));
    let w1 = EisensteinRational::omega();
    let w2 = EisensteinRational::omega_sq();
    let w1_dual = DualEis::new(EisensteinRational::one(), w1.clone());
    let w2_dual = DualEis::new(EisensteinRational::one(), w2.clone());

    let two_n = EisensteinRational::from_rational(BigRational::from_integer(pow2(n)) * k2);
    let total = lift(two_n) * alpha
        + lift(&k1 * &w1.pow(n)) * w1_dual
        + lift(&k2w * &w2.pow(n)) * w2_dual;
    total.try_map(|x| to_integer(&x.to_rational()?, "dual Binet evaluation"))
}

/// `JD_n` from the dual Binet formula with `1 + 2ε`, `1 + ω₁ε`, `1 + ω₂ε`.
pub fn dual_binet_j3(n: u64) -> Result<DualInt> {
    dual_binet(j3_binet_coeffs(), n)
}

/// `jD_n` from the dual Binet formula.
pub fn dual_binet_jl3(n: u64) -> Result<DualInt> {
    dual_binet(jl3_binet_coeffs(), n)
}

/// Both sides of the dual Cassini-like identity at `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cassini {
    pub lhs: Dual<BigRational>,
    pub rhs: Dual<BigRational>,
}

impl Cassini {
    pub fn pass(&self) -> bool {
        self.lhs == self.rhs
    }
}

fn cassini_lhs(cache: &Jacobsthal3Cache, n: u64) -> Dual<BigRational> {
    let a = dual_j3(cache, n + 2) * dual_j3(cache, n);
    let b = dual_j3(cache, n + 1);
    (a - b.clone() * b).map(BigRational::from_integer)
}

/// `JD_{n+2}JD_n − JD_{n+1}²` against
/// `(1/7)(2^{n+1}V_{−(n+2)} − 1) + (ε/7)(2^{n+1}(V_{−n} + 2V_{−(n+2)}) + 1)`.
pub fn cassini_dual(cache: &Jacobsthal3Cache, n: u64) -> Cassini {
    let ni = n as i64;
    let p = pow2(n + 1);
    let real = &p * v_neg(ni + 2) - 1;
    let dual = &p * (v_neg(ni) + 2 * v_neg(ni + 2)) + 1;
    Cassini {
        lhs: cassini_lhs(cache, n),
        rhs: Dual::new(BigRational::new(real, 7.into()), BigRational::new(dual, 7.into())),
    }
}

/// The right-hand side in its packaged form
/// `(1/7)(2^{n+1}VD_{−(n+2)} + (−1 + ε(2^{n+2}V_{−(n+2)} + 1)))`, taking
/// `VD_{−k} = V_{−k} + εV_{−(k+1)}` literally.
pub fn cassini_dual_as_printed(cache: &Jacobsthal3Cache, n: u64) -> Cassini {
    let ni = n as i64;
    let vd = Dual::new(v_neg(ni + 2), v_neg(ni + 3));
    let tail = Dual::new(BigInt::from(-1), pow2(n + 2) * v_neg(ni + 2) + 1);
    let rhs = vd.scale(&pow2(n + 1)) + tail;
    Cassini {
        lhs: cassini_lhs(cache, n),
        rhs: rhs.map(|x| BigRational::new(x, 7.into())),
    }
}

/// The Cassini left-hand side evaluated with the misprinted product
/// `a₁a₂ + ε(a₁b₂ + a₂b₂)`, against the correct right-hand side.
pub fn cassini_with_printed_product(cache: &Jacobsthal3Cache, n: u64) -> Cassini {
    let a = dual_j3(cache, n + 2).mul_as_printed(&dual_j3(cache, n));
    let b = dual_j3(cache, n + 1);
    let lhs = (a - b.mul_as_printed(&b)).map(BigRational::from_integer);
    Cassini { lhs, rhs: cassini_dual(cache, n).rhs }
}

/// `JD_{n+1} / JD_n`, exactly. Fails for `n = 0` since `JD_0 = ε`.
pub fn dual_ratio(cache: &Jacobsthal3Cache, n: u64) -> Result<Dual<BigRational>> {
    let num = dual_j3(cache, n + 1).map(BigRational::from_integer);
    let den = dual_j3(cache, n).map(BigRational::from_integer);
    num.checked_div(&den)
}

/// Whether both `|Re(JD_{n+1}/JD_n) − 2|` and `|Du(JD_{n+1}/JD_n)|` are at
/// most `constant · 2^{−n}`.
pub fn ratio_within_bound(cache: &Jacobsthal3Cache, n: u64, constant: u64) -> Result<bool> {
    let r = dual_ratio(cache, n)?;
    let bound = BigRational::new(constant.into(), pow2(n));
    let two = BigRational::from_integer(2.into());
    Ok((r.real - two).abs() <= bound && r.dual.abs() <= bound)
}

fn by_residue(n: u64, table: [(i64, i64); 3]) -> Value {
    let (a, b) = table[(n % 3) as usize];
    Value::dual_int(Dual::new(a.into(), b.into()))
}

pub(crate) fn evaluate_dual(
    cache: &Jacobsthal3Cache,
    id: IdentityId,
    n: u64,
    m: Option<u64>,
) -> Result<Evaluation> {
    let jd = |k: u64| dual_j3(cache, k);
    let ld = |k: u64| dual_jl3(cache, k);
    let two = BigInt::from(2);
    let dual = Value::dual_int;
    let cassini = |c: Cassini| Evaluation::new(Value::Dual(c.lhs), Value::Dual(c.rhs));

    let eval = match id {
        IdentityId::Equ3 => Evaluation::new(
            dual(jd(n + 3)),
            dual(jd(n + 2) + jd(n + 1) + jd(n).scale(&two)),
        ),
        IdentityId::Equ3Lucas => Evaluation::new(
            dual(ld(n + 3)),
            dual(ld(n + 2) + ld(n + 1) + ld(n).scale(&two)),
        ),
        IdentityId::Eq5 => Evaluation::new(
            dual(jd(n).conj()),
            dual(Dual::new(cache.j3(n).clone(), -cache.j3(n + 1))),
        ),
        IdentityId::Eq5Lucas => Evaluation::new(
            dual(ld(n).conj()),
            dual(Dual::new(cache.jl3(n).clone(), -cache.jl3(n + 1))),
        ),
        IdentityId::Equ4 => Evaluation::new(dual(jd(n)), dual(dual_binet_j3(n)?)),
        IdentityId::Equ5 => Evaluation::new(dual(ld(n)), dual(dual_binet_jl3(n)?)),
        IdentityId::T1 => Evaluation::new(
            dual(jd(n + 2) + jd(n + 1) + jd(n)),
            dual(jd(2).scale(&pow2(n + 1))),
        ),
        IdentityId::T2 => Evaluation::new(
            dual(jd(n + 2) - jd(n).scale(&4.into())),
            by_residue(n, [(1, -2), (-2, 1), (1, 1)]),
        ),
        IdentityId::T3 => {
            let m = m.expect("t3 requires m");
            let lhs = jd(n) * jd(m + 1) + t_seq(cache, n - 1) * jd(m)
                + (jd(n - 1) * jd(m - 1)).scale(&two);
            let rhs = jd(n + m) + Dual::new(BigInt::zero(), cache.j3(n + m + 1).clone());
            Evaluation::new(dual(lhs), dual(rhs))
        }
        IdentityId::T4 => {
            let lhs = jd(n + 1) * jd(n + 1) + jd(n) * jd(n) + (jd(n) * jd(n - 1)).scale(&4.into());
            let rhs = jd(2 * n + 1) + Dual::new(BigInt::zero(), cache.j3(2 * n + 2).clone());
            Evaluation::new(dual(lhs), dual(rhs))
        }
        IdentityId::T7 => Evaluation::new(
            dual(ld(n + 3) - jd(n + 3).scale(&3.into())),
            dual(ld(n).scale(&two)),
        ),
        IdentityId::T8 => Evaluation::new(dual(ld(n) + ld(n + 1)), dual(jd(n + 2).scale(&3.into()))),
        IdentityId::T9 => Evaluation::new(
            dual(ld(n) - jd(n + 2)),
            by_residue(n, [(1, -1), (-1, 0), (0, 1)]),
        ),
        IdentityId::T10 => Evaluation::new(
            dual(ld(n) - jd(n).scale(&4.into())),
            by_residue(n, [(2, -3), (-3, 1), (1, 2)]),
        ),
        IdentityId::Thm3 => cassini(cassini_dual(cache, n)),
        IdentityId::Thm3AsPrinted => cassini(cassini_dual_as_printed(cache, n)),
        IdentityId::Ec1AsPrinted => cassini(cassini_with_printed_product(cache, n)),
        other => unreachable!("{other} is not a dual identity"),
    };
    Ok(eval)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::scalar::ratio;

    fn di(a: i64, b: i64) -> DualInt {
        Dual::new(a.into(), b.into())
    }

    fn dr(a: BigRational, b: BigRational) -> Dual<BigRational> {
        Dual::new(a, b)
    }

    fn cache() -> Jacobsthal3Cache {
        Jacobsthal3Cache::with_max_index(200)
    }

    #[test]
    fn dual_values() {
        let c = cache();
        assert_eq!(dual_j3(&c, 0), di(0, 1));
        assert_eq!(dual_j3(&c, 2), di(1, 2));
        assert_eq!(dual_jl3(&c, 2), di(5, 10));
        assert_eq!(t_seq(&c, 1), di(1, 3));
    }

    #[test]
    fn dual_binet_values() {
        assert_eq!(dual_binet_j3(0), Ok(di(0, 1)));
        assert_eq!(dual_binet_j3(5), Ok(di(9, 18)));
        assert_eq!(dual_binet_jl3(3), Ok(di(10, 17)));
    }

    #[test]
    fn dual_binet_matches_recurrence() {
        let c = cache();
        for n in 0..=100 {
            assert_eq!(dual_binet_j3(n).unwrap(), dual_j3(&c, n));
            assert_eq!(dual_binet_jl3(n).unwrap(), dual_jl3(&c, n));
        }
    }

    #[test]
    fn dual_recurrence_and_conjugates() {
        let c = cache();
        for n in 0..=100 {
            let two = BigInt::from(2);
            assert_eq!(
                dual_j3(&c, n + 3),
                dual_j3(&c, n + 2) + dual_j3(&c, n + 1) + dual_j3(&c, n).scale(&two)
            );
            assert_eq!(
                dual_jl3(&c, n + 3),
                dual_jl3(&c, n + 2) + dual_jl3(&c, n + 1) + dual_jl3(&c, n).scale(&two)
            );
            assert_eq!(dual_j3(&c, n).conj(), Dual::new(c.j3(n).clone(), -c.j3(n + 1)));
        }
    }

    #[test]
    fn identity_examples() {
        let c = cache();
        let e = |id, n, m| evaluate_dual(&c, id, n, m).unwrap();
        let t1 = e(IdentityId::T1, 0, None);
        assert_eq!(t1.lhs, Value::dual_int(di(2, 4)));
        assert!(t1.holds());
        assert_eq!(e(IdentityId::T2, 0, None).rhs, Value::dual_int(di(1, -2)));
        let t3 = e(IdentityId::T3, 2, Some(1));
        assert_eq!(t3.lhs, Value::dual_int(di(2, 10)));
        assert!(t3.holds());
        let t4 = e(IdentityId::T4, 1, None);
        assert_eq!(t4.lhs, Value::dual_int(di(2, 10)));
        assert!(t4.holds());
        let t9 = e(IdentityId::T9, 2, None);
        assert_eq!(t9.lhs, Value::dual_int(di(0, 1)));
        assert!(t9.holds());
    }

    #[test]
    fn cassini_examples() {
        let c = cache();
        let k = cassini_dual(&c, 0);
        assert_eq!(k.lhs, dr(ratio(-1, 1), ratio(-1, 1)));
        assert!(k.pass());
        let k = cassini_dual(&c, 1);
        assert_eq!(k.lhs, dr(ratio(1, 1), ratio(3, 1)));
        assert!(k.pass());
        let k = cassini_dual(&c, 2);
        assert_eq!(k.lhs, dr(ratio(1, 1), ratio(-1, 1)));
        assert!(k.pass());
        for n in 0..=60 {
            assert!(cassini_dual(&c, n).pass(), "n={n}");
        }
    }

    #[test]
    fn printed_product_breaks_cassini() {
        let c = cache();
        assert!(cassini_with_printed_product(&c, 0).pass());
        assert!(!cassini_with_printed_product(&c, 1).pass());
    }

    #[test]
    fn ratio_values() {
        let c = cache();
        assert_eq!(dual_ratio(&c, 0), Err(Error::DivisionByPureDual));
        assert_eq!(dual_ratio(&c, 1), Ok(dr(ratio(1, 1), ratio(1, 1))));
        assert_eq!(dual_ratio(&c, 4), Ok(dr(ratio(9, 5), ratio(9, 25))));
    }

    #[test]
    fn ratio_dual_part_matches_cassini_quotient() {
        let c = cache();
        for n in 1..=60 {
            let r = dual_ratio(&c, n).unwrap();
            let jn = BigRational::from_integer(c.j3(n).clone());
            let cass = BigRational::from_integer(c.j3(n + 2) * c.j3(n) - c.j3(n + 1) * c.j3(n + 1));
            assert_eq!(r.dual, cass / (&jn * &jn));
        }
    }

    #[test]
    fn ratio_converges_with_constant_eleven() {
        // The dual part peaks near 10.86 · 2^{-n} at n = 6 and tends to 10.5 · 2^{-n}.
        let c = cache();
        for n in 5..=60 {
            assert!(ratio_within_bound(&c, n, 11).unwrap(), "n={n}");
        }
        assert!(!ratio_within_bound(&c, 6, 10).unwrap());
    }
}
