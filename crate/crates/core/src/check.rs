//! Identity checks: one [`IdentityId`] per verified equation, the
//! [`CheckReport`] each evaluation produces, and a suite driver that fans
//! `(identity, n, m)` tuples out over a bounded worker pool.
//!
//! Every check compares two exactly computed values. The left-hand side is
//! always built from the recurrence tables, the right-hand side from the
//! closed form under test.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use num_traits::One;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::dual::Dual;
use crate::dual_sequences::evaluate_dual;
use crate::error::{Error, Result};
use crate::scalar::{BigInt, BigRational};
use crate::sequences::{evaluate_scalar, Jacobsthal3Cache};
use crate::vectors::{evaluate_vector, DualVec3};

macro_rules! identities {
    ($($variant:ident => $name:literal, $family:ident;)*) => {
        /// Every identity the suite knows how to check.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum IdentityId {
            $($variant,)*
        }

        impl IdentityId {
            pub const ALL: &'static [IdentityId] = &[$(IdentityId::$variant,)*];

            pub fn as_str(self) -> &'static str {
                match self {
                    $(IdentityId::$variant => $name,)*
                }
            }

            pub fn family(self) -> Family {
                match self {
                    $(IdentityId::$variant => Family::$family,)*
                }
            }
        }

        impl FromStr for IdentityId {
            type Err = String;

            fn from_str(s: &str) -> std::result::Result<Self, String> {
                match s {
                    $($name => Ok(IdentityId::$variant),)*
                    other => Err(format!("unknown identity '{other}'")),
                }
            }
        }
    };
}

identities! {
    B1 => "b1", Scalar;
    B2 => "b2", Scalar;
    E4 => "e4", Scalar;
    E5 => "e5", Scalar;
    Ec5 => "ec5", Scalar;
    E6 => "e6", Scalar;
    E7 => "e7", Scalar;
    E8 => "e8", Scalar;
    E9 => "e9", Scalar;
    E10 => "e10", Scalar;
    E12 => "e12", Scalar;
    P4 => "p4", Scalar;
    P5 => "p5", Scalar;
    Equ3 => "equ3", Dual;
    Equ3Lucas => "equ3-lucas", Dual;
    Eq5 => "eq5", Dual;
    Eq5Lucas => "eq5-lucas", Dual;
    Equ4 => "equ4", Dual;
    Equ5 => "equ5", Dual;
    T1 => "t1", Dual;
    T2 => "t2", Dual;
    T3 => "t3", Dual;
    T4 => "t4", Dual;
    T7 => "t7", Dual;
    T8 => "t8", Dual;
    T9 => "t9", Dual;
    T10 => "t10", Dual;
    Thm3 => "thm3", Dual;
    Thm4 => "thm4", Vector;
    Thm5 => "thm5", Vector;
    Thm6 => "thm6", Vector;
    Ec1AsPrinted => "ec1-as-printed", Dual;
    Thm3AsPrinted => "thm3-as-printed", Dual;
    Thm5AsPrinted => "thm5-as-printed", Vector;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Scalar,
    Dual,
    Vector,
}

/// Index constraints of one identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Domain {
    pub min_n: u64,
    /// `Some(min)` when the identity takes a second index.
    pub min_m: Option<u64>,
    /// Requires `m ≥ n`.
    pub m_at_least_n: bool,
}

impl IdentityId {
    /// Identities reproducing misprinted formulas; excluded from the default suite.
    pub fn is_as_printed(self) -> bool {
        matches!(
            self,
            IdentityId::Ec1AsPrinted | IdentityId::Thm3AsPrinted | IdentityId::Thm5AsPrinted
        )
    }

    /// The default suite: every identity except the as-printed variants.
    pub fn suite() -> impl Iterator<Item = IdentityId> {
        Self::ALL.iter().copied().filter(|id| !id.is_as_printed())
    }

    /// Whether the right-hand side is chosen by `n mod 3`.
    pub fn is_piecewise(self) -> bool {
        use IdentityId::*;
        matches!(self, Ec5 | E6 | E8 | E10 | T2 | T9 | T10)
    }

    pub fn domain(self) -> Domain {
        use IdentityId::*;
        let (min_n, min_m, m_at_least_n) = match self {
            E5 | E9 | E12 => (3, None, false),
            P4 => (0, Some(0), true),
            T3 => (2, Some(1), false),
            T4 => (1, None, false),
            Thm5 | Thm5AsPrinted | Thm6 => (0, Some(0), false),
            _ => (0, None, false),
        };
        Domain { min_n, min_m, m_at_least_n }
    }

    pub fn uses_m(self) -> bool {
        self.domain().min_m.is_some()
    }

    /// Checks `(n, m)` against the domain. `m` is ignored for single-index identities.
    pub fn validate(self, n: u64, m: Option<u64>) -> Result<Option<u64>> {
        let d = self.domain();
        let err = |reason| Error::Domain { identity: self, n, m, reason };
        if n < d.min_n {
            return Err(err(match d.min_n {
                1 => "requires n >= 1",
                2 => "requires n >= 2",
                _ => "requires n >= 3",
            }));
        }
        let Some(min_m) = d.min_m else {
            return Ok(None);
        };
        let m = m.ok_or_else(|| err("requires a second index m"))?;
        if m < min_m {
            return Err(err("requires m >= 1"));
        }
        if d.m_at_least_n && m < n {
            return Err(err("requires m >= n"));
        }
        Ok(Some(m))
    }

    /// Largest sequence index touched when checking at `(n, m)`.
    pub fn max_index(n: u64, m: u64) -> usize {
        (2 * n.max(m) + 8) as usize
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for IdentityId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// An exactly computed side of an identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Scalar(BigRational),
    Pair(BigRational, BigRational),
    Dual(Dual<BigRational>),
    Vector(Box<DualVec3<BigRational>>),
    /// Evaluation itself failed (e.g. a closed form was not integral).
    Error(String),
}

impl Value {
    pub fn int(x: BigInt) -> Self {
        Value::Scalar(BigRational::from_integer(x))
    }

    pub fn pair(a: BigInt, b: BigInt) -> Self {
        Value::Pair(BigRational::from_integer(a), BigRational::from_integer(b))
    }

    pub fn dual_int(d: Dual<BigInt>) -> Self {
        Value::Dual(d.map(BigRational::from_integer))
    }

    pub fn vector_int(v: DualVec3<BigInt>) -> Self {
        Value::Vector(Box::new(v.map(BigRational::from_integer)))
    }

    /// Adds one to the leading real coefficient.
    pub fn off_by_one(&mut self) {
        let one = BigRational::one();
        match self {
            Value::Scalar(x) | Value::Pair(x, _) => *x += one,
            Value::Dual(d) => d.real += one,
            Value::Vector(v) => v.0[0].real += one,
            Value::Error(_) => {}
        }
    }

    pub fn is_error(&self) -> bool {
        matches!(self, Value::Error(_))
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Scalar(x) => write!(f, "{x}"),
            Value::Pair(a, b) => write!(f, "({a}, {b})"),
            Value::Dual(d) => write!(f, "{d}"),
            Value::Vector(v) => write!(f, "{v}"),
            Value::Error(e) => write!(f, "error: {e}"),
        }
    }
}

/// Both sides of one identity instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Evaluation {
    pub lhs: Value,
    pub rhs: Value,
}

impl Evaluation {
    pub fn new(lhs: Value, rhs: Value) -> Self {
        Self { lhs, rhs }
    }

    pub fn holds(&self) -> bool {
        !self.lhs.is_error() && !self.rhs.is_error() && self.lhs == self.rhs
    }
}

/// Outcome of checking one identity at one index tuple.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub identity: IdentityId,
    pub n: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<u64>,
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
}

impl CheckReport {
    pub fn from_evaluation(identity: IdentityId, n: u64, m: Option<u64>, eval: &Evaluation) -> Self {
        Self {
            identity,
            n,
            m,
            lhs: eval.lhs.to_string(),
            rhs: eval.rhs.to_string(),
            pass: eval.holds(),
        }
    }
}

/// Evaluates both sides of `id` at `(n, m)` without building a report.
///
/// Fails only on domain violations; arithmetic failures inside a closed form
/// are returned as [`Value::Error`] on the right-hand side.
pub fn evaluate(cache: &Jacobsthal3Cache, id: IdentityId, n: u64, m: Option<u64>) -> Result<Evaluation> {
    let m = id.validate(n, m)?;
    let result = match id.family() {
        Family::Scalar => evaluate_scalar(cache, id, n, m),
        Family::Dual => evaluate_dual(cache, id, n, m),
        Family::Vector => evaluate_vector(cache, id, n, m),
    };
    Ok(result.unwrap_or_else(|e| match e {
        Error::Domain { .. } => unreachable!("domain validated above"),
        other => Evaluation::new(Value::Error("closed form not evaluable".into()), Value::Error(other.to_string())),
    }))
}

/// Checks `id` at `(n, m)`. The cache must cover [`IdentityId::max_index`].
pub fn check(cache: &Jacobsthal3Cache, id: IdentityId, n: u64, m: Option<u64>) -> Result<CheckReport> {
    let eval = evaluate(cache, id, n, m)?;
    Ok(CheckReport::from_evaluation(id, n, id.validate(n, m)?, &eval))
}

/// Checks one scalar identity, building a cache large enough for it.
pub fn check_scalar_identity(id: IdentityId, n: u64, m: Option<u64>) -> Result<CheckReport> {
    assert_eq!(id.family(), Family::Scalar, "{id} is not a scalar identity");
    let cache = Jacobsthal3Cache::with_max_index(IdentityId::max_index(n, m.unwrap_or(0)));
    check(&cache, id, n, m)
}

/// Checks one dual identity, building a cache large enough for it.
pub fn check_dual_identity(id: IdentityId, n: u64, m: Option<u64>) -> Result<CheckReport> {
    assert_eq!(id.family(), Family::Dual, "{id} is not a dual identity");
    let cache = Jacobsthal3Cache::with_max_index(IdentityId::max_index(n, m.unwrap_or(0)));
    check(&cache, id, n, m)
}

/// Upper bound accepted for the n range.
pub const MAX_N: u64 = 10_000;

/// What to check and how.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteConfig {
    pub ids: Vec<IdentityId>,
    pub n_range: RangeInclusive<u64>,
    pub m_range: RangeInclusive<u64>,
    /// Clip each identity's ranges to its domain instead of rejecting them.
    pub clamp_to_domain: bool,
    pub fail_fast: bool,
    pub workers: usize,
    /// Deliberately corrupt the left-hand side of this identity by one.
    pub mutate: Option<IdentityId>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            ids: IdentityId::suite().collect(),
            n_range: 0..=60,
            m_range: 0..=60,
            clamp_to_domain: true,
            fail_fast: false,
            workers: 1,
            mutate: None,
        }
    }
}

impl SuiteConfig {
    /// Expands the configuration into the ordered list of `(identity, n, m)` tuples.
    pub fn plan(&self) -> Result<Vec<(IdentityId, u64, Option<u64>)>> {
        if *self.n_range.end() > MAX_N {
            return Err(Error::Config(format!(
                "n range upper bound {} exceeds {MAX_N}",
                self.n_range.end()
            )));
        }
        if self.n_range.is_empty() || self.m_range.is_empty() {
            return Err(Error::Config("empty index range".into()));
        }
        let mut plan = Vec::new();
        for &id in &self.ids {
            let d = id.domain();
            let (n_lo, n_hi) = (*self.n_range.start(), *self.n_range.end());
            let (m_lo, m_hi) = (*self.m_range.start(), *self.m_range.end());
            let n_lo = if self.clamp_to_domain { n_lo.max(d.min_n) } else { n_lo };
            if !self.clamp_to_domain {
                if n_lo < d.min_n {
                    return Err(id.validate(n_lo, None).unwrap_err());
                }
                if d.min_m.is_some_and(|min_m| m_lo < min_m) {
                    return Err(id.validate(n_lo, Some(m_lo)).unwrap_err());
                }
            }
            for n in n_lo..=n_hi {
                match d.min_m {
                    None => plan.push((id, n, None)),
                    Some(min_m) => {
                        let lo = if self.clamp_to_domain { m_lo.max(min_m) } else { m_lo };
                        for m in lo..=m_hi {
                            if d.m_at_least_n && m < n {
                                continue;
                            }
                            plan.push((id, n, Some(m)));
                        }
                    }
                }
            }
        }
        Ok(plan)
    }
}

/// Reports of a suite run, in plan order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteOutcome {
    pub reports: Vec<CheckReport>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> usize {
        self.reports.iter().filter(|r| r.pass).count()
    }

    pub fn failed(&self) -> usize {
        self.reports.len() - self.passed()
    }

    pub fn all_pass(&self) -> bool {
        self.reports.iter().all(|r| r.pass)
    }
}

/// Runs every planned check. Output order is the plan order regardless of
/// how work is scheduled; with `fail_fast` the output stops after the first
/// failure.
pub fn run_suite(config: &SuiteConfig) -> Result<SuiteOutcome> {
    let plan = config.plan()?;
    let max_index = plan
        .iter()
        .map(|&(_, n, m)| IdentityId::max_index(n, m.unwrap_or(0)))
        .max()
        .unwrap_or(0);
    let cache = Jacobsthal3Cache::with_max_index(max_index);

    let run_one = |&(id, n, m): &(IdentityId, u64, Option<u64>)| -> Result<CheckReport> {
        let mut eval = evaluate(&cache, id, n, m)?;
        if config.mutate == Some(id) {
            eval.lhs.off_by_one();
        }
        Ok(CheckReport::from_evaluation(id, n, m, &eval))
    };

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers.max(1))
        .build()
        .expect("failed to build worker pool");

    let chunk = if config.fail_fast { 256 } else { plan.len().max(1) };
    let mut reports = Vec::with_capacity(plan.len());
    for batch in plan.chunks(chunk) {
        let done: Vec<CheckReport> =
            pool.install(|| batch.par_iter().map(run_one).collect::<Result<_>>())?;
        if config.fail_fast {
            if let Some(pos) = done.iter().position(|r| !r.pass) {
                reports.extend(done.into_iter().take(pos + 1));
                break;
            }
        }
        reports.extend(done);
    }
    Ok(SuiteOutcome { reports })
}
