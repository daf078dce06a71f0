use thiserror::Error;

use crate::check::IdentityId;

/// Errors raised by the exact-arithmetic routines and the identity checks.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An element of Q(ω) that was expected to be rational has a nonzero ω coefficient.
    #[error("value {0} is not rational (nonzero ω coefficient)")]
    NotRational(String),

    /// A closed form produced a non-integer where an integer was required.
    #[error("inexact division: {0}")]
    InexactDivision(String),

    /// Division by a dual number whose real part is zero.
    #[error("division by a pure dual number (zero real part)")]
    DivisionByPureDual,

    /// The dual norm is undefined for a vector with zero real part.
    #[error("dual norm undefined: real vector part is zero")]
    ZeroRealPart,

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("{identity}: index out of domain at n={n}{}: {reason}", m.map(|m| format!(", m={m}")).unwrap_or_default())]
    Domain {
        identity: IdentityId,
        n: u64,
        m: Option<u64>,
        reason: &'static str,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
