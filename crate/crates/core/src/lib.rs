//! Exact arithmetic for dual third-order Jacobsthal and Jacobsthal-Lucas
//! numbers and vectors, with a checker that compares every closed form
//! against direct recurrence.
//!
//! ```
//! use jacobsthal3::{check::check_dual_identity, check::IdentityId, dual_sequences::dual_j3,
//!     sequences::Jacobsthal3Cache};
//!
//! let cache = Jacobsthal3Cache::with_max_index(10);
//! assert_eq!(dual_j3(&cache, 2).to_string(), "1 + 2*eps");
//! assert!(check_dual_identity(IdentityId::Thm3, 5, None).unwrap().pass);
//! ```

pub mod check;
pub mod dual;
pub mod dual_sequences;
pub mod error;
pub mod scalar;
pub mod sequences;
pub mod vectors;

pub use check::{CheckReport, IdentityId, SuiteConfig};
pub use dual::Dual;
pub use error::{Error, Result};
pub use scalar::{BigInt, BigRational, EisensteinRational};
pub use vectors::DualVec3;
