//! Exact counts of skew standard Young tableaux of shape `μ/(m)` and of
//! Kostka numbers `K(μ, (m, 1^{n-m}))`.
//!
//! The closed forms for `m = 2, 3, 4` live in [`closed_forms`]. Everything
//! they are built from (content power sums, the `q±` row statistics,
//! small-support character values) has its own module, and every formula is
//! paired with an independent oracle in [`oracles`] or [`characters`]
//! (hook-length formula, exhaustive enumeration, a Jacobi–Trudi style
//! determinant, and the Murnaghan–Nakayama rule).
//!
//! All arithmetic is exact; integers are [`ExactInteger`] and intermediate
//! fractions are [`ExactRational`].

pub mod arith;
pub mod characters;
pub mod closed_forms;
pub mod content;
mod error;
pub mod oracles;
pub mod partition;
pub mod report;
pub mod table;
pub mod verify;

pub use error::{Error, Result};

/// Arbitrary-precision signed integer used for every count and coefficient.
pub type ExactInteger = num_bigint::BigInt;

/// Arbitrary-precision rational in canonical form.
pub type ExactRational = num_rational::BigRational;

pub use partition::{CycleType, Partition, SkewShape};
pub use report::VerificationReport;
