//! Exact computation of the Hilbert series of the ring of hook Schur
//! functions, together with the brute-force oracles used to check it.
//!
//! - [`qseries`]: integer polynomials and truncated power series in `t`,
//!   q-Pochhammer products, Gaussian binomials.
//! - [`partitions`]: partitions, skew shapes, enumeration and counting.
//! - [`symfun`]: Schur, skew Schur and hook Schur polynomials.
//! - [`hilbert`]: the closed form, the hook recurrence and identity checks.
//! - [`report`]: the structured result of an identity check.

pub mod error;
pub mod hilbert;
pub mod partitions;
pub mod qseries;
pub mod report;
pub mod symfun;

pub use error::{Error, Result};
pub use hilbert::{hilbert_series, HookParams, IntermediateReport};
pub use partitions::{Partition, SkewShape};
pub use qseries::{gauss_binomial, QPolynomial, TruncSeries, DEFAULT_ORDER};
pub use report::{Mismatch, VerificationReport};
pub use symfun::{hook_schur, Block, MultiPoly};
