//! Exact-arithmetic generalized inverses over matrix rings.
//!
//! The crate computes and verifies the full hierarchy of generalized
//! inverses characterized through polarity: (b,c)-inverses with their left
//! and right spectral idempotents, dual polarity, the inverse along an
//! element, group/Drazin/Moore-Penrose inverses, Bott-Duffin inverses, and
//! the operator-side characterizations through projections with prescribed
//! range and kernel.
//!
//! Coefficients are exact: arbitrary-precision rationals or a prime field
//! F_p. There is no floating point anywhere, and every defining identity is
//! checked bit-exactly.
//!
//! Construction is proof-carrying throughout: the inverse builders re-verify
//! their defining identities before returning, and the [`suite`] module runs
//! every equivalence and uniqueness property on seeded random or exhaustive
//! instance families, producing a deterministic, serializable report.
//!
//! Each major capability has a runnable example under `examples/`; the thin
//! `bcpolar` binary exposes `invert`, `verify`, and `suite` subcommands over
//! JSON problem files.

pub mod bc;
pub mod classic;
pub mod cli;
pub mod error;
pub mod field;
pub mod linmem;
pub mod matrix;
pub mod subspace;
pub mod suite;

pub use bc::{BcResult, DualBcResult};
pub use error::AlgebraError;
pub use field::{FieldSpec, Scalar};
pub use matrix::{Mat, MatrixJson};
pub use subspace::{Projector, Subspace};
pub use suite::{Report, SplitMix64};
