//! Exact-arithmetic engine and verification suite for generalized inverses
//! of complex-rational matrices.
//!
//! The crate is organized in four layers:
//!
//! - [`scalar`]: arbitrary-precision Gaussian-rational arithmetic;
//! - [`matrix`]: dense exact matrix algebra (rank, solving, factorization);
//! - [`engine`]: Drazin, group, core-EP, weak group and m-weak group
//!   inverses, each computed by closed-form exact paths, plus the
//!   decompositions built from them;
//! - [`suite`]: seeded instance generators and identity checkers that
//!   machine-verify the algebraic laws the engine relies on, producing
//!   exact pass/fail verdicts with failure witnesses.
//!
//! There is no floating point anywhere: every identity is checked by exact
//! equality of canonical forms.

pub mod engine;
pub mod matrix;
pub mod scalar;
pub mod suite;

pub use engine::{DrazinData, EngineError, MwgDecomposition, Path, PierceBlocks};
pub use matrix::{Matrix, MatrixError, RankProfile};
pub use scalar::{GaussianRational, ParseRationalError, ScalarError};
pub use suite::{CheckResult, GenSpec, ProductFamily, SuiteError, Verdict, Witness};
