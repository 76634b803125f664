//! Solving polynomial linear systems `A(x) y = b(x)` over finite fields from
//! black-box evaluations, some of which may be wrong.
//!
//! The crate provides finite-field arithmetic ([`field`]), dense polynomials
//! and matrices, the system model and instance generator ([`system`]), the
//! noisy evaluation oracle ([`oracle`]), the randomized key-equation decoder
//! ([`glz`]), a deterministic baseline ([`bk`]), interleaved Reed-Solomon
//! decoding as a special case ([`irs`]), a text format ([`format`]) and the
//! failure-rate harness ([`experiment`]).

#![allow(clippy::type_complexity)]

pub mod bk;
pub mod error;
pub mod experiment;
pub mod field;
pub mod format;
pub mod glz;
pub mod irs;
pub mod matrix;
pub mod oracle;
pub mod poly;
pub mod system;

pub use bk::{bk_solve, l_bk};
pub use error::{Error, Result};
pub use field::{Fe, Field, FieldSpec, Gf};
pub use glz::{decode, l_glz, l_star, DecodeOptions, DecodeOutcome, DecodeParams, FailReason};
pub use matrix::Matrix;
pub use oracle::{Evaluation, EvaluationSample};
pub use poly::Poly;
pub use system::{PolyMatrix, PolySystem, ReducedRationalSolution};

/// Table-driven finite field.
pub type Fq = Gf;
pub type FqPoly = Poly<Fe>;
pub type FqMatrix = Matrix<Fe>;
pub type FqPolyMatrix = PolyMatrix<Fe>;
pub type FqSystem = PolySystem<Fe>;
pub type FqSolution = ReducedRationalSolution<Fe>;
pub type FqEvaluation = Evaluation<Fe>;
