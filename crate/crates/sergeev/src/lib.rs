//! Exact computer algebra for cyclotomic Sergeev superalgebras.
//!
//! The crate implements two multiplication kernels over the rationals: the
//! filtered algebra on generators `ŝ_i`, `x̂_i`, `ĉ_i` modulo a monic
//! parity-constrained polynomial `f` of degree `l` (the level), and its
//! associated graded algebra, a twisted tensor product of a truncated
//! polynomial ring, the symmetric group algebra, and a Clifford algebra.
//! On top of the kernels sit the classical element families (X-cycles,
//! CX-cycles, odd skew cycles, colored Jucys-Murphy elements, the orbit sums
//! `z(λ)`, the symmetric sums `m(μ)` and their lifts `p(μ)`), exact sparse
//! linear algebra for brute-force center computation, and a battery of
//! identity suites that verify the structural lemmas at desk scale.

pub mod center;
pub mod cycles;
pub mod element;
pub mod error;
pub mod graded;
pub mod linalg;
pub mod monomial;
pub mod parity;
pub mod partitions;
pub mod perm;
pub mod scalar;
pub mod sergeev;
pub mod suites;

pub use element::{GrElement, SergeevElement};
pub use error::{AlgebraError, Result};
pub use graded::{AlgebraConfig, GrAlgebra};
pub use sergeev::SergeevAlgebra;
