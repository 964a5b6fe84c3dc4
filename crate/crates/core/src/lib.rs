//! Exact weight q-multiplicities for the exceptional Lie algebra g2, with the
//! sp4 partition and multiplicity formulas alongside.
//!
//! Every closed formula in the crate is paired with an independent route:
//!
//! - [`g2::qpartition`] (nested quadruple sum) against [`g2::qpartition_bruteforce`]
//!   (witness enumeration) and, at `q = 1`, against [`g2::partition_tarski`].
//! - [`qkwmf::qmultiplicity_closed`] (at most five partition terms selected by the
//!   sign pattern of `a..f`) against [`qkwmf::qmultiplicity_weyl_sum`] (the full
//!   twelve-term alternating sum).
//! - [`sp4::multiplicity_c2_closed`] against [`sp4::multiplicity_c2_weyl_sum`].
//!
//! All arithmetic is exact and checked; coefficient overflow is an [`Error`],
//! never a silent wraparound.

pub mod audit;
pub mod error;
pub mod g2;
pub mod qkwmf;
pub mod qpoly;
pub mod rootsys;
pub mod scalar;
pub mod sp4;
pub mod verify;

pub use error::{Error, Result};
pub use qpoly::Poly;
pub use rootsys::{FundCoord, RootCoord, WeylElement};
pub use scalar::Coeff;

/// Polynomial in `q` with 64-bit coefficients; the default everywhere.
pub type QPoly = Poly<i64>;

/// Polynomial in `q` with 128-bit coefficients, for grids whose counts outgrow `i64`.
pub type WideQPoly = Poly<i128>;

/// Multiplicity result with 64-bit coefficients.
pub type MultiplicityResult = qkwmf::MultiplicityResult<i64>;
