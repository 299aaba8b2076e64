//! Exact scalars and small dense matrices.
//!
//! [`QSqrt2`] is the field ℚ(√2) over arbitrary-precision rationals. [`Mat`] is generic
//! over any [`Scalar`], so the same code serves exact matrices, integer group matrices
//! and `f64` checks.

mod mat;
mod qsqrt2;
mod scalar;

pub use mat::Mat;
pub use qsqrt2::QSqrt2;
pub use scalar::{Field, Scalar, ToInteger};

/// Reduced fraction of arbitrary-precision integers.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RingError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("matrix is not invertible: {matrix}")]
    Singular { matrix: String },
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("cannot parse {0:?} as p/q+r/s*sqrt2")]
    Parse(String),
}

/// Lossy conversion used only for export and rendering.
pub fn to_float(x: &QSqrt2) -> f64 {
    x.to_f64()
}
