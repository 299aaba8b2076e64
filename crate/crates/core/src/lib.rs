//! Orthoplicial Apollonian sphere packings.
//!
//! The crate works in inversive coordinates over the exact field ℚ(√2). Configurations of
//! eight spheres are generated by an integer reflection group acting on 5×5 F-matrices, and
//! the [`arithmetic`] module studies which integer bends occur.
//!
//! Most routines are generic over the scalar type through [`ring::Scalar`]; the aliases below
//! fix the common choices.

pub mod arithmetic;
pub mod cli;
pub mod config;
pub mod groups;
pub mod inversive;
pub mod packing;
pub mod ring;

pub use config::{BendVector, FMatrix, VMatrix};
pub use ring::{Mat, QSqrt2};

pub type Rational = ring::Rational;
/// Exact 5×5 or 8×5 matrix over ℚ(√2).
pub type ExactMat = Mat<QSqrt2>;
/// Integer group matrix.
pub type IntMat = Mat<num_bigint::BigInt>;
pub type FloatMat = Mat<f64>;
/// Exact inversive coordinates `(ā, b, b·x, b·y, b·z)`.
pub type Coord5 = inversive::Coord<QSqrt2>;
pub type FloatCoord5 = inversive::Coord<f64>;
pub type GaussianInt = num_complex::Complex<num_bigint::BigInt>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Ring(#[from] ring::RingError),
    #[error(transparent)]
    Inversive(#[from] inversive::InversiveError),
    #[error(transparent)]
    Config(#[from] config::ConfigError),
    #[error(transparent)]
    Group(#[from] groups::GroupError),
    #[error(transparent)]
    Packing(#[from] packing::PackingError),
    #[error(transparent)]
    Arithmetic(#[from] arithmetic::ArithmeticError),
}
