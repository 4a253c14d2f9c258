//! Executable bridge between four-point configurations in the plane and
//! marked elliptic curves `(E, Q, omega)`, together with the braid-group
//! machinery relating `B4`, `B3`, `Aut+(F2)` and `SL2(Z)`.
//!
//! The algebraic core is generic over [`Scalar`]; the concrete domains are
//! re-exported below as type aliases.

pub mod braid;
pub mod curve;
pub mod error;
pub mod exact;
pub mod json;
pub mod lattice;
pub mod mat2;
pub mod poly;
pub mod report;
pub mod roots;
pub mod scalar;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
pub use mat2::{mat2_det, mat2_mul, Mat2};
pub use poly::Polynomial;
pub use report::{Check, Report};
pub use roots::roots_complex;
pub use scalar::Scalar;
pub use series::Series;

/// Exact rational numbers.
pub type ExactRational = num_rational::BigRational;
/// Exact Gaussian rationals `a + b i` with `a, b` rational.
pub type GaussianRational = num_complex::Complex<ExactRational>;
/// Binary64 complex numbers.
pub type ComplexFloat = num_complex::Complex64;
/// Binary32 complex numbers.
pub type ComplexFloat32 = num_complex::Complex32;
