//! Exact sparse Laurent and multivariate polynomial arithmetic over a generic
//! scalar, the power-sum polynomial families built on it, and checkers that
//! verify identities among them.
//!
//! The kernel types are generic over [`Coefficient`]; the aliases below fix
//! the scalar to exact rationals, which is what the families and checkers use.

pub mod error;
pub mod families;
pub mod laurent;
pub mod multivariate;
pub mod scalar;
pub mod text;
pub mod verify;

pub use error::{Error, Result};
pub use laurent::Laurent;
pub use multivariate::{Bivariate, Monomial, Multivariate, Trivariate, VariableNames};
pub use scalar::{Coefficient, Integer, Rational};
pub use text::{parse_laurent, parse_multivariate};

/// Laurent polynomial in `T` with rational coefficients.
pub type LaurentPoly = Laurent<Rational>;
/// Polynomial in `X, Y` with rational coefficients.
pub type BiPoly = Multivariate<2, Rational>;
/// Polynomial in `s1, s2, s3` with rational coefficients.
pub type TriPoly = Multivariate<3, Rational>;
