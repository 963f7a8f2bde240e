//! Parametrization of all Pythagorean triples by a single triple of
//! integer-valued polynomials in four variables.
//!
//! - [`poly`]: exact multivariate polynomials over the rationals.
//! - [`param`]: the forward maps, numerically and symbolically.
//! - [`inverse`]: constructive preimages and four-square decomposition.
//! - [`verify`]: exhaustive verification sweeps and their reports.

pub mod arith;
pub mod budget;
pub mod error;
pub mod inverse;
pub mod param;
pub mod poly;
pub mod verify;

pub use budget::Budgets;
pub use error::{Error, Result};
pub use param::{AdmissibleABC, ParamPoint4, PositivePoint, PositivePythTriple, PythTriple, SixteenParams};
pub use poly::{ExactRational, Monomial, Polynomial};
