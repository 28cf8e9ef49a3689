//! Numerical laboratory for sign correlations of eigenfunction families.
//!
//! Given a family {wₙ} and two points x, y, the quantity of interest is the
//! asymptotic frequency with which wₙ(x) and wₙ(y) share a sign. The crate
//! computes this limit two independent ways:
//!
//! * analytically, from closed-form averages of sgn(cos·cos) over rays of
//!   the flat torus ([`torus`], [`predictors`]);
//! * empirically, by streaming sign pairs out of Hermite, Laguerre and
//!   Chebyshev evaluators ([`special`]) or out of numerically solved
//!   eigenfunctions of −(1/4π²)d²/dx² + V(x) ([`solver`]), and counting
//!   agreements ([`lab`]).
//!
//! Equidistribution diagnostics ([`equidist`]) probe the hypotheses the
//! closed forms rest on, and [`report`] fixes the serialized output formats
//! used by the command-line front end.

pub mod equidist;
pub mod error;
pub mod lab;
pub mod predictors;
pub mod report;
pub mod sign;
pub mod solver;
pub mod special;
pub mod torus;

pub use error::{Error, Result};
pub use sign::Sign;
