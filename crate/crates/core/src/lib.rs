//! Exact q-Chebyshev polynomials and the identities around them.
//!
//! The crate builds `T_n(x, s, q)` and `U_n(x, s, q)` over the field of
//! rational functions in `q`, together with tiling models, the orthogonality
//! functionals, and q-analogues of the tangent and Genocchi numbers. The
//! [`verify`] module runs the whole identity catalogue.

pub mod algebra;
pub mod chebyshev;
pub mod classical;
pub mod moments;
pub mod error;
pub mod qcomb;
pub mod tangent;
pub mod tiling;
pub mod verify;

pub use algebra::{Mono, QPoly, QRational, QValue, Rational, Var, XsPoly, ZSeries};
pub use error::{Error, Result};
