//! Exact arithmetic: rationals, rational functions in `q`, sparse polynomials
//! in `x, s, r` and truncated power series in `z`.
//!
//! Every type keeps a canonical form, so `==` decides equality of values.

mod qpoly;
mod qrat;
mod render;
mod series;
mod xspoly;

pub use qpoly::QPoly;
pub use qrat::{QRational, QValue};
pub use series::ZSeries;
pub use xspoly::{Mono, Var, XsPoly};

/// Arbitrary precision rational number.
pub type Rational = num_rational::BigRational;

/// Parses `"3"`, `"-1/2"` and the like.
pub fn parse_rational(s: &str) -> Option<Rational> {
    s.trim().parse().ok()
}
