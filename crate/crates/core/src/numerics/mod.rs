//! Exact scalars, polynomials, truncated power series and extended-precision reals.

mod poly;
pub mod quadrature;
mod rat;
mod real;
mod ring;
mod series;
mod xypoly;

pub use poly::XPoly;
pub use rat::{binomial, factorial, parse_rat, rat, rat_pow, Integer, Rat};
pub use real::{Precision, Real};
pub use ring::{gen_binomial, Ring};
pub use series::{TSeries, DEFAULT_ORDER};
pub use xypoly::XYPoly;
