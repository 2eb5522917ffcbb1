//! Degenerate Pascal measures and the degenerate Krawtchouk-Appell polynomials.
//!
//! Everything that can be exact is exact: scalars are arbitrary-precision
//! rationals ([`Rat`]), polynomials and truncated power series are built on
//! top of them, and the polynomial families are constructed along several
//! independent routes that must agree coefficient for coefficient.
//! Quantities that involve `log p` (the probability mass function, the
//! numeric Laplace transform, the literal closed forms) are evaluated with
//! MPFR-backed extended-precision reals ([`Real`]).
//!
//! Module map:
//!
//! * [`numerics`]: rationals, `XPoly`/`XYPoly`, `TSeries`, `Real`, quadrature.
//! * [`combinatorics`]: Stirling numbers, partial Bell polynomials,
//!   compositions and the named coefficient sequences.
//! * [`measure`]: the degenerate Pascal measure, its moments, the Gamma
//!   mixture and a seeded sampler.
//! * [`appell`]: the `K_n` and `P_n` families and the addition/inversion
//!   identities relating them.
//! * [`operators`]: chaos expansions, scaling and translation.
//! * [`audit`] and [`cli`]: the formula audit and command-line front end.

pub mod appell;
pub mod audit;
pub mod cli;
pub mod combinatorics;
pub mod error;
pub mod measure;
pub mod numerics;
pub mod operators;

pub use error::{Error, Result};
pub use numerics::{Precision, Rat, Real, Ring, TSeries, XPoly, XYPoly};
