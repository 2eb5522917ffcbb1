//! Stirling numbers, partial Bell polynomials, compositions and the
//! coefficient sequences built from them.

mod bell;
mod compositions;
mod sequences;
mod stirling;

pub use bell::{bell_partial, faa_derivative, BellTable};
pub use compositions::{compositions, Composition, Compositions};
pub use sequences::{
    bracket, bracket_y, deg_falling, epsilon, epsilon_closed, eta, kappa, omega_pow_series, rho_scaling, theta_series,
    varpi, varrho, zeta_series, EpsilonForm, RhoVariant,
};
pub use stirling::{stirling1, stirling1_int, stirling2, stirling2_int};
