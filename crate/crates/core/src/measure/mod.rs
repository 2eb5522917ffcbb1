//! The degenerate Pascal measure: masses, Laplace transform, moments, the
//! Gamma mixture behind it and a seeded sampler.

mod degexp;
mod joint;
mod laplace;
mod mixture;
mod params;
mod pmf;
mod sampler;

pub use degexp::{classical_pmf, classical_pmf_exact, deg_exp, deg_exp_derivative, deg_exp_series};
pub use joint::{joint_laplace, joint_laplace_by_sum, psi};
pub use laplace::{laplace, laplace_series, moment_exact, moments_exact};
pub use mixture::{mixture_density, mixture_integral, mixture_laplace, mixture_pmf, QUADRATURE_DIGITS};
pub use params::Params;
pub use pmf::{canonical_pmf_series, decay_rate, MeasureModel, MOMENT_ORDER_MAX};
pub use sampler::{sample, SampleSummary};
