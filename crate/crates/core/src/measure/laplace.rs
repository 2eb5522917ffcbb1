use crate::error::{Error, Result};
use crate::numerics::{Precision, Rat, Real, TSeries};

use super::degexp::{deg_exp, deg_exp_series};
use super::Params;

/// `L(z) = e_λ^β(r log(p / (1 - q e^z)))` for `q e^z < 1`.
pub fn laplace(z: &Real, params: &Params, prec: Precision) -> Result<Real> {
    let qe = z.exp().mul_rat(params.q());
    if qe >= 1.0 {
        return Err(Error::Domain(format!("q e^z = {qe} is not below 1")));
    }
    let arg = (&Real::from_rat(params.p(), prec) / &(&Real::one(prec) - &qe)).ln();
    deg_exp(&arg.mul_rat(params.r()), params)
}

/// Exact Taylor expansion of `L` at 0, using
/// `r log(p / (1 - q e^z)) = -r log(1 - (q/p)(e^z - 1))`.
pub fn laplace_series(params: &Params, order: usize) -> TSeries<Rat> {
    let one = TSeries::constant(order, Rat::from(1));
    let em1 = TSeries::exponential(order).sub(&one).expect("same order");
    let ratio = Rat::from(params.q() / params.p());
    let inner = one.sub(&em1.scale(&ratio)).expect("same order");
    let u = inner.log1().expect("unit constant term").scale(&Rat::from(-params.r()));
    deg_exp_series(&u, params).expect("u(0) = 0")
}

/// `M(m) = m! [z^m] L(z)`, the m-th moment, exactly.
pub fn moment_exact(m: usize, params: &Params) -> Rat {
    laplace_series(params, m).derivative_at_zero(m)
}

/// `M(0), ..., M(m_max)`.
pub fn moments_exact(m_max: usize, params: &Params) -> Vec<Rat> {
    let l = laplace_series(params, m_max);
    (0..=m_max).map(|m| l.derivative_at_zero(m)).collect()
}
