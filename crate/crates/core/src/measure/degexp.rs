use crate::combinatorics::deg_falling;
use crate::error::{contract, Error, Result};
use crate::numerics::{gen_binomial, rat_pow, Precision, Rat, Real, TSeries};

use super::Params;

/// `e_λ^β(z) = (1 + λz)^{β/λ}` on the real branch.
pub fn deg_exp(z: &Real, params: &Params) -> Result<Real> {
    let base = z.mul_rat(params.lambda()).add_rat(&Rat::from(1));
    if !base.is_positive() {
        return Err(Error::Domain(format!("1 + λz = {base} is not positive")));
    }
    Ok(base.pow_rat(&params.exponent()))
}

/// `e_λ^β(u(t))` for a series with `u(0) = 0`, with exact coefficients.
pub fn deg_exp_series(u: &TSeries<Rat>, params: &Params) -> Result<TSeries<Rat>> {
    if *u.coeff(0) != 0 {
        return contract("deg_exp_series needs u(0) = 0");
    }
    let one = TSeries::constant(u.order(), Rat::from(1));
    one.add(&u.scale(params.lambda()))?.fracpow(&params.exponent())
}

/// `φ^{(j)}(w) = (β)_{j,λ} (1 + λw)^{β/λ - j}`, the derivatives of the
/// degenerate exponential.
pub fn deg_exp_derivative(j: usize, w: &Real, params: &Params) -> Result<Real> {
    let base = w.mul_rat(params.lambda()).add_rat(&Rat::from(1));
    if !base.is_positive() {
        return Err(Error::Domain(format!("1 + λw = {base} is not positive")));
    }
    let e = params.exponent() - Rat::from(j as u64);
    Ok(base.pow_rat(&e).mul_rat(&deg_falling(params.beta(), j, params.lambda())))
}

/// Pascal (negative binomial) mass `p^r C(-r, n) (-q)^n`.
pub fn classical_pmf(n: usize, p: &Rat, r: &Rat, prec: Precision) -> Real {
    let q = Rat::from(1 - p);
    let c = gen_binomial(&Rat::from(-r), n) * rat_pow(&Rat::from(-&q), n);
    Real::from_rat(p, prec).pow_rat(r).mul_rat(&c)
}

/// [`classical_pmf`] as an exact rational when `r` is an integer.
pub fn classical_pmf_exact(n: usize, p: &Rat, r: &Rat) -> Option<Rat> {
    if *r.denom() != 1 {
        return None;
    }
    let k = r.numer().to_usize()?;
    let q = Rat::from(1 - p);
    Some(rat_pow(p, k) * gen_binomial(&Rat::from(-r), n) * rat_pow(&Rat::from(-&q), n))
}
