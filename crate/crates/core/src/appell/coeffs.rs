use crate::combinatorics::{deg_falling, faa_derivative};
use crate::error::{contract, Result};
use crate::measure::{deg_exp_series, Params};
use crate::numerics::{binomial, factorial, rat_pow, Rat, TSeries};

/// `ξ_q^{(m)}(0) = r (-1)^{m-1} (m-1)! q^m` for `ξ_q(t) = r log(1 + qt)`,
/// with `ξ_q(0) = 0`.
pub fn xi_derivs(n_max: usize, params: &Params) -> Vec<Rat> {
    (0..=n_max)
        .map(|m| {
            if m == 0 {
                return Rat::new();
            }
            let sign = if m % 2 == 1 { 1 } else { -1 };
            (params.r() * rat_pow(params.q(), m)) * Rat::from(factorial(m - 1)) * sign
        })
        .collect()
}

/// `e_λ^β(ξ_q(t))` as an exact series; it equals `L(θ(t))`.
pub fn composed_series(params: &Params, order: usize) -> TSeries<Rat> {
    let xi = TSeries::log_one_plus(order, params.q()).scale(params.r());
    deg_exp_series(&xi, params).expect("ξ_q(0) = 0")
}

/// `μ_k = (e_λ^β ∘ ξ_q)^{(k)}(0)` by Faà di Bruno, using
/// `(e_λ^β)^{(j)}(0) = (β)_{j,λ}`.
pub fn mu_coeffs(n_max: usize, params: &Params) -> Vec<Rat> {
    let outer: Vec<Rat> = (0..=n_max).map(|j| deg_falling(params.beta(), j, params.lambda())).collect();
    let inner = xi_derivs(n_max, params);
    (0..=n_max).map(|k| faa_derivative(&outer, &inner, k).expect("lists cover order n_max")).collect()
}

/// `μ_k` read off the composed series.
pub fn mu_coeffs_series(n_max: usize, params: &Params) -> Vec<Rat> {
    let s = composed_series(params, n_max);
    (0..=n_max).map(|k| s.derivative_at_zero(k)).collect()
}

/// `c_0 = 1`, `c_n = -Σ_{i=1}^n C(n,i) r^{-i} μ_i c_{n-i}`.
pub fn c_coeffs(n_max: usize, params: &Params) -> Result<Vec<Rat>> {
    if *params.r() == 0 {
        return contract("the c recurrence needs r != 0");
    }
    let mu = mu_coeffs(n_max, params);
    let r_inv = Rat::from(params.r().recip_ref());
    let mut c = vec![Rat::from(1)];
    for n in 1..=n_max {
        let mut acc = Rat::new();
        for i in 1..=n {
            acc += Rat::from(binomial(n, i)) * rat_pow(&r_inv, i) * &mu[i] * &c[n - i];
        }
        c.push(-acc);
    }
    Ok(c)
}

/// `c_n = n! r^{-n} [t^n] 1/e_λ^β(ξ_q(t))`.
pub fn c_coeffs_series(n_max: usize, params: &Params) -> Vec<Rat> {
    let omega = composed_series(params, n_max).reciprocal().expect("unit constant term");
    let r_inv = Rat::from(params.r().recip_ref());
    (0..=n_max).map(|n| omega.derivative_at_zero(n) * rat_pow(&r_inv, n)).collect()
}

/// The exact coefficient sequences behind the `K_n` family.
#[derive(Clone, Debug, PartialEq)]
pub struct CoeffTable {
    pub c: Vec<Rat>,
    pub mu: Vec<Rat>,
    pub xi: Vec<Rat>,
}

impl CoeffTable {
    pub fn new(n_max: usize, params: &Params) -> Result<Self> {
        Ok(CoeffTable { c: c_coeffs(n_max, params)?, mu: mu_coeffs(n_max, params), xi: xi_derivs(n_max, params) })
    }
}
