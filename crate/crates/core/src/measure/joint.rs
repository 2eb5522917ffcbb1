use crate::error::{Error, Result};
use crate::numerics::{Rat, Real};

use super::degexp::deg_exp;
use super::pmf::decay_rate;
use super::{MeasureModel, Params};

/// `ω(t) = (1 + t)/(1 + qt)`.
fn omega(t: &Real, q: &Rat) -> Real {
    let one = Rat::from(1);
    &t.add_rat(&one) / &t.mul_rat(q).add_rat(&one)
}

/// `e_λ^β(r log(1 + qt))`.
fn normalizer(t: &Real, params: &Params) -> Result<Real> {
    let inner = t.mul_rat(params.q()).add_rat(&Rat::from(1));
    if !inner.is_positive() {
        return Err(Error::Domain("1 + qt is not positive".into()));
    }
    deg_exp(&inner.ln().mul_rat(params.r()), params)
}

/// `Ψ(t, x) = ω(t)^x / e_λ^β(r log(1 + qt))` at a real point.
pub fn psi(t: &Real, x: &Real, params: &Params) -> Result<Real> {
    let w = omega(t, params.q());
    if !w.is_positive() {
        return Err(Error::Domain("ω(t) is not positive".into()));
    }
    Ok(&w.powr(x) / &normalizer(t, params)?)
}

/// `E[Ψ(s, X) Ψ(t, X)]` in closed form:
/// `e_λ^β(r log(p(1+qt)(1+qs) / ((1+qt)(1+qs) - q(1+t)(1+s))))` divided by
/// the two normalizers.
pub fn joint_laplace(s: &Real, t: &Real, params: &Params) -> Result<Real> {
    let one = Rat::from(1);
    let den_s = s.mul_rat(params.q()).add_rat(&one);
    let den_t = t.mul_rat(params.q()).add_rat(&one);
    let dd = &den_s * &den_t;
    let nn = &(&s.add_rat(&one) * &t.add_rat(&one)).mul_rat(params.q());
    let gap = &dd - nn;
    if !gap.is_positive() || !dd.is_positive() {
        return Err(Error::Domain("q ω(s) ω(t) must lie in (0, 1)".into()));
    }
    let arg = (&dd.mul_rat(params.p()) / &gap).ln().mul_rat(params.r());
    let top = deg_exp(&arg, params)?;
    Ok(&top / &(&normalizer(s, params)? * &normalizer(t, params)?))
}

/// `Σ_k Ψ(s, k) Ψ(t, k) pmf(k)`, extending the mass table until the terms
/// fall below `10^{-D/2}`.
pub fn joint_laplace_by_sum(s: &Real, t: &Real, model: &MeasureModel) -> Result<Real> {
    let prec = model.precision();
    let params = model.params();
    let ratio = &omega(s, params.q()) * &omega(t, params.q());
    let norm = &normalizer(s, params)? * &normalizer(t, params)?;
    if &ratio * &decay_rate(params, prec) >= 1.0 {
        return Err(Error::Domain("double sum diverges at this point".into()));
    }
    let tol = prec.epsilon(prec.digits as i32 / 2);
    let mut len = model.cutoff() + 1;
    loop {
        let pmf = model.pmf_prefix(len);
        let mut acc = Real::zero(prec);
        let mut w = Real::one(prec);
        let mut last = Real::zero(prec);
        for v in &pmf {
            last = v * &w;
            acc = &acc + &last;
            w = &w * &ratio;
        }
        if last < tol {
            return Ok(&acc / &norm);
        }
        len *= 2;
        if len > 1 << 15 {
            return Err(Error::Domain("double sum does not converge at this point".into()));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{rat, Precision};

    fn r(x: i64, y: i64) -> Real {
        Real::from_rat(&rat(x, y), Precision::DEFAULT)
    }

    #[test]
    fn symmetric_and_normalized() {
        let prec = Precision::DEFAULT;
        for (_, params) in Params::presets() {
            let a = joint_laplace(&r(1, 10), &r(1, 5), &params).unwrap();
            let b = joint_laplace(&r(1, 5), &r(1, 10), &params).unwrap();
            assert!(a.rel_diff(&b) < prec.epsilon(55));
            let z = joint_laplace(&r(0, 1), &r(1, 3), &params).unwrap();
            assert!(z.rel_diff(&Real::one(prec)) < prec.epsilon(55), "E[Ψ(t, X)] = 1");
        }
    }

    #[test]
    fn matches_double_sum() {
        for (_, params) in Params::presets() {
            let model = MeasureModel::new(params.clone(), Precision::DEFAULT).unwrap();
            for (s, t) in [(r(1, 10), r(1, 5)), (r(1, 50), r(1, 1))] {
                let closed = joint_laplace(&s, &t, &params).unwrap();
                let sum = joint_laplace_by_sum(&s, &t, &model).unwrap();
                assert!(closed.rel_diff(&sum) < 1e-20);
            }
        }
    }

    #[test]
    fn not_a_function_of_the_product() {
        let params = Params::set_a();
        let a = joint_laplace(&r(1, 10), &r(1, 5), &params).unwrap();
        let b = joint_laplace(&r(1, 50), &r(1, 1), &params).unwrap();
        assert!((&a - &b).abs() > 1e-6);
    }

    #[test]
    fn outside_domain() {
        assert!(joint_laplace(&r(50, 1), &r(50, 1), &Params::set_a()).is_err());
    }
}
