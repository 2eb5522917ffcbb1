use crate::error::{Error, Result};
use crate::numerics::quadrature::integrate_half_line;
use crate::numerics::{factorial, Precision, Rat, Real};

use super::Params;

/// Relative accuracy requested from the quadrature, in digits.
pub const QUADRATURE_DIGITS: i32 = 30;

/// Gamma density with shape `-β/λ` and scale `-λ`:
/// `s^{-β/λ-1} e^{s/λ} / (Γ(-β/λ) (-λ)^{-β/λ})`.
pub fn mixture_density(s: &Real, params: &Params) -> Result<Real> {
    if !s.is_positive() {
        return Err(Error::Domain(format!("mixture density needs s > 0, got {s}")));
    }
    Ok(log_density(s, params).exp())
}

fn log_density(s: &Real, params: &Params) -> Real {
    let shape = -params.exponent();
    let scale = Rat::from(-params.lambda());
    let shape_r = Real::from_rat(&shape, s.precision());
    let scale_r = Real::from_rat(&scale, s.precision());
    let mut v = s.ln().mul_rat(&Rat::from(&shape - 1u32));
    v = &v + &s.mul_rat(&Rat::from(params.lambda().recip_ref()));
    v = &v - &shape_r.ln_gamma();
    &v - &scale_r.ln().mul_rat(&shape)
}

/// `∫_0^∞ f(s) G(s) ds` by double-exponential quadrature.
pub fn mixture_integral<F>(f: F, params: &Params, prec: Precision) -> Result<Real>
where
    F: Fn(&Real) -> Real,
{
    integrate_half_line(
        |s| {
            if s.is_positive() {
                &f(s) * &log_density(s, params).exp()
            } else {
                Real::zero(prec)
            }
        },
        prec,
        QUADRATURE_DIGITS,
    )
}

/// `∫ e^{-sx} G(s) ds`, which should equal `e_λ^β(-x)`.
pub fn mixture_laplace(x: &Real, params: &Params, prec: Precision) -> Result<Real> {
    mixture_integral(|s| (-&(s * x)).exp(), params, prec)
}

/// `∫ NB(n; p, rs) G(s) ds` with the Pascal mass
/// `p^{rs} (rs)(rs+1)...(rs+n-1) q^n / n!`.
pub fn mixture_pmf(n: usize, params: &Params, prec: Precision) -> Result<Real> {
    let log_p = Real::from_rat(params.p(), prec).ln();
    let c = crate::numerics::rat_pow(params.q(), n) / Rat::from(factorial(n));
    mixture_integral(
        |s| {
            let rs = s.mul_rat(params.r());
            let mut v = (&rs * &log_p).exp().mul_rat(&c);
            for j in 0..n {
                v = &v * &rs.add_rat(&Rat::from(j as u64));
            }
            v
        },
        params,
        prec,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measure::{deg_exp, MeasureModel};
    use crate::numerics::rat;

    #[test]
    fn density_is_normalized_with_mean_beta() {
        let prec = Precision::DEFAULT;
        for (_, params) in Params::presets() {
            let total = mixture_integral(|_| Real::one(prec), &params, prec).unwrap();
            assert!(total.rel_diff(&Real::one(prec)) < prec.epsilon(25));
            let mean = mixture_integral(|s| s.clone(), &params, prec).unwrap();
            assert!(mean.rel_diff(&Real::from_rat(params.beta(), prec)) < prec.epsilon(25));
        }
    }

    #[test]
    fn density_rejects_nonpositive_points() {
        let prec = Precision::DEFAULT;
        assert!(mixture_density(&Real::zero(prec), &Params::set_a()).is_err());
        assert!(mixture_density(&Real::one(prec), &Params::set_a()).unwrap().is_positive());
    }

    #[test]
    fn density_closed_form_for_unit_shape() {
        // β = -λ gives the exponential density e^{s/λ}/(-λ)
        let prec = Precision::DEFAULT;
        let params = Params::new(rat(-2, 1), rat(2, 1), rat(1, 2), rat(1, 1)).unwrap();
        let s = Real::from_rat(&rat(3, 7), prec);
        let expected = s.mul_rat(&rat(-1, 2)).exp().mul_rat(&rat(1, 2));
        assert!(mixture_density(&s, &params).unwrap().rel_diff(&expected) < prec.epsilon(50));
    }

    #[test]
    fn laplace_of_density() {
        let prec = Precision::DEFAULT;
        for (_, params) in Params::presets() {
            for x in [rat(1, 2), rat(1, 1), rat(2, 1)] {
                let xr = Real::from_rat(&x, prec);
                let lhs = mixture_laplace(&xr, &params, prec).unwrap();
                let rhs = deg_exp(&(-&xr), &params).unwrap();
                assert!(lhs.rel_diff(&rhs) < prec.epsilon(25));
            }
        }
    }

    #[test]
    fn mixture_reproduces_masses() {
        for (_, params) in Params::presets() {
            let model = MeasureModel::new(params.clone(), Precision::DEFAULT).unwrap();
            for n in [0, 1, 4, 10] {
                let v = mixture_pmf(n, &params, model.precision()).unwrap();
                assert!(v.rel_diff(&model.canonical_pmf(n)) < 1e-25, "n={n}");
            }
        }
    }
}
