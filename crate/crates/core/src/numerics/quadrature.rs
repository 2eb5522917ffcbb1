//! Double-exponential (exp-sinh) quadrature on the half line in extended precision.

use crate::error::{Error, Result};

use super::{Precision, Real};

const MAX_LEVELS: usize = 14;
const MAX_ABSCISSA: f64 = 7.0;

/// `∫_0^∞ f(s) ds` with the substitution `s = exp(π/2 · sinh u)`.
///
/// The transformed integrand decays double-exponentially at both ends, which
/// also absorbs integrable algebraic singularities at `s = 0`. Step halving
/// stops once two successive levels agree to `10^-tol_digits` relative.
pub fn integrate_half_line<F>(f: F, prec: Precision, tol_digits: i32) -> Result<Real>
where
    F: Fn(&Real) -> Real,
{
    let half_pi = Real::pi(prec).mul_rat(&crate::numerics::rat(1, 2));
    let node = |u: &Real| -> Real {
        let s = (&half_pi * &u.sinh()).exp();
        let w = &(&half_pi * &u.cosh()) * &s;
        let v = f(&s);
        if v.is_finite() {
            &v * &w
        } else {
            Real::zero(prec)
        }
    };
    let tol = prec.epsilon(tol_digits);
    let negligible = prec.epsilon(prec.digits as i32 + 5);

    // sum over the nodes of one level, walking outward from the origin
    let level_sum = |h: &Real, odd_only: bool| -> Real {
        let mut acc = if odd_only { Real::zero(prec) } else { node(&Real::zero(prec)) };
        for dir in [1i64, -1] {
            let mut k: i64 = 1;
            let mut quiet = 0;
            loop {
                if odd_only && k % 2 == 0 {
                    k += 1;
                    continue;
                }
                let u = h.mul_rat(&crate::numerics::rat(dir * k, 1));
                if u.abs() > MAX_ABSCISSA {
                    break;
                }
                let term = node(&u);
                let small = term.abs() <= &negligible * &acc.abs().max(Real::one(prec));
                acc = &acc + &term;
                quiet = if small { quiet + 1 } else { 0 };
                if quiet >= 3 {
                    break;
                }
                k += 1;
            }
        }
        acc
    };

    let mut h = Real::one(prec);
    let mut sum = level_sum(&h, false);
    let mut estimate = &sum * &h;
    for _ in 0..MAX_LEVELS {
        h = h.mul_rat(&crate::numerics::rat(1, 2));
        sum = &sum + &level_sum(&h, true);
        let next = &sum * &h;
        let converged = next.rel_diff(&estimate) < tol;
        estimate = next;
        if converged {
            return Ok(estimate);
        }
    }
    Err(Error::Domain(format!("half-line quadrature did not reach 1e-{tol_digits} after {MAX_LEVELS} halvings")))
}
