use super::compositions;
use crate::numerics::{factorial, gen_binomial, rat_pow, Rat, TSeries, XPoly, XYPoly};

/// Degenerate falling factorial `(β)_{k,λ} = β (β-λ) ... (β-(k-1)λ)`, with
/// `(β)_{0,λ} = 1`.
pub fn deg_falling(beta: &Rat, k: usize, lambda: &Rat) -> Rat {
    (0..k).fold(Rat::from(1), |acc, j| acc * (beta - Rat::from(lambda * j as u64)))
}

/// `θ(z) = log((1+z)/(1+qz))`.
pub fn theta_series(order: usize, q: &Rat) -> TSeries<Rat> {
    TSeries::log_one_plus(order, &Rat::from(1)).sub(&TSeries::log_one_plus(order, q)).expect("same order")
}

/// `ζ(z) = (e^z - 1)/(1 - q e^z)`, the compositional inverse of θ, computed as
/// `u (p - q u)^{-1}` with `u = e^z - 1`.
pub fn zeta_series(order: usize, q: &Rat) -> TSeries<Rat> {
    let mut u = TSeries::exponential(order);
    let u0 = u.coeff(0).clone();
    u = u.sub(&TSeries::constant(order, u0)).expect("same order");
    let p = Rat::from(1 - q);
    let denom = TSeries::constant(order, p).sub(&u.scale(q)).expect("same order");
    u.mul(&denom.reciprocal().expect("p > 0")).expect("same order")
}

/// `η_k = k! [z^k] θ(z) = (-1)^{k+1} (k-1)! (1 - q^k)`, `η_0 = 0`.
pub fn eta(k: usize, q: &Rat) -> Rat {
    if k == 0 {
        return Rat::new();
    }
    let sign = if k % 2 == 1 { 1 } else { -1 };
    Rat::from(factorial(k - 1)) * (Rat::from(1) - rat_pow(q, k)) * sign
}

/// `κ_k = k! [z^k] ζ(z)`.
pub fn kappa(k: usize, q: &Rat) -> Rat {
    zeta_series(k, q).derivative_at_zero(k)
}

/// `ω(t)^x = (1+t)^x (1+qt)^{-x}` with coefficients in `Q[x]`.
pub fn omega_pow_series(order: usize, q: &Rat) -> TSeries<XPoly> {
    let x = XPoly::x();
    let neg_x = -&x;
    let up = TSeries::from_coeffs(order, (0..=order).map(|a| gen_binomial(&x, a)).collect());
    let down =
        TSeries::from_coeffs(order, (0..=order).map(|j| gen_binomial(&neg_x, j).scale(&rat_pow(q, j))).collect());
    up.mul(&down).expect("same order")
}

/// `ε_k(x) = [t^k] ω(t)^x`.
pub fn epsilon(k: usize, q: &Rat) -> XPoly {
    omega_pow_series(k, q).coeff(k).clone()
}

/// Closed forms offered for `ε_k`; they differ in the second binomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EpsilonForm {
    /// `Σ_j (-1)^j C(x, k-j) C(x+j-1, k-j) q^j`
    Printed,
    /// `Σ_j (-1)^j C(x, k-j) C(x+j-1, j) q^j`
    Derived,
}

pub fn epsilon_closed(k: usize, q: &Rat, form: EpsilonForm) -> XPoly {
    let x = XPoly::x();
    (0..=k).fold(XPoly::zero(), |acc, j| {
        let shifted = &x + &XPoly::constant(Rat::from(j as i64 - 1));
        let second = match form {
            EpsilonForm::Printed => gen_binomial(&shifted, k - j),
            EpsilonForm::Derived => gen_binomial(&shifted, j),
        };
        let sign = if j % 2 == 0 { Rat::from(1) } else { Rat::from(-1) };
        let term = (&gen_binomial(&x, k - j) * &second).scale(&(sign * rat_pow(q, j)));
        &acc + &term
    })
}

/// `[y]_n = Σ_k C(n,k) q^k (y)_{n-k} (-y)_k`, as a polynomial in `y`.
pub fn bracket(n: usize, q: &Rat) -> XPoly {
    (0..=n).fold(XPoly::zero(), |acc, k| {
        let rising = XPoly::falling_factorial(k).dilate(&Rat::from(-1));
        let c = Rat::from(crate::numerics::binomial(n, k)) * rat_pow(q, k);
        &acc + &(&XPoly::falling_factorial(n - k) * &rising).scale(&c)
    })
}

/// [`bracket`] placed in the `y` variable of an [`XYPoly`].
pub fn bracket_y(n: usize, q: &Rat) -> XYPoly {
    XYPoly::from_y(&bracket(n, q))
}

/// `ϖ(m, n) = Σ_{i_1+...+i_m=n} (-1)^{n+m} n! Π (1 - q^{i_j})/i_j`.
pub fn varpi(m: usize, n: usize, q: &Rat) -> Rat {
    let sign = if (n + m).is_multiple_of(2) { 1 } else { -1 };
    let nf = Rat::from(factorial(n));
    compositions(n, m)
        .map(|c| {
            c.parts().iter().fold(nf.clone(), |acc, &i| acc * (Rat::from(1) - rat_pow(q, i)) / Rat::from(i as u64))
        })
        .sum::<Rat>()
        * sign
}

/// `ϱ(m, k) = Σ_{i_1+...+i_m=k} k!/(i_1! ... i_m!) Π κ_{i_j}`.
pub fn varrho(m: usize, k: usize, q: &Rat) -> Rat {
    let z = zeta_series(k, q);
    let kappas: Vec<Rat> = (0..=k).map(|i| z.derivative_at_zero(i)).collect();
    let kf = Rat::from(factorial(k));
    compositions(k, m)
        .map(|c| c.parts().iter().fold(kf.clone(), |acc, &i| acc * &kappas[i] / Rat::from(factorial(i))))
        .sum()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RhoVariant {
    /// Prefactor `q^m`, no power of `r`.
    Literal,
    /// Prefactor `q^k r^m`: `k! [t^k] ξ_q(t)^m` with `ξ_q(t) = r log(1+qt)`.
    Corrected,
}

/// Composition sum `ρ(m, k)` of the scaling expansion.
pub fn rho_scaling(m: usize, k: usize, q: &Rat, r: &Rat, variant: RhoVariant) -> Rat {
    let sign = if (k + m).is_multiple_of(2) { 1 } else { -1 };
    let prefactor = match variant {
        RhoVariant::Literal => rat_pow(q, m),
        RhoVariant::Corrected => rat_pow(q, k) * rat_pow(r, m),
    };
    let sum: Rat =
        compositions(k, m).map(|c| c.parts().iter().fold(Rat::from(1), |acc, &l| acc / Rat::from(l as u64))).sum();
    sum * prefactor * Rat::from(factorial(k)) * sign
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::rat;

    fn qs() -> Vec<Rat> {
        vec![rat(2, 5), rat(1, 2), rat(3, 10)]
    }

    #[test]
    fn degenerate_falling_factorial() {
        assert_eq!(deg_falling(&rat(7, 3), 0, &rat(-1, 2)), 1);
        assert_eq!(deg_falling(&rat(2, 1), 2, &rat(-1, 1)), 6);
        let b = rat(5, 7);
        for k in 0..6 {
            assert_eq!(deg_falling(&b, k, &rat(0, 1)), rat_pow(&b, k));
        }
    }

    #[test]
    fn eta_values_and_series() {
        for q in qs() {
            assert_eq!(eta(0, &q), 0);
            assert_eq!(eta(1, &q), Rat::from(1 - &q));
            assert_eq!(eta(2, &q), -(Rat::from(1) - rat_pow(&q, 2)));
            let th = theta_series(12, &q);
            for k in 0..=12 {
                assert_eq!(eta(k, &q), th.derivative_at_zero(k));
            }
        }
    }

    #[test]
    fn theta_and_zeta_are_inverse() {
        for q in qs() {
            let th = theta_series(12, &q);
            let ze = zeta_series(12, &q);
            let t = TSeries::variable(12, &Rat::new());
            assert_eq!(ze.compose(&th).unwrap(), t);
            assert_eq!(th.compose(&ze).unwrap(), t);
        }
    }

    #[test]
    fn kappa_values() {
        for q in qs() {
            assert_eq!(kappa(0, &q), 0);
            assert_eq!(kappa(1, &q), Rat::from(1 - &q).recip());
        }
    }

    #[test]
    fn epsilon_low_orders() {
        for q in qs() {
            let p = Rat::from(1 - &q);
            assert_eq!(epsilon(0, &q), XPoly::one());
            assert_eq!(epsilon(1, &q), XPoly::monomial(p.clone(), 1));
            let e2 = epsilon(2, &q);
            assert_eq!(e2.degree(), Some(2));
            assert_eq!(e2.coeff(2), Rat::from(&p * &p) / 2);
            for k in 1..8 {
                assert_eq!(epsilon(k, &q).coeff(0), 0, "ε_k(0) = 0 for k >= 1");
            }
        }
    }

    #[test]
    fn omega_power_is_exp_of_x_theta() {
        let order = 8;
        for q in qs() {
            let th = theta_series(order, &q).map(|c| XPoly::constant(c.clone()));
            let lhs = th.mul_coeff(&XPoly::x()).exp().unwrap();
            assert_eq!(lhs, omega_pow_series(order, &q));
        }
    }

    #[test]
    fn derived_closed_form_matches_series() {
        for q in qs() {
            for k in 0..=8 {
                assert_eq!(epsilon_closed(k, &q, EpsilonForm::Derived), epsilon(k, &q), "k={k}");
            }
        }
    }

    #[test]
    fn bracket_values() {
        for q in qs() {
            let p = Rat::from(1 - &q);
            assert_eq!(bracket(0, &q), XPoly::one());
            assert_eq!(bracket(1, &q), XPoly::monomial(p, 1));
            // n! [z^n] exp(y θ(z))
            let th = theta_series(8, &q).map(|c| XPoly::constant(c.clone()));
            let e = th.mul_coeff(&XPoly::x()).exp().unwrap();
            for n in 0..=8 {
                assert_eq!(bracket(n, &q), e.derivative_at_zero(n));
                assert_eq!(bracket(n, &q).eval(&Rat::new()), rat(i64::from(n == 0), 1));
            }
        }
    }

    #[test]
    fn composition_sums_match_series_powers() {
        let r = rat(5, 2);
        for q in qs() {
            let th = theta_series(8, &q);
            let ze = zeta_series(8, &q);
            let xi = TSeries::log_one_plus(8, &q).scale(&r);
            for m in 0..=8 {
                let (thm, zem, xim) = (th.pow(m), ze.pow(m), xi.pow(m));
                for n in m..=8 {
                    assert_eq!(varpi(m, n, &q), thm.derivative_at_zero(n), "ϖ({m},{n})");
                    assert_eq!(varrho(m, n, &q), zem.derivative_at_zero(n), "ϱ({m},{n})");
                    assert_eq!(
                        rho_scaling(m, n, &q, &r, RhoVariant::Corrected),
                        xim.derivative_at_zero(n),
                        "ρ({m},{n})"
                    );
                }
            }
        }
    }

    #[test]
    fn composition_sum_edge_values() {
        let q = rat(2, 5);
        let r = rat(3, 1);
        assert_eq!(varpi(0, 0, &q), 1);
        assert_eq!(varpi(0, 3, &q), 0);
        assert_eq!(varpi(1, 1, &q), Rat::from(1 - &q));
        assert_eq!(varrho(0, 0, &q), 1);
        assert_eq!(varrho(0, 2, &q), 0);
        for k in 1..6 {
            assert_eq!(varrho(1, k, &q), kappa(k, &q));
        }
        for v in [RhoVariant::Literal, RhoVariant::Corrected] {
            assert_eq!(rho_scaling(0, 0, &q, &r, v), 1);
        }
        assert_eq!(rho_scaling(1, 1, &q, &r, RhoVariant::Corrected), Rat::from(&q * &r));
    }
}
