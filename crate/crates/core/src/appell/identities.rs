use crate::combinatorics::{bracket_y, eta, varrho};
use crate::measure::{moments_exact, Params};
use crate::numerics::{binomial, factorial, Rat, Ring, XPoly, XYPoly};

use super::PolyFamily;

/// `Σ_k Σ_m C(n,k) ϱ(m,k)/m! K_m(x) M(n-k)`, which should be `x^n`.
pub fn monomial_from_k(n: usize, k: &PolyFamily, params: &Params) -> XPoly {
    let moments = moments_exact(n, params);
    let q = params.q();
    let mut acc = XPoly::zero();
    for kk in 0..=n {
        let outer = Rat::from(binomial(n, kk)) * &moments[n - kk];
        for m in 0..=kk {
            let w = (&outer * varrho(m, kk, q)) / Rat::from(factorial(m));
            acc = &acc + &k.members[m].scale(&w);
        }
    }
    acc
}

/// Which polynomial multiplies `K_k(x)` in the three-factor addition formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum P3Reading {
    /// `K_l(y)`, as the generating-function argument requires.
    WithY,
    /// `K_l(x)`, as printed.
    Printed,
}

/// `K_n(x+y) - Σ_{k+l+m=n} n!/(k! l! m!) K_k(x) K_l(·) μ_m`.
pub fn addition_p3(n: usize, k: &PolyFamily, mu: &[Rat], reading: P3Reading) -> XYPoly {
    let nf = Rat::from(factorial(n));
    let mut rhs = XYPoly::zero();
    for a in 0..=n {
        for b in 0..=n - a {
            let m = n - a - b;
            let w = (&nf / Rat::from(factorial(a) * factorial(b) * factorial(m))) * &mu[m];
            let left = XYPoly::from_x(&k.members[a]);
            let right = match reading {
                P3Reading::WithY => XYPoly::from_y(&k.members[b]),
                P3Reading::Printed => XYPoly::from_x(&k.members[b]),
            };
            rhs = rhs.plus(&left.times(&right).scaled(&w));
        }
    }
    XYPoly::of_sum(&k.members[n]).minus(&rhs)
}

/// `K_n(x+y) - Σ_k C(n,k) K_k(x) [y]_{n-k}`.
pub fn addition_p4(n: usize, k: &PolyFamily, q: &Rat) -> XYPoly {
    let rhs = (0..=n).fold(XYPoly::zero(), |acc, kk| {
        let term = XYPoly::from_x(&k.members[kk]).times(&bracket_y(n - kk, q));
        acc.plus(&term.scaled(&Rat::from(binomial(n, kk))))
    });
    XYPoly::of_sum(&k.members[n]).minus(&rhs)
}

/// `F_n' - n F_{n-1}`, zero for every `n` exactly when the family is Appell.
pub fn appell_defect(f: &PolyFamily, n: usize) -> XPoly {
    if n == 0 {
        return f.members[0].derivative();
    }
    &f.members[n].derivative() - &f.members[n - 1].scale(&Rat::from(n as u64))
}

/// `K_n' - Σ_{j=1}^n C(n,j) η_j K_{n-j}`, from `∂_x Ψ = θ(t) Ψ`.
pub fn derivative_relation_residual(k: &PolyFamily, n: usize, q: &Rat) -> XPoly {
    let rhs = (1..=n).fold(XPoly::zero(), |acc, j| {
        let w = Rat::from(binomial(n, j)) * eta(j, q);
        &acc + &k.members[n - j].scale(&w)
    });
    &k.members[n].derivative() - &rhs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::appell::{mu_coeffs, Families};

    #[test]
    fn identities_hold_on_presets() {
        for (_, params) in Params::presets() {
            let f = Families::new(params.clone(), 10);
            let k = f.k_series(8).unwrap();
            let mu = mu_coeffs(8, &params);
            for n in 0..=8 {
                assert_eq!(monomial_from_k(n, &k, &params), XPoly::monomial(Rat::from(1), n));
                assert!(addition_p3(n, &k, &mu, P3Reading::WithY).is_zero(), "P3 n={n}");
                assert!(addition_p4(n, &k, params.q()).is_zero(), "P4 n={n}");
                assert!(derivative_relation_residual(&k, n, params.q()).is_zero());
            }
            assert!(!addition_p3(1, &k, &mu, P3Reading::Printed).is_zero());
        }
    }

    #[test]
    fn appell_defects() {
        let f = Families::new(Params::set_c(), 10);
        let p = f.p_series(8).unwrap();
        let k = f.k_series(8).unwrap();
        for n in 0..=8 {
            assert!(appell_defect(&p, n).is_zero());
        }
        // K_1' = p while 1·K_0 = 1
        assert_eq!(appell_defect(&k, 1), XPoly::constant(Rat::from(f.params().p() - 1u32)));
    }
}
