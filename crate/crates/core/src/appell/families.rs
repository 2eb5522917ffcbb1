use crate::combinatorics::{
    bracket, epsilon, omega_pow_series, stirling1, stirling2, theta_series, varpi, varrho, BellTable,
};
use crate::error::{contract, Result};
use crate::measure::{laplace_series, moments_exact, Params};
use crate::numerics::{binomial, factorial, rat_pow, Rat, TSeries, XPoly};

use super::coeffs::{c_coeffs, composed_series, mu_coeffs};
use super::{Family, PolyFamily, Route};

/// Builds the families for one parameter set at a fixed series order.
///
/// Every route needs `n_max + 2 <= order`, the headroom shared by all
/// series computations of a run.
#[derive(Clone, Debug)]
pub struct Families {
    params: Params,
    order: usize,
}

impl Families {
    pub fn new(params: Params, order: usize) -> Self {
        Families { params, order }
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn order(&self) -> usize {
        self.order
    }

    fn check(&self, n_max: usize) -> Result<()> {
        if n_max + 2 > self.order {
            return contract(format!("n_max = {n_max} needs series order at least {}", n_max + 2));
        }
        Ok(())
    }

    fn family(family: Family, route: Route, members: Vec<XPoly>) -> PolyFamily {
        PolyFamily { family, route, members }
    }

    /// Dispatches on `(family, route)`.
    pub fn build(&self, family: Family, route: Route, n_max: usize) -> Result<PolyFamily> {
        match (family, route) {
            (Family::K, Route::Series) => self.k_series(n_max),
            (Family::K, Route::Epsilon) => self.k_epsilon(n_max),
            (Family::K, Route::FromP) => self.k_from_p(n_max),
            (Family::K, Route::StirlingSeries | Route::StirlingCorrected | Route::StirlingPrinted) => {
                self.k_stirling(n_max, route)
            }
            (Family::K, Route::BellCorrected | Route::BellLiteral) => self.k_bell(n_max, route),
            (Family::K, Route::Classical) => {
                self.check(n_max)?;
                classical_k(n_max, self.params.p(), self.params.r())
            }
            (Family::P, Route::Series) => self.p_series(n_max),
            (Family::P, Route::Bell) => self.p_bell(n_max),
            (Family::P, Route::FromK) => self.p_from_k(n_max),
            (Family::P, Route::Stirling2 | Route::Stirling2Printed) => self.p_from_k_stirling2(n_max, route),
            _ => contract(format!("route {route} does not build the {family:?} family")),
        }
    }

    /// `K_n = n! [t^n] ω(t)^x / e_λ^β(ξ_q(t))`.
    pub fn k_series(&self, n_max: usize) -> Result<PolyFamily> {
        self.check(n_max)?;
        let psi = self.psi_series()?;
        let members = (0..=n_max).map(|n| psi.derivative_at_zero(n)).collect();
        Ok(Self::family(Family::K, Route::Series, members))
    }

    /// `Ψ(t, x)` with coefficients in `Q[x]`, at the builder's order.
    pub fn psi_series(&self) -> Result<TSeries<XPoly>> {
        let n = self.order;
        let recip = composed_series(&self.params, n).reciprocal()?.map(|c| XPoly::constant(c.clone()));
        omega_pow_series(n, self.params.q()).mul(&recip)
    }

    /// `K_n = Σ_k n!/(n-k)! r^{n-k} c_{n-k} ε_k(x)`.
    pub fn k_epsilon(&self, n_max: usize) -> Result<PolyFamily> {
        self.check(n_max)?;
        let c = c_coeffs(n_max, &self.params)?;
        let eps: Vec<XPoly> = (0..=n_max).map(|k| epsilon(k, self.params.q())).collect();
        let members = (0..=n_max)
            .map(|n| {
                (0..=n).fold(XPoly::zero(), |acc, k| {
                    let w = Rat::from(factorial(n)) / Rat::from(factorial(n - k))
                        * rat_pow(self.params.r(), n - k)
                        * &c[n - k];
                    &acc + &eps[k].scale(&w)
                })
            })
            .collect();
        Ok(Self::family(Family::K, Route::Epsilon, members))
    }

    /// `K_n = Σ_m ϖ(m, n)/m! P_m`.
    pub fn k_from_p(&self, n_max: usize) -> Result<PolyFamily> {
        let p = self.p_series(n_max)?;
        let q = self.params.q();
        let members = (0..=n_max)
            .map(|n| {
                (0..=n).fold(XPoly::zero(), |acc, m| {
                    let w = varpi(m, n, q) / Rat::from(factorial(m));
                    &acc + &p.members[m].scale(&w)
                })
            })
            .collect();
        Ok(Self::family(Family::K, Route::FromP, members))
    }

    /// `K_n = Σ_k a(n, k) P_k` where `a(n, k) = [z^n] θ^k n!/k!`, computed
    /// from a series power or from Stirling numbers of the first kind.
    pub fn k_stirling(&self, n_max: usize, route: Route) -> Result<PolyFamily> {
        let p = self.p_series(n_max)?;
        let q = self.params.q();
        let theta = theta_series(n_max, q);
        let members = (0..=n_max)
            .map(|n| {
                (0..=n).fold(XPoly::zero(), |acc, k| {
                    let a = match route {
                        Route::StirlingSeries => theta.pow(k).derivative_at_zero(n) / Rat::from(factorial(k)),
                        Route::StirlingCorrected => stirling_coeff(n, k, q, InnerBound::Corrected),
                        _ => stirling_coeff(n, k, q, InnerBound::Printed),
                    };
                    &acc + &p.members[k].scale(&a)
                })
            })
            .collect();
        Ok(Self::family(Family::K, route, members))
    }

    /// `K_n = Σ_k C(n,k) b_{n-k} [x]_k` with
    /// `b_m = Σ_i (-1)^i i! B_{m,i}(args)`: the arguments are `μ_j` for the
    /// corrected variant and the moments `M(j)` for the literal one.
    pub fn k_bell(&self, n_max: usize, route: Route) -> Result<PolyFamily> {
        self.check(n_max)?;
        let args = match route {
            Route::BellCorrected => mu_coeffs(n_max, &self.params),
            Route::BellLiteral => moments_exact(n_max, &self.params),
            _ => return contract(format!("{route} is not a Bell route for K")),
        };
        let b = reciprocal_by_bell(&args, n_max)?;
        let q = self.params.q();
        let members = (0..=n_max)
            .map(|n| {
                (0..=n).fold(XPoly::zero(), |acc, k| {
                    let w = Rat::from(binomial(n, k)) * &b[n - k];
                    &acc + &bracket(k, q).scale(&w)
                })
            })
            .collect();
        Ok(Self::family(Family::K, route, members))
    }

    /// `P_n = n! [z^n] e^{xz} / L(z)`.
    pub fn p_series(&self, n_max: usize) -> Result<PolyFamily> {
        self.check(n_max)?;
        let n = self.order;
        let recip = laplace_series(&self.params, n).reciprocal()?.map(|c| XPoly::constant(c.clone()));
        let exp_xz =
            TSeries::from_coeffs(n, (0..=n).map(|k| XPoly::monomial(Rat::from((1, factorial(k))), k)).collect());
        let s = exp_xz.mul(&recip)?;
        let members = (0..=n_max).map(|k| s.derivative_at_zero(k)).collect();
        Ok(Self::family(Family::P, Route::Series, members))
    }

    /// `P_n = Σ_k C(n,k) [Σ_i (-1)^i i! B_{n-k,i}(M(1), ...)] x^k`.
    pub fn p_bell(&self, n_max: usize) -> Result<PolyFamily> {
        self.check(n_max)?;
        let a = reciprocal_by_bell(&moments_exact(n_max, &self.params), n_max)?;
        let members = (0..=n_max)
            .map(|n| XPoly::from_coeffs((0..=n).map(|k| Rat::from(binomial(n, k)) * &a[n - k]).collect()))
            .collect();
        Ok(Self::family(Family::P, Route::Bell, members))
    }

    /// `P_n = Σ_m ϱ(m, n)/m! K_m`.
    pub fn p_from_k(&self, n_max: usize) -> Result<PolyFamily> {
        let k = self.k_series(n_max)?;
        let q = self.params.q();
        let members = (0..=n_max)
            .map(|n| {
                (0..=n).fold(XPoly::zero(), |acc, m| {
                    let w = varrho(m, n, q) / Rat::from(factorial(m));
                    &acc + &k.members[m].scale(&w)
                })
            })
            .collect();
        Ok(Self::family(Family::P, Route::FromK, members))
    }

    /// `P_n = Σ_k d(n, k) K_k / k!` with
    /// `d(n, k) = Σ_{j=k}^n C(j-1, k-1) q^{j-k}/p^j j! S(n, j)` and
    /// `d(n, 0) = δ_{n0}`. The printed variant drops the `1/k!`.
    pub fn p_from_k_stirling2(&self, n_max: usize, route: Route) -> Result<PolyFamily> {
        let k_fam = self.k_series(n_max)?;
        let (p, q) = (self.params.p(), self.params.q());
        let members = (0..=n_max)
            .map(|n| {
                (0..=n).fold(XPoly::zero(), |acc, k| {
                    let mut d = if k == 0 { Rat::from(u32::from(n == 0)) } else { Rat::new() };
                    if k > 0 {
                        for j in k..=n {
                            d += Rat::from(binomial(j - 1, k - 1)) * rat_pow(q, j - k) / rat_pow(p, j)
                                * Rat::from(factorial(j))
                                * stirling2(n, j);
                        }
                    }
                    if route == Route::Stirling2 {
                        d /= Rat::from(factorial(k));
                    }
                    &acc + &k_fam.members[k].scale(&d)
                })
            })
            .collect();
        Ok(Self::family(Family::P, route, members))
    }
}

#[derive(Clone, Copy)]
enum InnerBound {
    /// `m ≤ n-k+j`
    Corrected,
    /// `m ≤ n-k-j`
    Printed,
}

/// `Σ_j (-1)^{k-j} Σ_{m=j}^{upper} C(n,m) s(m,j) s(n-m,k-j) q^{n-m}`.
fn stirling_coeff(n: usize, k: usize, q: &Rat, bound: InnerBound) -> Rat {
    let mut total = Rat::new();
    for j in 0..=k {
        let upper = match bound {
            InnerBound::Corrected => n - k + j,
            InnerBound::Printed => match (n - k).checked_sub(j) {
                Some(u) => u,
                None => continue,
            },
        };
        if upper < j {
            continue;
        }
        let mut inner = Rat::new();
        for m in j..=upper.min(n) {
            inner += Rat::from(binomial(n, m)) * stirling1(m, j) * stirling1(n - m, k - j) * rat_pow(q, n - m);
        }
        if (k - j) % 2 == 1 {
            inner = -inner;
        }
        total += inner;
    }
    total
}

/// `b_m = Σ_i (-1)^i i! B_{m,i}(d_1, d_2, ...)`: the derivatives at 0 of
/// `1/g` when `g(0) = 1` and `g^{(j)}(0) = d_j`.
fn reciprocal_by_bell(d: &[Rat], n_max: usize) -> Result<Vec<Rat>> {
    let table = BellTable::new(&d[1..], n_max, &Rat::from(1))?;
    Ok((0..=n_max)
        .map(|m| {
            table.row(m).iter().enumerate().fold(Rat::new(), |acc, (i, b)| {
                let term = b * Rat::from(factorial(i));
                if i % 2 == 0 {
                    acc + term
                } else {
                    acc - term
                }
            })
        })
        .collect())
}

/// Classical Krawtchouk polynomials `n! [t^n] (1+t)^x (1+qt)^{-x-r}`.
pub fn classical_k(n_max: usize, p: &Rat, r: &Rat) -> Result<PolyFamily> {
    let q = Rat::from(1 - p);
    let one_qt = TSeries::from_coeffs(n_max, vec![Rat::from(1), q.clone()]);
    let tail = one_qt.fracpow(&Rat::from(-r))?.map(|c| XPoly::constant(c.clone()));
    let s = omega_pow_series(n_max, &q).mul(&tail)?;
    let members = (0..=n_max).map(|n| s.derivative_at_zero(n)).collect();
    Ok(PolyFamily { family: Family::K, route: Route::Classical, members })
}

/// Largest relative coefficient gap between the degenerate `K_n` at `β = 1`
/// and the classical family, over `n ≤ n_max`; each member is measured
/// against its own largest classical coefficient.
pub fn classical_limit_gap(n_max: usize, lambda: &Rat, p: &Rat, r: &Rat) -> Result<Rat> {
    let params = Params::new(lambda.clone(), Rat::from(1), p.clone(), r.clone())?;
    let degenerate = Families::new(params, n_max + 2).k_series(n_max)?;
    let classical = classical_k(n_max, p, r)?;
    let mut worst = Rat::new();
    for (a, b) in degenerate.members.iter().zip(&classical.members) {
        let scale = b.coeffs().iter().map(|c| Rat::from(c.abs_ref())).max().unwrap_or_default();
        let gap = (a - b).coeffs().iter().map(|c| Rat::from(c.abs_ref())).max().unwrap_or_default();
        worst = worst.max(gap / scale);
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measure::moment_exact;
    use crate::numerics::rat;

    fn builders() -> Vec<Families> {
        Params::presets().into_iter().map(|(_, p)| Families::new(p, 12)).collect()
    }

    #[test]
    fn first_members() {
        for f in builders() {
            let prm = f.params().clone();
            let k = f.k_series(2).unwrap();
            assert_eq!(k.members[0], XPoly::one());
            let bq = Rat::from(prm.beta() * prm.r()) * prm.q();
            assert_eq!(k.members[1], XPoly::from_coeffs(vec![-bq.clone(), prm.p().clone()]));
            let p = f.p_series(1).unwrap();
            assert_eq!(p.members[1], XPoly::from_coeffs(vec![-moment_exact(1, &prm), rat(1, 1)]));
        }
    }

    #[test]
    fn k_routes_agree() {
        for f in builders() {
            let reference = f.k_series(8).unwrap();
            for route in
                [Route::Epsilon, Route::FromP, Route::StirlingSeries, Route::StirlingCorrected, Route::BellCorrected]
            {
                let other = f.build(Family::K, route, 8).unwrap();
                assert_eq!(reference.first_difference(&other), None, "{route}");
            }
            for (n, m) in reference.members.iter().enumerate() {
                assert_eq!(m.degree(), Some(n));
                assert_eq!(m.leading_coeff(), rat_pow(f.params().p(), n));
            }
        }
    }

    #[test]
    fn p_routes_agree() {
        for f in builders() {
            let reference = f.p_series(8).unwrap();
            for route in [Route::Bell, Route::FromK, Route::Stirling2] {
                let other = f.build(Family::P, route, 8).unwrap();
                assert_eq!(reference.first_difference(&other), None, "{route}");
            }
        }
    }

    #[test]
    fn printed_variants_differ() {
        let f = Families::new(Params::set_a(), 12);
        let k = f.k_series(8).unwrap();
        let printed = f.k_stirling(8, Route::StirlingPrinted).unwrap();
        assert!(k.first_difference(&printed).is_some());
        let literal = f.k_bell(8, Route::BellLiteral).unwrap();
        assert_eq!(literal.first_difference(&k), Some(1));
        let p = f.p_series(8).unwrap();
        let p_printed = f.p_from_k_stirling2(8, Route::Stirling2Printed).unwrap();
        assert_eq!(p.first_difference(&p_printed), Some(2));
    }

    #[test]
    fn literal_bell_constant_terms_are_p_at_zero() {
        let f = Families::new(Params::set_b(), 10);
        let literal = f.k_bell(8, Route::BellLiteral).unwrap();
        let p = f.p_series(8).unwrap();
        let bell_p = f.p_bell(8).unwrap();
        for n in 0..=8 {
            assert_eq!(literal.members[n].coeff(0), p.members[n].coeff(0));
            assert_eq!(bell_p.members[n].coeff(0), p.members[n].coeff(0));
        }
    }

    #[test]
    fn order_headroom_is_enforced() {
        let f = Families::new(Params::set_a(), 6);
        assert!(f.k_series(4).is_ok());
        assert!(f.k_series(5).is_err());
        assert!(f.build(Family::P, Route::Epsilon, 2).is_err());
    }

    #[test]
    fn classical_limit_is_linear_in_lambda() {
        let (p, r) = (rat(3, 5), rat(3, 1));
        let gaps: Vec<Rat> = [rat(-1, 10_000), rat(-1, 100_000), rat(-1, 1_000_000)]
            .iter()
            .map(|l| classical_limit_gap(6, l, &p, &r).unwrap())
            .collect();
        assert!(gaps[2] < rat(1, 10_000));
        for w in gaps.windows(2) {
            let ratio = Rat::from(&w[0] / &w[1]);
            assert!(ratio > rat(9, 1) && ratio < rat(11, 1), "{ratio}");
        }
    }

    #[test]
    fn classical_first_members() {
        let (p, r) = (rat(3, 5), rat(5, 2));
        let k = classical_k(3, &p, &r).unwrap();
        assert_eq!(k.members[0], XPoly::one());
        let qr = &r * rat(2, 5);
        assert_eq!(k.members[1], XPoly::from_coeffs(vec![-qr, p.clone()]));
    }
}
