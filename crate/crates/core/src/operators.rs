//! Chaos expansions over the `K_n` basis, the scaling operator
//! `σ_z φ(x) = φ(zx)` and the translation operator `τ_y φ(x) = φ(x+y)`.

use serde::{Deserialize, Serialize};

use crate::appell::Families;
use crate::combinatorics::{bracket, deg_falling, epsilon, rho_scaling, RhoVariant};
use crate::error::{contract, Result};
use crate::measure::{laplace_series, Params};
use crate::numerics::{binomial, factorial, Rat, TSeries, XPoly};

/// Coefficients `φ_n` of `φ = Σ φ_n K_n`, without trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "Vec<String>", try_from = "Vec<String>")]
pub struct ChaosVector {
    coeffs: Vec<Rat>,
}

impl ChaosVector {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| *c == 0) {
            coeffs.pop();
        }
        ChaosVector { coeffs }
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// `N_φ`, or `None` for the zero vector.
    pub fn top(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, n: usize) -> Rat {
        self.coeffs.get(n).cloned().unwrap_or_default()
    }
}

impl From<ChaosVector> for Vec<String> {
    fn from(v: ChaosVector) -> Self {
        v.coeffs.iter().map(ToString::to_string).collect()
    }
}

impl TryFrom<Vec<String>> for ChaosVector {
    type Error = crate::Error;
    fn try_from(v: Vec<String>) -> Result<Self> {
        Ok(ChaosVector::new(v.iter().map(|s| crate::numerics::parse_rat(s)).collect::<Result<_>>()?))
    }
}

/// `K_0, ..., K_d` for one parameter set, with the basis changes to and from
/// monomials.
#[derive(Clone, Debug)]
pub struct KBasis {
    params: Params,
    members: Vec<XPoly>,
}

impl KBasis {
    pub fn new(params: Params, degree: usize) -> Result<Self> {
        let members = Families::new(params.clone(), degree + 2).k_series(degree)?.members;
        Ok(KBasis { params, members })
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn degree(&self) -> usize {
        self.members.len() - 1
    }

    pub fn member(&self, n: usize) -> &XPoly {
        &self.members[n]
    }

    fn fits(&self, n: Option<usize>) -> Result<()> {
        match n {
            Some(n) if n > self.degree() => contract(format!("degree {n} exceeds the basis degree {}", self.degree())),
            _ => Ok(()),
        }
    }

    pub fn chaos_to_poly(&self, v: &ChaosVector) -> Result<XPoly> {
        self.fits(v.top())?;
        Ok(v.coeffs.iter().zip(&self.members).fold(XPoly::zero(), |acc, (c, k)| &acc + &k.scale(c)))
    }

    /// Solves the triangular system from the top degree down; the leading
    /// coefficient of `K_n` is `p^n`.
    pub fn poly_to_chaos(&self, p: &XPoly) -> Result<ChaosVector> {
        self.fits(p.degree())?;
        let Some(d) = p.degree() else { return Ok(ChaosVector::new(Vec::new())) };
        let mut rest = p.clone();
        let mut coeffs = vec![Rat::new(); d + 1];
        for n in (0..=d).rev() {
            let c = rest.coeff(n) / self.members[n].leading_coeff();
            if c != 0 {
                rest = &rest - &self.members[n].scale(&c);
            }
            coeffs[n] = c;
        }
        debug_assert!(rest.is_zero());
        Ok(ChaosVector::new(coeffs))
    }

    /// `σ_z φ` by substituting `x ← zx` in the monomial form.
    pub fn scale_substitution(&self, v: &ChaosVector, z: &Rat) -> Result<ChaosVector> {
        self.poly_to_chaos(&self.chaos_to_poly(v)?.dilate(z))
    }

    /// `σ_z φ` from the expansion
    /// `Σ_n n! φ_n Σ_k ε_{n-k}(zx) Σ_m ρ(m,k) (-β)_{m,λ} / (m! k!)`.
    pub fn scale_expansion(&self, v: &ChaosVector, z: &Rat, variant: RhoVariant) -> Result<ChaosVector> {
        self.fits(v.top())?;
        let Some(top) = v.top() else { return Ok(v.clone()) };
        let prm = &self.params;
        let neg_beta = Rat::from(-prm.beta());
        // inner[k] = Σ_m ρ(m,k) (-β)_{m,λ} / (m! k!)
        let inner: Vec<Rat> = (0..=top)
            .map(|k| {
                (0..=k).fold(Rat::new(), |acc, m| {
                    let rho = rho_scaling(m, k, prm.q(), prm.r(), variant);
                    acc + rho * deg_falling(&neg_beta, m, prm.lambda()) / Rat::from(factorial(m))
                }) / Rat::from(factorial(k))
            })
            .collect();
        let eps: Vec<XPoly> = (0..=top).map(|j| epsilon(j, prm.q()).dilate(z)).collect();
        let mut poly = XPoly::zero();
        for (n, phi) in v.coeffs.iter().enumerate() {
            if *phi == 0 {
                continue;
            }
            let kn = (0..=n).fold(XPoly::zero(), |acc, k| &acc + &eps[n - k].scale(&inner[k]));
            poly = &poly + &kn.scale(&(Rat::from(factorial(n)) * phi));
        }
        self.poly_to_chaos(&poly)
    }

    /// `τ_y φ` via the addition formula: the coefficient on `K_k` is
    /// `Σ_n C(n,k) φ_n [y]_{n-k}`.
    pub fn translate(&self, v: &ChaosVector, y: &Rat) -> Result<ChaosVector> {
        self.fits(v.top())?;
        let Some(top) = v.top() else { return Ok(v.clone()) };
        let q = self.params.q();
        let brackets: Vec<Rat> = (0..=top).map(|m| bracket(m, q).eval(y)).collect();
        let coeffs = (0..=top)
            .map(|k| {
                (k..=top).fold(Rat::new(), |acc, n| acc + Rat::from(binomial(n, k)) * &v.coeffs[n] * &brackets[n - k])
            })
            .collect();
        Ok(ChaosVector::new(coeffs))
    }

    /// `τ_y φ` by substituting `x ← x + y` in the monomial form.
    pub fn translate_substitution(&self, v: &ChaosVector, y: &Rat) -> Result<ChaosVector> {
        self.poly_to_chaos(&self.chaos_to_poly(v)?.shift(y))
    }
}

/// `e^{xz}/L(z)` with coefficients in `Q[x]`.
pub fn nexp_series(params: &Params, order: usize) -> Result<TSeries<XPoly>> {
    let recip = laplace_series(params, order).reciprocal()?.map(|c| XPoly::constant(c.clone()));
    let exp_xz =
        TSeries::from_coeffs(order, (0..=order).map(|k| XPoly::monomial(Rat::from((1, factorial(k))), k)).collect());
    exp_xz.mul(&recip)
}

/// `τ_y N(z, x) - e^{yz} N(z, x)` through `order`, coefficient-wise.
pub fn translation_series_residual(params: &Params, y: &Rat, order: usize) -> Result<TSeries<XPoly>> {
    let n = nexp_series(params, order)?;
    let shifted = n.map(|c| c.shift(y));
    let mut ek = Rat::from(1);
    let mut eyz = Vec::with_capacity(order + 1);
    for k in 0..=order {
        if k > 0 {
            ek = ek * y / Rat::from(k as u64);
        }
        eyz.push(XPoly::constant(ek.clone()));
    }
    shifted.sub(&TSeries::from_coeffs(order, eyz).mul(&n)?)
}
