use std::collections::BTreeMap;
use std::fmt;

use super::{binomial, Rat, Ring, XPoly};

/// Sparse bivariate polynomial over [`Rat`], keyed by `(deg_x, deg_y)`.
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct XYPoly {
    terms: BTreeMap<(usize, usize), Rat>,
}

impl XYPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::term(Rat::from(1), 0, 0)
    }

    pub fn term(c: Rat, dx: usize, dy: usize) -> Self {
        let mut out = Self::zero();
        out.add_term(dx, dy, c);
        out
    }

    pub fn from_x(p: &XPoly) -> Self {
        let mut out = Self::zero();
        for (k, c) in p.coeffs().iter().enumerate() {
            out.add_term(k, 0, c.clone());
        }
        out
    }

    pub fn from_y(p: &XPoly) -> Self {
        let mut out = Self::zero();
        for (k, c) in p.coeffs().iter().enumerate() {
            out.add_term(0, k, c.clone());
        }
        out
    }

    /// `p(x + y)` expanded binomially.
    pub fn of_sum(p: &XPoly) -> Self {
        let mut out = Self::zero();
        for (k, c) in p.coeffs().iter().enumerate() {
            for j in 0..=k {
                out.add_term(j, k - j, Rat::from(c * binomial(k, j)));
            }
        }
        out
    }

    fn add_term(&mut self, dx: usize, dy: usize, c: Rat) {
        if c.cmp0().is_eq() {
            return;
        }
        let slot = self.terms.entry((dx, dy)).or_default();
        *slot += c;
        if slot.cmp0().is_eq() {
            self.terms.remove(&(dx, dy));
        }
    }

    pub fn coeff(&self, dx: usize, dy: usize) -> Rat {
        self.terms.get(&(dx, dy)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(usize, usize), &Rat)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Substitutes a rational value for `y`.
    pub fn eval_y(&self, y: &Rat) -> XPoly {
        let deg = self.terms.keys().map(|&(dx, _)| dx).max().map_or(0, |d| d + 1);
        let mut coeffs = vec![Rat::new(); deg];
        for (&(dx, dy), c) in &self.terms {
            let mut v = Rat::from(c);
            for _ in 0..dy {
                v *= y;
            }
            coeffs[dx] += v;
        }
        XPoly::from_coeffs(coeffs)
    }

    pub fn eval(&self, x: &Rat, y: &Rat) -> Rat {
        self.eval_y(y).eval(x)
    }
}

impl fmt::Debug for XYPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "XYPoly({self})")
    }
}

impl fmt::Display for XYPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(&(dx, dy), c)| format!("({c})*x^{dx}*y^{dy}")).collect();
        f.write_str(&parts.join(" + "))
    }
}

impl Ring for XYPoly {
    fn zero_like(&self) -> Self {
        XYPoly::zero()
    }
    fn one_like(&self) -> Self {
        XYPoly::one()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(dx, dy), c) in &other.terms {
            out.add_term(dx, dy, c.clone());
        }
        out
    }
    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negated())
    }
    fn times(&self, other: &Self) -> Self {
        let mut out = XYPoly::zero();
        for (&(ax, ay), a) in &self.terms {
            for (&(bx, by), b) in &other.terms {
                out.add_term(ax + bx, ay + by, Rat::from(a * b));
            }
        }
        out
    }
    fn negated(&self) -> Self {
        XYPoly { terms: self.terms.iter().map(|(k, c)| (*k, Rat::from(-c))).collect() }
    }
    fn scaled(&self, c: &Rat) -> Self {
        let mut out = XYPoly::zero();
        for (&(dx, dy), a) in &self.terms {
            out.add_term(dx, dy, Rat::from(a * c));
        }
        out
    }
    fn inverse(&self) -> Option<Self> {
        if self.terms.len() == 1 {
            if let Some(c) = self.terms.get(&(0, 0)) {
                return Some(XYPoly::term(Rat::from(c.recip_ref()), 0, 0));
            }
        }
        None
    }
}
