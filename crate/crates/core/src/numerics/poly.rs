use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::{binomial, Rat, Ring};

/// Dense univariate polynomial over [`Rat`], lowest degree first.
///
/// Trailing zeros are never stored, so the zero polynomial has no
/// coefficients and `degree() == None`.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(into = "Vec<String>", try_from = "Vec<String>")]
pub struct XPoly {
    coeffs: Vec<Rat>,
}

impl XPoly {
    pub fn zero() -> Self {
        XPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rat::from(1))
    }

    pub fn x() -> Self {
        Self::monomial(Rat::from(1), 1)
    }

    pub fn constant(c: Rat) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn monomial(c: Rat, degree: usize) -> Self {
        let mut coeffs = vec![Rat::new(); degree + 1];
        coeffs[degree] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.cmp0().is_eq()) {
            coeffs.pop();
        }
        XPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coeff(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| Rat::from(a * c)).collect())
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::new();
        for c in self.coeffs.iter().rev() {
            acc *= x;
            acc += c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(self.coeffs.iter().enumerate().skip(1).map(|(k, c)| Rat::from(c * k as u64)).collect())
    }

    /// `p(z x)`.
    pub fn dilate(&self, z: &Rat) -> Self {
        let mut zk = Rat::from(1);
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(Rat::from(c * &zk));
            zk *= z;
        }
        Self::from_coeffs(out)
    }

    /// `p(x + y)` for a fixed rational `y`.
    pub fn shift(&self, y: &Rat) -> Self {
        let n = self.coeffs.len();
        let mut out = vec![Rat::new(); n];
        let mut ypow = vec![Rat::from(1)];
        for k in 1..n {
            ypow.push(Rat::from(&ypow[k - 1] * y));
        }
        for (k, c) in self.coeffs.iter().enumerate() {
            for (j, slot) in out.iter_mut().enumerate().take(k + 1) {
                let b = Rat::from(binomial(k, j));
                *slot += Rat::from(c * &ypow[k - j]) * b;
            }
        }
        Self::from_coeffs(out)
    }

    /// `p(q(x))`, by Horner's rule.
    pub fn compose(&self, inner: &XPoly) -> Self {
        let mut acc = XPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &XPoly::constant(c.clone());
        }
        acc
    }

    /// The classical falling factorial `(x)_n = x (x-1) ... (x-n+1)`.
    pub fn falling_factorial(n: usize) -> Self {
        (0..n).fold(XPoly::one(), |acc, j| &acc * &XPoly::from_coeffs(vec![Rat::from(-(j as i64)), Rat::from(1)]))
    }
}

impl fmt::Debug for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "XPoly({self})")
    }
}

impl fmt::Display for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.cmp0().is_eq() {
                continue;
            }
            let neg = c.cmp0().is_lt();
            let mag = Rat::from(c.abs_ref());
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            match (k, mag == 1) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("x")?,
                (1, false) => write!(f, "{mag}*x")?,
                (_, true) => write!(f, "x^{k}")?,
                (_, false) => write!(f, "{mag}*x^{k}")?,
            }
        }
        Ok(())
    }
}

impl From<XPoly> for Vec<String> {
    fn from(p: XPoly) -> Self {
        p.coeffs.iter().map(|c| c.to_string()).collect()
    }
}

impl TryFrom<Vec<String>> for XPoly {
    type Error = crate::Error;
    fn try_from(v: Vec<String>) -> Result<Self, Self::Error> {
        let coeffs = v.iter().map(|s| super::parse_rat(s)).collect::<crate::Result<Vec<_>>>()?;
        Ok(XPoly::from_coeffs(coeffs))
    }
}

impl Add for &XPoly {
    type Output = XPoly;
    fn add(self, rhs: &XPoly) -> XPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        XPoly::from_coeffs((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &XPoly {
    type Output = XPoly;
    fn sub(self, rhs: &XPoly) -> XPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        XPoly::from_coeffs((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &XPoly {
    type Output = XPoly;
    fn mul(self, rhs: &XPoly) -> XPoly {
        if self.is_zero() || rhs.is_zero() {
            return XPoly::zero();
        }
        let mut out = vec![Rat::new(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.cmp0().is_eq() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += Rat::from(a * b);
            }
        }
        XPoly::from_coeffs(out)
    }
}

impl Neg for &XPoly {
    type Output = XPoly;
    fn neg(self) -> XPoly {
        XPoly { coeffs: self.coeffs.iter().map(|c| Rat::from(-c)).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for XPoly {
            type Output = XPoly;
            fn $m(self, rhs: XPoly) -> XPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Ring for XPoly {
    fn zero_like(&self) -> Self {
        XPoly::zero()
    }
    fn one_like(&self) -> Self {
        XPoly::one()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn scaled(&self, c: &Rat) -> Self {
        self.scale(c)
    }
    fn inverse(&self) -> Option<Self> {
        match self.degree() {
            Some(0) => Some(XPoly::constant(Rat::from(self.coeffs[0].recip_ref()))),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::rat;

    fn p(cs: &[(i64, i64)]) -> XPoly {
        XPoly::from_coeffs(cs.iter().map(|&(a, b)| rat(a, b)).collect())
    }

    #[test]
    fn normalizes_trailing_zeros() {
        let z = p(&[(0, 1), (0, 1)]);
        assert!(z.is_zero());
        assert_eq!(z.degree(), None);
        assert_eq!(p(&[(1, 1), (2, 1), (0, 1)]).degree(), Some(1));
    }

    #[test]
    fn arithmetic_and_eval() {
        let a = p(&[(1, 1), (1, 1)]);
        let b = p(&[(1, 1), (-1, 1)]);
        assert_eq!(&a * &b, p(&[(1, 1), (0, 1), (-1, 1)]));
        assert!((&a - &a).is_zero());
        assert_eq!((&a * &a).eval(&rat(1, 2)), rat(9, 4));
    }

    #[test]
    fn shift_and_dilate_agree_with_composition() {
        let f = p(&[(3, 1), (-2, 7), (5, 3), (1, 2)]);
        let y = rat(-4, 3);
        let inner = XPoly::from_coeffs(vec![y.clone(), rat(1, 1)]);
        assert_eq!(f.shift(&y), f.compose(&inner));
        let z = rat(5, 2);
        assert_eq!(f.dilate(&z), f.compose(&XPoly::monomial(z, 1)));
    }

    #[test]
    fn falling_factorial_three() {
        assert_eq!(XPoly::falling_factorial(3), p(&[(0, 1), (2, 1), (-3, 1), (1, 1)]));
        assert_eq!(XPoly::falling_factorial(0), XPoly::one());
    }

    #[test]
    fn display() {
        assert_eq!(p(&[(-1, 2), (1, 1), (0, 1), (-3, 4)]).to_string(), "-1/2 + x - 3/4*x^3");
        assert_eq!(XPoly::zero().to_string(), "0");
    }

    #[test]
    fn serde_as_fraction_strings() {
        let f = p(&[(1, 1), (-2, 3)]);
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(s, r#"["1","-2/3"]"#);
        assert_eq!(serde_json::from_str::<XPoly>(&s).unwrap(), f);
    }
}
