use crate::error::{contract, Error, Result};

use super::{factorial, Rat, Ring};

/// Default truncation order shared by every series in one computation.
pub const DEFAULT_ORDER: usize = 16;

/// Truncated formal power series `c_0 + c_1 t + ... + c_N t^N`.
///
/// Arithmetic never reads or produces coefficients beyond `t^N`; two series
/// combine only when their orders agree.
#[derive(Clone, Debug, PartialEq)]
pub struct TSeries<R> {
    order: usize,
    coeffs: Vec<R>,
}

impl<R: Ring> TSeries<R> {
    /// Pads with zeros or truncates `coeffs` to length `order + 1`.
    /// Panics if `coeffs` is empty: at least one element is needed to
    /// produce the ring's zero.
    pub fn from_coeffs(order: usize, mut coeffs: Vec<R>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least one coefficient");
        let zero = coeffs[0].zero_like();
        coeffs.resize(order + 1, zero);
        TSeries { order, coeffs }
    }

    pub fn constant(order: usize, c: R) -> Self {
        Self::from_coeffs(order, vec![c])
    }

    /// The series `t` with coefficients in the ring of `like`.
    pub fn variable(order: usize, like: &R) -> Self {
        Self::from_coeffs(order, vec![like.zero_like(), like.one_like()])
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &R {
        &self.coeffs[k]
    }

    /// `k! [t^k]`, the k-th derivative at zero.
    pub fn derivative_at_zero(&self, k: usize) -> R {
        self.coeffs[k].scaled(&Rat::from(factorial(k)))
    }

    fn unit(&self) -> R {
        self.coeffs[0].one_like()
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order != other.order {
            return Err(Error::OrderMismatch { left: self.order, right: other.order });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.plus(b)).collect();
        Ok(TSeries { order: self.order, coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.minus(b)).collect();
        Ok(TSeries { order: self.order, coeffs })
    }

    pub fn neg(&self) -> Self {
        self.map(|c| c.negated())
    }

    pub fn scale(&self, c: &Rat) -> Self {
        self.map(|a| a.scaled(c))
    }

    pub fn mul_coeff(&self, c: &R) -> Self {
        self.map(|a| a.times(c))
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> TSeries<S> {
        TSeries { order: self.order, coeffs: self.coeffs.iter().map(f).collect() }
    }

    /// Re-truncates (or zero-extends) to a different order.
    pub fn with_order(&self, order: usize) -> Self {
        Self::from_coeffs(order, self.coeffs.clone())
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let n = self.order;
        let mut out = vec![self.coeffs[0].zero_like(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                out[i + j] = out[i + j].plus(&a.times(b));
            }
        }
        Ok(TSeries { order: n, coeffs: out })
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::constant(self.order, self.unit());
        for _ in 0..k {
            acc = acc.mul(self).expect("same order");
        }
        acc
    }

    pub fn reciprocal(&self) -> Result<Self> {
        let inv0 = self.coeffs[0].inverse().ok_or(Error::NonInvertibleSeries)?;
        let n = self.order;
        let mut out = Vec::with_capacity(n + 1);
        out.push(inv0.clone());
        for m in 1..=n {
            let mut acc = inv0.zero_like();
            for k in 1..=m {
                acc = acc.plus(&self.coeffs[k].times(&out[m - k]));
            }
            out.push(acc.times(&inv0).negated());
        }
        Ok(TSeries { order: n, coeffs: out })
    }

    pub fn derivative(&self) -> Self {
        let zero = self.coeffs[0].zero_like();
        let mut coeffs: Vec<R> = (1..=self.order).map(|k| self.coeffs[k].scaled(&Rat::from(k as u64))).collect();
        coeffs.push(zero);
        TSeries { order: self.order, coeffs }
    }

    /// Antiderivative with zero constant term; the `t^N` term of `self` is dropped.
    pub fn integral(&self) -> Self {
        let mut coeffs = vec![self.coeffs[0].zero_like()];
        for k in 1..=self.order {
            coeffs.push(self.coeffs[k - 1].scaled(&Rat::from((1, k as u64))));
        }
        TSeries { order: self.order, coeffs }
    }

    fn require_unit_constant(&self, op: &str) -> Result<()> {
        if self.coeffs[0] != self.unit() {
            return contract(format!("{op} needs a series with constant term 1"));
        }
        Ok(())
    }

    /// `log(a)` for `a(0) = 1`.
    pub fn log1(&self) -> Result<Self> {
        self.require_unit_constant("log1")?;
        Ok(self.derivative().mul(&self.reciprocal()?)?.integral())
    }

    /// `exp(g)` for `g(0) = 0`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return contract("exp needs a series with zero constant term");
        }
        let n = self.order;
        let mut out = vec![self.unit()];
        for m in 1..=n {
            let mut acc = out[0].zero_like();
            for k in 1..=m {
                acc = acc.plus(&self.coeffs[k].times(&out[m - k]).scaled(&Rat::from(k as u64)));
            }
            out.push(acc.scaled(&Rat::from((1, m as u64))));
        }
        Ok(TSeries { order: n, coeffs: out })
    }

    /// `a^e` for `a(0) = 1` and rational `e`, via `a F' = e a' F`.
    pub fn fracpow(&self, e: &Rat) -> Result<Self> {
        self.require_unit_constant("fracpow")?;
        let n = self.order;
        let mut out = vec![self.unit()];
        for m in 1..=n {
            let mut acc = out[0].zero_like();
            for k in 1..=m {
                let w = Rat::from(e * k as u64) - Rat::from((m - k) as u64);
                if w.cmp0().is_eq() || self.coeffs[k].is_zero() {
                    continue;
                }
                acc = acc.plus(&self.coeffs[k].times(&out[m - k]).scaled(&w));
            }
            out.push(acc.scaled(&Rat::from((1, m as u64))));
        }
        Ok(TSeries { order: n, coeffs: out })
    }

    /// `f(g(t))` for `g(0) = 0`, by Horner's rule.
    pub fn compose(&self, g: &Self) -> Result<Self> {
        self.check_order(g)?;
        if !g.coeffs[0].is_zero() {
            return contract("compose needs an inner series with zero constant term");
        }
        let n = self.order;
        let mut acc = Self::constant(n, self.coeffs[n].clone());
        for k in (0..n).rev() {
            acc = acc.mul(g)?;
            acc.coeffs[0] = acc.coeffs[0].plus(&self.coeffs[k]);
        }
        Ok(acc)
    }
}

impl TSeries<Rat> {
    /// `e^t` truncated at `order`.
    pub fn exponential(order: usize) -> Self {
        Self::from_coeffs(order, (0..=order).map(|k| Rat::from((1, factorial(k)))).collect())
    }

    /// `log(1 + c t)`.
    pub fn log_one_plus(order: usize, c: &Rat) -> Self {
        let mut coeffs = vec![Rat::new()];
        let mut ck = Rat::from(1);
        for k in 1..=order {
            ck *= c;
            let sign = if k % 2 == 1 { 1 } else { -1 };
            coeffs.push(&ck * Rat::from((sign, k as i64)));
        }
        Self::from_coeffs(order, coeffs)
    }
}
