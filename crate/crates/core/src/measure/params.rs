use std::fmt;

use crate::error::{Error, Result};
use crate::numerics::{rat, Precision, Rat, Real};

/// Model parameters `(λ, β, p, q, r)` with `q = 1 - p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Params {
    lambda: Rat,
    beta: Rat,
    p: Rat,
    q: Rat,
    r: Rat,
}

impl Params {
    /// Checks `λ < 0`, `β > 0`, `0 < p < 1` and `r > 0`.
    pub fn new(lambda: Rat, beta: Rat, p: Rat, r: Rat) -> Result<Self> {
        if lambda >= 0 {
            return Err(Error::InvalidParams(format!("lambda must be negative, got {lambda}")));
        }
        if beta <= 0 {
            return Err(Error::InvalidParams(format!("beta must be positive, got {beta}")));
        }
        if p <= 0 || p >= 1 {
            return Err(Error::InvalidParams(format!("p must lie in (0, 1), got {p}")));
        }
        if r <= 0 {
            return Err(Error::InvalidParams(format!("r must be positive, got {r}")));
        }
        let q = Rat::from(1 - &p);
        Ok(Params { lambda, beta, p, q, r })
    }

    /// `λ = -1/2, β = 2, p = 3/5, r = 3`.
    pub fn set_a() -> Self {
        Self::new(rat(-1, 2), rat(2, 1), rat(3, 5), rat(3, 1)).expect("valid preset")
    }

    /// `λ = -1, β = 1/2, p = 1/2, r = 1`.
    pub fn set_b() -> Self {
        Self::new(rat(-1, 1), rat(1, 2), rat(1, 2), rat(1, 1)).expect("valid preset")
    }

    /// `λ = -1/4, β = 3, p = 7/10, r = 5/2`.
    pub fn set_c() -> Self {
        Self::new(rat(-1, 4), rat(3, 1), rat(7, 10), rat(5, 2)).expect("valid preset")
    }

    pub fn presets() -> [(&'static str, Params); 3] {
        [("A", Self::set_a()), ("B", Self::set_b()), ("C", Self::set_c())]
    }

    pub fn lambda(&self) -> &Rat {
        &self.lambda
    }

    pub fn beta(&self) -> &Rat {
        &self.beta
    }

    pub fn p(&self) -> &Rat {
        &self.p
    }

    pub fn q(&self) -> &Rat {
        &self.q
    }

    pub fn r(&self) -> &Rat {
        &self.r
    }

    /// The exponent `β/λ` of the degenerate exponential (negative).
    pub fn exponent(&self) -> Rat {
        Rat::from(&self.beta / &self.lambda)
    }

    /// `β r q / p`, the mean of the measure.
    pub fn mean(&self) -> Rat {
        Rat::from(&self.beta * &self.r) * &self.q / &self.p
    }

    /// `A = 1 + λ r log p`, which exceeds 1 for valid parameters.
    pub fn base(&self, prec: Precision) -> Real {
        let log_p = Real::from_rat(&self.p, prec).ln();
        log_p.mul_rat(&Rat::from(&self.lambda * &self.r)).add_rat(&Rat::from(1))
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "lambda={} beta={} p={} r={}", self.lambda, self.beta, self.p, self.r)
    }
}
