use std::fmt::Debug;

use super::Rat;

/// Commutative ring with rational scalars: the coefficient domain of
/// [`TSeries`](super::TSeries) and of the Bell-polynomial machinery.
///
/// Constants are produced from an existing element (`zero_like`,
/// `one_like`) so that types carrying context, such as the working
/// precision of a [`Real`](super::Real), can take part.
pub trait Ring: Clone + PartialEq + Debug + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    fn scaled(&self, c: &Rat) -> Self;
    /// Multiplicative inverse, when it exists in the ring.
    fn inverse(&self) -> Option<Self>;

    /// The scalar `c` embedded in the ring.
    fn constant_like(&self, c: &Rat) -> Self {
        self.one_like().scaled(c)
    }
}

impl Ring for Rat {
    fn zero_like(&self) -> Self {
        Rat::new()
    }
    fn one_like(&self) -> Self {
        Rat::from(1)
    }
    fn is_zero(&self) -> bool {
        self.cmp0().is_eq()
    }
    fn plus(&self, other: &Self) -> Self {
        Rat::from(self + other)
    }
    fn minus(&self, other: &Self) -> Self {
        Rat::from(self - other)
    }
    fn times(&self, other: &Self) -> Self {
        Rat::from(self * other)
    }
    fn negated(&self) -> Self {
        Rat::from(-self)
    }
    fn scaled(&self, c: &Rat) -> Self {
        Rat::from(self * c)
    }
    fn inverse(&self) -> Option<Self> {
        if Ring::is_zero(self) {
            None
        } else {
            Some(Rat::from(self.recip_ref()))
        }
    }
}

/// Generalized binomial coefficient `v (v-1) ... (v-n+1) / n!` for any ring
/// element `v` (a rational, a polynomial in `x`, ...).
pub fn gen_binomial<R: Ring>(v: &R, n: usize) -> R {
    let mut acc = v.one_like();
    for j in 0..n {
        let shifted = v.minus(&v.constant_like(&Rat::from(j as u64)));
        acc = acc.times(&shifted).scaled(&Rat::from((1, j as u64 + 1)));
    }
    acc
}
