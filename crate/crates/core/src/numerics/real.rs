use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use rug::float::Constant;
use rug::ops::Pow;
use rug::Float;

use super::{Rat, Ring};

/// Working precision in significant decimal digits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Precision {
    pub digits: u32,
}

impl Precision {
    pub const DEFAULT: Precision = Precision { digits: 60 };

    pub fn digits(digits: u32) -> Self {
        Precision { digits }
    }

    /// Binary precision handed to MPFR: the decimal digits plus 16 guard bits.
    pub fn bits(self) -> u32 {
        (f64::from(self.digits) * std::f64::consts::LOG2_10).ceil() as u32 + 16
    }

    /// `10^-k` at this precision.
    pub fn epsilon(self, k: i32) -> Real {
        Real(Float::with_val(self.bits(), 10).pow(-k))
    }
}

impl Default for Precision {
    fn default() -> Self {
        Self::DEFAULT
    }
}

/// Extended-precision real backed by an MPFR float.
#[derive(Clone, PartialEq, PartialOrd)]
pub struct Real(Float);

impl Real {
    pub fn from_rat(x: &Rat, prec: Precision) -> Self {
        Real(Float::with_val(prec.bits(), x))
    }

    pub fn from_int(x: i64, prec: Precision) -> Self {
        Real(Float::with_val(prec.bits(), x))
    }

    pub fn from_f64(x: f64, prec: Precision) -> Self {
        Real(Float::with_val(prec.bits(), x))
    }

    pub fn zero(prec: Precision) -> Self {
        Self::from_int(0, prec)
    }

    pub fn one(prec: Precision) -> Self {
        Self::from_int(1, prec)
    }

    pub fn pi(prec: Precision) -> Self {
        Real(Float::with_val(prec.bits(), Constant::Pi))
    }

    /// The decimal precision this value was created with.
    pub fn precision(&self) -> Precision {
        let digits = (f64::from(self.bits() - 16) / std::f64::consts::LOG2_10).floor() as u32;
        Precision { digits }
    }

    pub fn as_float(&self) -> &Float {
        &self.0
    }

    fn bits(&self) -> u32 {
        self.0.prec()
    }

    fn lift(&self, x: &Rat) -> Float {
        Float::with_val(self.bits(), x)
    }

    pub fn ln(&self) -> Self {
        Real(self.0.clone().ln())
    }

    pub fn exp(&self) -> Self {
        Real(self.0.clone().exp())
    }

    pub fn sinh(&self) -> Self {
        Real(self.0.clone().sinh())
    }

    pub fn cosh(&self) -> Self {
        Real(self.0.clone().cosh())
    }

    pub fn gamma(&self) -> Self {
        Real(self.0.clone().gamma())
    }

    pub fn ln_gamma(&self) -> Self {
        Real(self.0.clone().ln_gamma())
    }

    pub fn abs(&self) -> Self {
        Real(self.0.clone().abs())
    }

    pub fn powr(&self, e: &Real) -> Self {
        Real(Float::with_val(self.bits(), (&self.0).pow(&e.0)))
    }

    /// `self^e` for a rational exponent; NaN for negative bases and
    /// non-integer `e`, as in MPFR.
    pub fn pow_rat(&self, e: &Rat) -> Self {
        if *e.denom() == 1 {
            if let Some(k) = e.numer().to_i32() {
                return Real(Float::with_val(self.bits(), (&self.0).pow(k)));
            }
        }
        self.powr(&Real(self.lift(e)))
    }

    pub fn powi(&self, k: i32) -> Self {
        Real(Float::with_val(self.bits(), (&self.0).pow(k)))
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_sign_positive() && !self.0.is_zero() && !self.0.is_nan()
    }

    pub fn is_finite(&self) -> bool {
        self.0.is_finite()
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64()
    }

    pub fn mul_rat(&self, c: &Rat) -> Self {
        Real(self.0.clone() * c)
    }

    pub fn add_rat(&self, c: &Rat) -> Self {
        Real(self.0.clone() + c)
    }

    /// `|self - other| / max(|self|, |other|)`, or the absolute gap when
    /// both are zero.
    pub fn rel_diff(&self, other: &Real) -> Real {
        let gap = (self - other).abs();
        let scale = if self.0.clone().abs() > other.0.clone().abs() { self.abs() } else { other.abs() };
        if scale.0.is_zero() {
            gap
        } else {
            &gap / &scale
        }
    }

    /// Scientific notation with `digits` significant digits.
    pub fn to_string_digits(&self, digits: usize) -> String {
        self.0.to_string_radix(10, Some(digits))
    }

    /// `10^-k` at the precision of `self`.
    pub fn eps_like(&self, k: i32) -> Real {
        Real(Float::with_val(self.bits(), 10).pow(-k))
    }

    pub fn max(self, other: Real) -> Real {
        if other > self {
            other
        } else {
            self
        }
    }
}

impl fmt::Debug for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Real({})", self.to_string_digits(25))
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().unwrap_or(30);
        f.write_str(&self.to_string_digits(digits))
    }
}

macro_rules! real_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for &Real {
            type Output = Real;
            fn $m(self, rhs: &Real) -> Real {
                let prec = self.bits().max(rhs.bits());
                Real(Float::with_val(prec, (&self.0).$m(&rhs.0)))
            }
        }
        impl $tr for Real {
            type Output = Real;
            fn $m(self, rhs: Real) -> Real {
                (&self).$m(&rhs)
            }
        }
    };
}
real_binop!(Add, add);
real_binop!(Sub, sub);
real_binop!(Mul, mul);
real_binop!(Div, div);

impl Neg for &Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real(self.0.clone().neg())
    }
}

impl PartialEq<f64> for Real {
    fn eq(&self, other: &f64) -> bool {
        self.0 == *other
    }
}

impl PartialOrd<f64> for Real {
    fn partial_cmp(&self, other: &f64) -> Option<Ordering> {
        self.0.partial_cmp(other)
    }
}

impl Ring for Real {
    fn zero_like(&self) -> Self {
        Real(Float::with_val(self.bits(), 0))
    }
    fn one_like(&self) -> Self {
        Real(Float::with_val(self.bits(), 1))
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
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
        self.mul_rat(c)
    }
    fn inverse(&self) -> Option<Self> {
        if self.0.is_zero() {
            None
        } else {
            Some(Real(self.0.clone().recip()))
        }
    }
}
