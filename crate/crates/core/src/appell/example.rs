//! Closed-form values printed for the first members, kept verbatim so the
//! audit can measure them against the generating series.

use crate::measure::Params;
use crate::numerics::{Rat, XPoly};

/// `2q²β²/r - βq²/r + (1 - β/λ) λ β q²`.
pub fn printed_c2(params: &Params) -> Rat {
    let (b, l, q, r) = (params.beta(), params.lambda(), params.q(), params.r());
    let q2 = Rat::from(q * q);
    let b2 = Rat::from(b * b);
    let t1 = Rat::from(&q2 * &b2) * 2u32 / r;
    let t2 = Rat::from(b * &q2) / r;
    let t3 = (Rat::from(1) - Rat::from(b / l)) * l * b * &q2;
    t1 - t2 + t3
}

/// `x - βrq/p`.
pub fn printed_k1(params: &Params) -> XPoly {
    let c = Rat::from(params.beta() * params.r()) * params.q() / params.p();
    XPoly::from_coeffs(vec![-c, Rat::from(1)])
}

/// `x² - (2rqβ/p + (1-q²)/p²) x + (r²/p²) c₂` with the printed `c₂`.
pub fn printed_k2(params: &Params) -> XPoly {
    let (b, p, q, r) = (params.beta(), params.p(), params.q(), params.r());
    let p2 = Rat::from(p * p);
    let lin = Rat::from(r * q) * b * 2u32 / p + (Rat::from(1) - Rat::from(q * q)) / &p2;
    let c0 = Rat::from(r * r) / &p2 * printed_c2(params);
    XPoly::from_coeffs(vec![c0, -lin, Rat::from(1)])
}
