use crate::combinatorics::{deg_falling, BellTable};
use crate::error::{contract, Error, Result};
use crate::numerics::{factorial, rat, rat_pow, Precision, Rat, Real, TSeries};

use super::degexp::deg_exp_derivative;
use super::Params;

/// Highest moment order the truncation must support.
pub const MOMENT_ORDER_MAX: i32 = 8;

const INITIAL_LEN: usize = 64;
const MAX_LEN: usize = 1 << 14;

/// Masses of the degenerate Pascal measure on `{0, ..., len - 1}`.
///
/// The mass at `n` is `[w^n] e_λ^β(r log(p / (1 - qw)))`. Writing
/// `A = 1 + λ r log p`, the composed function is
/// `A^{β/λ} (1 + (λr/A) Σ_m q^m w^m / m)^{β/λ}`, so the masses come from a
/// single fractional power of a real series. Every coefficient of that
/// series is positive, so the recurrence has no cancellation.
pub fn canonical_pmf_series(params: &Params, prec: Precision, len: usize) -> Vec<Real> {
    assert!(len >= 1);
    let order = len - 1;
    let a = params.base(prec);
    let c = &Real::one(prec) / &a;
    let c = c.mul_rat(&Rat::from(params.lambda() * params.r()));
    let mut coeffs = vec![Real::one(prec)];
    let mut qm = Rat::from(1);
    for m in 1..=order {
        qm *= params.q();
        coeffs.push(c.mul_rat(&(&qm / Rat::from(m as u64))));
    }
    let inner = TSeries::from_coeffs(order, coeffs);
    let scale = a.pow_rat(&params.exponent());
    inner.fracpow(&params.exponent()).expect("unit constant term").coeffs().iter().map(|v| &scale * v).collect()
}

/// Geometric decay rate of the masses: `q / (1 - p e^{1/(λr)})`, the
/// reciprocal of the radius where `1 + λ r log(p/(1-qw))` vanishes.
pub fn decay_rate(params: &Params, prec: Precision) -> Real {
    let inv = Rat::from(params.lambda() * params.r()).recip();
    let e = Real::from_rat(&inv, prec).exp().mul_rat(params.p());
    &Real::from_rat(params.q(), prec) / &(&Real::one(prec) - &e)
}

/// Upper estimate of `Σ_{n>N} n^m pmf(n)` from the last two masses, assuming
/// the ratio of successive masses stays below `max(observed, asymptotic)`.
fn weighted_tail(pmf: &[Real], rate: &Real, m: i32, prec: Precision) -> Option<Real> {
    let n = pmf.len() - 1;
    let observed = &pmf[n] / &pmf[n - 1];
    let growth = Real::from_rat(&rat(n as i64 + 1, n as i64), prec).powi(m);
    let eff = &observed.max(rate.clone()) * &growth;
    if eff >= 1.0 {
        return None;
    }
    let nm = Real::from_int(n as i64, prec).powi(m);
    Some(&(&(&pmf[n] * &nm) * &eff) / &(&Real::one(prec) - &eff))
}

/// The degenerate Pascal measure with its mass table truncated adaptively.
#[derive(Clone, Debug)]
pub struct MeasureModel {
    params: Params,
    precision: Precision,
    pmf: Vec<Real>,
    tail_bound: Real,
}

impl MeasureModel {
    /// Doubles the table length until the estimated `n^8`-weighted tail
    /// falls below `10^{-D/2}`.
    pub fn new(params: Params, precision: Precision) -> Result<Self> {
        let target = precision.epsilon(precision.digits as i32 / 2);
        let rate = decay_rate(&params, precision);
        let mut len = INITIAL_LEN;
        loop {
            let pmf = canonical_pmf_series(&params, precision, len);
            if let Some(tail) = weighted_tail(&pmf, &rate, MOMENT_ORDER_MAX, precision) {
                if tail < target {
                    return Ok(MeasureModel { params, precision, pmf, tail_bound: tail });
                }
            }
            len *= 2;
            if len > MAX_LEN {
                return Err(Error::Domain(format!(
                    "mass tail did not fall below 1e-{} within {MAX_LEN} terms",
                    precision.digits / 2
                )));
            }
        }
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn precision(&self) -> Precision {
        self.precision
    }

    /// Largest support point kept in the table.
    pub fn cutoff(&self) -> usize {
        self.pmf.len() - 1
    }

    pub fn pmf_values(&self) -> &[Real] {
        &self.pmf
    }

    /// Estimated `Σ_{n > cutoff} n^8 pmf(n)`.
    pub fn tail_bound(&self) -> &Real {
        &self.tail_bound
    }

    /// Mass at `n`; points past the cutoff are computed on demand.
    pub fn canonical_pmf(&self, n: usize) -> Real {
        match self.pmf.get(n) {
            Some(v) => v.clone(),
            None => canonical_pmf_series(&self.params, self.precision, n + 1)[n].clone(),
        }
    }

    /// Masses on `{0, ..., len - 1}`, extending the table when needed.
    pub fn pmf_prefix(&self, len: usize) -> Vec<Real> {
        if len <= self.pmf.len() {
            self.pmf[..len].to_vec()
        } else {
            canonical_pmf_series(&self.params, self.precision, len)
        }
    }

    /// The same mass through Faà di Bruno:
    /// `(1/n!) Σ_j φ^{(j)}(r log p) B_{n,j}(u'(0), ...)` with
    /// `u^{(m)}(0) = r q^m (m-1)!`.
    pub fn canonical_pmf_faa(&self, n: usize) -> Result<Real> {
        let params = &self.params;
        let xs: Vec<Rat> =
            (1..=n.max(1)).map(|m| (params.r() * rat_pow(params.q(), m)) * Rat::from(factorial(m - 1))).collect();
        let table = BellTable::new(&xs, n, &Rat::from(1))?;
        let w = Real::from_rat(params.p(), self.precision).ln().mul_rat(params.r());
        let mut acc = Real::zero(self.precision);
        for (j, b) in table.row(n).iter().enumerate() {
            if *b == 0 {
                continue;
            }
            acc = &acc + &deg_exp_derivative(j, &w, params)?.mul_rat(b);
        }
        Ok(acc.mul_rat(&Rat::from((1, factorial(n)))))
    }

    /// `q^n/n! (β)_{n,λ} (1 + λ r log p)^{β/λ - n}`: the mass formula that
    /// evaluates the n-th derivative of `e_λ^β` at `r log p` instead of
    /// differentiating the composition.
    pub fn literal_pmf(&self, n: usize) -> Real {
        let params = &self.params;
        let a = params.base(self.precision);
        let e = params.exponent() - Rat::from(n as u64);
        let c = rat_pow(params.q(), n) / Rat::from(factorial(n)) * deg_falling(params.beta(), n, params.lambda());
        a.pow_rat(&e).mul_rat(&c)
    }

    /// Closed-form total of [`literal_pmf`](Self::literal_pmf):
    /// `(1 + λ(r log p + q))^{β/λ}`.
    pub fn literal_mass(&self) -> Result<Real> {
        let params = &self.params;
        let base = params.base(self.precision).add_rat(&Rat::from(params.lambda() * params.q()));
        if !base.is_positive() {
            return Err(Error::Domain("1 + λ(r log p + q) is not positive".into()));
        }
        Ok(base.pow_rat(&params.exponent()))
    }

    /// Stirling closed form for `Σ_n n^m literal_pmf(n)`:
    /// `A^{β/λ} Σ_{k=1}^m S(m,k) x^k (β)_{k,λ} (1 + λx)^{β/λ - k}`, `x = q/A`.
    pub fn literal_moment(&self, m: usize) -> Result<Real> {
        if m == 0 {
            return contract("the literal moment formula starts at m = 1");
        }
        let params = &self.params;
        let a = params.base(self.precision);
        let x = &Real::from_rat(params.q(), self.precision) / &a;
        let base = x.mul_rat(params.lambda()).add_rat(&Rat::from(1));
        if !base.is_positive() {
            return Err(Error::Domain("1 + λq/A is not positive".into()));
        }
        let mut acc = Real::zero(self.precision);
        for k in 1..=m {
            let coeff = crate::combinatorics::stirling2(m, k) * deg_falling(params.beta(), k, params.lambda());
            let e = params.exponent() - Rat::from(k as u64);
            acc = &acc + &(&x.powi(k as i32) * &base.pow_rat(&e)).mul_rat(&coeff);
        }
        Ok(&a.pow_rat(&params.exponent()) * &acc)
    }

    /// `Σ_{n ≤ cutoff} n^m pmf(n)`.
    pub fn truncated_moment(&self, m: usize) -> Real {
        self.pmf.iter().enumerate().fold(Real::zero(self.precision), |acc, (n, v)| {
            &acc + &(&Real::from_int(n as i64, self.precision).powi(m as i32) * v)
        })
    }

    /// `Σ_{n ≤ cutoff} pmf(n)`.
    pub fn total_mass(&self) -> Real {
        self.pmf.iter().fold(Real::zero(self.precision), |acc, v| &acc + v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measure::classical_pmf;

    fn model(params: Params) -> MeasureModel {
        MeasureModel::new(params, Precision::DEFAULT).unwrap()
    }

    #[test]
    fn masses_are_positive_and_sum_to_one() {
        for (_, params) in Params::presets() {
            let m = model(params);
            let prec = m.precision();
            assert!(m.pmf_values().iter().all(Real::is_positive));
            let total = m.total_mass();
            assert!(total <= (&Real::one(prec) + &prec.epsilon(50)));
            assert!((&Real::one(prec) - &total) < prec.epsilon(20));
        }
    }

    #[test]
    fn observed_ratio_approaches_decay_rate() {
        for (_, params) in Params::presets() {
            let prec = Precision::DEFAULT;
            let pmf = canonical_pmf_series(&params, prec, 2000);
            let ratio = &pmf[1999] / &pmf[1998];
            let rate = decay_rate(&params, prec);
            assert!(ratio.rel_diff(&rate) < 0.01, "{ratio} vs {rate}");
            assert!(rate > Real::from_rat(params.q(), prec));
        }
    }

    #[test]
    fn faa_di_bruno_route_matches_series() {
        for (_, params) in Params::presets() {
            let m = model(params);
            for n in 0..=12 {
                let faa = m.canonical_pmf_faa(n).unwrap();
                assert!(faa.rel_diff(&m.canonical_pmf(n)) < m.precision().epsilon(50), "n={n}");
            }
        }
    }

    #[test]
    fn on_demand_masses_extend_the_table() {
        let m = model(Params::set_b());
        let n = m.cutoff() + 5;
        let v = m.canonical_pmf(n);
        assert!(v.is_positive());
        assert_eq!(m.pmf_prefix(n + 1)[n], v);
    }

    #[test]
    fn literal_formula_values() {
        for (_, params) in Params::presets() {
            let m = model(params.clone());
            let prec = m.precision();
            let a = params.base(prec).pow_rat(&params.exponent());
            assert!(m.literal_pmf(0).rel_diff(&a) < prec.epsilon(55));
            let sum = (0..600).fold(Real::zero(prec), |acc, n| &acc + &m.literal_pmf(n));
            assert!(sum.rel_diff(&m.literal_mass().unwrap()) < prec.epsilon(25));
            assert!(sum.rel_diff(&Real::one(prec)) > 1e-6);
            for k in 1..=6 {
                let direct = (0..600).fold(Real::zero(prec), |acc, n| {
                    &acc + &(&Real::from_int(n as i64, prec).powi(k) * &m.literal_pmf(n))
                });
                let closed = m.literal_moment(k as usize).unwrap();
                assert!(direct.rel_diff(&closed) < prec.epsilon(20), "m={k}");
            }
        }
    }

    #[test]
    fn literal_moment_rejects_zero() {
        assert!(model(Params::set_a()).literal_moment(0).is_err());
    }

    #[test]
    fn classical_limit_is_linear_in_lambda() {
        let prec = Precision::DEFAULT;
        let (p, r) = (rat(3, 5), rat(3, 1));
        let mut gaps = Vec::new();
        for e in [4, 5, 6] {
            let lambda = Rat::from((-1, 10i64.pow(e)));
            let params = Params::new(lambda, rat(1, 1), p.clone(), r.clone()).unwrap();
            let m = model(params);
            let gap = (0..=10)
                .map(|n| (&m.canonical_pmf(n) - &classical_pmf(n, &p, &r, prec)).abs())
                .fold(Real::zero(prec), Real::max);
            gaps.push(gap);
        }
        for w in gaps.windows(2) {
            let ratio = (&w[0] / &w[1]).to_f64();
            assert!((ratio - 10.0).abs() < 0.1, "gap ratio {ratio}");
        }
        assert!(gaps[2] < 1e-5);
    }
}
