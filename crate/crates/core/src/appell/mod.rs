//! The `K_n` family generated by `Ψ(t, x) = ω(t)^x / e_λ^β(r log(1 + qt))`
//! and the Appell family `P_n` generated by `e^{xz} / L(z)`, each built
//! along several independent routes, plus the identities linking them.

mod coeffs;
mod example;
mod families;
mod identities;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::numerics::XPoly;

pub use coeffs::{c_coeffs, c_coeffs_series, composed_series, mu_coeffs, mu_coeffs_series, xi_derivs, CoeffTable};
pub use example::{printed_c2, printed_k1, printed_k2};
pub use families::{classical_k, classical_limit_gap, Families};
pub use identities::{
    addition_p3, addition_p4, appell_defect, derivative_relation_residual, monomial_from_k, P3Reading,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    K,
    P,
}

/// How a family was constructed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Route {
    /// Coefficients of the generating series (the reference route).
    Series,
    /// `K_n = Σ n!/(n-k)! r^{n-k} c_{n-k} ε_k`.
    Epsilon,
    /// `K_n = Σ ϖ(m,n)/m! P_m`.
    FromP,
    /// `P_n = Σ ϱ(m,n)/m! K_m`.
    FromK,
    /// Stirling expansion of `K_n` over `P_k` with coefficients
    /// `k! [z^n] θ^k / k!` taken from a series power.
    StirlingSeries,
    /// Stirling expansion with inner bound `j ≤ m ≤ n-k+j`.
    StirlingCorrected,
    /// Stirling expansion with inner bound `j ≤ m ≤ n-k-j`, as printed.
    StirlingPrinted,
    /// Stirling-2 expansion of `P_n` over `K_k/k!`.
    Stirling2,
    /// The same expansion without the `1/k!`, as printed.
    Stirling2Printed,
    /// `P_n` from partial Bell polynomials over the moments.
    Bell,
    /// `K_n` from partial Bell polynomials over `μ_j`.
    BellCorrected,
    /// `K_n` from partial Bell polynomials over the moments `M(j)`.
    BellLiteral,
    /// Classical Krawtchouk polynomials (`λ → 0`, `β = 1`).
    Classical,
}

impl Route {
    pub const ALL: [Route; 13] = [
        Route::Series,
        Route::Epsilon,
        Route::FromP,
        Route::FromK,
        Route::StirlingSeries,
        Route::StirlingCorrected,
        Route::StirlingPrinted,
        Route::Stirling2,
        Route::Stirling2Printed,
        Route::Bell,
        Route::BellCorrected,
        Route::BellLiteral,
        Route::Classical,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Route::Series => "series",
            Route::Epsilon => "epsilon",
            Route::FromP => "from-p",
            Route::FromK => "from-k",
            Route::StirlingSeries => "stirling-series",
            Route::StirlingCorrected => "stirling-corrected",
            Route::StirlingPrinted => "stirling-printed",
            Route::Stirling2 => "stirling2",
            Route::Stirling2Printed => "stirling2-printed",
            Route::Bell => "bell",
            Route::BellCorrected => "bell-corrected",
            Route::BellLiteral => "bell-literal",
            Route::Classical => "classical",
        }
    }

    pub fn parse(s: &str) -> Option<Route> {
        Route::ALL.into_iter().find(|r| r.name() == s)
    }

    /// Whether the route builds members of `family`.
    pub fn builds(self, family: Family) -> bool {
        match self {
            Route::Series => true,
            Route::FromK | Route::Stirling2 | Route::Stirling2Printed | Route::Bell => family == Family::P,
            _ => family == Family::K,
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

/// Members `0..=n_max` of one family built along one route.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyFamily {
    pub family: Family,
    pub route: Route,
    pub members: Vec<XPoly>,
}

impl PolyFamily {
    pub fn n_max(&self) -> usize {
        self.members.len() - 1
    }

    pub fn get(&self, n: usize) -> &XPoly {
        &self.members[n]
    }

    /// First index where two families differ.
    pub fn first_difference(&self, other: &PolyFamily) -> Option<usize> {
        let n = self.members.len().min(other.members.len());
        (0..n).find(|&i| self.members[i] != other.members[i])
    }
}
