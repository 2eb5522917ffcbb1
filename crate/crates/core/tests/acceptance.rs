//! Acceptance criteria 1-10. Each test writes one `criterion N: PASS|FAIL`
//! line to stderr (bypassing the harness capture) before asserting.

use std::io::Write;
use std::time::Instant;

use krawtchouk_appell::appell::{
    addition_p3, addition_p4, appell_defect, classical_limit_gap, derivative_relation_residual, monomial_from_k,
    mu_coeffs, Families, Family, P3Reading, PolyFamily, Route,
};
use krawtchouk_appell::audit::Status;
use krawtchouk_appell::cli::{self, parse_table, Format};
use krawtchouk_appell::combinatorics::RhoVariant;
use krawtchouk_appell::measure::{
    deg_exp, joint_laplace, joint_laplace_by_sum, mixture_laplace, mixture_pmf, moments_exact, sample, MeasureModel,
    Params, SampleSummary,
};
use krawtchouk_appell::numerics::rat;
use krawtchouk_appell::operators::{translation_series_residual, ChaosVector, KBasis};
use krawtchouk_appell::{Precision, Rat, Real, XPoly};

fn report(n: u32, pass: bool, detail: &str) {
    let verdict = if pass { "PASS" } else { "FAIL" };
    let _ = writeln!(std::io::stderr(), "criterion {n}: {verdict} ({detail})");
}

fn presets() -> [(&'static str, Params); 3] {
    Params::presets()
}

fn same(a: &PolyFamily, b: &PolyFamily) -> bool {
    a.members == b.members
}

#[test]
fn criterion_01_cross_construction() {
    let start = Instant::now();
    let mut bad = Vec::new();
    for (name, params) in presets() {
        let fam = Families::new(params, 12);
        let reference = fam.k_series(10).unwrap();
        for route in [Route::Epsilon, Route::FromP, Route::BellCorrected, Route::StirlingSeries] {
            if !same(&fam.build(Family::K, route, 10).unwrap(), &reference) {
                bad.push(format!("{name}/{route}"));
            }
        }
    }
    let secs = start.elapsed().as_secs_f64();
    let pass = bad.is_empty() && secs < 30.0;
    report(1, pass, &format!("K routes equal for n <= 10 on A, B, C in {secs:.2}s; mismatches {bad:?}"));
    assert!(pass);
}

/// The attainable part of criterion 2: the `P` routes, the Appell property
/// of `P_n`, and the derivative relation that `K_n` satisfies instead.
#[test]
fn criterion_02_appell_companion() {
    let mut bad = Vec::new();
    for (name, params) in presets() {
        let fam = Families::new(params.clone(), 14);
        let p8 = fam.p_series(8).unwrap();
        for route in [Route::Bell, Route::FromK, Route::Stirling2] {
            if !same(&fam.build(Family::P, route, 8).unwrap(), &p8) {
                bad.push(format!("{name}/P {route}"));
            }
        }
        let p12 = fam.p_series(12).unwrap();
        let k12 = fam.k_series(12).unwrap();
        for n in 0..=12 {
            if !appell_defect(&p12, n).is_zero() {
                bad.push(format!("{name}/P' n={n}"));
            }
            if !derivative_relation_residual(&k12, n, params.q()).is_zero() {
                bad.push(format!("{name}/K' relation n={n}"));
            }
        }
    }
    report(
        2,
        bad.is_empty(),
        &format!("P routes equal for n <= 8, P_n' = n P_(n-1) and K_n' = Σ C(n,j) η_j K_(n-j) for n <= 12; failures {bad:?}; K_n Appell half: see ignored test"),
    );
    assert!(bad.is_empty());
}

/// The Appell half of criterion 2 for `K_n`, as stated. It cannot hold:
/// `∂_x Ψ = θ(t) Ψ` with `θ(t) = log((1+t)/(1+qt))`, not `t Ψ`, so
/// `K_1 = px - βrq` has derivative `p` rather than `1·K_0 = 1`.
#[test]
#[ignore = "K_n is not an Appell sequence: K_1' = p, not 1"]
fn criterion_02_k_appell_derivative() {
    let mut first = None;
    for (name, params) in presets() {
        let k = Families::new(params, 14).k_series(12).unwrap();
        if let Some(n) = (0..=12).find(|&n| !appell_defect(&k, n).is_zero()) {
            first.get_or_insert(format!("{name}: first defect at n={n}, K_n' - n K_(n-1) = {}", appell_defect(&k, n)));
        }
    }
    report(2, first.is_none(), &format!("K_n' = n K_(n-1) for n <= 12: {}", first.clone().unwrap_or_default()));
    assert!(first.is_none());
}

#[test]
fn criterion_03_identities() {
    let mut bad = Vec::new();
    for (name, params) in presets() {
        let fam = Families::new(params.clone(), 12);
        let k = fam.k_series(10).unwrap();
        if !same(&fam.k_from_p(10).unwrap(), &k) {
            bad.push(format!("{name}/P1"));
        }
        let mu = mu_coeffs(10, &params);
        for n in 0..=10 {
            if monomial_from_k(n, &k, &params) != XPoly::monomial(rat(1, 1), n) {
                bad.push(format!("{name}/P2 n={n}"));
            }
            if n <= 8 && !addition_p3(n, &k, &mu, P3Reading::WithY).is_zero() {
                bad.push(format!("{name}/P3 n={n}"));
            }
            if !addition_p4(n, &k, params.q()).is_zero() {
                bad.push(format!("{name}/P4 n={n}"));
            }
        }
    }
    report(3, bad.is_empty(), &format!("P1, P2, P4 for n <= 10 and P3 for n <= 8, exact; failures {bad:?}"));
    assert!(bad.is_empty());
}

#[test]
fn criterion_04_measure_consistency() {
    let prec = Precision::DEFAULT;
    let mut bad = Vec::new();
    let mut worst_moment = Real::zero(prec);
    let mut worst_mixture = Real::zero(prec);
    for (name, params) in presets() {
        let model = MeasureModel::new(params.clone(), prec).unwrap();
        let mass = model.total_mass();
        let low = &Real::one(prec) - &prec.epsilon(20);
        // rounding in the final few digits may leave the sum an ulp above 1
        let high = &Real::one(prec) + &prec.epsilon(prec.digits as i32 - 5);
        if mass < low || mass > high {
            bad.push(format!("{name}/mass {mass}"));
        }
        for (m, exact) in moments_exact(8, &params).iter().enumerate() {
            let gap = model.truncated_moment(m).rel_diff(&Real::from_rat(exact, prec));
            if gap > prec.epsilon(20) {
                bad.push(format!("{name}/moment {m}"));
            }
            worst_moment = worst_moment.max(gap);
        }
        for n in 0..=10 {
            let gap = mixture_pmf(n, &params, prec).unwrap().rel_diff(&model.canonical_pmf(n));
            if gap > prec.epsilon(15) {
                bad.push(format!("{name}/mixture n={n}"));
            }
            worst_mixture = worst_mixture.max(gap);
        }
    }
    report(
        4,
        bad.is_empty(),
        &format!(
            "mass in [1-1e-20, 1], moment gap {worst_moment:.3}, mixture gap {worst_mixture:.3}; failures {bad:?}"
        ),
    );
    assert!(bad.is_empty());
}

#[test]
fn criterion_05_mixture_laplace() {
    let prec = Precision::DEFAULT;
    let mut worst = Real::zero(prec);
    for (_, params) in presets() {
        for s in [rat(1, 2), rat(1, 1), rat(2, 1)] {
            let quad = mixture_laplace(&Real::from_rat(&s, prec), &params, prec).unwrap();
            let closed = deg_exp(&Real::from_rat(&-s, prec), &params).unwrap();
            worst = worst.max(quad.rel_diff(&closed));
        }
    }
    let pass = worst < prec.epsilon(15);
    report(5, pass, &format!("largest relative gap {worst:.3} at s in {{1/2, 1, 2}} on A, B, C"));
    assert!(pass);
}

#[test]
fn criterion_06_monte_carlo() {
    let start = Instant::now();
    let params = Params::set_a();
    let model = MeasureModel::new(params.clone(), Precision::digits(40)).unwrap();
    let draws = sample(&params, 1_000_000, 42).unwrap();
    let s = SampleSummary::new(&draws, &model);
    let secs = start.elapsed().as_secs_f64();
    let z = s.mean_z_score();
    let pass = s.total_variation < 0.005 && z.abs() < 5.0 && secs < 60.0;
    report(
        6,
        pass,
        &format!(
            "10^6 draws, seed 42: TV {:.5}, mean {:.5} vs {}, z {z:.3}, {secs:.1}s",
            s.total_variation,
            s.mean,
            params.mean()
        ),
    );
    assert!(pass);
}

#[test]
fn criterion_07_classical_limit() {
    let mut lines = Vec::new();
    let mut pass = true;
    for (name, params) in presets() {
        let gaps: Vec<Rat> = [rat(-1, 10_000), rat(-1, 100_000), rat(-1, 1_000_000)]
            .iter()
            .map(|l| classical_limit_gap(6, l, params.p(), params.r()).unwrap())
            .collect();
        let ratios: Vec<f64> = gaps.windows(2).map(|w| Rat::from(&w[0] / &w[1]).to_f64()).collect();
        pass &= gaps[2] < rat(1, 10_000) && ratios.iter().all(|r| (9.0..11.0).contains(r));
        lines.push(format!("{name}: gap {:.3e}, ratios {:.3?}", gaps[2].to_f64(), ratios));
    }
    report(7, pass, &format!("β = 1, λ = -1e-6, n <= 6; {}", lines.join("; ")));
    assert!(pass);
}

#[test]
fn criterion_08_operators() {
    let mut bad = Vec::new();
    for (name, params) in presets() {
        let basis = KBasis::new(params.clone(), 8).unwrap();
        for top in 0..=8i64 {
            let v = ChaosVector::new((0..=top).map(|i| rat(3 * i - 7, 2 * i + 1)).collect());
            for z in [rat(2, 1), rat(1, 3), rat(-1, 1)] {
                let sub = basis.scale_substitution(&v, &z).unwrap();
                if basis.scale_expansion(&v, &z, RhoVariant::Corrected).unwrap() != sub {
                    bad.push(format!("{name}/scaling N={top} z={z}"));
                }
            }
        }
        let v = ChaosVector::new((0..=8).map(|i| rat(i + 1, 9 - i)).collect());
        for (y1, y2) in [(rat(1, 2), rat(-3, 4)), (rat(2, 1), rat(5, 3)), (rat(-1, 7), rat(1, 7))] {
            let twice = basis.translate(&basis.translate(&v, &y1).unwrap(), &y2).unwrap();
            if twice != basis.translate(&v, &Rat::from(&y1 + &y2)).unwrap() {
                bad.push(format!("{name}/translation group law"));
            }
        }
        let res = translation_series_residual(&params, &rat(3, 7), 12).unwrap();
        if !res.coeffs().iter().all(XPoly::is_zero) {
            bad.push(format!("{name}/translation series"));
        }
    }
    report(8, bad.is_empty(), &format!("scaling, translation group law and e^(yz) series check; failures {bad:?}"));
    assert!(bad.is_empty());
}

#[test]
fn criterion_09_audit_completeness() {
    let run = || {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = cli::run(["krawtchouk", "--format", "json", "audit"], &mut out, &mut err);
        (code, String::from_utf8(out).unwrap())
    };
    let (code, text) = run();
    let deterministic = run() == (code, text.clone());
    let table = parse_table(&text, Format::Json).unwrap();
    let col = |name: &str| table.column(name).unwrap();
    let (id, variant, kind, status) = (col("formula_id"), col("variant"), col("kind"), col("status"));
    let required = [
        ("epsilon", "printed"),
        ("pmf-mass", "literal"),
        ("moments", "literal"),
        ("example", "c2"),
        ("example", "k1"),
        ("example", "k2"),
        ("k-route", "stirling-printed"),
        ("k-route", "bell-literal"),
        ("scaling", "literal"),
    ];
    let missing: Vec<_> = required
        .iter()
        .filter(|(i, v)| table.rows.iter().filter(|r| r[id] == *i && r[variant] == *v).count() != 1)
        .collect();
    let exact = Status::ExactMatch.name();
    let within = Status::MatchWithinTol.name();
    let canonical: Vec<_> = table.rows.iter().filter(|r| r[kind] == "canonical").collect();
    let not_ok: Vec<_> = canonical
        .iter()
        .filter(|r| r[status] != exact && r[status] != within)
        .map(|r| format!("{}/{}", r[id], r[variant]))
        .collect();
    let exact_count = canonical.iter().filter(|r| r[status] == exact).count();
    let pass = code == 0 && deterministic && missing.is_empty() && not_ok.is_empty();
    report(
        9,
        pass,
        &format!(
            "exit {code}, {} entries, {exact_count} canonical exact-match, {} canonical numeric within tolerance, deterministic {deterministic}; missing {missing:?}, failing {not_ok:?}",
            table.rows.len(),
            canonical.len() - exact_count
        ),
    );
    assert!(pass);
}

#[test]
fn criterion_10_non_orthogonality() {
    let prec = Precision::DEFAULT;
    let params = Params::set_a();
    let model = MeasureModel::new(params.clone(), prec).unwrap();
    let r = |a, b| Real::from_rat(&rat(a, b), prec);
    let pairs = [(r(1, 10), r(1, 5)), (r(1, 50), r(1, 1))];
    let mut worst = Real::zero(prec);
    let mut values = Vec::new();
    for (s, t) in &pairs {
        let closed = joint_laplace(s, t, &params).unwrap();
        worst = worst.max(closed.rel_diff(&joint_laplace_by_sum(s, t, &model).unwrap()));
        values.push(closed);
    }
    let spread = (&values[0] - &values[1]).abs();
    let pass = worst < prec.epsilon(15) && spread > 1e-6;
    report(
        10,
        pass,
        &format!(
            "closed vs double sum {worst:.3}; st = 1/50 at (1/10, 1/5) -> {:.20}, at (1/50, 1) -> {:.20}, differ by {spread:.6}",
            values[0], values[1]
        ),
    );
    assert!(pass);
}
