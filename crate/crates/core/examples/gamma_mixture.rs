//! The measure as a Gamma mixture of classical Pascal laws: quadrature
//! against the mixing density, and a seeded sampler checked against the
//! exact masses.
//!
//! ```text
//! cargo run --release --example gamma_mixture -- 200000 7
//! ```

use krawtchouk_appell::measure::{deg_exp, mixture_laplace, mixture_pmf, sample, MeasureModel, Params, SampleSummary};
use krawtchouk_appell::numerics::rat;
use krawtchouk_appell::{Precision, Real};

fn main() -> krawtchouk_appell::Result<()> {
    let mut args = std::env::args().skip(1);
    let count: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(100_000);
    let seed: u64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(42);

    let params = Params::set_a();
    let prec = Precision::DEFAULT;
    let model = MeasureModel::new(params.clone(), prec)?;

    for s in [rat(1, 2), rat(1, 1), rat(2, 1)] {
        let quad = mixture_laplace(&Real::from_rat(&s, prec), &params, prec)?;
        let closed = deg_exp(&Real::from_rat(&-s.clone(), prec), &params)?;
        println!("s = {s}: quadrature {:.30}  closed form {:.30}", quad, closed);
    }
    for n in 0..4 {
        let m = mixture_pmf(n, &params, prec)?;
        println!("mass {n}: mixture {:.30}  series {:.30}", m, model.canonical_pmf(n));
    }

    let draws = sample(&params, count, seed)?;
    let summary = SampleSummary::new(&draws, &model);
    println!("{count} draws, seed {seed}");
    println!("  mean {:.5} (expected {}), z = {:.3}", summary.mean, params.mean(), summary.mean_z_score());
    println!("  total variation {:.5}", summary.total_variation);
    Ok(())
}
