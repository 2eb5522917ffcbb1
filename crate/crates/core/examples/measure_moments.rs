//! Masses and moments of the degenerate Pascal measure for the three preset
//! parameter sets, next to the literal closed forms.
//!
//! ```text
//! cargo run --example measure_moments
//! ```

use krawtchouk_appell::measure::{moments_exact, MeasureModel, Params};
use krawtchouk_appell::{Precision, Real};

fn main() -> krawtchouk_appell::Result<()> {
    let prec = Precision::DEFAULT;
    for (name, params) in Params::presets() {
        let model = MeasureModel::new(params.clone(), prec)?;
        println!("set {name}: {params}");
        println!("  cutoff {}, tail bound {:.3}", model.cutoff(), model.tail_bound());
        println!("  total mass        {:.40}", model.total_mass());
        println!("  literal mass      {:.40}", model.literal_mass()?);
        for n in 0..5 {
            println!("  pmf({n}) = {:.30}   literal {:.30}", model.canonical_pmf(n), model.literal_pmf(n));
        }
        for (m, exact) in moments_exact(4, &params).iter().enumerate() {
            let oracle = model.truncated_moment(m);
            let gap = oracle.rel_diff(&Real::from_rat(exact, prec));
            println!("  M({m}) = {exact}  (truncated sum agrees to {:.2})", gap);
        }
    }
    Ok(())
}
