//! `E[Ψ(s, X) Ψ(t, X)]` is not a function of `st` alone, so the `K_n` are
//! not orthogonal under the measure.
//!
//! ```text
//! cargo run --example non_orthogonality
//! ```

use krawtchouk_appell::measure::{joint_laplace, joint_laplace_by_sum, MeasureModel, Params};
use krawtchouk_appell::numerics::rat;
use krawtchouk_appell::{Precision, Real};

fn main() -> krawtchouk_appell::Result<()> {
    let prec = Precision::DEFAULT;
    let params = Params::set_a();
    let model = MeasureModel::new(params.clone(), prec)?;
    let r = |a, b| Real::from_rat(&rat(a, b), prec);
    for (s, t) in [(r(1, 10), r(1, 5)), (r(1, 50), r(1, 1)), (r(1, 20), r(2, 5))] {
        let closed = joint_laplace(&s, &t, &params)?;
        let sum = joint_laplace_by_sum(&s, &t, &model)?;
        println!("s = {:.3}, t = {:.3}, st = {:.3}: {:.25} (double sum {:.25})", s, t, &s * &t, closed, sum);
    }
    Ok(())
}
