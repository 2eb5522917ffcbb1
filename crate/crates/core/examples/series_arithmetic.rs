//! Truncated power series over exact rationals: products, reciprocals,
//! logarithms, fractional powers and composition.
//!
//! ```text
//! cargo run --example series_arithmetic
//! ```

use krawtchouk_appell::numerics::{rat, TSeries};
use krawtchouk_appell::Rat;

fn show(label: &str, s: &TSeries<Rat>) {
    let terms: Vec<String> = s.coeffs().iter().map(ToString::to_string).collect();
    println!("{label:>22}: [{}]", terms.join(", "));
}

fn main() -> krawtchouk_appell::Result<()> {
    let order = 8;
    // 1 + t/2
    let a = TSeries::from_coeffs(order, vec![rat(1, 1), rat(1, 2)]);
    show("a = 1 + t/2", &a);
    show("1/a", &a.reciprocal()?);
    show("log a", &a.log1()?);
    show("a^(-3/2)", &a.fracpow(&rat(-3, 2))?);
    show("exp(log a)", &a.log1()?.exp()?);

    let e = TSeries::<Rat>::exponential(order);
    let u = TSeries::from_coeffs(order, vec![rat(0, 1), rat(1, 1), rat(1, 1)]);
    show("exp(t + t^2)", &e.compose(&u)?);
    Ok(())
}
