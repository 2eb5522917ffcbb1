//! As `λ → 0` with `β = 1` the degenerate family approaches the classical
//! Krawtchouk polynomials, with an error proportional to `λ`.
//!
//! ```text
//! cargo run --example classical_limit
//! ```

use krawtchouk_appell::appell::{classical_k, classical_limit_gap};
use krawtchouk_appell::numerics::rat;
use krawtchouk_appell::{Precision, Real};

fn main() -> krawtchouk_appell::Result<()> {
    let (p, r) = (rat(3, 5), rat(3, 1));
    for (n, poly) in classical_k(3, &p, &r)?.members.iter().enumerate() {
        println!("classical K_{n} = {poly}");
    }
    for lambda in [rat(-1, 10_000), rat(-1, 100_000), rat(-1, 1_000_000)] {
        let gap = classical_limit_gap(6, &lambda, &p, &r)?;
        println!("λ = {lambda:>10}: largest relative coefficient gap {:.4}", Real::from_rat(&gap, Precision::DEFAULT));
    }
    Ok(())
}
