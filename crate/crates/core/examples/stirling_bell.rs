//! Stirling numbers of both kinds, partial Bell polynomials and the
//! Faà di Bruno formula on a small example.
//!
//! ```text
//! cargo run --example stirling_bell
//! ```

use krawtchouk_appell::combinatorics::{bell_partial, compositions, faa_derivative, stirling1, stirling2};
use krawtchouk_appell::numerics::rat;
use krawtchouk_appell::Rat;

fn main() -> krawtchouk_appell::Result<()> {
    println!("s(n, k) and S(n, k) for n <= 6");
    for n in 0..=6 {
        let first: Vec<String> = (0..=n).map(|k| stirling1(n, k).to_string()).collect();
        let second: Vec<String> = (0..=n).map(|k| stirling2(n, k).to_string()).collect();
        println!("  n={n}: [{}]  [{}]", first.join(" "), second.join(" "));
    }

    // B_{n,k}(1, 1, ...) = S(n, k)
    let ones = vec![rat(1, 1); 6];
    let b: Vec<String> = (1..=6).map(|k| bell_partial(6, k, &ones).map(|v| v.to_string())).collect::<Result<_, _>>()?;
    println!("B(6, k)(1, 1, ...) = [{}]", b.join(" "));

    // d^4/dt^4 exp(sin t) at 0: outer derivatives of exp at sin 0 = 0 are all 1,
    // inner derivatives of sin at 0 cycle through 0, 1, 0, -1
    let outer = vec![rat(1, 1); 5];
    let inner: Vec<Rat> = [0, 1, 0, -1, 0].iter().map(|&v| rat(v, 1)).collect();
    println!("d^4/dt^4 exp(sin t) at 0 = {}", faa_derivative(&outer, &inner, 4)?);

    println!("compositions of 5 into 3 parts:");
    for c in compositions(5, 3) {
        println!("  {:?}", c.parts());
    }
    Ok(())
}
