//! Builds `K_n` and `P_n` along every route and reports where the routes
//! agree with the generating series.
//!
//! ```text
//! cargo run --example polynomial_routes
//! ```

use krawtchouk_appell::appell::{Families, Family, Route};
use krawtchouk_appell::measure::Params;

fn main() -> krawtchouk_appell::Result<()> {
    let n_max = 6;
    let fam = Families::new(Params::set_a(), n_max + 2);
    for family in [Family::K, Family::P] {
        let reference = fam.build(family, Route::Series, n_max)?;
        println!("{family:?}_n from the generating series:");
        for (n, poly) in reference.members.iter().enumerate().take(4) {
            println!("  n={n}: {poly}");
        }
        for route in Route::ALL.into_iter().filter(|r| r.builds(family) && *r != Route::Series) {
            let other = fam.build(family, route, n_max)?;
            match other.first_difference(&reference) {
                None => println!("  {route:>20}: identical for n <= {n_max}"),
                Some(n) => println!("  {route:>20}: first differs at n = {n}"),
            }
        }
    }
    Ok(())
}
