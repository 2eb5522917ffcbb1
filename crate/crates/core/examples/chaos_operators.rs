//! Chaos expansions over the `K_n` basis with the scaling and translation
//! operators.
//!
//! ```text
//! cargo run --example chaos_operators
//! ```

use krawtchouk_appell::combinatorics::RhoVariant;
use krawtchouk_appell::measure::Params;
use krawtchouk_appell::numerics::rat;
use krawtchouk_appell::operators::{translation_series_residual, ChaosVector, KBasis};
use krawtchouk_appell::XPoly;

fn main() -> krawtchouk_appell::Result<()> {
    let params = Params::set_b();
    let basis = KBasis::new(params.clone(), 5)?;

    let poly = XPoly::from_coeffs(vec![rat(1, 1), rat(0, 1), rat(-2, 1), rat(1, 3)]);
    let v = basis.poly_to_chaos(&poly)?;
    println!("{poly}  =  Σ φ_n K_n with φ = {}", serde_json::to_string(&v)?);

    let z = rat(2, 1);
    let sub = basis.scale_substitution(&v, &z)?;
    let corrected = basis.scale_expansion(&v, &z, RhoVariant::Corrected)?;
    let literal = basis.scale_expansion(&v, &z, RhoVariant::Literal)?;
    println!("σ_2 by substitution  {}", serde_json::to_string(&sub)?);
    println!("σ_2 by expansion     {} (agrees: {})", serde_json::to_string(&corrected)?, corrected == sub);
    println!("literal ρ            {} (agrees: {})", serde_json::to_string(&literal)?, literal == sub);

    let (y1, y2) = (rat(1, 2), rat(-1, 3));
    let twice = basis.translate(&basis.translate(&v, &y1)?, &y2)?;
    let once = basis.translate(&v, &(y1.clone() + &y2))?;
    println!("τ_y τ_y' = τ_(y+y'): {}", twice == once);

    let res = translation_series_residual(&params, &y1, 12)?;
    println!("τ_y N = e^(yz) N through order 12: {}", res.coeffs().iter().all(XPoly::is_zero));

    let back: ChaosVector = serde_json::from_str(&serde_json::to_string(&v)?)?;
    println!("JSON round trip: {}", back == v);
    Ok(())
}
