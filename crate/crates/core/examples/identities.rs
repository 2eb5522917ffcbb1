//! Inversion and addition identities between `K_n`, `P_n`, the moments and
//! the `[y]_m` brackets, evaluated exactly in `Q[x, y]`.
//!
//! ```text
//! cargo run --example identities
//! ```

use krawtchouk_appell::appell::{
    addition_p3, addition_p4, appell_defect, monomial_from_k, mu_coeffs, Families, P3Reading,
};
use krawtchouk_appell::measure::Params;

fn main() -> krawtchouk_appell::Result<()> {
    let n_max = 6;
    let params = Params::set_c();
    let fam = Families::new(params.clone(), n_max + 2);
    let k = fam.k_series(n_max)?;
    let p = fam.p_series(n_max)?;
    let mu = mu_coeffs(n_max, &params);

    for n in 0..=n_max {
        println!(
            "n={n}: x^n from K: {:>5}  P' = nP: {:>5}  K' = nK: {:>5}  add(K(y)): {:>5}  add(K(x)): {:>5}  brackets: {:>5}",
            monomial_from_k(n, &k, &params).coeffs().iter().enumerate().all(|(i, c)| *c == u32::from(i == n)),
            appell_defect(&p, n).is_zero(),
            appell_defect(&k, n).is_zero(),
            addition_p3(n, &k, &mu, P3Reading::WithY).is_zero(),
            addition_p3(n, &k, &mu, P3Reading::Printed).is_zero(),
            addition_p4(n, &k, params.q()).is_zero(),
        );
    }
    Ok(())
}
