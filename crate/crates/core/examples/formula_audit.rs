//! Runs the full formula audit on one parameter set and prints a compact
//! summary; `krawtchouk audit` prints the complete table.
//!
//! ```text
//! cargo run --release --example formula_audit -- C
//! ```

use krawtchouk_appell::audit::{run_audit, AuditConfig, Kind};
use krawtchouk_appell::measure::Params;

fn main() -> krawtchouk_appell::Result<()> {
    let wanted = std::env::args().nth(1).unwrap_or_else(|| "A".into());
    let (name, params) = Params::presets()
        .into_iter()
        .find(|(n, _)| n.eq_ignore_ascii_case(&wanted))
        .unwrap_or_else(|| panic!("unknown parameter set {wanted}"));
    let report = run_audit(&AuditConfig::new(params))?;
    println!("set {name}");
    for e in &report.entries {
        let marker = match e.kind {
            Kind::Canonical => ' ',
            Kind::Literal => '*',
        };
        println!("{marker} {:<17} {:<20} {:<17} {}", e.formula_id, e.variant, e.status.name(), e.residual);
    }
    println!("canonical checks hold: {}", report.canonical_ok());
    Ok(())
}
