//! Command-line front end: configuration, the five subcommands and their
//! CSV/JSON tables.
//!
//! Exit codes: 0 on success, 1 when a canonical check fails (or a
//! computation errors out), 2 for unusable configuration or arguments.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::appell::{Families, Family, Route};
use crate::audit::{run_audit, verify, AuditConfig, Property, Variant};
use crate::error::{Error, Result};
use crate::measure::{moments_exact, sample, MeasureModel, Params, SampleSummary};
use crate::numerics::{parse_rat, Precision, Rat};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    #[default]
    Json,
}

/// Run configuration. On disk it is a JSON object with exactly these keys;
/// rationals are strings such as `"-1/2"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    pub lambda: String,
    pub beta: String,
    pub p: String,
    pub r: String,
    pub n_max: usize,
    pub series_order: usize,
    pub precision_digits: u32,
    pub seed: u64,
    pub output_format: Format,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            lambda: "-1/2".into(),
            beta: "2".into(),
            p: "3/5".into(),
            r: "3".into(),
            n_max: 10,
            series_order: 16,
            precision_digits: 60,
            seed: 42,
            output_format: Format::Json,
        }
    }
}

impl Config {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }

    /// Checks every invariant and returns the parsed parameters.
    pub fn validate(&self) -> Result<Params> {
        if self.series_order < self.n_max + 2 {
            return Err(Error::Config(format!(
                "series_order {} must be at least n_max + 2 = {}",
                self.series_order,
                self.n_max + 2
            )));
        }
        if self.precision_digits < 40 {
            return Err(Error::Config(format!("precision_digits {} is below 40", self.precision_digits)));
        }
        let field = |name: &str, s: &str| parse_rat(s).map_err(|e| Error::Config(format!("{name}: {e}")));
        Params::new(
            field("lambda", &self.lambda)?,
            field("beta", &self.beta)?,
            field("p", &self.p)?,
            field("r", &self.r)?,
        )
    }

    pub fn precision(&self) -> Precision {
        Precision::digits(self.precision_digits)
    }

    pub fn audit_config(&self) -> Result<AuditConfig> {
        Ok(AuditConfig {
            params: self.validate()?,
            n_max: self.n_max,
            series_order: self.series_order,
            precision: self.precision(),
        })
    }
}

/// One table cell.
#[derive(Clone, Debug, PartialEq)]
pub enum Cell {
    Int(u64),
    Text(String),
    Exact(Rat),
    /// Coefficient list, lowest degree first.
    List(Vec<Rat>),
    Decimal(String),
    Flag(bool),
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Text(s) | Cell::Decimal(s) => s.clone(),
            Cell::Exact(r) => r.to_string(),
            Cell::List(v) => format_list(v),
            Cell::Flag(b) => b.to_string(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Int(v) => json!(v),
            Cell::Text(s) | Cell::Decimal(s) => json!(s),
            Cell::Exact(r) => json!(r.to_string()),
            Cell::List(v) => json!(v.iter().map(ToString::to_string).collect::<Vec<_>>()),
            Cell::Flag(b) => json!(b),
        }
    }
}

/// `[c0 c1 ...]`, the CSV spelling of a coefficient list.
pub fn format_list(v: &[Rat]) -> String {
    let inner: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("[{}]", inner.join(" "))
}

pub fn parse_list(s: &str) -> Result<Vec<Rat>> {
    let inner = s
        .trim()
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| Error::Config(format!("not a coefficient list: {s}")))?;
    inner.split_whitespace().map(parse_rat).collect()
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
    /// Key/value pairs printed after the rows.
    pub summary: Vec<(String, Cell)>,
}

impl Table {
    fn new(columns: &[&str]) -> Self {
        Table { columns: columns.iter().map(|c| c.to_string()).collect(), ..Default::default() }
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Json => {
                let rows: Vec<Value> =
                    self.rows.iter().map(|r| Value::Array(r.iter().map(Cell::json).collect())).collect();
                let mut doc = json!({ "columns": self.columns, "rows": rows });
                if !self.summary.is_empty() {
                    let summary: serde_json::Map<String, Value> =
                        self.summary.iter().map(|(k, v)| (k.clone(), v.json())).collect();
                    doc["summary"] = Value::Object(summary);
                }
                Ok(serde_json::to_string_pretty(&doc)? + "\n")
            }
            Format::Csv => {
                let mut out = write_csv(&self.columns, self.rows.iter().map(|r| r.iter().map(Cell::csv).collect()))?;
                if !self.summary.is_empty() {
                    let header = vec!["statistic".to_string(), "value".to_string()];
                    let rows = self.summary.iter().map(|(k, v)| vec![k.clone(), v.csv()]);
                    out.push('\n');
                    out.push_str(&write_csv(&header, rows)?);
                }
                Ok(out)
            }
        }
    }
}

fn write_csv(header: &[String], rows: impl Iterator<Item = Vec<String>>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for row in rows {
        w.write_record(&row)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

/// A table read back from either output format, every cell as text and
/// coefficient lists in their `[c0 c1 ...]` spelling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedTable {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl ParsedTable {
    pub fn column(&self, name: &str) -> Option<usize> {
        self.columns.iter().position(|c| c == name)
    }
}

/// Reads the main table of a rendered output; any summary is ignored.
pub fn parse_table(text: &str, format: Format) -> Result<ParsedTable> {
    match format {
        Format::Csv => {
            let main = text.split("\n\n").next().unwrap_or_default();
            let mut rdr = csv::Reader::from_reader(main.as_bytes());
            let columns = rdr.headers()?.iter().map(String::from).collect();
            let rows = rdr
                .records()
                .map(|r| r.map(|rec| rec.iter().map(String::from).collect()))
                .collect::<std::result::Result<_, _>>()?;
            Ok(ParsedTable { columns, rows })
        }
        Format::Json => {
            let doc: Value = serde_json::from_str(text)?;
            let bad = || Error::Config("not a table document".into());
            let columns = doc["columns"]
                .as_array()
                .ok_or_else(bad)?
                .iter()
                .map(|c| c.as_str().map(String::from).ok_or_else(bad))
                .collect::<Result<_>>()?;
            let rows = doc["rows"]
                .as_array()
                .ok_or_else(bad)?
                .iter()
                .map(|r| Ok(r.as_array().ok_or_else(bad)?.iter().map(json_text).collect()))
                .collect::<Result<_>>()?;
            Ok(ParsedTable { columns, rows })
        }
    }
}

fn json_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => {
            let inner: Vec<String> = items.iter().map(json_text).collect();
            format!("[{}]", inner.join(" "))
        }
        other => other.to_string(),
    }
}

pub fn cmd_polys(cfg: &Config, family: Family, route: Route) -> Result<Table> {
    let params = cfg.validate()?;
    if !route.builds(family) {
        return Err(Error::Config(format!("route {route} does not build the {family:?} family")));
    }
    let fam = Families::new(params, cfg.series_order).build(family, route, cfg.n_max)?;
    let mut t = Table::new(&["n", "coefficients"]);
    for (n, poly) in fam.members.iter().enumerate() {
        t.rows.push(vec![Cell::Int(n as u64), Cell::List(poly.coeffs().to_vec())]);
    }
    Ok(t)
}

pub fn cmd_moments(cfg: &Config, m_max: usize) -> Result<Table> {
    let params = cfg.validate()?;
    let model = MeasureModel::new(params.clone(), cfg.precision())?;
    let digits = 25;
    let mut t = Table::new(&["m", "canonical", "literal", "oracle", "gap"]);
    for (m, exact) in moments_exact(m_max, &params).into_iter().enumerate() {
        let literal = if m == 0 { model.literal_mass()? } else { model.literal_moment(m)? };
        let oracle = model.truncated_moment(m);
        let gap = (&oracle - &crate::numerics::Real::from_rat(&exact, cfg.precision())).abs();
        t.rows.push(vec![
            Cell::Int(m as u64),
            Cell::Exact(exact),
            Cell::Decimal(literal.to_string_digits(digits)),
            Cell::Decimal(oracle.to_string_digits(digits)),
            Cell::Decimal(gap.to_string_digits(6)),
        ]);
    }
    Ok(t)
}

pub fn cmd_sample(cfg: &Config, count: usize) -> Result<Table> {
    if count == 0 {
        return Err(Error::Config("count must be at least 1".into()));
    }
    let params = cfg.validate()?;
    let model = MeasureModel::new(params.clone(), cfg.precision())?;
    let draws = sample(&params, count, cfg.seed)?;
    let s = SampleSummary::new(&draws, &model);
    let top = draws.iter().copied().max().unwrap_or(0).min(model.cutoff() as u64) as usize;
    let mut t = Table::new(&["n", "frequency", "pmf", "standardized"]);
    for n in 0..=top {
        let hits = draws.iter().filter(|&&x| x as usize == n).count();
        t.rows.push(vec![
            Cell::Int(n as u64),
            Cell::Exact(Rat::from((hits as u64, count as u64))),
            Cell::Decimal(model.canonical_pmf(n).to_string_digits(20)),
            Cell::Decimal(format!("{:.6}", s.standardized[n])),
        ]);
    }
    let dec = |x: f64| Cell::Decimal(format!("{x:.9e}"));
    t.summary = vec![
        ("count".into(), Cell::Int(count as u64)),
        ("seed".into(), Cell::Int(cfg.seed)),
        ("mean".into(), dec(s.mean)),
        ("expected_mean".into(), Cell::Exact(params.mean())),
        ("standard_error".into(), dec(s.standard_error)),
        ("mean_z_score".into(), dec(s.mean_z_score())),
        ("total_variation".into(), dec(s.total_variation)),
        ("beyond_cutoff".into(), dec(s.beyond_cutoff)),
    ];
    Ok(t)
}

/// The audit table and whether every canonical entry held.
pub fn cmd_audit(cfg: &Config) -> Result<(Table, Vec<String>)> {
    let report = run_audit(&cfg.audit_config()?)?;
    let mut t = Table::new(&["formula_id", "anchor", "variant", "kind", "status", "residual", "notes"]);
    for e in &report.entries {
        t.rows.push(vec![
            Cell::Text(e.formula_id.clone()),
            Cell::Text(e.anchor.clone()),
            Cell::Text(e.variant.clone()),
            Cell::Text(e.kind.name().into()),
            Cell::Text(e.status.name().into()),
            Cell::Text(e.residual.clone()),
            Cell::Text(e.notes.clone()),
        ]);
    }
    t.summary = vec![("canonical_ok".into(), Cell::Flag(report.canonical_ok()))];
    let failures = report
        .failures()
        .map(|e| format!("canonical check failed: {} [{}] residual {}", e.formula_id, e.variant, e.residual))
        .collect();
    Ok((t, failures))
}

pub fn cmd_verify(cfg: &Config, property: Property, variant: Variant) -> Result<(Table, Vec<String>)> {
    let checks = verify(property, variant, &cfg.audit_config()?)?;
    let name = property.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
    let mut t = Table::new(&["property", "check", "passed", "residual"]);
    let mut failures = Vec::new();
    for c in checks {
        if !c.passed {
            failures.push(format!("{name}: {} failed with residual {}", c.check, c.residual));
        }
        t.rows.push(vec![Cell::Text(name.clone()), Cell::Text(c.check), Cell::Flag(c.passed), Cell::Text(c.residual)]);
    }
    Ok((t, failures))
}

#[derive(Parser, Debug)]
#[command(name = "krawtchouk", version, about = "Degenerate Pascal measures and Krawtchouk-Appell polynomials")]
struct Cli {
    /// JSON configuration file; flags override its values.
    #[arg(long, global = true)]
    params: Option<PathBuf>,
    #[arg(long, global = true)]
    n_max: Option<usize>,
    /// Series truncation order.
    #[arg(long, global = true)]
    order: Option<usize>,
    /// Working precision in decimal digits.
    #[arg(long, global = true)]
    digits: Option<u32>,
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Reading of formulas that ship in two versions.
    #[arg(long, global = true, value_enum, default_value_t)]
    variant: Variant,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Coefficient rows of K_n or P_n for n <= n_max.
    Polys {
        #[arg(long, value_enum, default_value = "k")]
        family: Family,
        #[arg(long, default_value = "series", value_parser = parse_route)]
        route: Route,
    },
    /// Exact, literal and truncated-sum moments.
    Moments {
        #[arg(long, default_value_t = 8)]
        m_max: usize,
    },
    /// Seeded draws summarized against the canonical masses.
    Sample {
        #[arg(long, default_value_t = 100_000)]
        count: usize,
    },
    /// Every literal-vs-canonical comparison.
    Audit,
    /// Checks a single property.
    Verify {
        #[arg(long, value_enum)]
        property: Property,
    },
}

fn parse_route(s: &str) -> std::result::Result<Route, String> {
    Route::parse(s).ok_or_else(|| {
        let names: Vec<&str> = Route::ALL.iter().map(|r| r.name()).collect();
        format!("unknown route {s}; expected one of {}", names.join(", "))
    })
}

fn load_config(cli: &Cli) -> Result<Config> {
    let mut cfg = match &cli.params {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
            Config::from_json(&text)?
        }
        None => Config::default(),
    };
    if let Some(v) = cli.n_max {
        cfg.n_max = v;
    }
    if let Some(v) = cli.order {
        cfg.series_order = v;
    }
    if let Some(v) = cli.digits {
        cfg.precision_digits = v;
    }
    if let Some(v) = cli.seed {
        cfg.seed = v;
    }
    if let Some(v) = cli.format {
        cfg.output_format = v;
    }
    cfg.validate()?;
    Ok(cfg)
}

fn is_config_error(e: &Error) -> bool {
    matches!(e, Error::Config(_) | Error::InvalidParams(_))
}

/// Parses `args` (program name first), runs the subcommand and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    let cfg = match load_config(&cli) {
        Ok(cfg) => cfg,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 2;
        }
    };
    let result = match cli.command {
        Command::Polys { family, route } => cmd_polys(&cfg, family, route).map(|t| (t, Vec::new())),
        Command::Moments { m_max } => cmd_moments(&cfg, m_max).map(|t| (t, Vec::new())),
        Command::Sample { count } => cmd_sample(&cfg, count).map(|t| (t, Vec::new())),
        Command::Audit => cmd_audit(&cfg),
        Command::Verify { property } => cmd_verify(&cfg, property, cli.variant),
    };
    let (table, failures) = match result {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return if is_config_error(&e) { 2 } else { 1 };
        }
    };
    match table.render(cfg.output_format) {
        Ok(text) => {
            if out.write_all(text.as_bytes()).is_err() {
                return 1;
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 1;
        }
    }
    for f in &failures {
        let _ = writeln!(err, "{f}");
    }
    i32::from(!failures.is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::rat;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let mut full = vec!["krawtchouk"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn default_config_matches_schema() {
        let text = r#"{"lambda":"-1/2","beta":"2","p":"3/5","r":"3","n_max":10,"series_order":16,"precision_digits":60,"seed":42,"output_format":"json"}"#;
        assert_eq!(Config::from_json(text).unwrap(), Config::default());
        assert_eq!(Config::default().validate().unwrap(), Params::set_a());
    }

    #[test]
    fn config_validation() {
        let mut cfg = Config { n_max: 15, ..Config::default() };
        assert!(cfg.validate().is_err());
        cfg.n_max = 14;
        assert!(cfg.validate().is_ok());
        cfg.precision_digits = 39;
        assert!(cfg.validate().is_err());
        let cfg = Config { lambda: "1/2".into(), ..Config::default() };
        assert!(cfg.validate().is_err());
        assert!(Config::from_json(r#"{"lambda":"-1/2"}"#).is_err());
    }

    #[test]
    fn polys_n_max_zero_csv() {
        let (code, out, _) = run_capture(&["--n-max", "0", "--format", "csv", "polys"]);
        assert_eq!(code, 0);
        assert_eq!(out, "n,coefficients\n0,[1]\n");
    }

    #[test]
    fn polys_first_rows() {
        let (code, out, _) = run_capture(&["--n-max", "1", "--format", "csv", "polys"]);
        assert_eq!(code, 0);
        assert_eq!(out, "n,coefficients\n0,[1]\n1,[-12/5 3/5]\n");
    }

    #[test]
    fn epsilon_route_is_byte_identical() {
        let a = run_capture(&["--n-max", "6", "--order", "8", "polys", "--route", "series"]);
        let b = run_capture(&["--n-max", "6", "--order", "8", "polys", "--route", "epsilon"]);
        assert_eq!(a, b);
    }

    #[test]
    fn exit_code_two_on_bad_config() {
        assert_eq!(run_capture(&["--digits", "30", "polys"]).0, 2);
        assert_eq!(run_capture(&["--n-max", "20", "polys"]).0, 2);
        assert_eq!(run_capture(&["polys", "--family", "p", "--route", "epsilon"]).0, 2);
        assert_eq!(run_capture(&["polys", "--route", "nonsense"]).0, 2);
        assert_eq!(run_capture(&["--params", "/nonexistent/config.json", "polys"]).0, 2);
        assert_eq!(run_capture(&["sample", "--count", "0"]).0, 2);
    }

    #[test]
    fn table_roundtrip_both_formats() {
        let cfg = Config { n_max: 5, series_order: 7, ..Config::default() };
        let t = cmd_polys(&cfg, Family::P, Route::Series).unwrap();
        let csv = parse_table(&t.render(Format::Csv).unwrap(), Format::Csv).unwrap();
        let js = parse_table(&t.render(Format::Json).unwrap(), Format::Json).unwrap();
        assert_eq!(csv, js);
        for (row, cells) in csv.rows.iter().zip(&t.rows) {
            let Cell::List(want) = &cells[1] else { panic!() };
            assert_eq!(&parse_list(&row[1]).unwrap(), want);
        }
    }

    #[test]
    fn moments_first_rows() {
        let cfg = Config { n_max: 2, series_order: 4, precision_digits: 40, ..Config::default() };
        let t = cmd_moments(&cfg, 2).unwrap();
        assert_eq!(t.rows[0][1], Cell::Exact(rat(1, 1)));
        assert_eq!(t.rows[1][1], Cell::Exact(rat(4, 1)));
    }

    #[test]
    fn list_parsing() {
        assert_eq!(parse_list("[1 -3/5 0]").unwrap(), vec![rat(1, 1), rat(-3, 5), rat(0, 1)]);
        assert_eq!(parse_list("[]").unwrap(), Vec::<Rat>::new());
        assert!(parse_list("1 2").is_err());
    }
}
