//! Command-line front end.
//!
//! Results go to `out`, diagnostics to `err`. Exit codes:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success |
//! | 2 | bad arguments, unparsable input, unknown label, unsupported rank |
//! | 3 | configuration failed validation |
//! | 4 | multiplicities violate the proximity inequalities |
//! | 5 | linear program infeasible or no bounding class for the search |

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::classes::{candidate_sets, FamilyTag};
use crate::cone::{verify_certificate, waldschmidt, Certificate};
use crate::config::{validate_config, Multiplicities, SurfaceConfig};
use crate::dp4catalog::{
    catalog, check_bounds_with, check_degenerations_with, compute_row, compute_table, export_json,
    find, reproduction_failures, TableRow,
};
use crate::error::Error;
use crate::lattice::format_class;
use crate::monomial::MonomialIdeal;

const REALIZABILITY_NOTE: &str =
    "configuration checked for necessary lattice conditions only; geometric realizability is not verified";

#[derive(Parser, Debug)]
#[command(name = "waldschmidt", version, about = "Exact Waldschmidt constants of fat points on blowups of the plane")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List the candidate negative classes for r points.
    Candidates {
        #[arg(long)]
        r: usize,
        /// Restrict to one family: B, V, L, Q, C or M8.
        #[arg(long)]
        family: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Compute the Waldschmidt constant of a configuration file.
    Waldschmidt {
        config: PathBuf,
        /// Comma-separated multiplicities; all ones when omitted.
        #[arg(long)]
        m: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Recheck a certificate against a configuration file.
    Verify {
        config: PathBuf,
        certificate: PathBuf,
    },
    /// Degree-4 catalog operations.
    Dp4(Dp4Args),
    /// Monomial ideal operations.
    Monomial(MonomialArgs),
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct Dp4Selector {
    /// Every type with its computed value and certificate status.
    #[arg(long)]
    all: bool,
    /// One type, e.g. "(3,2A1A2,4)".
    #[arg(long = "type", value_name = "LABEL")]
    type_label: Option<String>,
    /// Monotonicity along the degeneration edges.
    #[arg(long)]
    degenerations: bool,
    /// The bounds 5/3 <= value <= 2 and the set of values.
    #[arg(long)]
    bounds: bool,
    /// The catalog data as JSON.
    #[arg(long)]
    export: bool,
}

#[derive(Args, Debug)]
pub struct Dp4Args {
    #[command(flatten)]
    selector: Dp4Selector,
    #[arg(long)]
    json: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum MonomialOp {
    Sat,
    Power,
    SymbolicPower,
    Alpha,
    Estimate,
}

#[derive(Args, Debug)]
pub struct MonomialArgs {
    #[arg(value_enum)]
    op: MonomialOp,
    /// Generators such as "x^2,x*y,y^3", optionally after a "[x,y,z]" header.
    #[arg(long)]
    ideal: String,
    /// Exponent for power and symbolic-power.
    #[arg(long)]
    m: Option<u32>,
    /// Largest symbolic power used by estimate.
    #[arg(long, default_value_t = 6)]
    max_m: u32,
    /// Ring variables when the ideal has no header.
    #[arg(long, default_value = "x,y,z")]
    vars: String,
    #[arg(long)]
    json: bool,
}

/// Exit status for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Configuration(_) => 3,
        Error::ProximityViolation { .. } => 4,
        Error::Infeasible(_) | Error::BoundingFailure(_) => 5,
        _ => 2,
    }
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: exit_code(&e),
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure {
            code: 2,
            message: e.to_string(),
        }
    }
}

type CmdResult = std::result::Result<(), Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Candidates { r, family, json } => cmd_candidates(r, family.as_deref(), json, out),
        Command::Waldschmidt { config, m, json } => cmd_waldschmidt(&config, m.as_deref(), json, out, err),
        Command::Verify { config, certificate } => cmd_verify(&config, &certificate, out),
        Command::Dp4(args) => cmd_dp4(&args, out, err),
        Command::Monomial(args) => cmd_monomial(&args, out),
    };
    match result {
        Ok(()) => 0,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn emit_json(out: &mut dyn Write, v: &Value) -> CmdResult {
    writeln!(out, "{}", serde_json::to_string_pretty(v).expect("json serializes"))?;
    Ok(())
}

fn cmd_candidates(r: usize, family: Option<&str>, json: bool, out: &mut dyn Write) -> CmdResult {
    let tag = match family {
        None => None,
        Some(f) => Some(FamilyTag::parse(f).ok_or_else(|| Failure {
            code: 2,
            message: format!("unknown family {f:?}; expected one of B, V, L, Q, C, M8"),
        })?),
    };
    let families: Vec<_> = candidate_sets(r)?
        .into_iter()
        .filter(|f| tag.is_none_or(|t| t == f.tag))
        .collect();
    if json {
        let fams: Vec<Value> = families
            .iter()
            .map(|f| {
                json!({
                    "family": f.tag.name(),
                    "classes": f.members.iter().map(format_class).collect::<Vec<_>>(),
                })
            })
            .collect();
        return emit_json(out, &json!({ "r": r, "families": fams }));
    }
    for f in &families {
        for c in &f.members {
            writeln!(out, "{}\t{}", f.tag, format_class(c))?;
        }
    }
    Ok(())
}

fn load_config(path: &PathBuf) -> std::result::Result<SurfaceConfig, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure {
        code: 2,
        message: format!("{}: {e}", path.display()),
    })?;
    Ok(SurfaceConfig::from_json(&text)?)
}

fn certificate_lines(cert: &Certificate) -> Vec<String> {
    let terms: Vec<String> = cert
        .decomposition
        .iter()
        .map(|(g, c)| format!("{c}*{}", format_class(g)))
        .collect();
    vec![
        format!("d = {}", cert.d),
        format!("m = {}", cert.m),
        format!("decomposition = {}", terms.join(" + ")),
        format!("nef = {}", format_class(&cert.nef)),
    ]
}

fn cmd_waldschmidt(
    path: &PathBuf,
    m: Option<&str>,
    json: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    let cfg = load_config(path)?;
    let report = validate_config(&cfg);
    for w in &report.warnings {
        writeln!(err, "warning: {w}")?;
    }
    if !report.is_valid() {
        return Err(Error::Configuration(report).into());
    }
    let mult = match m {
        Some(text) => text.parse::<Multiplicities>()?,
        None => Multiplicities::uniform(cfg.r, 1),
    };
    let result = waldschmidt(&cfg, &mult)?;
    let verified = result
        .certificate
        .as_ref()
        .map(|c| verify_certificate(c, &cfg));
    if let Some(false) = verified {
        writeln!(err, "warning: certificate failed verification")?;
    }
    if json {
        return emit_json(
            out,
            &json!({
                "alpha_hat": result.value.to_string(),
                "multiplicities": mult.0,
                "certificate": result.certificate.as_ref().map(Certificate::to_json_value),
                "verified": verified,
                "note": REALIZABILITY_NOTE,
            }),
        );
    }
    writeln!(out, "alpha_hat = {}", result.value)?;
    match (&result.certificate, verified) {
        (Some(cert), Some(ok)) => {
            for line in certificate_lines(cert) {
                writeln!(out, "{line}")?;
            }
            writeln!(out, "certificate {}", if ok { "verified" } else { "REJECTED" })?;
        }
        _ => writeln!(out, "certificate none (all multiplicities zero)")?,
    }
    writeln!(out, "note: {REALIZABILITY_NOTE}")?;
    Ok(())
}

fn cmd_verify(config: &PathBuf, certificate: &PathBuf, out: &mut dyn Write) -> CmdResult {
    let cfg = load_config(config)?;
    let text = std::fs::read_to_string(certificate).map_err(|e| Failure {
        code: 2,
        message: format!("{}: {e}", certificate.display()),
    })?;
    let cert = Certificate::from_json(&text)?;
    let ok = verify_certificate(&cert, &cfg);
    writeln!(out, "certificate {}", if ok { "verified" } else { "REJECTED" })?;
    if ok {
        writeln!(out, "alpha_hat = {}", cert.value())?;
        Ok(())
    } else {
        Err(Failure {
            code: 3,
            message: "certificate does not verify".into(),
        })
    }
}

fn row_json(r: &TableRow) -> Value {
    json!({
        "label": r.label.to_string(),
        "alpha_hat": r.alpha_hat.to_string(),
        "expected": r.expected.to_string(),
        "matches": r.matches(),
        "verified": r.verified,
        "certificate": r.certificate.to_json_value(),
    })
}

fn write_rows(out: &mut dyn Write, rows: &[TableRow]) -> CmdResult {
    writeln!(out, "{:<16} {:<10} {:<9} certificate", "type", "alpha_hat", "expected")?;
    for r in rows {
        writeln!(
            out,
            "{:<16} {:<10} {:<9} {}",
            r.label.to_string(),
            r.alpha_hat.to_string(),
            r.expected.to_string(),
            if r.verified { "verified" } else { "REJECTED" }
        )?;
    }
    Ok(())
}

fn warn_mismatches(err: &mut dyn Write, rows: &[TableRow]) -> CmdResult {
    for line in reproduction_failures(rows) {
        writeln!(err, "warning: {line}")?;
    }
    Ok(())
}

fn cmd_dp4(args: &Dp4Args, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let sel = &args.selector;
    if sel.export {
        return emit_json(out, &export_json());
    }
    if let Some(label) = &sel.type_label {
        let t = find(label)?;
        let row = compute_row(&t)?;
        warn_mismatches(err, std::slice::from_ref(&row))?;
        if args.json {
            return emit_json(out, &row_json(&row));
        }
        write_rows(out, std::slice::from_ref(&row))?;
        for line in certificate_lines(&row.certificate) {
            writeln!(out, "{line}")?;
        }
        return Ok(());
    }
    let table = compute_table()?;
    if sel.all {
        warn_mismatches(err, &table)?;
        if args.json {
            return emit_json(out, &Value::Array(table.iter().map(row_json).collect()));
        }
        return write_rows(out, &table);
    }
    if sel.degenerations {
        let checks = check_degenerations_with(&table)?;
        for c in checks.iter().filter(|c| !c.passes()) {
            writeln!(
                err,
                "warning: {} -> {}: {} > {}{}",
                c.general,
                c.special,
                c.special_value,
                c.general_value,
                if c.flagged { " (flagged edge)" } else { "" }
            )?;
        }
        if args.json {
            let v: Vec<Value> = checks
                .iter()
                .map(|c| {
                    json!({
                        "general": c.general.to_string(),
                        "special": c.special.to_string(),
                        "general_value": c.general_value.to_string(),
                        "special_value": c.special_value.to_string(),
                        "passes": c.passes(),
                        "flagged": c.flagged,
                    })
                })
                .collect();
            return emit_json(out, &Value::Array(v));
        }
        writeln!(out, "{:<16} {:<16} {:<8} {:<8} result", "general", "special", "general", "special")?;
        for c in &checks {
            writeln!(
                out,
                "{:<16} {:<16} {:<8} {:<8} {}{}",
                c.general.to_string(),
                c.special.to_string(),
                c.general_value.to_string(),
                c.special_value.to_string(),
                if c.passes() { "pass" } else { "FAIL" },
                if c.flagged { " (flagged)" } else { "" }
            )?;
        }
        return Ok(());
    }
    // bounds
    let report = check_bounds_with(&table);
    let values: Vec<String> = report.values.iter().map(|v| v.to_string()).collect();
    let outside: Vec<String> = report.outside.iter().map(|l| l.to_string()).collect();
    if args.json {
        return emit_json(
            out,
            &json!({
                "lower": report.lower.to_string(),
                "upper": report.upper.to_string(),
                "values": values,
                "outside": outside,
                "passes": report.passes(),
            }),
        );
    }
    writeln!(out, "lower = {}", report.lower)?;
    writeln!(out, "upper = {}", report.upper)?;
    writeln!(out, "values = {}", values.join(", "))?;
    writeln!(out, "outside = {}", if outside.is_empty() { "none".to_string() } else { outside.join(", ") })?;
    writeln!(out, "types = {}", catalog().len())?;
    Ok(())
}

fn cmd_monomial(args: &MonomialArgs, out: &mut dyn Write) -> CmdResult {
    let ideal = if args.ideal.trim_start().starts_with('[') {
        MonomialIdeal::parse(&args.ideal)?
    } else {
        let vars: Vec<String> = args.vars.split(',').map(|v| v.trim().to_string()).collect();
        MonomialIdeal::parse_with_vars(&args.ideal, &vars)?
    };
    let need_m = || {
        args.m.ok_or_else(|| Failure {
            code: 2,
            message: "--m is required for this operation".into(),
        })
    };
    let result = match args.op {
        MonomialOp::Sat => ideal.saturate_irrelevant().to_string(),
        MonomialOp::Power => ideal.power(need_m()?).to_string(),
        MonomialOp::SymbolicPower => ideal.symbolic_power(need_m()?)?.to_string(),
        MonomialOp::Alpha => ideal.alpha()?.to_string(),
        MonomialOp::Estimate => format!("<= {}", ideal.waldschmidt_estimate(args.max_m)?),
    };
    if args.json {
        let op = args.op.to_possible_value().expect("named op");
        return emit_json(
            out,
            &json!({
                "op": op.get_name(),
                "vars": ideal.vars(),
                "ideal": ideal.to_string(),
                "result": result,
            }),
        );
    }
    writeln!(out, "{result}")?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["waldschmidt"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn candidates_listing() {
        let (code, out, _) = call(&["candidates", "--r", "2"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 4);
        let (code, out, _) = call(&["candidates", "--r", "5", "--family", "Q"]);
        assert_eq!(code, 0);
        assert_eq!(out.trim(), "Q\tQ_12345");
        let (code, _, err) = call(&["candidates", "--r", "9"]);
        assert_eq!(code, 2);
        assert!(err.contains("unsupported rank"));
        assert_eq!(call(&["candidates", "--r", "4", "--family", "Z"]).0, 2);
    }

    #[test]
    fn monomial_commands() {
        let (code, out, _) = call(&["monomial", "symbolic-power", "--ideal", "x^2,x*y,y^3", "--m", "2"]);
        assert_eq!(code, 0);
        assert_eq!(out.trim(), "x^4, x^3*y, x^2*y^2, x*y^4, y^6");
        assert_eq!(call(&["monomial", "alpha", "--ideal", "x,y^2"]).1.trim(), "1");
        assert_eq!(call(&["monomial", "estimate", "--ideal", "x,y^2", "--max-m", "6"]).1.trim(), "<= 1");
        assert_eq!(call(&["monomial", "alpha", "--ideal", "x^q"]).0, 2);
        assert_eq!(call(&["monomial", "power", "--ideal", "x"]).0, 2);
    }

    #[test]
    fn bad_arguments() {
        assert_eq!(call(&["dp4"]).0, 2);
        assert_eq!(call(&["dp4", "--all", "--bounds"]).0, 2);
        assert_eq!(call(&["dp4", "--type", "(9,A1,1)"]).0, 2);
        assert_eq!(call(&["nonsense"]).0, 2);
        assert_eq!(call(&["--help"]).0, 0);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(exit_code(&Error::Infeasible(String::new())), 5);
        assert_eq!(exit_code(&Error::ProximityViolation { slack: vec![] }), 4);
        assert_eq!(exit_code(&Error::Argument(String::new())), 2);
    }
}
