//! Command-line front end.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::catalog::{register_catalog, run_checks, CheckReport, ReportFormat, SamplePlan, Verdict};
use crate::error::Error;
use crate::numerics::{ComplexScalar, EvalResult, Tolerance};
use crate::transform::{duality_line, duality_value, Representation, TransformPair};
use crate::zeta_kernel::{FunctionId, FunctionParams, Kernel};

pub const EXIT_OK: i32 = 0;
pub const EXIT_IDENTITY: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Debug, Parser)]
#[command(name = "fdbe-zeta", version, about = "Extended FD/BE and zeta-family evaluator with an identity checker")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Global {
    /// Relative residual tolerance
    #[arg(long, global = true, default_value_t = 1e-6)]
    tol_rel: f64,
    /// Absolute residual tolerance
    #[arg(long, global = true, default_value_t = 1e-9)]
    tol_abs: f64,
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
    /// Random samples per identity and form, on top of the grid
    #[arg(long, global = true, default_value_t = 10)]
    samples: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the report here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Md,
}

impl From<Format> for ReportFormat {
    fn from(f: Format) -> ReportFormat {
        match f {
            Format::Json => ReportFormat::Json,
            Format::Csv => ReportFormat::Csv,
            Format::Md => ReportFormat::Md,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate one function
    Eval {
        function: String,
        #[command(flatten)]
        p: ParamFlags,
    },
    /// Check identities from the catalog
    Check {
        ids: Vec<String>,
        #[arg(long, conflicts_with = "ids")]
        all: bool,
    },
    /// List the identity catalog
    List,
    /// Compare both sides of a Fourier duality formula
    Fourier {
        representation: String,
        #[arg(long, allow_hyphen_values = true)]
        sigma: f64,
        #[arg(long, allow_hyphen_values = true)]
        omega: f64,
        #[command(flatten)]
        p: ParamFlags,
    },
}

#[derive(Debug, Args)]
struct ParamFlags {
    /// Order, `RE` or `RE,IM`
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    s: Option<ComplexScalar>,
    /// eFD/eBE shift
    #[arg(long, allow_hyphen_values = true)]
    x: Option<f64>,
    /// FD/BE argument
    #[arg(long, allow_hyphen_values = true)]
    mu: Option<f64>,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    nu: Option<ComplexScalar>,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    z: Option<ComplexScalar>,
}

fn parse_complex(text: &str) -> Result<ComplexScalar, String> {
    let parse = |t: &str| {
        t.trim()
            .parse::<f64>()
            .map_err(|e| format!("bad number {t:?}: {e}"))
    };
    match text.split_once(',') {
        Some((a, b)) => Ok(ComplexScalar::new(parse(a)?, parse(b)?)),
        None => Ok(ComplexScalar::new(parse(text)?, 0.0)),
    }
}

struct Usage(String);

enum Failure {
    Usage(String),
    Domain(Error),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<Usage> for Failure {
    fn from(u: Usage) -> Self {
        Failure::Usage(u.0)
    }
}

/// Runs the CLI on `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    match dispatch(&cli, out, err) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Domain(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_DOMAIN
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    let g = &cli.global;
    if !(g.tol_rel >= 0.0 && g.tol_abs >= 0.0) {
        return Err(Usage("tolerances must be non-negative".into()).into());
    }
    let tol = Tolerance::new(g.tol_rel, g.tol_abs);
    match &cli.command {
        Command::Eval { function, p } => cmd_eval(function, p, out),
        Command::Check { ids, all } => cmd_check(ids, *all, g, &tol, out, err),
        Command::List => cmd_list(out),
        Command::Fourier {
            representation,
            sigma,
            omega,
            p,
        } => cmd_fourier(representation, *sigma, *omega, p, &tol, out),
    }
}

fn function_params(f: FunctionId, s: ComplexScalar, p: &ParamFlags) -> Result<FunctionParams, Usage> {
    let bose_like = matches!(f, FunctionId::FermiDirac | FunctionId::BoseEinstein);
    if bose_like && p.x.is_some() {
        return Err(Usage(format!("{} takes --mu, not --x", f.name())));
    }
    if !bose_like && p.mu.is_some() {
        return Err(Usage(format!("{} takes --x, not --mu", f.name())));
    }
    let mut fp = FunctionParams::new(s);
    if let Some(x) = p.x {
        fp = fp.with_x(x);
    }
    if let Some(mu) = p.mu {
        fp = fp.with_mu(mu);
    }
    if let Some(nu) = p.nu {
        fp = fp.with_nu(nu);
    }
    if let Some(z) = p.z {
        fp = fp.with_z(z);
    }
    Ok(fp)
}

fn complex_text(v: ComplexScalar) -> String {
    let sign = if v.im.is_sign_negative() { '-' } else { '+' };
    format!("{:.12} {} {:.12}i", v.re, sign, v.im.abs())
}

fn print_result(out: &mut dyn Write, r: &EvalResult) -> std::io::Result<()> {
    writeln!(out, "value   = {}", complex_text(r.value))?;
    writeln!(out, "abs_err = {:.3e}", r.abs_err)?;
    writeln!(out, "method  = {}", r.method.as_str())?;
    writeln!(out, "flags   = {}", r.flags.names().join(","))
}

fn cmd_eval(function: &str, p: &ParamFlags, out: &mut dyn Write) -> Result<i32, Failure> {
    let f = FunctionId::from_name(function).ok_or_else(|| {
        let names: Vec<_> = FunctionId::ALL.iter().map(|f| f.name()).collect();
        Usage(format!("unknown function {function:?}; expected one of {}", names.join(", ")))
    })?;
    let s = p.s.ok_or_else(|| Usage("--s is required".into()))?;
    let fp = function_params(f, s, p)?;
    let r = Kernel::default().evaluate(f, &fp)?;
    print_result(out, &r)?;
    Ok(EXIT_OK)
}

fn cmd_check(
    ids: &[String],
    all: bool,
    g: &Global,
    tol: &Tolerance,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, Failure> {
    if ids.is_empty() && !all {
        return Err(Usage("give identity ids or --all".into()).into());
    }
    let catalog = register_catalog();
    for id in ids {
        if crate::catalog::find(&catalog, id).is_none() {
            return Err(Usage(format!("unknown identity {id:?}")).into());
        }
    }
    let plan = SamplePlan {
        seed: g.seed,
        random_samples: g.samples,
    };
    let report = run_checks(&catalog, ids, &plan, tol)?;
    let text = report.emit(g.format.into());
    match &g.out {
        Some(path) => {
            std::fs::write(path, text)?;
            write!(out, "{}", summary(&report))?;
        }
        None => {
            write!(out, "{text}")?;
            write!(err, "{}", summary(&report))?;
        }
    }
    let ok = report.identities.iter().all(|r| r.verdict == Verdict::Pass);
    Ok(if ok { EXIT_OK } else { EXIT_IDENTITY })
}

fn summary(report: &CheckReport) -> String {
    let mut s = String::new();
    let mut passed = 0;
    for r in &report.identities {
        if r.verdict == Verdict::Pass {
            passed += 1;
        }
        let erratum = match r.erratum {
            Some(e) => format!(
                "  printed {} / derived {}",
                if e.printed_passes { "PASS" } else { "FAIL" },
                if e.derived_passes { "PASS" } else { "FAIL" }
            ),
            None => String::new(),
        };
        let line = format!("{:<4}{:<11}{:<14}{}", r.id, r.equation, r.verdict.as_str(), erratum);
        s.push_str(line.trim_end());
        s.push('\n');
    }
    s.push_str(&format!("{passed}/{} identities pass\n", report.identities.len()));
    s
}

fn cmd_list(out: &mut dyn Write) -> Result<i32, Failure> {
    let mut catalog = register_catalog();
    catalog.sort_by_key(|s| s.id);
    writeln!(out, "{:<4}{:<11}{:<9}domain", "id", "equation", "erratum")?;
    for spec in &catalog {
        let mark = if spec.erratum.is_some() { "yes" } else { "-" };
        writeln!(out, "{:<4}{:<11}{:<9}{}", spec.id, spec.equation, mark, spec.domain_text)?;
    }
    Ok(EXIT_OK)
}

fn cmd_fourier(
    name: &str,
    sigma: f64,
    omega: f64,
    p: &ParamFlags,
    tol: &Tolerance,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let rep = Representation::from_name(name).ok_or_else(|| {
        let names: Vec<_> = Representation::ALL.iter().map(|r| r.name()).collect();
        Usage(format!("unknown representation {name:?}; expected one of {}", names.join(", ")))
    })?;
    if p.s.is_some() {
        return Err(Usage("fourier takes --sigma, not --s".into()).into());
    }
    let fp = function_params(rep.function(), ComplexScalar::new(sigma, 0.0), p)?;
    let pair = TransformPair::new(rep, fp);
    let closed = duality_value(&pair, omega)?;
    let line = duality_line(&pair, omega, &Kernel::default(), &Tolerance::line_default())?;
    let abs = (closed.value - line.value).norm();
    let rel = abs / closed.value.norm().max(1.0);
    writeln!(out, "closed_form   = {}", complex_text(closed.value))?;
    writeln!(out, "line_integral = {}", complex_text(line.value))?;
    writeln!(out, "abs_resid     = {abs:.3e}")?;
    writeln!(out, "rel_resid     = {rel:.3e}")?;
    let ok = line.converged() && crate::catalog::passes(abs, closed.value.norm(), tol);
    Ok(if ok { EXIT_OK } else { EXIT_IDENTITY })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["fdbe-zeta"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn complex_flags() {
        assert_eq!(parse_complex("2").unwrap(), ComplexScalar::new(2.0, 0.0));
        assert_eq!(parse_complex("0.5,-14").unwrap(), ComplexScalar::new(0.5, -14.0));
        assert!(parse_complex("a,b").is_err());
    }

    #[test]
    fn eval_zeta_two() {
        let (code, out, _) = run_args(&["eval", "riemann-zeta", "--s", "2"]);
        assert_eq!(code, 0);
        assert!(out.contains("1.644934066848"), "{out}");
    }

    #[test]
    fn eval_pole_and_usage_codes() {
        let (code, _, err) = run_args(&["eval", "riemann-zeta", "--s", "1"]);
        assert_eq!(code, EXIT_DOMAIN);
        assert!(err.contains("pole"), "{err}");
        assert_eq!(run_args(&["eval", "nope", "--s", "2"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["eval", "gamma", "--s", "x"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["check"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["check", "NOPE"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["eval", "fd", "--s", "2", "--x", "1"]).0, EXIT_USAGE);
    }

    #[test]
    fn negative_arguments_parse() {
        let (code, out, _) = run_args(&["eval", "be", "--s", "2", "--mu", "-1"]);
        assert_eq!(code, 0);
        // Li₂(1/e)
        assert!(out.contains("0.40875428734"), "{out}");
    }

    #[test]
    fn list_rows() {
        let (code, out, _) = run_args(&["list"]);
        assert_eq!(code, 0);
        assert!(out.contains("F01 Eq.(2.1)"));
        assert_eq!(out.lines().count(), register_catalog().len() + 1);
    }
}
