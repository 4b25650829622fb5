//! Command-line front end for the identity catalog.
//!
//! ```text
//! master-kernels <list|verify|sweep|suite|export> [--case ID ...] [--all]
//!     [--set name=value ...] [--param NAME --range LO:HI:STEP]
//!     [--format text|json|csv] [--out PATH] [--tol X] [--jobs N]
//! ```
//!
//! Exit codes: 0 when every requested verification passes, 1 when any fails,
//! 2 on a usage error.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use master_kernels::catalog::{self, Params, VerificationRecord};
use master_kernels::QuadratureOptions;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Environment variable holding the default worker count.
pub const JOBS_ENV: &str = "MASTER_KERNELS_JOBS";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Registered identities with their parameter windows.
    List,
    /// Both sides of the selected entries at the given bindings.
    Verify,
    /// One entry over a grid of one parameter.
    Sweep,
    /// Every selected entry (or all of them) at its default parameters.
    Suite,
    /// The registry as JSON.
    Export,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Range {
    pub lo: f64,
    pub hi: f64,
    pub step: f64,
}

fn parse_binding(s: &str) -> Result<(String, f64), String> {
    let (k, v) = s.split_once('=').ok_or_else(|| format!("expected name=value, got '{s}'"))?;
    let v: f64 = v.trim().parse().map_err(|_| format!("'{v}' is not a number"))?;
    Ok((k.trim().to_string(), v))
}

fn parse_range(s: &str) -> Result<Range, String> {
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() != 3 {
        return Err(format!("expected LO:HI:STEP, got '{s}'"));
    }
    let num = |t: &str| t.trim().parse::<f64>().map_err(|_| format!("'{t}' is not a number"));
    Ok(Range { lo: num(parts[0])?, hi: num(parts[1])?, step: num(parts[2])? })
}

/// Parsed command line.
#[derive(Debug, Parser)]
#[command(name = "master-kernels", version, about = "Verify residue closed forms for real-line integrals")]
pub struct RunConfig {
    #[arg(value_enum)]
    pub command: Command,
    /// Entry id; repeat or list several.
    #[arg(long = "case", num_args = 1..)]
    pub cases: Vec<String>,
    /// Select every entry.
    #[arg(long)]
    pub all: bool,
    /// Parameter binding; repeatable.
    #[arg(long = "set", value_parser = parse_binding)]
    pub bindings: Vec<(String, f64)>,
    /// Parameter swept by `sweep`.
    #[arg(long)]
    pub param: Option<String>,
    #[arg(long, value_parser = parse_range)]
    pub range: Option<Range>,
    /// Output format; JSON unless given (text for `list`).
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Absolute tolerance replacing each entry's class.
    #[arg(long)]
    pub tol: Option<f64>,
    /// Worker threads; falls back to MASTER_KERNELS_JOBS.
    #[arg(long)]
    pub jobs: Option<usize>,
}

impl RunConfig {
    fn format(&self) -> Format {
        self.format.unwrap_or(if self.command == Command::List { Format::Text } else { Format::Json })
    }

    fn params(&self) -> Params {
        self.bindings.iter().cloned().collect()
    }
}

/// A usage problem: reported on stderr with exit code 2.
#[derive(Debug)]
struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

fn jobs(cfg: &RunConfig) -> Result<Option<usize>, Usage> {
    if let Some(n) = cfg.jobs {
        return if n == 0 { Err(Usage("--jobs must be at least 1".into())) } else { Ok(Some(n)) };
    }
    match std::env::var(JOBS_ENV) {
        Ok(v) if !v.trim().is_empty() => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(Usage(format!("{JOBS_ENV} must be a positive integer, got '{v}'"))),
        },
        _ => Ok(None),
    }
}

fn selected(cfg: &RunConfig) -> Result<Vec<&'static str>, Usage> {
    if cfg.all && !cfg.cases.is_empty() {
        return Err(Usage("--all and --case are exclusive".into()));
    }
    if cfg.all {
        return Ok(catalog::entries().iter().map(|e| e.id).collect());
    }
    cfg.cases.iter().map(|c| Ok(catalog::find(c)?.id)).collect()
}

fn fmt_params(p: &Params) -> String {
    p.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(",")
}

fn records_text(records: &[VerificationRecord]) -> String {
    let mut out = String::new();
    for r in records {
        let status = if r.pass { "PASS" } else { "FAIL" };
        let _ = write!(out, "{status}  {:<14} {:<32}", r.case, fmt_params(&r.params));
        match &r.error {
            Some(e) => {
                let _ = writeln!(out, " error: {e}");
            }
            None => {
                let _ = writeln!(
                    out,
                    " lhs={:+.15e}{:+.3e}i rhs={:+.15e}{:+.3e}i abs_err={:.2e} ({:.1} ms)",
                    r.lhs.re, r.lhs.im, r.rhs.re, r.rhs.im, r.abs_err, r.ms
                );
            }
        }
    }
    let passed = records.iter().filter(|r| r.pass).count();
    let _ = writeln!(out, "{passed}/{} passed", records.len());
    out
}

fn list_text() -> String {
    let mut out = String::new();
    for e in catalog::entries() {
        let params: Vec<String> = e.params.iter().map(|p| format!("{} ∈ {} (default {})", p.name, p.window(), p.default)).collect();
        let _ = writeln!(out, "{:<14} {:<12} {}", e.id, format!("{:?}", e.tolerance).to_lowercase(), e.label);
        let _ = writeln!(out, "{:<27} {}", "", params.join("; "));
    }
    out
}

fn list_csv() -> String {
    let mut out = String::from("id,tolerance,params,label\n");
    for e in catalog::entries() {
        let params: Vec<String> = e.params.iter().map(|p| format!("{} {}", p.name, p.window())).collect();
        let _ = writeln!(out, "{},{},\"{}\",\"{}\"", e.id, e.tolerance.tol(), params.join("; "), e.label.replace('"', "\"\""));
    }
    out
}

/// Output text and exit code of one command.
fn execute(cfg: &RunConfig) -> Result<(String, i32), Usage> {
    let opts = QuadratureOptions::default();
    let format = cfg.format();
    if let Some(t) = cfg.tol {
        if !(t > 0.0) {
            return Err(Usage("--tol must be positive".into()));
        }
    }
    let verdict = |records: &[VerificationRecord]| if records.iter().all(|r| r.pass) { EXIT_PASS } else { EXIT_FAIL };
    let render = |records: &[VerificationRecord]| match format {
        Format::Text => records_text(records),
        Format::Json => catalog::records_to_json(records) + "\n",
        Format::Csv => catalog::records_to_csv(records),
    };
    match cfg.command {
        Command::List => Ok((
            match format {
                Format::Text => list_text(),
                Format::Json => serde_json::to_string_pretty(&catalog::export_json())? + "\n",
                Format::Csv => list_csv(),
            },
            EXIT_PASS,
        )),
        Command::Export => {
            if format == Format::Csv {
                return Ok((list_csv(), EXIT_PASS));
            }
            Ok((serde_json::to_string_pretty(&catalog::export_json())? + "\n", EXIT_PASS))
        }
        Command::Verify => {
            let ids = selected(cfg)?;
            if ids.is_empty() {
                return Err(Usage("verify needs --case ID or --all".into()));
            }
            let params = cfg.params();
            if cfg.all && !params.is_empty() {
                return Err(Usage("--set cannot be combined with --all".into()));
            }
            // Bindings must type-check against every selected entry before anything runs.
            for id in &ids {
                catalog::find(id)?.bind(&params)?;
            }
            use rayon::prelude::*;
            let records: Vec<VerificationRecord> =
                ids.par_iter().map(|id| catalog::verify_record(id, &params, &opts, cfg.tol)).collect();
            Ok((render(&records), verdict(&records)))
        }
        Command::Suite => {
            let ids = if cfg.cases.is_empty() { catalog::entries().iter().map(|e| e.id).collect() } else { selected(cfg)? };
            if !cfg.bindings.is_empty() {
                return Err(Usage("suite runs default parameters; use verify with --set".into()));
            }
            use rayon::prelude::*;
            let records: Vec<VerificationRecord> =
                ids.par_iter().map(|id| catalog::verify_record(id, &Params::new(), &opts, cfg.tol)).collect();
            Ok((render(&records), verdict(&records)))
        }
        Command::Sweep => {
            let ids = selected(cfg)?;
            if ids.len() != 1 {
                return Err(Usage("sweep needs exactly one --case".into()));
            }
            let param = cfg.param.as_deref().ok_or_else(|| Usage("sweep needs --param NAME".into()))?;
            let range = cfg.range.ok_or_else(|| Usage("sweep needs --range LO:HI:STEP".into()))?;
            let values = catalog::grid(range.lo, range.hi, range.step)?;
            let mut base = cfg.params();
            base.remove(param);
            let entry = catalog::find(ids[0])?;
            // The other bindings must be valid on their own.
            let mut probe = base.clone();
            probe.insert(param.to_string(), entry.param(param).map(|p| p.default).unwrap_or(f64::NAN));
            entry.bind(&probe)?;
            let records = catalog::sweep(ids[0], param, &values, &base, &opts, cfg.tol)?;
            let text = match format {
                Format::Csv => catalog::sweep_to_csv(param, &records),
                _ => render(&records),
            };
            Ok((text, verdict(&records)))
        }
    }
}

fn emit(cfg: &RunConfig, text: &str) -> Result<(), Usage> {
    match &cfg.out {
        Some(path) => std::fs::write(path, text).map_err(|e| Usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
            Ok(())
        }
    }
}

/// Runs the command line `argv` (program name first) and returns the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cfg = match RunConfig::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let _ = e.print();
            return code;
        }
    };
    let outcome = jobs(&cfg).and_then(|n| match n {
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(n).build()?;
            pool.install(|| execute(&cfg))
        }
        None => execute(&cfg),
    });
    match outcome.and_then(|(text, code)| emit(&cfg, &text).map(|_| code)) {
        Ok(code) => code,
        Err(Usage(msg)) => {
            eprintln!("master-kernels: {msg}");
            EXIT_USAGE
        }
    }
}
