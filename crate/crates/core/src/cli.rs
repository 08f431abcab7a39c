//! The `dsc` command line: `verify`, `construct` and `simulate`.
//!
//! Output is JSON on stdout (or `--output`), `--format text` renders the same
//! document for reading, and diagnostics go to stderr. Exit status is 0 when
//! every verdict passes, 1 on any fail, inconclusive or resource error, and 2
//! on usage or validation errors. `DSC_CAP` overrides the enumeration cap.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::process::{builtin_process, load_process, verify_process_chaos, FiniteStateProcess};
use crate::rational::{format_rational, parse_rational, Rational};
use crate::render::render_text;
use crate::structures::{load_structure, ChaoticStructure, MAdicIntervalStructure};
use crate::symbolic::SymbolicPoint;
use crate::verification::{
    li_yorke_pair, periodic_approximation, search_separation, sensitivity_witness,
    transitive_witness, verify_devaney, DevaneyParams, SeparationCertificate, Verdict,
};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "dsc",
    version,
    about = "Finite-horizon chaos checks on symbolic structures"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the chaos conditions for a structure or a finite-state process.
    Verify(VerifyArgs),
    /// Build a chaos witness and print it with its replay report.
    Construct(ConstructArgs),
    /// Sample a seeded realization of a finite-state process.
    Simulate(SimulateArgs),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum, serde::Serialize)]
#[serde(rename_all = "lowercase")]
enum Format {
    #[default]
    Json,
    Text,
}

#[derive(Debug, Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the output document here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct StructureArgs {
    /// Inline JSON config, `@file`, or a name: madic, cantor.
    #[arg(long)]
    structure: Option<String>,
    /// Alphabet size for `--structure madic` (and for `construct transitive`).
    #[arg(long)]
    m: Option<u32>,
    /// Builtin process name, inline JSON config, or `@file`; its state structure is used.
    #[arg(long)]
    process: Option<String>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[command(flatten)]
    source: StructureArgs,
    /// Deepest level examined by the diameter check.
    #[arg(long, default_value_t = 10)]
    depth: usize,
    #[arg(long, default_value = "1/100", value_parser = rational_arg)]
    threshold: Rational,
    /// Separation degrees tried, starting from 1.
    #[arg(long, default_value_t = 4)]
    max_degree: usize,
    /// Process mode: cylinder depth for empirical transitivity.
    #[arg(long, default_value_t = 2)]
    k: usize,
    /// Process mode: realization length.
    #[arg(long, default_value_t = 10_000)]
    n: usize,
    #[arg(long)]
    seed: Option<u64>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Witness {
    Periodic,
    Transitive,
    Sensitivity,
    Liyorke,
}

#[derive(Debug, Args)]
struct ConstructArgs {
    #[arg(value_enum)]
    witness: Witness,
    #[command(flatten)]
    source: StructureArgs,
    /// Target point as JSON, e.g. '{"preperiod":[1],"period":[2]}'.
    #[arg(long)]
    target: Option<String>,
    #[arg(long, default_value = "1/8", value_parser = rational_arg)]
    eps: Rational,
    /// Order of the transitive prefix.
    #[arg(long, default_value_t = 2)]
    k: usize,
    #[arg(long, default_value_t = 4)]
    max_degree: usize,
    #[arg(long, default_value_t = 10_000)]
    horizon: usize,
    #[arg(long)]
    seed: Option<u64>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct SimulateArgs {
    /// Builtin process name, inline JSON config, or `@file`.
    process: String,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, default_value_t = 1000)]
    n: usize,
    /// Also run the process chaos verification on the realization.
    #[arg(long)]
    verify: bool,
    #[arg(long, default_value_t = 2)]
    k: usize,
    #[command(flatten)]
    output: OutputArgs,
}

fn rational_arg(s: &str) -> std::result::Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::Argument(_) | Error::Validation { .. } => EXIT_USAGE,
        _ => EXIT_FAIL,
    }
}

/// Runs one invocation and returns its exit status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_PASS
            };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(stderr, "{text}");
            } else {
                let _ = write!(stdout, "{text}");
            }
            return code;
        }
    };
    let (output, result) = match cli.command {
        Command::Verify(a) => (
            a.output,
            cmd_verify_inner(
                &a.source,
                a.depth,
                &a.threshold,
                a.max_degree,
                a.k,
                a.n,
                a.seed,
            ),
        ),
        Command::Construct(a) => {
            let r = cmd_construct_inner(&a);
            (a.output, r)
        }
        Command::Simulate(a) => {
            let r = cmd_simulate_inner(&a);
            (a.output, r)
        }
    };
    match result {
        Ok((doc, verdict)) => {
            let rendered = match output.format {
                Format::Json => {
                    serde_json::to_string_pretty(&doc).expect("document serializes") + "\n"
                }
                Format::Text => render_text(&doc),
            };
            let written = match &output.output {
                Some(path) => std::fs::write(path, rendered.as_bytes())
                    .map_err(|e| format!("cannot write {}: {e}", path.display())),
                None => stdout
                    .write_all(rendered.as_bytes())
                    .map_err(|e| format!("cannot write output: {e}")),
            };
            if let Err(msg) = written {
                let _ = writeln!(stderr, "error: {msg}");
                return EXIT_FAIL;
            }
            if verdict.is_pass() {
                EXIT_PASS
            } else {
                EXIT_FAIL
            }
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code_for(&e)
        }
    }
}

fn read_config(arg: &str) -> Result<Value> {
    let text = match arg.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| Error::validation("$", format!("cannot read {path}: {e}")))?,
        None => arg.to_owned(),
    };
    serde_json::from_str(&text).map_err(|e| Error::validation("$", format!("invalid JSON: {e}")))
}

fn looks_like_config(arg: &str) -> bool {
    arg.starts_with('{') || arg.starts_with('@')
}

fn resolve_process(arg: &str, seed: Option<u64>) -> Result<FiniteStateProcess> {
    let proc = if looks_like_config(arg) {
        load_process(&read_config(arg)?)?
    } else {
        builtin_process(arg)?
    };
    Ok(match seed {
        Some(s) => proc.with_seed(s),
        None => proc,
    })
}

fn resolve_structure(args: &StructureArgs, seed: Option<u64>) -> Result<Box<dyn ChaoticStructure>> {
    match (&args.structure, &args.process) {
        (Some(_), Some(_)) => Err(Error::argument(
            "give either --structure or --process, not both",
        )),
        (Some(s), None) => {
            if looks_like_config(s) {
                load_structure(&read_config(s)?)
            } else {
                let mut cfg = json!({"type": s});
                if let Some(m) = args.m {
                    cfg["m"] = json!(m);
                } else if s == "madic" {
                    cfg["m"] = json!(2);
                }
                load_structure(&cfg)
            }
        }
        (None, Some(p)) => Ok(Box::new(resolve_process(p, seed)?.structure().clone())),
        (None, None) => Err(Error::argument("missing --structure or --process")),
    }
}

fn envelope(command: &str, config: Value, limits: &Limits) -> Value {
    let mut config = config;
    config["command"] = json!(command);
    config["limits"] = json!(limits);
    json!({ "config": config })
}

fn cmd_verify_inner(
    source: &StructureArgs,
    depth: usize,
    threshold: &Rational,
    max_degree: usize,
    k: usize,
    n: usize,
    seed: Option<u64>,
) -> Result<(Value, Verdict)> {
    let limits = Limits::from_env()?;
    if source.structure.is_none() {
        if let Some(p) = &source.process {
            let proc = resolve_process(p, seed)?;
            let report = verify_process_chaos(&proc, k, n, &limits)?;
            let mut doc = envelope(
                "verify",
                json!({"process": proc.describe(), "k": k, "n": n}),
                &limits,
            );
            doc["report"] = report.to_json();
            return Ok((doc, report.verdict));
        }
    }
    let st = resolve_structure(source, seed)?;
    let params = DevaneyParams {
        max_depth: depth,
        threshold: threshold.clone(),
        max_degree,
        ..DevaneyParams::default()
    };
    let report = verify_devaney(st.as_ref(), &params, &limits)?;
    let mut doc = envelope(
        "verify",
        json!({"structure": st.describe(), "devaney": params}),
        &limits,
    );
    doc["report"] = report.to_json();
    Ok((doc, report.verdict))
}

fn parse_target(target: &Option<String>) -> Result<SymbolicPoint> {
    let text = target
        .as_deref()
        .ok_or_else(|| Error::argument("this witness needs --target"))?;
    serde_json::from_value(read_config(text)?)
        .map_err(|e| Error::validation("target", e.to_string()))
}

fn certificate_for(
    st: &dyn ChaoticStructure,
    max_degree: usize,
    limits: &Limits,
) -> Result<SeparationCertificate> {
    let (_, cert) = search_separation(st, max_degree, limits)?;
    cert.ok_or_else(|| {
        Error::Precondition(format!(
            "no separation certificate up to degree {max_degree}"
        ))
    })
}

fn cmd_construct_inner(a: &ConstructArgs) -> Result<(Value, Verdict)> {
    let limits = Limits::from_env()?;
    let st: Box<dyn ChaoticStructure> = match (a.witness, &a.source.structure, &a.source.process) {
        (Witness::Transitive, None, None) => {
            Box::new(MAdicIntervalStructure::new(a.source.m.unwrap_or(2))?)
        }
        _ => resolve_structure(&a.source, a.seed)?,
    };
    let st = st.as_ref();
    let mut config =
        json!({"witness": format!("{:?}", a.witness).to_lowercase(), "structure": st.describe()});
    let (witness, report) = match a.witness {
        Witness::Periodic => {
            let x = parse_target(&a.target)?;
            config["target"] = json!(x);
            config["eps"] = json!(format_rational(&a.eps));
            let r = periodic_approximation(st, &x, &a.eps, &limits)?;
            (json!({"point": r.point, "depth": r.depth}), r.report)
        }
        Witness::Transitive => {
            config["k"] = json!(a.k);
            let t = transitive_witness(st, a.k, &limits)?;
            let schedule: Vec<Value> = t
                .schedule
                .iter()
                .map(|(w, time)| json!({"word": w, "time": time}))
                .collect();
            (
                json!({"point": t.point, "prefix": t.prefix, "schedule": schedule}),
                t.report,
            )
        }
        Witness::Sensitivity => {
            let x = parse_target(&a.target)?;
            config["target"] = json!(x);
            config["eps"] = json!(format_rational(&a.eps));
            config["max_degree"] = json!(a.max_degree);
            let cert = certificate_for(st, a.max_degree, &limits)?;
            let s = sensitivity_witness(st, &x, &a.eps, &cert, &limits)?;
            (
                json!({"partner": s.partner, "time": s.time, "certificate": cert}),
                s.report,
            )
        }
        Witness::Liyorke => {
            config["horizon"] = json!(a.horizon);
            config["max_degree"] = json!(a.max_degree);
            let cert = certificate_for(st, a.max_degree, &limits)?;
            let p = li_yorke_pair(st, &cert, a.horizon, &limits)?;
            (json!({"x": p.x, "y": p.y, "certificate": cert}), p.report)
        }
    };
    let mut doc = envelope("construct", config, &limits);
    doc["witness"] = witness;
    doc["report"] = report.to_json();
    Ok((doc, report.verdict))
}

fn cmd_simulate_inner(a: &SimulateArgs) -> Result<(Value, Verdict)> {
    let limits = Limits::from_env()?;
    let proc = resolve_process(&a.process, a.seed)?;
    let realization = proc.sample_realization(a.n)?;
    let mut config = json!({"process": proc.describe(), "n": a.n, "verify": a.verify});
    if a.verify {
        config["k"] = json!(a.k);
    }
    let mut doc = envelope("simulate", config, &limits);
    doc["realization"] = serde_json::to_value(&realization).expect("realization serializes");
    let mut verdict = Verdict::Pass;
    if a.verify {
        let report = verify_process_chaos(&proc, a.k, a.n, &limits)?;
        verdict = report.verdict;
        doc["report"] = report.to_json();
    }
    Ok((doc, verdict))
}
