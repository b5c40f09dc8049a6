//! `q333`: evaluate, maximize and sample SLOCC invariants of three-qutrit states.
//!
//! Payload goes to stdout (or `--out`), diagnostics to stderr. Exit status is
//! 0 on success, 1 when `verify` reports a failed check, and 2 for usage,
//! parse or I/O errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use qutrit_invariants::closed_form::{invariants_ss, s_index};
use qutrit_invariants::io::{self as qio, fmt_f64};
use qutrit_invariants::matrix::{fundamental_invariants, AdjointLayout, InvariantSet};
use qutrit_invariants::optimize::{maximize_abs, Objective, OptConfig};
use qutrit_invariants::states::{named_state, semisimple_to_tensor, NamedState, QutritState, SemiSimpleCoeffs};
use qutrit_invariants::stats;
use qutrit_invariants::verify::{self, VerifyOptions};

#[derive(Parser, Debug)]
#[command(name = "q333", version, about = "SLOCC invariants of three-qutrit states")]
struct Cli {
    /// Master RNG seed; echoed in the output metadata.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write the payload here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true)]
    verbose: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum EvalPath {
    Matrix,
    Closed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SampleKind {
    Table,
    Histogram,
    Curve,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Invariants of a state file (JSON or CSV) or of semi-simple coefficients.
    Eval(EvalArgs),
    /// A named state with its invariants.
    Named {
        /// One of the tags listed by `q333 named --help`.
        #[arg(help = format!("state tag: {}", NamedState::valid_tags()))]
        tag: String,
    },
    /// Multi-start maximization of |f| over semi-simple coefficients.
    Maximize(MaximizeArgs),
    /// Monte Carlo sampling of random semi-simple states.
    Sample(SampleArgs),
    /// Signed objective values on a (theta, phi) grid of the coefficient sphere.
    Grid(GridArgs),
    /// Run the verification suite.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
struct EvalArgs {
    /// State file; `.csv` files use the CSV layout, anything else JSON.
    input: Option<PathBuf>,
    /// Semi-simple coefficients `a,b,c` (normalized before evaluation).
    #[arg(long, value_parser = parse_triple, allow_hyphen_values = true)]
    semisimple: Option<[f64; 3]>,
    /// Evaluation path; `closed` requires --semisimple.
    #[arg(long, value_enum)]
    path: Option<EvalPath>,
}

#[derive(Args, Debug)]
struct MaximizeArgs {
    #[arg(long, value_parser = parse_objective, default_value = "delta")]
    objective: Objective,
    #[arg(long, default_value_t = OptConfig::default().restarts)]
    restarts: usize,
    #[arg(long, default_value_t = OptConfig::default().max_iters)]
    max_iters: usize,
    #[arg(long, default_value_t = OptConfig::default().step)]
    step: f64,
    #[arg(long, default_value_t = OptConfig::default().tol_grad)]
    tol_grad: f64,
}

#[derive(Args, Debug)]
struct SampleArgs {
    #[arg(long, value_enum, default_value = "table")]
    kind: SampleKind,
    /// Number of states (default: 500000 for histograms, 20000 otherwise).
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long, default_value_t = stats::DEFAULT_BINS)]
    bins: usize,
    /// Objective for histograms and curves.
    #[arg(long, value_parser = parse_objective, default_value = "delta")]
    objective: Objective,
}

#[derive(Args, Debug)]
struct GridArgs {
    #[arg(long, value_parser = parse_objective, default_value = "delta")]
    objective: Objective,
    #[arg(long, default_value_t = 91)]
    n_theta: usize,
    #[arg(long, default_value_t = 180)]
    n_phi: usize,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Skip the Monte Carlo last-bin check.
    #[arg(long)]
    quick: bool,
    /// Use this adjoint block table instead of the bundled one.
    #[arg(long)]
    k_asset: Option<PathBuf>,
}

fn parse_triple(s: &str) -> Result<[f64; 3], String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(format!("expected a,b,c, got {s:?}"));
    }
    let mut out = [0.0f64; 3];
    for (o, p) in out.iter_mut().zip(parts) {
        *o = p.parse().map_err(|_| format!("{p:?} is not a number"))?;
        if !o.is_finite() {
            return Err(format!("{p:?} is not finite"));
        }
    }
    Ok(out)
}

fn parse_objective(s: &str) -> Result<Objective, String> {
    s.parse().map_err(|e: qutrit_invariants::Error| e.to_string())
}

/// Failure modes, mapped to exit statuses.
enum Failure {
    Usage(anyhow::Error),
    Verification,
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Usage(e)
    }
}

impl From<qutrit_invariants::Error> for Failure {
    fn from(e: qutrit_invariants::Error) -> Self {
        Failure::Usage(e.into())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    if let Some(n) = cli.threads {
        if n == 0 {
            return Err(anyhow::anyhow!("--threads must be at least 1").into());
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .context("configuring worker threads")?;
    }
    match &cli.command {
        Command::Eval(args) => cmd_eval(cli, args),
        Command::Named { tag } => cmd_named(cli, tag),
        Command::Maximize(args) => cmd_maximize(cli, args),
        Command::Sample(args) => cmd_sample(cli, args),
        Command::Grid(args) => cmd_grid(cli, args),
        Command::Verify(args) => cmd_verify(cli, args),
    }
}

fn meta(cli: &Cli, command: &str) -> Value {
    json!({ "command": command, "seed": cli.seed, "version": env!("CARGO_PKG_VERSION") })
}

/// Adds a `meta` object to a JSON payload.
fn with_meta(cli: &Cli, command: &str, payload: Value) -> Value {
    let mut doc = json!({ "meta": meta(cli, command) });
    match payload {
        Value::Object(map) => doc.as_object_mut().unwrap().extend(map),
        other => doc["result"] = other,
    }
    doc
}

fn emit(cli: &Cli, text: &str) -> anyhow::Result<()> {
    match &cli.out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn emit_json(cli: &Cli, command: &str, payload: Value) -> anyhow::Result<()> {
    let doc = with_meta(cli, command, payload);
    emit(cli, &(serde_json::to_string_pretty(&doc)? + "\n"))
}

/// CSV payloads keep their header on the first line; metadata goes to stderr.
fn emit_csv(cli: &Cli, command: &str, csv: &str) -> anyhow::Result<()> {
    eprintln!("# {}", meta(cli, command));
    emit(cli, csv)
}

fn format(cli: &Cli) -> Format {
    cli.format.unwrap_or(Format::Json)
}

fn invariants_payload(inv: &InvariantSet) -> anyhow::Result<Value> {
    let mut v = serde_json::to_value(inv)?;
    let [i6, i9, i12, delta] = inv.magnitudes();
    v["magnitudes"] = json!({ "I6": i6, "I9": i9, "I12": i12, "Delta333": delta });
    v["S_I"] = json!(s_index(inv));
    Ok(v)
}

fn read_state(path: &Path) -> anyhow::Result<QutritState> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let is_csv = path.extension().is_some_and(|e| e.eq_ignore_ascii_case("csv"));
    let state = if is_csv { qio::state_from_csv(&text) } else { qio::state_from_json(&text) };
    state.with_context(|| format!("parsing {}", path.display()))
}

fn cmd_eval(cli: &Cli, args: &EvalArgs) -> Result<(), Failure> {
    let (inv, path) = match (&args.input, args.semisimple) {
        (Some(_), Some(_)) => return Err(anyhow::anyhow!("give either a state file or --semisimple, not both").into()),
        (None, None) => return Err(anyhow::anyhow!("eval needs a state file or --semisimple a,b,c").into()),
        (Some(file), None) => {
            if args.path == Some(EvalPath::Closed) {
                return Err(anyhow::anyhow!("--path closed is only valid with --semisimple").into());
            }
            (fundamental_invariants(&read_state(file)?), EvalPath::Matrix)
        }
        (None, Some(x)) => {
            let p = SemiSimpleCoeffs::from_array(x);
            if p.norm() == 0.0 {
                return Err(anyhow::anyhow!("semi-simple coefficients must not all be zero").into());
            }
            let p = p.normalized();
            match args.path.unwrap_or(EvalPath::Closed) {
                EvalPath::Closed => (invariants_ss(p), EvalPath::Closed),
                EvalPath::Matrix => (fundamental_invariants(&semisimple_to_tensor(p)), EvalPath::Matrix),
            }
        }
    };
    match format(cli) {
        Format::Json => {
            let mut payload = invariants_payload(&inv)?;
            payload["path"] = json!(if path == EvalPath::Closed { "closed" } else { "matrix" });
            emit_json(cli, "eval", payload)?
        }
        Format::Csv => emit_csv(cli, "eval", &qio::invariants_to_csv(&inv))?,
    }
    Ok(())
}

fn cmd_named(cli: &Cli, tag: &str) -> Result<(), Failure> {
    let parsed: NamedState = tag.parse()?;
    let state = named_state(&parsed)?;
    let inv = fundamental_invariants(&state);
    if parsed.is_approximate() {
        eprintln!("note: {parsed} is tabulated to three decimals and is not exactly normalized");
    }
    match format(cli) {
        Format::Json => {
            let amplitudes: Vec<[f64; 2]> = state.amplitudes().iter().map(|z| [z.re, z.im]).collect();
            let payload = json!({
                "tag": parsed.to_string(),
                "amplitudes": amplitudes,
                "invariants": invariants_payload(&inv)?,
            });
            emit_json(cli, "named", payload)?
        }
        Format::Csv => {
            let [i6, i9, i12, delta] = inv.magnitudes().map(fmt_f64);
            let csv = format!("tag,absI6,absI9,absI12,absDelta\n{parsed},{i6},{i9},{i12},{delta}\n");
            emit_csv(cli, "named", &csv)?
        }
    }
    Ok(())
}

fn cmd_maximize(cli: &Cli, args: &MaximizeArgs) -> Result<(), Failure> {
    let cfg = OptConfig {
        restarts: args.restarts,
        max_iters: args.max_iters,
        step: args.step,
        tol_grad: args.tol_grad,
        rng_seed: cli.seed,
    };
    let r = maximize_abs(args.objective, &cfg)?;
    if cli.verbose {
        eprintln!(
            "{}: {} of {} restarts converged, {} distinct optima",
            args.objective,
            r.restarts_converged,
            cfg.restarts,
            r.all_local_optima.len()
        );
    }
    match format(cli) {
        Format::Json => {
            let payload: Value = serde_json::from_str(&r.to_json(cli.verbose)?).context("re-reading result")?;
            emit_json(cli, "maximize", payload)?
        }
        Format::Csv => {
            let mut csv = String::from("rank,a,b,c,value\n");
            for (k, o) in r.all_local_optima.iter().enumerate() {
                let p = o.point;
                csv += &format!("{k},{},{},{},{}\n", fmt_f64(p.a), fmt_f64(p.b), fmt_f64(p.c), fmt_f64(o.value));
            }
            emit_csv(cli, "maximize", &csv)?
        }
    }
    Ok(())
}

fn cmd_sample(cli: &Cli, args: &SampleArgs) -> Result<(), Failure> {
    let default_n = if args.kind == SampleKind::Histogram { 500_000 } else { 20_000 };
    let n = args.samples.unwrap_or(default_n);
    let fmt = format(cli);
    match args.kind {
        SampleKind::Table => {
            let rows = stats::sample_and_evaluate(n, cli.seed)?;
            match fmt {
                Format::Csv => emit_csv(cli, "sample", &stats::samples_to_csv(&rows))?,
                Format::Json => emit_json(cli, "sample", json!({ "kind": "table", "rows": rows }))?,
            }
        }
        SampleKind::Histogram => {
            let col = stats::sample_columns(n, cli.seed, &[args.objective])?.remove(0);
            let h = stats::histogram(&col, args.bins, args.objective.scale())?.with_objective(args.objective);
            let frac = stats::last_bin_fraction(&h);
            if cli.verbose {
                eprintln!("{}: last-bin fraction {:.4}%", args.objective, 100.0 * frac);
            }
            match fmt {
                Format::Csv => emit_csv(cli, "sample", &stats::histogram_to_csv(&h))?,
                Format::Json => emit_json(
                    cli,
                    "sample",
                    json!({ "kind": "histogram", "histogram": h, "last_bin_fraction": frac }),
                )?,
            }
        }
        SampleKind::Curve => {
            let col = stats::sample_columns(n, cli.seed, &[args.objective])?.remove(0);
            let curve = stats::sorted_curve(&col);
            match fmt {
                Format::Csv => emit_csv(cli, "sample", &stats::curve_to_csv(&curve))?,
                Format::Json => emit_json(
                    cli,
                    "sample",
                    json!({ "kind": "curve", "objective": args.objective, "values": curve }),
                )?,
            }
        }
    }
    Ok(())
}

fn cmd_grid(cli: &Cli, args: &GridArgs) -> Result<(), Failure> {
    let g = stats::sphere_grid(args.objective, args.n_theta, args.n_phi)?;
    match format(cli) {
        Format::Csv => emit_csv(cli, "grid", &stats::grid_to_csv(&g))?,
        Format::Json => emit_json(cli, "grid", serde_json::to_value(&g).context("serializing grid")?)?,
    }
    Ok(())
}

fn cmd_verify(cli: &Cli, args: &VerifyArgs) -> Result<(), Failure> {
    if cli.format == Some(Format::Csv) {
        bail_usage("verify has no CSV output")?;
    }
    let opts = VerifyOptions { quick: args.quick, seed: cli.seed };
    let report = match &args.k_asset {
        Some(path) => {
            let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            verify::run_with_csv(&text, opts)?
        }
        None => verify::run(AdjointLayout::embedded(), opts),
    };
    match cli.format {
        Some(_) => emit_json(cli, "verify", serde_json::to_value(&report).context("serializing report")?)?,
        None => emit(cli, &report.table())?,
    }
    if report.all_passed() {
        Ok(())
    } else {
        let failed: Vec<String> = report
            .checks
            .iter()
            .filter(|c| !c.passed && !c.skipped)
            .map(|c| c.id.to_string())
            .collect();
        eprintln!("verification failed: checks {}", failed.join(", "));
        Err(Failure::Verification)
    }
}

fn bail_usage(msg: &str) -> anyhow::Result<()> {
    bail!("{msg}")
}
