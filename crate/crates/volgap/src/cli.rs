//! Argument parsing and the subcommands.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};
use volgap_core::bounds::{
    b_alpha, b_cly, gap_all, improvement_ratio_thm2, thm2_unconditional, GapParams,
    DEFAULT_ALPHA, MAX_DIMENSION,
};
use volgap_core::solver::{f1, gamma_n, optimal_alpha, tilde_gamma, DEFAULT_TOL};
use volgap_core::special::cly_constant_log;
use volgap_core::spectral::{heat_trace, trace_bound, trace_bound_excess};
use volgap_core::LogScalar;

use crate::claims::{all_pass, run_claim_suite, ClaimVerdict, Status, SuiteConfig};
use crate::error::CliError;
use crate::render;
use crate::table::{self, parse_range, AlphaChoice, Format};

#[derive(Debug, Parser)]
#[command(
    name = "volgap",
    version,
    about = "Volume-gap bounds for minimal submanifolds of spheres: claim checks, tables and queries"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run the claim suite; exits 0 only if every claim passes.
    Verify(VerifyArgs),
    /// Tabulate the four gap bounds over an (n, ell) grid.
    Table(TableArgs),
    /// Print C_n, the gap denominators and gamma_n for one dimension.
    Constants(ConstantsArgs),
    /// Print the four gap bounds at one (n, ell).
    Gap(GapArgs),
    /// Find the alpha that maximizes the tuned excess.
    OptimizeAlpha(OptimizeArgs),
    /// Compare the heat trace of S^n with its closed-form bound.
    Trace(TraceArgs),
}

#[derive(Debug, Args)]
struct OutputArgs {
    /// Machine-readable JSON output.
    #[arg(long)]
    json: bool,
    /// Write to this file instead of standard output.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Include run metadata (version, arguments, time).
    #[arg(long)]
    meta: bool,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Dimensions for the grid claims.
    #[arg(long, value_name = "A:B", default_value = "2:30", value_parser = parse_range)]
    n_range: (u32, u32),
    /// Codimensions for the grid claims.
    #[arg(long, value_name = "A:B", default_value = "1:30", value_parser = parse_range)]
    l_range: (u32, u32),
    /// Tuning parameter for the grid claims.
    #[arg(long, default_value_t = DEFAULT_ALPHA)]
    alpha: f64,
    /// Root-finding tolerance.
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
    /// Multiply every C_n read by the suite; a negative-path test hook.
    #[arg(long, hide = true, default_value_t = 1.0)]
    perturb_cn: f64,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct TableArgs {
    /// Dimensions.
    #[arg(long, value_name = "A:B", default_value = "2:30", value_parser = parse_range)]
    n_range: (u32, u32),
    /// Codimensions.
    #[arg(long, value_name = "A:B", default_value = "1:30", value_parser = parse_range)]
    l_range: (u32, u32),
    /// A positive number, or `auto` for the per-(n, ell) optimum.
    #[arg(long, default_value = "1.43")]
    alpha: AlphaChoice,
    /// Output format; `--json` is shorthand for `--format json`.
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    /// Root-finding tolerance for `--alpha auto`.
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct ConstantsArgs {
    /// Dimension.
    #[arg(long)]
    n: u32,
    /// Root-finding tolerance for gamma_n.
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct GapArgs {
    /// Dimension.
    #[arg(long)]
    n: u32,
    /// Codimension.
    #[arg(long = "l")]
    ell: u32,
    /// A positive number, or `auto`.
    #[arg(long, default_value = "1.43")]
    alpha: AlphaChoice,
    /// Root-finding tolerance for `--alpha auto`.
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct OptimizeArgs {
    /// Dimension.
    #[arg(long)]
    n: u32,
    /// Codimension.
    #[arg(long = "l")]
    ell: u32,
    /// Absolute tolerance on alpha.
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct TraceArgs {
    /// Sphere dimension.
    #[arg(long)]
    n: u32,
    /// Time.
    #[arg(long)]
    t: f64,
    /// Relative truncation tolerance of the spectral sum.
    #[arg(long, default_value_t = 1e-15)]
    eps: f64,
    #[command(flatten)]
    output: OutputArgs,
}

fn check_tol(tol: f64) -> Result<(), CliError> {
    if tol > 0.0 && tol <= 1e-6 {
        Ok(())
    } else {
        Err(CliError::usage("tolerance must lie in (0, 1e-6]"))
    }
}

fn meta_value() -> Value {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let unix_time = std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0);
    json!({
        "tool": env!("CARGO_PKG_NAME"),
        "version": env!("CARGO_PKG_VERSION"),
        "args": args,
        "unix_time": unix_time,
    })
}

fn meta_comment(prefix: &str) -> String {
    let m = meta_value();
    format!(
        "{prefix} {} {}\n{prefix} args: {}\n{prefix} unix_time: {}\n",
        m["tool"].as_str().unwrap_or_default(),
        m["version"].as_str().unwrap_or_default(),
        m["args"],
        m["unix_time"]
    )
}

/// Serializes `value`, wrapped with metadata when asked.
fn to_json<T: Serialize>(value: &T, meta: bool) -> Result<String, CliError> {
    let mut s = if meta {
        serde_json::to_string_pretty(&json!({ "meta": meta_value(), "result": value }))?
    } else {
        serde_json::to_string_pretty(value)?
    };
    s.push('\n');
    Ok(s)
}

fn emit(output: &OutputArgs, text: &str) -> Result<(), CliError> {
    match &output.out {
        Some(path) => std::fs::write(path, text)?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
        }
    }
    Ok(())
}

/// Human-readable or JSON text, with metadata when asked.
fn finish<T: Serialize>(output: &OutputArgs, value: &T, text: String) -> Result<(), CliError> {
    let body = if output.json {
        to_json(value, output.meta)?
    } else if output.meta {
        meta_comment("#") + &text
    } else {
        text
    };
    emit(output, &body)
}

fn render_verdicts(verdicts: &[ClaimVerdict]) -> String {
    let mut s = String::new();
    for v in verdicts {
        let _ = writeln!(s, "{:<7} {}", v.status.to_string(), v.claim_id);
        let _ = writeln!(s, "        {}", v.anchor);
        if !v.witnesses.is_empty() {
            let ws: Vec<String> = v.witnesses.iter().map(ToString::to_string).collect();
            let _ = writeln!(s, "        {}", ws.join(", "));
        }
        let _ = writeln!(s, "        grid: {}", v.grid_note);
        if let Some(e) = &v.error {
            let _ = writeln!(s, "        error: {e}");
        }
    }
    let count = |st| verdicts.iter().filter(|v| v.status == st).count();
    let _ = writeln!(
        s,
        "{} claims: {} PASS, {} FAIL, {} SKIPPED",
        verdicts.len(),
        count(Status::Pass),
        count(Status::Fail),
        count(Status::Skipped)
    );
    s
}

fn verify(args: &VerifyArgs) -> Result<bool, CliError> {
    let cfg = SuiteConfig {
        n_range: args.n_range,
        ell_range: args.l_range,
        alpha: args.alpha,
        tol: args.tol,
        cn_scale: args.perturb_cn,
    };
    let verdicts = run_claim_suite(&cfg)?;
    finish(&args.output, &verdicts, render_verdicts(&verdicts))?;
    Ok(all_pass(&verdicts))
}

fn table_cmd(args: &TableArgs) -> Result<bool, CliError> {
    check_tol(args.tol)?;
    let format = if args.output.json { Format::Json } else { args.format };
    let rows = table::gap_table(args.n_range, args.l_range, args.alpha, args.tol)?;
    let body = table::render(&rows, format)?;
    let text = match (args.output.meta, format) {
        (false, _) => body,
        (true, Format::Json) => {
            let rows: Value = serde_json::from_str(&body)?;
            to_json(&rows, true)?
        }
        (true, _) => meta_comment("#") + &body,
    };
    emit(&args.output, &text)?;
    Ok(true)
}

#[derive(Serialize)]
struct LogValue {
    sign: i8,
    log10: f64,
    value: Option<f64>,
}

impl From<LogScalar> for LogValue {
    fn from(v: LogScalar) -> Self {
        let (sign, log10) = v.signed_log10();
        let real = v.to_real();
        LogValue {
            sign: sign.as_i8(),
            log10,
            value: (real.is_finite() && real != 0.0 || v.is_zero()).then_some(real),
        }
    }
}

#[derive(Serialize)]
struct Constants {
    n: u32,
    c_n: LogValue,
    b_n: Option<LogValue>,
    b_n_alpha: Option<LogValue>,
    alpha: f64,
    gamma_n: f64,
    tilde_gamma_n: f64,
}

fn constants(args: &ConstantsArgs) -> Result<bool, CliError> {
    check_tol(args.tol)?;
    let n = args.n;
    if n < 2 {
        return Err(CliError::usage("n must be at least 2"));
    }
    let c = cly_constant_log(n)?;
    let (b_n, b_n_alpha) = if n <= MAX_DIMENSION {
        (Some(b_cly(n)?), Some(b_alpha(n, DEFAULT_ALPHA)?))
    } else {
        (None, None)
    };
    let gamma = gamma_n(n, args.tol)?.root;
    let tilde = tilde_gamma(n)?;
    let mut text = String::new();
    let _ = writeln!(text, "n             = {n}");
    let _ = writeln!(text, "C_n           = {} (log10 {})", render::log_scalar(c), render::log10_of(c));
    let unavailable = format!("not representable for n > {MAX_DIMENSION}");
    let _ = writeln!(
        text,
        "B_n           = {}",
        b_n.map_or(unavailable.clone(), render::signed_power)
    );
    let _ = writeln!(
        text,
        "{:<14}= {}",
        format!("B_n,{}", render::sig(DEFAULT_ALPHA)),
        b_n_alpha.map_or(unavailable, render::signed_power)
    );
    let _ = writeln!(text, "gamma_n       = {}", render::sig(gamma));
    let _ = writeln!(text, "tilde gamma_n = {}", render::sig(tilde));
    let value = Constants {
        n,
        c_n: c.into(),
        b_n: b_n.map(Into::into),
        b_n_alpha: b_n_alpha.map(Into::into),
        alpha: DEFAULT_ALPHA,
        gamma_n: gamma,
        tilde_gamma_n: tilde,
    };
    finish(&args.output, &value, text)?;
    Ok(true)
}

#[derive(Serialize)]
struct GapRow {
    variant: &'static str,
    alpha: f64,
    log10_b: f64,
    log10_excess: f64,
    ratio_vs_cly: LogValue,
}

#[derive(Serialize)]
struct GapReport {
    n: u32,
    ell: u32,
    alpha: f64,
    bounds: Vec<GapRow>,
    thm2_unconditional: &'static str,
    case_i_ratio_minus_1: LogValue,
    case_ii_ratio: f64,
}

fn gap(args: &GapArgs) -> Result<bool, CliError> {
    check_tol(args.tol)?;
    let alpha = table::resolve_alpha(args.alpha, args.n, args.ell, args.tol)?;
    let params = GapParams::new(args.n, args.ell, alpha)?;
    let rows = table::gap_table((args.n, args.n), (args.ell, args.ell), AlphaChoice::Fixed(alpha), args.tol)?;
    let weakest = thm2_unconditional(params)?;
    let ratios = improvement_ratio_thm2(params)?;
    let mut text = table::render_pretty(&rows);
    let _ = writeln!(text, "unconditional enhanced bound: {}", weakest.variant.name());
    let _ = writeln!(
        text,
        "case (i) / THM1 = 1 + {}, case (ii) / THM1 = {}",
        render::signed_power(ratios.case_i_extra),
        render::sig(ratios.case_ii)
    );
    let report = GapReport {
        n: args.n,
        ell: args.ell,
        alpha,
        bounds: gap_all(params)?
            .iter()
            .map(|b| GapRow {
                variant: b.variant.name(),
                alpha: b.params.alpha(),
                log10_b: b.denominator_log.log10_mag(),
                log10_excess: b.excess.log10_mag(),
                ratio_vs_cly: b.ratio_vs_cly.into(),
            })
            .collect(),
        thm2_unconditional: weakest.variant.name(),
        case_i_ratio_minus_1: ratios.case_i_extra.into(),
        case_ii_ratio: ratios.case_ii,
    };
    finish(&args.output, &report, text)?;
    Ok(true)
}

#[derive(Serialize)]
struct OptimizeReport {
    n: u32,
    ell: u32,
    alpha_star: f64,
    bracket_lo: f64,
    bracket_hi: f64,
    initial_lo: f64,
    initial_hi: f64,
    residual: f64,
    iterations: u32,
    log10_excess_at_alpha_star: f64,
    log10_excess_at_default_alpha: Option<f64>,
}

fn optimize_alpha(args: &OptimizeArgs) -> Result<bool, CliError> {
    check_tol(args.tol)?;
    let r = optimal_alpha(args.n, args.ell, args.tol)?;
    let best = f1(r.root, args.n, args.ell)?;
    let at_default = (DEFAULT_ALPHA * f64::from(args.ell) > 1.0)
        .then(|| f1(DEFAULT_ALPHA, args.n, args.ell))
        .transpose()?;
    let mut text = String::new();
    let _ = writeln!(text, "alpha*    = {}", render::sig(r.root));
    let _ = writeln!(
        text,
        "bracket   = ({}, {}) from initial ({}, {})",
        render::sig(r.bracket_lo),
        render::sig(r.bracket_hi),
        render::sig(r.initial_lo),
        render::sig(r.initial_hi)
    );
    let _ = writeln!(text, "residual  = {}", render::sig(r.residual));
    let _ = writeln!(text, "iterations = {}", r.iterations);
    let _ = writeln!(text, "excess at alpha*  = {}", render::signed_power(best));
    if let Some(d) = at_default {
        let _ = writeln!(text, "excess at {}    = {}", render::sig(DEFAULT_ALPHA), render::signed_power(d));
    }
    let report = OptimizeReport {
        n: args.n,
        ell: args.ell,
        alpha_star: r.root,
        bracket_lo: r.bracket_lo,
        bracket_hi: r.bracket_hi,
        initial_lo: r.initial_lo,
        initial_hi: r.initial_hi,
        residual: r.residual,
        iterations: r.iterations,
        log10_excess_at_alpha_star: best.log10_mag(),
        log10_excess_at_default_alpha: at_default.map(LogScalar::log10_mag),
    };
    finish(&args.output, &report, text)?;
    Ok(true)
}

#[derive(Serialize)]
struct TraceReport {
    n: u32,
    t: f64,
    trace: f64,
    levels_used: u32,
    tail_bound: f64,
    bound: Option<f64>,
    status: Status,
}

fn trace(args: &TraceArgs) -> Result<bool, CliError> {
    let r = heat_trace(args.n, args.t, args.eps)?;
    let (bound, status) = if args.t >= 1.0 {
        let holds = r.nonconstant + r.tail_bound <= trace_bound_excess(args.n, args.t)?;
        (Some(trace_bound(args.n, args.t)?), if holds { Status::Pass } else { Status::Fail })
    } else {
        (None, Status::Skipped)
    };
    let mut text = String::new();
    let _ = writeln!(text, "trace  = {}", render::sig(r.value));
    let _ = writeln!(
        text,
        "levels = {}, tail <= {}",
        r.levels_used,
        render::sig(r.tail_bound)
    );
    match bound {
        Some(b) => {
            let _ = writeln!(text, "bound  = {}", render::sig(b));
        }
        None => {
            let _ = writeln!(text, "bound  = not asserted for t < 1");
        }
    }
    let _ = writeln!(text, "{status}");
    let report = TraceReport {
        n: args.n,
        t: args.t,
        trace: r.value,
        levels_used: r.levels_used,
        tail_bound: r.tail_bound,
        bound,
        status,
    };
    finish(&args.output, &report, text)?;
    Ok(status != Status::Fail)
}

fn dispatch(cli: &Cli) -> Result<bool, CliError> {
    match &cli.command {
        Command::Verify(a) => verify(a),
        Command::Table(a) => table_cmd(a),
        Command::Constants(a) => constants(a),
        Command::Gap(a) => gap(a),
        Command::OptimizeAlpha(a) => optimize_alpha(a),
        Command::Trace(a) => trace(a),
    }
}

/// Entry point of the `volgap` binary.
pub fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    match dispatch(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
