//! Gap tables over `(n, ell)` grids.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;
use serde_json::value::RawValue;
use volgap_core::bounds::{gap_all, GapParams, Variant, MAX_DIMENSION};
use volgap_core::solver::optimal_alpha;
use volgap_core::LogScalar;

use crate::claims::MAX_CODIMENSION;
use crate::error::CliError;
use crate::render;

/// Exact CSV header.
pub const CSV_HEADER: &str = "n,ell,alpha,variant,log10_B,log10_excess,ratio_vs_cly";

/// How `alpha` is chosen for the tuned and enhanced variants.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum AlphaChoice {
    /// The same value everywhere.
    Fixed(f64),
    /// The maximizer of the tuned excess at each `(n, ell)`.
    Auto,
}

impl FromStr for AlphaChoice {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "auto" {
            return Ok(AlphaChoice::Auto);
        }
        match s.parse::<f64>() {
            Ok(a) if a > 0.0 && a.is_finite() => Ok(AlphaChoice::Fixed(a)),
            _ => Err(format!("expected a positive number or `auto`, got `{s}`")),
        }
    }
}

/// Output format of `table`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    /// Comma-separated values with a fixed header.
    Csv,
    /// A JSON array of row objects.
    Json,
    /// Aligned text for reading.
    Pretty,
}

/// One `(n, ell, variant)` row.
#[derive(Debug, Clone, PartialEq)]
pub struct GapTableRow {
    /// Dimension.
    pub n: u32,
    /// Codimension.
    pub ell: u32,
    /// Tuning parameter actually used (2 for the CLY row).
    pub alpha: f64,
    /// Which bound.
    pub variant: Variant,
    /// The denominator.
    pub b: LogScalar,
    /// The excess over 1.
    pub excess: LogScalar,
    /// Excess divided by the CLY excess.
    pub ratio_vs_cly: LogScalar,
}

/// Parses `a:b` into an inclusive range.
pub fn parse_range(s: &str) -> Result<(u32, u32), String> {
    let (a, b) = s
        .split_once(':')
        .ok_or_else(|| format!("expected a range `a:b`, got `{s}`"))?;
    let parse = |x: &str| {
        x.trim()
            .parse::<u32>()
            .map_err(|_| format!("range bound `{x}` is not a non-negative integer"))
    };
    Ok((parse(a)?, parse(b)?))
}

fn check_ranges(n_range: (u32, u32), ell_range: (u32, u32)) -> Result<(), CliError> {
    if n_range.0 > n_range.1 || ell_range.0 > ell_range.1 {
        return Err(CliError::usage("empty range"));
    }
    if n_range.0 < 2 || n_range.1 > MAX_DIMENSION {
        return Err(CliError::usage(format!("n range must lie in [2, {MAX_DIMENSION}]")));
    }
    if ell_range.0 < 1 || ell_range.1 > MAX_CODIMENSION {
        return Err(CliError::usage(format!("ell range must lie in [1, {MAX_CODIMENSION}]")));
    }
    Ok(())
}

/// Resolves `alpha` at one grid point.
pub fn resolve_alpha(choice: AlphaChoice, n: u32, ell: u32, tol: f64) -> Result<f64, CliError> {
    match choice {
        AlphaChoice::Fixed(a) => Ok(a),
        AlphaChoice::Auto => Ok(optimal_alpha(n, ell, tol)?.root),
    }
}

/// Computes the rows for every `(n, ell)` in the ranges, sorted by `(n, ell, variant)`.
pub fn gap_table(
    n_range: (u32, u32),
    ell_range: (u32, u32),
    alpha: AlphaChoice,
    tol: f64,
) -> Result<Vec<GapTableRow>, CliError> {
    check_ranges(n_range, ell_range)?;
    if let AlphaChoice::Fixed(a) = alpha {
        if a * f64::from(ell_range.0) <= 1.0 {
            return Err(CliError::usage("alpha * ell must exceed 1 on the whole ell range"));
        }
    }
    let mut rows = Vec::new();
    for n in n_range.0..=n_range.1 {
        for ell in ell_range.0..=ell_range.1 {
            let a = resolve_alpha(alpha, n, ell, tol)?;
            for bound in gap_all(GapParams::new(n, ell, a)?)? {
                rows.push(GapTableRow {
                    n,
                    ell,
                    alpha: bound.params.alpha(),
                    variant: bound.variant,
                    b: bound.denominator_log,
                    excess: bound.excess,
                    ratio_vs_cly: bound.ratio_vs_cly,
                });
            }
        }
    }
    rows.sort_by(|a, b| (a.n, a.ell, a.variant.name()).cmp(&(b.n, b.ell, b.variant.name())));
    Ok(rows)
}

/// CSV with [`CSV_HEADER`].
pub fn render_csv(rows: &[GapTableRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{}",
            r.n,
            r.ell,
            render::sig(r.alpha),
            r.variant.name(),
            render::log10_of(r.b),
            render::log10_of(r.excess),
            render::log_scalar(r.ratio_vs_cly)
        );
    }
    out
}

#[derive(Serialize)]
struct JsonRow<'a> {
    n: u32,
    ell: u32,
    alpha: Box<RawValue>,
    variant: &'a str,
    #[serde(rename = "log10_B")]
    log10_b: Box<RawValue>,
    log10_excess: Box<RawValue>,
    ratio_vs_cly: Box<RawValue>,
}

/// A number literal with the same digits as the CSV; non-finite values become `null`.
fn raw_number(text: String) -> Box<RawValue> {
    let text = if text.contains("inf") || text.contains("nan") {
        "null".to_owned()
    } else {
        text
    };
    RawValue::from_string(text).expect("rendered numbers are valid JSON")
}

/// A JSON array of objects keyed like the CSV columns. Ratios beyond the
/// `f64` range are written as JSON number literals with large exponents.
pub fn render_json(rows: &[GapTableRow]) -> Result<String, CliError> {
    let json: Vec<JsonRow<'_>> = rows
        .iter()
        .map(|r| JsonRow {
            n: r.n,
            ell: r.ell,
            alpha: raw_number(render::sig(r.alpha)),
            variant: r.variant.name(),
            log10_b: raw_number(render::log10_of(r.b)),
            log10_excess: raw_number(render::log10_of(r.excess)),
            ratio_vs_cly: raw_number(render::log_scalar(r.ratio_vs_cly)),
        })
        .collect();
    let mut s = serde_json::to_string_pretty(&json)?;
    s.push('\n');
    Ok(s)
}

/// Aligned columns; the excess is shown as the volume ratio `1 + 10^x`.
pub fn render_pretty(rows: &[GapTableRow]) -> String {
    let header = ["n", "ell", "alpha", "variant", "log10 B", "vol(M)/vol(S^n) >=", "ratio vs CLY"];
    let body: Vec<[String; 7]> = rows
        .iter()
        .map(|r| {
            [
                r.n.to_string(),
                r.ell.to_string(),
                render::sig(r.alpha),
                r.variant.name().to_owned(),
                render::log10_of(r.b),
                format!("1 + {}", render::signed_power(r.excess)),
                render::log_scalar(r.ratio_vs_cly),
            ]
        })
        .collect();
    let mut widths = header.map(str::len);
    for row in &body {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    let mut line = |cells: &[&str]| {
        let parts: Vec<String> = cells
            .iter()
            .zip(widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        out.push_str(parts.join("  ").trim_end());
        out.push('\n');
    };
    line(&header);
    for row in &body {
        let cells: Vec<&str> = row.iter().map(String::as_str).collect();
        line(&cells);
    }
    out
}

/// Renders `rows` in `format`.
pub fn render(rows: &[GapTableRow], format: Format) -> Result<String, CliError> {
    match format {
        Format::Csv => Ok(render_csv(rows)),
        Format::Json => render_json(rows),
        Format::Pretty => Ok(render_pretty(rows)),
    }
}
