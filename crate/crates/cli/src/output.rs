//! Rendering of ranked results: `table`, `json` and `raw`.

use std::fmt::Write as _;

use advisor_match_core::{Metric, Recommendation};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum OutputFormat {
    /// Name and score rounded to two decimals.
    #[default]
    Table,
    /// Full-precision JSON.
    Json,
    /// One `Name:<name> Similarity: <score>` line per result, full precision.
    Raw,
}

/// Rounds to `decimals` places, half away from zero, using the exact binary
/// value of `value`. `format!("{:.2}")` rounds exact ties to even instead.
pub fn round_half_up(value: f64, decimals: usize) -> String {
    if !value.is_finite() || value.abs() >= 1e15 {
        return format!("{value:.decimals$}");
    }
    // 60 fractional digits is exact for every tie a double can hit at this
    // magnitude, and far past the point that decides the rounding elsewhere.
    let exact = format!("{:.60}", value.abs());
    let (int_part, frac_part) = exact.split_once('.').expect("fixed-point output has a dot");
    let kept = &frac_part[..decimals];
    let round_up = frac_part.as_bytes()[decimals] >= b'5';

    let mut scaled: u128 = format!("{int_part}{kept}").parse().expect("digits only");
    if round_up {
        scaled += 1;
    }
    let pow = 10u128.pow(decimals as u32);
    let sign = if value < 0.0 && scaled != 0 { "-" } else { "" };
    if decimals == 0 {
        format!("{sign}{scaled}")
    } else {
        format!("{sign}{}.{:0decimals$}", scaled / pow, scaled % pow)
    }
}

#[derive(Serialize)]
struct JsonListing<'a> {
    metric: Metric,
    results: &'a [Recommendation],
}

pub fn render(results: &[Recommendation], metric: Metric, format: OutputFormat) -> String {
    match format {
        OutputFormat::Table => render_table(results),
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(&JsonListing { metric, results })
                .expect("listing serializes");
            s.push('\n');
            s
        }
        OutputFormat::Raw => results
            .iter()
            .map(|r| format!("Name:{} Similarity: {}\n", r.name, r.score.value))
            .collect(),
    }
}

const NAME_HEADER: &str = "Potential Supervisors";
const SCORE_HEADER: &str = "Similarity";

fn render_table(results: &[Recommendation]) -> String {
    let scores: Vec<String> = results
        .iter()
        .map(|r| round_half_up(r.score.value, 2))
        .collect();
    let name_width = results
        .iter()
        .map(|r| r.name.chars().count())
        .chain([NAME_HEADER.len()])
        .max()
        .unwrap_or_default();
    let score_width = scores
        .iter()
        .map(String::len)
        .chain([SCORE_HEADER.len()])
        .max()
        .unwrap_or_default();

    let mut out = String::new();
    let _ = writeln!(
        out,
        "{NAME_HEADER:<name_width$}  {SCORE_HEADER:>score_width$}"
    );
    for (r, score) in results.iter().zip(&scores) {
        let _ = writeln!(out, "{:<name_width$}  {score:>score_width$}", r.name);
    }
    out
}
