use std::fmt::Write as _;

use anyhow::{bail, Context, Result};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use skein_core::qdim::{self, alpha as alpha_poly, classical_dim, EvaluationContext, HookQuotient};
use skein_core::verify::{self, Check};
use skein_core::{hecke, BraidWord, Guard, YoungDiagram};

const TABLE_MAX_CELLS: usize = 8;
const VERIFY_MAX_CELLS: usize = 5;

fn partition(s: &str) -> Result<YoungDiagram> {
    s.parse().with_context(|| format!("invalid partition `{s}`"))
}

fn bound(what: &str, value: usize, default: usize, unsafe_max: Option<usize>) -> Result<()> {
    let limit = default.max(unsafe_max.unwrap_or(0));
    if value > limit {
        bail!("{what} {value} exceeds the limit {limit}; pass --unsafe-max {value} to allow it");
    }
    Ok(())
}

/// A JSON number when it fits in `u64`, else a decimal string.
fn dim_value(d: impl std::fmt::Display) -> Value {
    let s = d.to_string();
    s.parse::<u64>().map_or_else(|_| json!(s), |k| json!(k))
}

/// `s^c*[h1][h2]...` with hooks in decreasing order and `[1]` dropped.
fn alpha_factored(lambda: &YoungDiagram) -> String {
    let power: i64 = lambda.cells().map(|c| c.content()).sum();
    let mut hooks: Vec<usize> = lambda.cells().map(|c| lambda.hook_length(c).expect("cell")).filter(|&h| h > 1).collect();
    hooks.sort_unstable_by(|a, b| b.cmp(a));
    let brackets: String = hooks.iter().map(|h| format!("[{h}]")).collect();
    let s = match power {
        0 => String::new(),
        1 => "s".to_string(),
        k => format!("s^{k}"),
    };
    match (s.is_empty(), brackets.is_empty()) {
        (true, true) => "1".into(),
        (false, true) => s,
        (true, false) => brackets,
        (false, false) => format!("{s}*{brackets}"),
    }
}

fn equation(factored: &str, expanded: &str) -> String {
    if factored == expanded {
        expanded.to_string()
    } else {
        format!("{factored} = {expanded}")
    }
}

pub fn qdim(p: &str, n: u32, json: bool) -> Result<String> {
    let lambda = partition(p)?;
    let ctx = EvaluationContext::new(n)?;
    let factored = HookQuotient::new(&lambda, ctx).to_string();
    let value = qdim::qdim(&lambda, ctx)?.to_string();
    let dim = classical_dim(&lambda, n)?;
    if json {
        let out = json!({
            "partition": lambda.rows(),
            "N": n,
            "factored": factored,
            "qdim": value,
            "dim": dim_value(&dim),
        });
        return Ok(format!("{out}\n"));
    }
    Ok(format!("{}\nclassical dimension: {dim}\n", equation(&factored, &value)))
}

pub fn alpha(p: &str) -> Result<String> {
    let lambda = partition(p)?;
    let mut out = equation(&alpha_factored(&lambda), &alpha_poly(&lambda).to_string());
    out.push('\n');
    for c in lambda.cells() {
        writeln!(out, "cell {c}: content {}, hook {}", c.content(), lambda.hook_length(c)?)?;
    }
    Ok(out)
}

pub fn homfly(strands: usize, word: &str, normalized: bool, guard: &Guard) -> Result<String> {
    let w = BraidWord::parse(strands, word).with_context(|| format!("invalid braid word `{word}`"))?;
    let mut out = format!("X = {}\n", hecke::homfly_of_braid(&w, guard)?);
    if normalized {
        writeln!(out, "P = {}", hecke::normalized_homfly(&w, guard)?)?;
    }
    Ok(out)
}

#[derive(Serialize)]
struct Row {
    partition: Vec<usize>,
    alpha: String,
    qdim: String,
    dim: Value,
}

pub fn table(max_cells: usize, n: u32, json: bool, unsafe_max: Option<usize>) -> Result<String> {
    bound("--max-cells", max_cells, TABLE_MAX_CELLS, unsafe_max)?;
    let ctx = EvaluationContext::new(n)?;
    let parts = YoungDiagram::partitions_up_to(max_cells);
    let rows = parts
        .par_iter()
        .map(|l| {
            Ok(Row {
                partition: l.rows().to_vec(),
                alpha: alpha_poly(l).to_string(),
                qdim: qdim::qdim(l, ctx)?.to_string(),
                dim: dim_value(&classical_dim(l, n)?),
            })
        })
        .collect::<Result<Vec<Row>>>()?;
    if json {
        return Ok(format!("{}\n", serde_json::to_string_pretty(&rows)?));
    }
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["partition", "alpha", "qdim", "dim"])?;
    for (l, r) in parts.iter().zip(&rows) {
        let dim = match &r.dim {
            Value::String(s) => s.clone(),
            d => d.to_string(),
        };
        w.write_record([l.to_string(), r.alpha.clone(), r.qdim.clone(), dim])?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

/// Returns the report and whether every suite passed.
pub fn verify(max_cells: usize, checks: &[Check], unsafe_max: Option<usize>, guard: &Guard) -> Result<(String, bool)> {
    bound("--max-cells", max_cells, VERIFY_MAX_CELLS, unsafe_max)?;
    let checks = if checks.is_empty() { &Check::ALL[..] } else { checks };
    let reports = verify::run_all(checks, max_cells, guard)?;
    let mut out = String::new();
    for r in &reports {
        writeln!(out, "{r}")?;
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    if failed == 0 {
        writeln!(out, "all {} checks passed", reports.len())?;
    } else {
        writeln!(out, "{failed} of {} checks failed", reports.len())?;
    }
    Ok((out, failed == 0))
}
