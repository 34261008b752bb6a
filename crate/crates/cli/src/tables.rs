//! Recomputes the f3 weight/nonlinearity tables and diffs them against the
//! bundled reference values.

use crate::args::{Format, TablesArgs};
use crate::output::{self, opt};
use crate::Status;
use anyhow::Result;
use rotsym::builders::f3_component;
use rotsym::{component_weights_f3, f3_table, nonlinearity};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

const NL_REFERENCE: &str = include_str!("../resources/f3_nonlinearity.csv");
const WEIGHT_REFERENCE: &str = include_str!("../resources/f3_weights.csv");
const NL_RANGE: std::ops::RangeInclusive<usize> = 3..=9;
const WEIGHT_RANGE: std::ops::RangeInclusive<usize> = 3..=12;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Row {
    pub n: usize,
    pub weight: u64,
    pub nonlinearity: u64,
    /// Weights of h1^(n-1), h2^(n-2), h3^(n-3), h4^(n-3); absent where undefined.
    pub components: [Option<u64>; 4],
}

#[derive(Debug, Deserialize)]
struct NlRef {
    n: usize,
    nonlinearity: u64,
}

#[derive(Debug, Deserialize)]
struct WeightRef {
    n: usize,
    weight: u64,
    h1: Option<u64>,
    h2: Option<u64>,
    h3: Option<u64>,
    h4: Option<u64>,
}

fn parse<T: for<'de> Deserialize<'de>>(text: &str) -> Result<Vec<T>> {
    let mut r = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .from_reader(text.as_bytes());
    Ok(r.deserialize().collect::<Result<_, _>>()?)
}

fn components(n: usize) -> Result<[Option<u64>; 4]> {
    if n >= rotsym::builders::F3_MIN_VARS {
        return Ok(component_weights_f3(n)?.map(Some));
    }
    let s = [n - 1, n - 2, n - 3, n - 3];
    let mut out = [None; 4];
    for (i, &s) in s.iter().enumerate() {
        if s >= 4 {
            out[i] = Some(f3_component(i + 1, s)?.weight());
        }
    }
    Ok(out)
}

pub fn compute() -> Result<Vec<Row>> {
    WEIGHT_RANGE
        .map(|n| {
            let (t, _) = f3_table(n)?;
            Ok(Row {
                n,
                weight: t.weight(),
                nonlinearity: nonlinearity(&t),
                components: components(n)?,
            })
        })
        .collect()
}

/// One line per disagreeing cell.
pub fn diff(rows: &[Row]) -> Result<Vec<String>> {
    let by_n: BTreeMap<usize, &Row> = rows.iter().map(|r| (r.n, r)).collect();
    let mut out = Vec::new();
    let mut cell = |n: usize, column: &str, expected: String, computed: String| {
        if expected != computed {
            out.push(format!("n={n} {column}: reference {expected:?}, computed {computed:?}"));
        }
    };
    let nl_ref: Vec<NlRef> = parse(NL_REFERENCE)?;
    let w_ref: Vec<WeightRef> = parse(WEIGHT_REFERENCE)?;
    for n in NL_RANGE {
        let expected = nl_ref.iter().find(|r| r.n == n).map(|r| r.nonlinearity);
        cell(n, "nonlinearity", opt(expected), opt(by_n.get(&n).map(|r| r.nonlinearity)));
    }
    for n in WEIGHT_RANGE {
        let reference = w_ref.iter().find(|r| r.n == n);
        let row = by_n.get(&n);
        cell(n, "weight", opt(reference.map(|r| r.weight)), opt(row.map(|r| r.weight)));
        let expected = reference.map_or([None; 4], |r| [r.h1, r.h2, r.h3, r.h4]);
        for i in 0..4 {
            let computed = row.and_then(|r| r.components[i]);
            cell(n, &format!("h{}", i + 1), opt(expected[i]), opt(computed));
        }
    }
    Ok(out)
}

fn text(rows: &[Row]) -> String {
    let mut s = format!(
        "{:>3} {:>6} {:>12} {:>6} {:>6} {:>6} {:>6}\n",
        "n", "weight", "nonlinearity", "h1", "h2", "h3", "h4"
    );
    for r in rows {
        let [h1, h2, h3, h4] = r.components.map(|c| c.map_or("-".to_string(), |v| v.to_string()));
        s += &format!(
            "{:>3} {:>6} {:>12} {:>6} {:>6} {:>6} {:>6}\n",
            r.n, r.weight, r.nonlinearity, h1, h2, h3, h4
        );
    }
    s
}

pub fn run(a: &TablesArgs) -> Result<Status> {
    let rows = compute()?;
    let mismatches = diff(&rows)?;
    let out = match a.format {
        Format::Text => {
            let mut s = text(&rows);
            if mismatches.is_empty() {
                s += "all values match the reference tables\n";
            }
            s
        }
        Format::Csv => output::csv(
            &["n", "weight", "nonlinearity", "h1", "h2", "h3", "h4"],
            rows.iter().map(|r| {
                let mut v = vec![r.n.to_string(), r.weight.to_string(), r.nonlinearity.to_string()];
                v.extend(r.components.map(opt));
                v
            }),
        )?,
        Format::Json => output::json(&serde_json::json!({ "rows": rows, "mismatches": mismatches }))?,
    };
    output::print(&out)?;
    for m in &mismatches {
        eprintln!("mismatch: {m}");
    }
    Ok(if mismatches.is_empty() { Status::Ok } else { Status::Mismatch })
}
