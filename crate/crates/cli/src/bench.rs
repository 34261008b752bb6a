use crate::args::{BenchArgs, Family, Format, NRange};
use crate::output;
use crate::Status;
use anyhow::{bail, Result};
use rotsym::builders::{f2_cost_formula, f3_cost_formula_published, naive_cost_estimate, F2_MIN_VARS, F3_MIN_VARS};
use rotsym::monomial::{f2_anf, f3_anf};
use rotsym::{build_f2, build_f3, OpCounter, TruthTable};
use serde::Serialize;
use std::time::{Duration, Instant};

const BENCH_MAX_VARS: usize = 24;
/// Above this the naive oracle is too slow to run alongside.
const ORACLE_MAX_VARS: usize = 14;

#[derive(Debug, Serialize)]
pub struct BenchRow {
    pub n: usize,
    pub naive_estimate: u64,
    pub measured_blocks: u64,
    pub measured_bits: u64,
    pub published: u64,
    pub deviation: i64,
    /// `None` when the oracle was skipped.
    pub oracle_agrees: Option<bool>,
    #[serde(skip)]
    build_time: Duration,
    #[serde(skip)]
    oracle_time: Option<Duration>,
}

pub fn measure(family: Family, n: usize) -> Result<BenchRow> {
    let mut counter = OpCounter::new();
    let start = Instant::now();
    let table = match family {
        Family::F2 => build_f2(n, &mut counter)?,
        Family::F3 => build_f3(n, &mut counter)?,
    };
    let build_time = start.elapsed();
    let (oracle_agrees, oracle_time) = if n <= ORACLE_MAX_VARS {
        let start = Instant::now();
        let anf = match family {
            Family::F2 => f2_anf(n)?,
            Family::F3 => f3_anf(n)?,
        };
        let naive: TruthTable = anf.to_truth_table()?;
        (Some(naive == table), Some(start.elapsed()))
    } else {
        (None, None)
    };
    let published = match family {
        Family::F2 => f2_cost_formula(n),
        Family::F3 => f3_cost_formula_published(n),
    };
    let measured_blocks = counter.block_complements();
    Ok(BenchRow {
        n,
        naive_estimate: naive_cost_estimate(n).round() as u64,
        measured_blocks,
        measured_bits: counter.bit_complements(),
        published,
        deviation: measured_blocks as i64 - published as i64,
        oracle_agrees,
        build_time,
        oracle_time,
    })
}

fn range(a: &BenchArgs) -> Result<NRange> {
    let min = match a.family {
        Family::F2 => F2_MIN_VARS,
        Family::F3 => F3_MIN_VARS,
    };
    let r = a.n_range.unwrap_or(NRange { lo: min, hi: 16 });
    if r.lo < min || r.hi > BENCH_MAX_VARS {
        bail!("bench range must lie in {min}..={BENCH_MAX_VARS}");
    }
    Ok(r)
}

fn ms(d: Duration) -> String {
    format!("{:.3}", d.as_secs_f64() * 1e3)
}

pub fn run(a: &BenchArgs) -> Result<Status> {
    let rows = range(a)?
        .iter()
        .map(|n| measure(a.family, n))
        .collect::<Result<Vec<_>>>()?;
    let agrees = |r: &BenchRow| r.oracle_agrees.map_or(String::new(), |b| b.to_string());
    let out = match a.format {
        // Wall times are only shown here so that csv and json stay deterministic.
        Format::Text => {
            let mut s = format!(
                "{:>3} {:>14} {:>10} {:>10} {:>10} {:>10} {:>11} {:>11} {:>7}\n",
                "n", "naive_estimate", "blocks", "bits", "published", "deviation", "build_ms", "oracle_ms", "agrees"
            );
            for r in &rows {
                s += &format!(
                    "{:>3} {:>14} {:>10} {:>10} {:>10} {:>10} {:>11} {:>11} {:>7}\n",
                    r.n,
                    r.naive_estimate,
                    r.measured_blocks,
                    r.measured_bits,
                    r.published,
                    r.deviation,
                    ms(r.build_time),
                    r.oracle_time.map_or("-".into(), ms),
                    r.oracle_agrees.map_or("-".into(), |b| output::yes_no(b).to_string()),
                );
            }
            s
        }
        Format::Csv => output::csv(
            &["n", "naive_estimate", "measured_blocks", "measured_bits", "published", "deviation", "oracle_agrees"],
            rows.iter().map(|r| {
                [
                    r.n.to_string(),
                    r.naive_estimate.to_string(),
                    r.measured_blocks.to_string(),
                    r.measured_bits.to_string(),
                    r.published.to_string(),
                    r.deviation.to_string(),
                    agrees(r),
                ]
            }),
        )?,
        Format::Json => output::json(&rows)?,
    };
    output::print(&out)?;
    let mismatch = rows.iter().any(|r| r.oracle_agrees == Some(false));
    Ok(if mismatch { Status::Mismatch } else { Status::Ok })
}
