use crate::args::{Family, Format, GfArgs};
use crate::output::{self, opt};
use crate::Status;
use anyhow::{bail, Result};
use rotsym::theory::{builtin_gfs, gf_series};
use rotsym::{f2_table, f3_table};
use serde::Serialize;

const UPTO_MAX: usize = 64;
/// Coefficients are checked against built tables up to this dimension.
const CHECK_MAX_VARS: usize = 20;

#[derive(Debug, Serialize)]
pub struct GfRow {
    pub n: usize,
    pub coefficient: i128,
    pub computed: Option<u64>,
    pub agrees: Option<bool>,
}

fn computed_weight(family: Family, n: usize) -> Result<Option<u64>> {
    let first = match family {
        Family::F2 => 5,
        Family::F3 => 3,
    };
    if n < first || n > CHECK_MAX_VARS {
        return Ok(None);
    }
    let (t, _) = match family {
        Family::F2 => f2_table(n)?,
        Family::F3 => f3_table(n)?,
    };
    Ok(Some(t.weight()))
}

pub fn rows(family: Family, upto: usize) -> Result<Vec<GfRow>> {
    let (f2, f3) = builtin_gfs();
    let gf = match family {
        Family::F2 => f2,
        Family::F3 => f3,
    };
    gf_series(&gf, upto)
        .into_iter()
        .enumerate()
        .map(|(n, coefficient)| {
            let computed = computed_weight(family, n)?;
            Ok(GfRow {
                n,
                coefficient,
                computed,
                agrees: computed.map(|w| i128::from(w) == coefficient),
            })
        })
        .collect()
}

pub fn run(a: &GfArgs) -> Result<Status> {
    if a.upto > UPTO_MAX {
        bail!("--upto is limited to {UPTO_MAX}");
    }
    let rows = rows(a.family, a.upto)?;
    let out = match a.format {
        Format::Text => {
            let coefficients: Vec<String> = rows.iter().map(|r| r.coefficient.to_string()).collect();
            let mut s = format!("coefficients: {}\n", coefficients.join(", "));
            s += &format!("{:>3} {:>22} {:>10} {:>7}\n", "n", "coefficient", "computed", "agrees");
            for r in &rows {
                s += &format!(
                    "{:>3} {:>22} {:>10} {:>7}\n",
                    r.n,
                    r.coefficient,
                    r.computed.map_or("-".into(), |w| w.to_string()),
                    r.agrees.map_or("-", output::yes_no),
                );
            }
            s
        }
        Format::Csv => output::csv(
            &["n", "coefficient", "computed", "agrees"],
            rows.iter()
                .map(|r| [r.n.to_string(), r.coefficient.to_string(), opt(r.computed), opt(r.agrees)]),
        )?,
        Format::Json => output::json(&rows)?,
    };
    output::print(&out)?;
    let mismatch = rows.iter().any(|r| r.agrees == Some(false));
    Ok(if mismatch { Status::Mismatch } else { Status::Ok })
}
