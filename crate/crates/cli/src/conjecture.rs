use crate::args::{ConjectureArgs, Format};
use crate::construct::check_n;
use crate::output::{self, yes_no};
use crate::Status;
use anyhow::Result;
use rotsym::theory::{conjecture_check, first_counterexample};

pub fn run(a: &ConjectureArgs) -> Result<Status> {
    let r = a.n_range;
    check_n(r.lo, a.allow_large)?;
    check_n(r.hi, a.allow_large)?;
    let rows = conjecture_check(r.lo, r.hi)?;
    let first = first_counterexample(&rows);
    let summary = match first {
        None => format!("conjecture holds on [{}, {}]", r.lo, r.hi),
        Some(c) => format!(
            "first counterexample: n={} weight={} nonlinearity={}",
            c.n, c.weight, c.nonlinearity
        ),
    };
    let out = match a.format {
        Format::Text => {
            let mut s = format!(
                "{:>3} {:>8} {:>12} {:>6}  {}\n",
                "n", "weight", "nonlinearity", "equal", "source"
            );
            for row in &rows {
                s += &format!(
                    "{:>3} {:>8} {:>12} {:>6}  {}\n",
                    row.n,
                    row.weight,
                    row.nonlinearity,
                    yes_no(row.holds()),
                    row.source.as_str()
                );
            }
            s + &summary + "\n"
        }
        Format::Csv => {
            eprintln!("{summary}");
            output::csv(
                &["n", "weight", "nonlinearity", "source"],
                rows.iter().map(|row| {
                    [
                        row.n.to_string(),
                        row.weight.to_string(),
                        row.nonlinearity.to_string(),
                        row.source.as_str().to_string(),
                    ]
                }),
            )?
        }
        Format::Json => output::json(&serde_json::json!({
            "rows": rows,
            "holds": first.is_none(),
            "first_counterexample": first.map(|c| c.n),
        }))?,
    };
    output::print(&out)?;
    Ok(Status::Ok)
}
