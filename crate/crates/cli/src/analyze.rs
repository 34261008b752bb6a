use crate::args::{AnalyzeArgs, Format};
use crate::construct::{check_n, construct};
use crate::output::{self, yes_no};
use crate::Status;
use anyhow::{bail, Context, Result};
use rotsym::criteria::{is_bent_spectrum, is_semi_bent_spectrum, nonlinearity_from_spectrum, pc_profile};
use rotsym::{walsh_transform, PcProfile, TruthTable};
use serde::Serialize;
use std::io::Read;
use std::path::Path;

#[derive(Debug, Serialize)]
pub struct Report {
    pub n: usize,
    pub weight: u64,
    pub nonlinearity: u64,
    pub balanced: bool,
    pub bent: bool,
    pub semibent: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pc: Option<PcReport>,
}

#[derive(Debug, Serialize)]
pub struct PcReport {
    pub degree: usize,
    pub sac: bool,
    #[serde(flatten)]
    pub profile: PcProfile,
}

pub fn report(t: &TruthTable, with_pc: bool) -> Result<Report> {
    let s = walsh_transform(t);
    let pc = if with_pc {
        let profile = pc_profile(t)?;
        Some(PcReport {
            degree: profile.pc_degree(),
            sac: profile.is_sac(),
            profile,
        })
    } else {
        None
    };
    Ok(Report {
        n: t.num_vars(),
        weight: t.weight(),
        nonlinearity: nonlinearity_from_spectrum(&s),
        balanced: t.is_balanced(),
        bent: is_bent_spectrum(&s),
        semibent: is_semi_bent_spectrum(&s),
        pc,
    })
}

fn read_table(path: &Path) -> Result<TruthTable> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        s
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    TruthTable::from_text(&text).with_context(|| format!("parsing {}", path.display()))
}

fn tables(a: &AnalyzeArgs) -> Result<Vec<TruthTable>> {
    if let Some(path) = &a.from_file {
        let t = read_table(path)?;
        check_n(t.num_vars(), a.allow_large)?;
        return Ok(vec![t]);
    }
    let Some(selector) = a.selector else {
        bail!("give a selector with --n or --n-range, or --from-file");
    };
    let ns: Vec<usize> = match (a.n, a.n_range) {
        (Some(n), None) => vec![n],
        (None, Some(r)) => r.iter().collect(),
        _ => bail!("give exactly one of --n or --n-range"),
    };
    ns.into_iter()
        .map(|n| {
            check_n(n, a.allow_large)?;
            Ok(construct(selector, n, a.generator.as_deref())?.0)
        })
        .collect()
}

fn text(reports: &[Report]) -> String {
    let mut s = String::new();
    for r in reports {
        s += &format!(
            "n={} weight={} nonlinearity={} balanced={} bent={} semibent={}\n",
            r.n,
            r.weight,
            r.nonlinearity,
            yes_no(r.balanced),
            yes_no(r.bent),
            yes_no(r.semibent)
        );
        if let Some(pc) = &r.pc {
            s += &format!("  pc degree={} sac={}\n", pc.degree, yes_no(pc.sac));
            for c in &pc.profile.classes {
                s += &format!("  pc weight {:>2}: {}/{}\n", c.weight, c.satisfied, c.total);
            }
        }
    }
    s
}

fn csv(reports: &[Report], with_pc: bool) -> Result<String> {
    let mut header = vec!["n", "weight", "nonlinearity", "balanced", "bent", "semibent"];
    if with_pc {
        header.extend(["pc_degree", "sac"]);
    }
    let rows = reports.iter().map(|r| {
        let mut row = vec![
            r.n.to_string(),
            r.weight.to_string(),
            r.nonlinearity.to_string(),
            r.balanced.to_string(),
            r.bent.to_string(),
            r.semibent.to_string(),
        ];
        if let Some(pc) = &r.pc {
            row.extend([pc.degree.to_string(), pc.sac.to_string()]);
        }
        row
    });
    output::csv(&header, rows)
}

pub fn run(a: &AnalyzeArgs) -> Result<Status> {
    let tables = tables(a)?;
    if let Some(path) = &a.spectrum {
        let [t] = tables.as_slice() else {
            bail!("--spectrum needs a single table");
        };
        std::fs::write(path, walsh_transform(t).to_csv())
            .with_context(|| format!("writing {}", path.display()))?;
    }
    let reports = tables
        .iter()
        .map(|t| report(t, a.pc))
        .collect::<Result<Vec<_>>>()?;
    let out = match a.format {
        Format::Text => text(&reports),
        Format::Csv => csv(&reports, a.pc)?,
        Format::Json => output::json(&reports)?,
    };
    output::print(&out)?;
    Ok(Status::Ok)
}
