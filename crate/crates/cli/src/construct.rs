use crate::args::{BuildArgs, Selector};
use crate::output;
use crate::Status;
use anyhow::{bail, Context, Result};
use rotsym::monomial::monomial_table_general;
use rotsym::theory::t_chain;
use rotsym::{f2_table, f3_table, rots_orbit_anf, AnfPolynomial, BitString, OpCounter, TruthTable};

pub const DEFAULT_MAX_VARS: usize = 20;
const BLOCKS_MAX_VARS: usize = 10;

pub fn check_n(n: usize, allow_large: bool) -> Result<()> {
    let hi = if allow_large { rotsym::MAX_VARS } else { DEFAULT_MAX_VARS };
    if !(3..=hi).contains(&n) {
        let hint = if allow_large { "" } else { " (use --allow-large for up to 26)" };
        bail!("n={n} out of range 3..={hi}{hint}");
    }
    Ok(())
}

/// Truth table for a named selector; the counter is present when a fast builder ran.
pub fn construct(
    selector: Selector,
    n: usize,
    generator: Option<&[usize]>,
) -> Result<(TruthTable, Option<OpCounter>)> {
    let needs_generator = matches!(selector, Selector::Monomial | Selector::Orbit);
    match (needs_generator, generator) {
        (true, None) => bail!("--generator is required for this selector"),
        (false, Some(_)) => bail!("--generator only applies to `monomial` and `orbit`"),
        _ => {}
    }
    Ok(match selector {
        Selector::F2 => f2_table(n)?,
        Selector::F3 => f3_table(n)?,
        Selector::T => (t_chain(n)?, None),
        Selector::Monomial => {
            let g = generator.unwrap_or_default();
            let t = if g.len() >= 2 {
                monomial_table_general(g, n)?
            } else {
                AnfPolynomial::new(n, [g.to_vec()])?.to_truth_table()?
            };
            (t, None)
        }
        Selector::Orbit => {
            let g = generator.unwrap_or_default();
            (rots_orbit_anf(g, n)?.to_truth_table()?, None)
        }
    })
}

pub fn block_notation(t: &TruthTable) -> Result<String> {
    let bits: String = t.iter().map(|b| if b { '1' } else { '0' }).collect();
    let s = BitString::from_bit_str(&bits)?;
    Ok(s.blocks().iter().map(ToString::to_string).collect())
}

pub fn run(a: &BuildArgs) -> Result<Status> {
    check_n(a.n, a.allow_large)?;
    if a.blocks && a.n > BLOCKS_MAX_VARS {
        bail!("--blocks is limited to n <= {BLOCKS_MAX_VARS}");
    }
    let (table, counter) = construct(a.selector, a.n, a.generator.as_deref())?;
    let text = table.to_text();
    match &a.output {
        Some(path) => std::fs::write(path, &text)
            .with_context(|| format!("writing {}", path.display()))?,
        None => output::print(&text)?,
    }
    if let Some(c) = counter {
        eprintln!(
            "op-count: {} block complements ({} bit complements)",
            c.block_complements(),
            c.bit_complements()
        );
    }
    if a.blocks {
        eprintln!("blocks: {}", block_notation(&table)?);
    }
    Ok(Status::Ok)
}
