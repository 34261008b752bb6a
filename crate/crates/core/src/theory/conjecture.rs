//! Scan comparing weight and nonlinearity of `f_3^n`.

use crate::builders::f3_table;
use crate::criteria::nonlinearity;
use crate::error::{check_size, Result, MAX_VARS};
use serde::Serialize;

/// Last dimension covered by the published nonlinearity table.
pub const PUBLISHED_NL_MAX: usize = 9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Source {
    /// A published reference value exists for this row.
    PaperTable,
    Computed,
}

impl Source {
    pub fn as_str(self) -> &'static str {
        match self {
            Source::PaperTable => "paper-table",
            Source::Computed => "computed",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureRow {
    pub n: usize,
    pub weight: u64,
    pub nonlinearity: u64,
    pub source: Source,
}

impl ConjectureRow {
    pub fn holds(&self) -> bool {
        self.weight == self.nonlinearity
    }
}

pub fn conjecture_row(n: usize) -> Result<ConjectureRow> {
    check_size(n, 3, MAX_VARS)?;
    let (table, _) = f3_table(n)?;
    Ok(ConjectureRow {
        n,
        weight: table.weight(),
        nonlinearity: nonlinearity(&table),
        source: if n <= PUBLISHED_NL_MAX {
            Source::PaperTable
        } else {
            Source::Computed
        },
    })
}

/// One row per `n` in `n_lo..=n_hi`; equality is reported, never asserted.
pub fn conjecture_check(n_lo: usize, n_hi: usize) -> Result<Vec<ConjectureRow>> {
    check_size(n_lo, 3, MAX_VARS)?;
    check_size(n_hi, n_lo, MAX_VARS)?;
    (n_lo..=n_hi).map(conjecture_row).collect()
}

/// First row where weight and nonlinearity differ.
pub fn first_counterexample(rows: &[ConjectureRow]) -> Option<&ConjectureRow> {
    rows.iter().find(|r| !r.holds())
}
