//! Closed forms and recurrences for weights and nonlinearities.

use crate::anf::AnfPolynomial;
use crate::error::{check_size, Error, Result, MAX_VARS};
use crate::truth_table::TruthTable;
use serde::Serialize;

/// Weights indexed by dimension, starting at `start_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightSequence {
    pub start_n: usize,
    pub values: Vec<u64>,
}

impl WeightSequence {
    pub fn get(&self, n: usize) -> Option<u64> {
        n.checked_sub(self.start_n)
            .and_then(|k| self.values.get(k).copied())
    }

    /// Every value lies in `0..=2^n`.
    pub fn is_admissible(&self) -> bool {
        self.values
            .iter()
            .enumerate()
            .all(|(k, &v)| v <= 1u64 << (self.start_n + k))
    }
}

fn below(n: usize, min: usize) -> Result<()> {
    check_size(n, min, 62)
}

/// `wt(f_2^n) = 2^(n-1) - 2^(n/2 - 1) (1 + (-1)^n)`, evaluated per parity:
/// `2^(n-1)` for odd `n`, `2^(n-1) - 2^(n/2)` for even `n`.
pub fn wt_f2_closed(n: usize) -> Result<u64> {
    below(n, 4)?;
    let half = 1u64 << (n - 1);
    Ok(if n % 2 == 1 { half } else { half - (1u64 << (n / 2)) })
}

/// `wt(f_2^n) = 2 wt(f_2^(n-2)) + 2^(n-2)` from `wt(f_2^5) = 16`, `wt(f_2^6) = 24`.
pub fn wt_f2_recurrence(n: usize) -> Result<u64> {
    below(n, 5)?;
    // Indexed by parity of n.
    let mut prev = [24u64, 16u64];
    for s in 7..=n {
        let next = 2 * prev[(s - 2) % 2] + (1u64 << (s - 2));
        prev[s % 2] = next;
    }
    Ok(prev[n % 2])
}

/// `wt(f_3^s) = 2 (wt(f_3^(s-2)) + wt(f_3^(s-3))) + 2^(s-3)` for `s >= 6`,
/// seeded with 1, 4, 6 at `n = 3, 4, 5`.
pub fn wt_f3_recurrence(n: usize) -> Result<u64> {
    below(n, 3)?;
    let mut w = vec![0u64, 0, 0, 1, 4, 6];
    for s in 6..=n {
        let next = 2 * (w[s - 2] + w[s - 3]) + (1u64 << (s - 3));
        w.push(next);
    }
    Ok(w[n])
}

pub fn f3_weight_sequence(n_lo: usize, n_hi: usize) -> Result<WeightSequence> {
    let values = (n_lo..=n_hi)
        .map(wt_f3_recurrence)
        .collect::<Result<Vec<_>>>()?;
    Ok(WeightSequence {
        start_n: n_lo,
        values,
    })
}

/// `2^(n-1) - 2^((n-1)/2)` for odd `n`, `2^(n-1) - 2^(n/2)` for even `n`.
pub fn nl_f2(n: usize) -> Result<u64> {
    below(n, 4)?;
    let half = 1u64 << (n - 1);
    Ok(if n % 2 == 1 {
        half - (1u64 << ((n - 1) / 2))
    } else {
        half - (1u64 << (n / 2))
    })
}

/// Lower bound `2^(n-k)` on the nonlinearity of the degree-`k` function.
pub fn nl_lower_bound_fk(n: usize, k: usize) -> Result<u64> {
    if k == 0 || k > n {
        return Err(Error::Index { index: k, n });
    }
    below(n, 1)?;
    Ok(1u64 << (n - k))
}

pub fn satisfies_nl_bound(nonlinearity: u64, n: usize, k: usize) -> Result<bool> {
    Ok(nonlinearity >= nl_lower_bound_fk(n, k)?)
}

/// The open chain `t_n = x_1x_2 + x_2x_3 + ... + x_(n-1)x_n`.
pub fn t_chain_anf(n: usize) -> Result<AnfPolynomial> {
    check_size(n, 3, MAX_VARS)?;
    AnfPolynomial::new(n, (1..n).map(|i| [i, i + 1]))
}

pub fn t_chain(n: usize) -> Result<TruthTable> {
    t_chain_anf(n)?.to_truth_table()
}
