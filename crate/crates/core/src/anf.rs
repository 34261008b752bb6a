//! Algebraic normal form and its naive evaluation.
//!
//! [`AnfPolynomial::to_truth_table`] evaluates every monomial at every point
//! and serves as the reference the fast builders are checked against.

use crate::error::{check_size, Error, Result, MAX_VARS};
use crate::truth_table::{index_of, var_mask, TruthTable};
use std::collections::BTreeSet;
use std::fmt;

/// A monomial as a strictly increasing list of 1-based variable indices.
/// The empty monomial is the constant 1.
pub type Monomial = Vec<usize>;

#[derive(Clone, PartialEq, Eq)]
pub struct AnfPolynomial {
    n: usize,
    monomials: BTreeSet<Monomial>,
}

impl AnfPolynomial {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            monomials: BTreeSet::new(),
        }
    }

    /// XOR of the given monomials. Repeated monomials cancel in pairs.
    pub fn new<I, M>(n: usize, monomials: I) -> Result<Self>
    where
        I: IntoIterator<Item = M>,
        M: AsRef<[usize]>,
    {
        let mut p = Self::zero(n);
        for m in monomials {
            p.toggle(m.as_ref())?;
        }
        Ok(p)
    }

    /// Adds `monomial` (XOR). Indices may be given in any order; repeats
    /// within one monomial collapse since `x * x = x`.
    pub fn toggle(&mut self, monomial: &[usize]) -> Result<()> {
        let mut m: Monomial = monomial.to_vec();
        m.sort_unstable();
        m.dedup();
        if let Some(&bad) = m.iter().find(|&&v| v == 0 || v > self.n) {
            return Err(Error::Index {
                index: bad,
                n: self.n,
            });
        }
        if !self.monomials.remove(&m) {
            self.monomials.insert(m);
        }
        Ok(())
    }

    #[inline]
    pub fn num_vars(&self) -> usize {
        self.n
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.monomials.iter()
    }

    pub fn contains(&self, monomial: &[usize]) -> bool {
        self.monomials.contains(monomial)
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.monomials.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Value at the assignment `(x_1, ..., x_n)`.
    pub fn evaluate(&self, point: &[bool]) -> bool {
        assert_eq!(point.len(), self.n, "assignment length must equal n");
        self.evaluate_index(index_of(point))
    }

    /// Value at the assignment encoded by a truth-table index.
    pub fn evaluate_index(&self, index: usize) -> bool {
        self.monomials
            .iter()
            .filter(|m| m.iter().all(|&v| index & var_mask(v, self.n) != 0))
            .count()
            % 2
            == 1
    }

    pub fn to_truth_table(&self) -> Result<TruthTable> {
        check_size(self.n, 1, MAX_VARS)?;
        let masks: Vec<usize> = self
            .monomials
            .iter()
            .map(|m| m.iter().fold(0, |acc, &v| acc | var_mask(v, self.n)))
            .collect();
        TruthTable::from_fn(self.n, |i| {
            masks.iter().filter(|&&m| i & m == m).count() % 2 == 1
        })
    }
}

impl fmt::Display for AnfPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.monomials.is_empty() {
            return f.write_str("0");
        }
        for (k, m) in self.monomials.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            if m.is_empty() {
                f.write_str("1")?;
            }
            for v in m {
                write!(f, "x{v}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for AnfPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AnfPolynomial(n={}, {})", self.n, self)
    }
}
