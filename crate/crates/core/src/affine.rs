//! Affine changes of variables `g(x) = h(Ax ^ a) ^ b.x ^ c`.
//!
//! Vectors use the truth-table index convention: coordinate `x_k` is bit
//! `n - k` of the integer.

use crate::error::{Error, Result};
use crate::truth_table::TruthTable;

/// Square matrix over GF(2). Row `r` (0-based, coordinate `x_{r+1}` of the
/// output) is a column mask in the index convention.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gf2Matrix {
    n: usize,
    rows: Vec<usize>,
}

#[inline]
fn parity(v: usize) -> bool {
    v.count_ones() % 2 == 1
}

impl Gf2Matrix {
    pub fn identity(n: usize) -> Self {
        Self {
            n,
            rows: (0..n).map(|r| 1 << (n - 1 - r)).collect(),
        }
    }

    /// Matrix with the given row masks; no invertibility check.
    pub fn from_rows(n: usize, rows: Vec<usize>) -> Result<Self> {
        if rows.len() != n {
            return Err(Error::Dimension {
                left: n,
                right: rows.len(),
            });
        }
        if let Some(&bad) = rows.iter().find(|&&r| r >> n != 0) {
            return Err(Error::Index { index: bad, n });
        }
        Ok(Self { n, rows })
    }

    /// Entry at row `r`, column `c` (both 0-based coordinates).
    pub fn get(&self, r: usize, c: usize) -> bool {
        self.rows[r] >> (self.n - 1 - c) & 1 == 1
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn mul_vec(&self, x: usize) -> usize {
        self.rows
            .iter()
            .fold(0, |acc, &row| (acc << 1) | usize::from(parity(row & x)))
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let rows = (0..n)
            .map(|c| (0..n).fold(0, |acc, r| (acc << 1) | usize::from(self.get(r, c))))
            .collect();
        Self { n, rows }
    }

    /// Gauss–Jordan inverse; `Err(Singular)` when the rank is short.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.n;
        let mut a = self.rows.clone();
        let mut inv = Self::identity(n).rows;
        for col in 0..n {
            let bit = 1 << (n - 1 - col);
            let pivot = (col..n).find(|&r| a[r] & bit != 0).ok_or(Error::Singular)?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            for r in 0..n {
                if r != col && a[r] & bit != 0 {
                    a[r] ^= a[col];
                    inv[r] ^= inv[col];
                }
            }
        }
        Ok(Self { n, rows: inv })
    }

    pub fn is_invertible(&self) -> bool {
        self.inverse().is_ok()
    }

    pub fn mul(&self, other: &Gf2Matrix) -> Self {
        let t = other.transpose();
        let rows = self
            .rows
            .iter()
            .map(|&row| {
                t.rows
                    .iter()
                    .fold(0, |acc, &col| (acc << 1) | usize::from(parity(row & col)))
            })
            .collect();
        Self { n: self.n, rows }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineTransform {
    pub matrix: Gf2Matrix,
    pub a: usize,
    pub b: usize,
    pub c: bool,
}

impl AffineTransform {
    pub fn new(matrix: Gf2Matrix, a: usize, b: usize, c: bool) -> Result<Self> {
        let n = matrix.dim();
        for v in [a, b] {
            if v >> n != 0 {
                return Err(Error::Index { index: v, n });
            }
        }
        if !matrix.is_invertible() {
            return Err(Error::Singular);
        }
        Ok(Self { matrix, a, b, c })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            matrix: Gf2Matrix::identity(n),
            a: 0,
            b: 0,
            c: false,
        }
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }
}

/// Pointwise `g(x) = h(Ax ^ a) ^ (b.x) ^ c`.
pub fn apply_affine_transform(h: &TruthTable, t: &AffineTransform) -> Result<TruthTable> {
    if t.dim() != h.num_vars() {
        return Err(Error::Dimension {
            left: h.num_vars(),
            right: t.dim(),
        });
    }
    TruthTable::from_fn(h.num_vars(), |x| {
        h.get(t.matrix.mul_vec(x) ^ t.a) ^ parity(t.b & x) ^ t.c
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::anf::AnfPolynomial;

    fn table(n: usize, ms: &[&[usize]]) -> TruthTable {
        AnfPolynomial::new(n, ms.iter().copied())
            .unwrap()
            .to_truth_table()
            .unwrap()
    }

    #[test]
    fn identity_is_noop() {
        let h = table(4, &[&[1, 2], &[3], &[2, 3, 4]]);
        let g = apply_affine_transform(&h, &AffineTransform::identity(4)).unwrap();
        assert_eq!(g, h);
    }

    #[test]
    fn shift_of_t4_by_alternating_vector() {
        let t4 = table(4, &[&[1, 2], &[2, 3], &[3, 4]]);
        let t = AffineTransform::new(Gf2Matrix::identity(4), 0b1010, 0, false).unwrap();
        let r = apply_affine_transform(&t4, &t).unwrap();
        // (x1+1)x2 + x2(x3+1) + (x3+1)x4 expanded: x1x2 + x2x3 + x3x4 + x4.
        let expected = table(4, &[&[1, 2], &[2, 3], &[3, 4], &[4]]);
        assert_eq!(r, expected);
    }

    #[test]
    fn singular_matrix_rejected() {
        let m = Gf2Matrix::from_rows(3, vec![0b110, 0b011, 0b101]).unwrap();
        assert_eq!(m.inverse(), Err(Error::Singular));
        assert_eq!(AffineTransform::new(m, 0, 0, false), Err(Error::Singular));
    }

    #[test]
    fn inverse_and_transpose() {
        let m = Gf2Matrix::from_rows(3, vec![0b110, 0b011, 0b001]).unwrap();
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Gf2Matrix::identity(3));
        assert_eq!(m.transpose().transpose(), m);
        assert!(m.get(0, 0) && m.get(0, 1) && !m.get(0, 2));
        assert!(m.transpose().get(1, 0));
        for x in 0..8 {
            assert_eq!(inv.mul_vec(m.mul_vec(x)), x);
        }
    }

    #[test]
    fn dimension_checked() {
        let h = TruthTable::zero(3).unwrap();
        assert!(apply_affine_transform(&h, &AffineTransform::identity(4)).is_err());
        assert!(AffineTransform::new(Gf2Matrix::identity(2), 4, 0, false).is_err());
    }
}
