//! Monomial truth tables assembled from blocks, and rotation orbits.

use crate::anf::AnfPolynomial;
use crate::blocks::{BitString, Block4};
use crate::error::{check_size, Error, Result, MAX_VARS};
use crate::truth_table::TruthTable;

/// `X_{2^e}`: `2^e` copies of block `b`.
fn run(b: Block4, e: usize) -> BitString {
    BitString::block(b).repeat(1 << e).expect("nonzero count")
}

fn pair(first: BitString, second: BitString) -> BitString {
    first.concat(&second).expect("equal halves")
}

fn rep(s: BitString, e: usize) -> BitString {
    s.repeat(1 << e).expect("nonzero count")
}

fn finish(n: usize, s: BitString) -> TruthTable {
    TruthTable::from_bitvec(n, s.into_bitvec())
}

/// Table of `x_i x_j` from the four block patterns:
///
/// * `i < j <= n-2`: `(D_{2^(n-i-2)} (D_{2^(n-j-2)} D̄_{2^(n-j-2)})_{2^(j-i-1)})_{2^(i-1)}`
/// * `j = n-1`: `(D_{2^(n-i-2)} A_{2^(n-i-2)})_{2^(i-1)}`
/// * `j = n`: `(D_{2^(n-i-2)} B_{2^(n-i-2)})_{2^(i-1)}`
/// * `(i, j) = (n-1, n)`: `V_{2^(n-2)}`
pub fn monomial_table_degree2(i: usize, j: usize, n: usize) -> Result<TruthTable> {
    check_size(n, 3, MAX_VARS)?;
    if i == 0 || i >= j || j > n {
        return Err(Error::Monomial(format!(
            "need 1 <= i < j <= n, got i={i}, j={j}, n={n}"
        )));
    }
    let s = if (i, j) == (n - 1, n) {
        run(Block4::V, n - 2)
    } else if j >= n - 1 {
        let m = if j == n - 1 { Block4::A } else { Block4::B };
        rep(pair(run(Block4::D, n - i - 2), run(m, n - i - 2)), i - 1)
    } else {
        let inner = rep(
            pair(run(Block4::D, n - j - 2), run(Block4::DBar, n - j - 2)),
            j - i - 1,
        );
        rep(pair(run(Block4::D, n - i - 2), inner), i - 1)
    };
    Ok(finish(n, s))
}

/// Table of `x_{i_1} ... x_{i_s}` (`s >= 2`, indices strictly increasing).
///
/// The innermost pattern covers one period of the deepest variable that is
/// not among the last two: `D D̄` when `i_s <= n-2`, `D M` with `M = A`/`B`
/// when only `x_{n-1}`/`x_n` is present, `D V` when both are. Each outer
/// variable then repeats the inner pattern and prefixes a run of zeros.
pub fn monomial_table_general(indices: &[usize], n: usize) -> Result<TruthTable> {
    check_size(n, 2, MAX_VARS)?;
    let s = indices.len();
    if s < 2 || s > n {
        return Err(Error::Monomial(format!("degree {s} outside 2..={n}")));
    }
    if indices[0] == 0
        || indices[s - 1] > n
        || indices.windows(2).any(|w| w[0] >= w[1])
    {
        return Err(Error::Monomial(format!(
            "indices {indices:?} must be strictly increasing in 1..={n}"
        )));
    }
    let last = indices[s - 1];
    let prev = indices[s - 2];

    // (pattern spanning one period of x_{indices[top]}, top) with `top` 0-based,
    // or the whole table when no outer variable remains.
    let (mut current, top) = if last <= n - 2 {
        (
            pair(run(Block4::D, n - last - 2), run(Block4::DBar, n - last - 2)),
            s - 1,
        )
    } else if prev < n - 1 {
        let m = if last == n - 1 { Block4::A } else { Block4::B };
        (pair(run(Block4::D, n - prev - 2), run(m, n - prev - 2)), s - 2)
    } else if s == 2 {
        return Ok(finish(n, run(Block4::V, n - 2)));
    } else {
        let anchor = indices[s - 3];
        (
            pair(run(Block4::D, n - anchor - 2), run(Block4::V, n - anchor - 2)),
            s - 3,
        )
    };
    for level in (0..top).rev() {
        let i = indices[level];
        let gap = indices[level + 1] - i - 1;
        current = pair(run(Block4::D, n - i - 2), rep(current, gap));
    }
    Ok(finish(n, rep(current, indices[0] - 1)))
}

/// XOR of the `n` cyclic shifts `x_k -> x_{k+1}` of `generator`; shifts that
/// coincide cancel in pairs.
pub fn rots_orbit_anf(generator: &[usize], n: usize) -> Result<AnfPolynomial> {
    if let Some(&bad) = generator.iter().find(|&&v| v == 0 || v > n) {
        return Err(Error::Index { index: bad, n });
    }
    let shifts = (0..n).map(|r| {
        generator
            .iter()
            .map(|&v| (v - 1 + r) % n + 1)
            .collect::<Vec<_>>()
    });
    AnfPolynomial::new(n, shifts)
}

/// Applies the index rotation `x_k -> x_{k+1}` to every monomial.
pub fn rotate_anf(p: &AnfPolynomial) -> AnfPolynomial {
    let n = p.num_vars();
    AnfPolynomial::new(
        n,
        p.monomials()
            .map(|m| m.iter().map(|&v| v % n + 1).collect::<Vec<_>>()),
    )
    .expect("rotation stays in range")
}

/// `f_2^n = x_1x_2 + x_2x_3 + ... + x_nx_1` as an ANF.
pub fn f2_anf(n: usize) -> Result<AnfPolynomial> {
    rots_orbit_anf(&[1, 2], n)
}

/// `f_3^n = x_1x_2x_3 + x_2x_3x_4 + ... + x_nx_1x_2` as an ANF.
pub fn f3_anf(n: usize) -> Result<AnfPolynomial> {
    rots_orbit_anf(&[1, 2, 3], n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn oracle(ms: &[usize], n: usize) -> TruthTable {
        AnfPolynomial::new(n, [ms]).unwrap().to_truth_table().unwrap()
    }

    #[test]
    fn degree2_examples() {
        assert_eq!(
            monomial_table_degree2(4, 5, 5).unwrap(),
            finish(5, run(Block4::V, 3))
        );
        assert_eq!(
            monomial_table_degree2(1, 2, 4).unwrap(),
            TruthTable::from_bit_str("0000000000001111").unwrap()
        );
        assert_eq!(
            monomial_table_degree2(1, 4, 4).unwrap(),
            TruthTable::from_bit_str("0000000001010101").unwrap()
        );
        assert!(monomial_table_degree2(2, 2, 4).is_err());
        assert!(monomial_table_degree2(1, 5, 4).is_err());
        assert!(monomial_table_degree2(1, 2, 2).is_err());
    }

    #[test]
    fn degree2_exhaustive_against_oracle() {
        for n in 3..=10 {
            for i in 1..n {
                for j in i + 1..=n {
                    assert_eq!(
                        monomial_table_degree2(i, j, n).unwrap(),
                        oracle(&[i, j], n),
                        "x{i}x{j} n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn general_examples() {
        let dv = BitString::from_blocks(&[Block4::D, Block4::V]).unwrap();
        assert_eq!(
            monomial_table_general(&[3, 4, 5], 5).unwrap(),
            finish(5, dv.repeat(4).unwrap())
        );
        let d3a = BitString::from_blocks(&[Block4::D, Block4::D, Block4::D, Block4::A]).unwrap();
        assert_eq!(
            monomial_table_general(&[3, 4, 5], 6).unwrap(),
            finish(6, d3a.repeat(4).unwrap())
        );
        assert!(monomial_table_general(&[2], 4).is_err());
        assert!(monomial_table_general(&[2, 2], 4).is_err());
        assert!(monomial_table_general(&[3, 2], 4).is_err());
        assert!(monomial_table_general(&[1, 5], 4).is_err());
    }

    #[test]
    fn general_exhaustive_against_oracle() {
        for n in 2..=10usize {
            for mask in 1usize..(1 << n) {
                if mask.count_ones() < 2 {
                    continue;
                }
                let idx: Vec<usize> = (1..=n).filter(|&v| mask >> (n - v) & 1 == 1).collect();
                assert_eq!(
                    monomial_table_general(&idx, n).unwrap(),
                    oracle(&idx, n),
                    "{idx:?} n={n}"
                );
                if idx.len() == 2 && n >= 3 {
                    assert_eq!(
                        monomial_table_general(&idx, n).unwrap(),
                        monomial_table_degree2(idx[0], idx[1], n).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn orbits() {
        let p = rots_orbit_anf(&[1, 2], 5).unwrap();
        let want = AnfPolynomial::new(5, [[1, 2], [2, 3], [3, 4], [4, 5], [1, 5]]).unwrap();
        assert_eq!(p, want);
        let q = rots_orbit_anf(&[1, 2, 3], 6).unwrap();
        assert_eq!(q.len(), 6);
        assert!(q.contains(&[1, 2, 6]) && q.contains(&[1, 5, 6]));
        let lin = rots_orbit_anf(&[1], 7).unwrap();
        assert_eq!(lin, AnfPolynomial::new(7, (1..=7).map(|v| [v])).unwrap());
        assert!(rots_orbit_anf(&[0, 1], 3).is_err());
        // x1x2x3 at n = 3: three coinciding shifts leave one copy.
        assert_eq!(f3_anf(3).unwrap().len(), 1);
    }

    #[test]
    fn orbit_is_rotation_invariant() {
        for n in 3..=9 {
            for g in [vec![1, 2], vec![1, 2, 3], vec![1, 3], vec![2, 4, 5], vec![1]] {
                if g.iter().any(|&v| v > n) {
                    continue;
                }
                let p = rots_orbit_anf(&g, n).unwrap();
                assert_eq!(rotate_anf(&p), p, "{g:?} n={n}");
            }
        }
    }
}
