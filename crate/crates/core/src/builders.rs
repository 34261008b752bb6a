//! Fast truth-table builders for `f_2^n` and `f_3^n` by string doubling.
//!
//! `f_2 = G1 || G2 || G3` where `G1 = g_1^(n-1)`, `G2 = g_2^(n-2)` and
//! `G3 = bar(tilde(G2))`; each `g_i^s` doubles `g_i^(s-1)` as `u || tilde(u)`
//! from the seeds `g_1^3 = VY`, `g_2^3 = XŪ`.
//!
//! `f_3 = H1 || H2 || H3 || H4` where `H1 = h_1^(n-1)`, `H2 = h_2^(n-2)`,
//! `H3 = h_3^(n-3)` and `H4 = bar(tilde(hat(H3)))`; each `h_i^s` doubles as
//! `u || hat(u)` from `h_1^4 = DVDY`, `h_2^4 = VDVA`, `h_3^4 = XBXC`.
//!
//! Superscripts are `log2` of the string length. The builders write every
//! segment straight into the final `2^n`-bit buffer.

use crate::bitvec::BitVec;
use crate::blocks::{BitString, Block4, OpCounter};
use crate::error::{check_size, Error, Result, MAX_VARS};
use crate::monomial::{f2_anf, f3_anf};
use crate::truth_table::TruthTable;
use std::ops::Range;

pub const F2_MIN_VARS: usize = 5;
pub const F3_MIN_VARS: usize = 7;

#[derive(Clone, Copy)]
enum Doubling {
    /// `u || tilde(u)`
    Tilde,
    /// `u || hat(u)`
    Hat,
}

impl Doubling {
    fn divisor(self) -> usize {
        match self {
            Doubling::Tilde => 2,
            Doubling::Hat => 4,
        }
    }
}

fn seed(blocks: &[Block4]) -> BitString {
    BitString::from_blocks(blocks).expect("seed length is a power of two")
}

fn f2_seed(i: usize) -> BitString {
    match i {
        1 => seed(&[Block4::V, Block4::Y]),
        _ => seed(&[Block4::X, Block4::UBar]),
    }
}

fn f3_seed(i: usize) -> BitString {
    match i {
        1 => seed(&[Block4::D, Block4::V, Block4::D, Block4::Y]),
        2 => seed(&[Block4::V, Block4::D, Block4::V, Block4::A]),
        _ => seed(&[Block4::X, Block4::B, Block4::X, Block4::C]),
    }
}

/// Writes `seed` at `offset` and doubles it in place `steps` times.
fn grow_in_place(
    buf: &mut BitVec,
    offset: usize,
    seed: &BitString,
    steps: usize,
    mode: Doubling,
    counter: &mut OpCounter,
) {
    buf.write_at(offset, seed.as_bitvec());
    let mut len = seed.len();
    for _ in 0..steps {
        buf.copy_within(offset..offset + len, offset + len);
        let flipped = len / mode.divisor();
        let end = offset + 2 * len;
        buf.flip_range(end - flipped..end);
        counter.charge_bits(flipped);
        len *= 2;
    }
}

fn flip_charged(buf: &mut BitVec, range: Range<usize>, counter: &mut OpCounter) {
    counter.charge_bits(range.len());
    buf.flip_range(range);
}

/// Builds `f_2^n` for `n >= 5`, charging `2^(n-3) - 2` block complements.
pub fn build_f2(n: usize, counter: &mut OpCounter) -> Result<TruthTable> {
    if n < F2_MIN_VARS {
        return Err(Error::Unsupported {
            builder: "f2",
            n,
            min: F2_MIN_VARS,
        });
    }
    check_size(n, F2_MIN_VARS, MAX_VARS)?;
    let total = 1usize << n;
    let (g1_len, g2_len) = (total / 2, total / 4);
    let mut buf = BitVec::zeros(total);

    grow_in_place(&mut buf, 0, &f2_seed(1), n - 4, Doubling::Tilde, counter);
    grow_in_place(&mut buf, g1_len, &f2_seed(2), n - 5, Doubling::Tilde, counter);

    // G3 = bar(tilde(G2)): complement only the first half of a copy of G2.
    let g3 = g1_len + g2_len;
    buf.copy_within(g1_len..g3, g3);
    flip_charged(&mut buf, g3..g3 + g2_len / 2, counter);

    Ok(TruthTable::from_bitvec(n, buf))
}

/// Bit ranges of `H1..H4` inside the `f_3^n` table.
pub fn f3_component_ranges(n: usize) -> [Range<usize>; 4] {
    let total = 1usize << n;
    let (a, b, c) = (total / 2, total / 4, total / 8);
    [0..a, a..a + b, a + b..a + b + c, a + b + c..total]
}

/// Builds `f_3^n` for `n >= 7`.
pub fn build_f3(n: usize, counter: &mut OpCounter) -> Result<TruthTable> {
    if n < F3_MIN_VARS {
        return Err(Error::Unsupported {
            builder: "f3",
            n,
            min: F3_MIN_VARS,
        });
    }
    check_size(n, F3_MIN_VARS, MAX_VARS)?;
    let [r1, r2, r3, r4] = f3_component_ranges(n);
    let mut buf = BitVec::zeros(1 << n);

    grow_in_place(&mut buf, r1.start, &f3_seed(1), n - 5, Doubling::Hat, counter);
    grow_in_place(&mut buf, r2.start, &f3_seed(2), n - 6, Doubling::Hat, counter);
    grow_in_place(&mut buf, r3.start, &f3_seed(3), n - 7, Doubling::Hat, counter);

    // H4 = bar(tilde(hat(H3))): hat flips the last quarter, then bar∘tilde
    // flips the first half.
    let len = r3.len();
    buf.copy_within(r3, r4.start);
    flip_charged(&mut buf, r4.end - len / 4..r4.end, counter);
    flip_charged(&mut buf, r4.start..r4.start + len / 2, counter);

    Ok(TruthTable::from_bitvec(n, buf))
}

/// Weights of `H1..H4` in the built `f_3^n`.
pub fn component_weights_f3(n: usize) -> Result<[u64; 4]> {
    let table = build_f3(n, &mut OpCounter::new())?;
    Ok(f3_component_ranges(n).map(|r| table.weight_in(r)))
}

/// The string `g_i^s` (`i = 1, 2`; `s >= 3`) or `g_3^s = bar(tilde(g_2^s))`,
/// built with the standalone string operators.
pub fn f2_component(i: usize, s: usize) -> Result<BitString> {
    if !(1..=3).contains(&i) || s < 3 {
        return Err(Error::Monomial(format!("no f2 component g_{i}^{s}")));
    }
    let mut scratch = OpCounter::new();
    let base = if i == 3 { 2 } else { i };
    let mut u = f2_seed(base);
    for _ in 3..s {
        u = u.concat(&u.tilde(&mut scratch)?)?;
    }
    if i == 3 {
        u = u.tilde(&mut scratch)?.complement(&mut scratch);
    }
    Ok(u)
}

/// The string `h_i^s` (`i = 1, 2, 3`; `s >= 4`) or
/// `h_4^s = bar(tilde(hat(h_3^s)))`, built with the standalone string operators.
pub fn f3_component(i: usize, s: usize) -> Result<BitString> {
    if !(1..=4).contains(&i) || s < 4 {
        return Err(Error::Monomial(format!("no f3 component h_{i}^{s}")));
    }
    let mut scratch = OpCounter::new();
    let base = if i == 4 { 3 } else { i };
    let mut u = f3_seed(base);
    for _ in 4..s {
        u = u.concat(&u.hat(&mut scratch)?)?;
    }
    if i == 4 {
        u = u.hat(&mut scratch)?.tilde(&mut scratch)?.complement(&mut scratch);
    }
    Ok(u)
}

/// `f_2^n` by the fast builder when `n >= 5`, otherwise by the ANF oracle.
/// The counter is returned only when the fast path ran.
pub fn f2_table(n: usize) -> Result<(TruthTable, Option<OpCounter>)> {
    if n >= F2_MIN_VARS {
        let mut c = OpCounter::new();
        let t = build_f2(n, &mut c)?;
        Ok((t, Some(c)))
    } else {
        Ok((f2_anf(n)?.to_truth_table()?, None))
    }
}

/// `f_3^n` by the fast builder when `n >= 7`, otherwise by the ANF oracle.
pub fn f3_table(n: usize) -> Result<(TruthTable, Option<OpCounter>)> {
    if n >= F3_MIN_VARS {
        let mut c = OpCounter::new();
        let t = build_f3(n, &mut c)?;
        Ok((t, Some(c)))
    } else {
        Ok((f3_anf(n)?.to_truth_table()?, None))
    }
}

/// Published operation count for the `f_2` builder: `2^(n-3) - 2`.
pub fn f2_cost_formula(n: usize) -> u64 {
    (1u64 << (n - 3)) - 2
}

/// Published operation count for the `f_3` builder:
/// `2^(n-2) + 2^(n-4) + 2^(n-5) - 12`.
pub fn f3_cost_formula_published(n: usize) -> u64 {
    (1u64 << (n - 2)) + (1u64 << (n - 4)) + (1u64 << (n - 5)) - 12
}

/// Block complements charged by [`build_f3`]:
/// `(2^(n-5) - 1) + (2^(n-6) - 1) + (2^(n-7) - 1) + 2^(n-7) + 2^(n-6)`,
/// i.e. `2^(n-4) + 2^(n-6) - 3`.
pub fn f3_cost_blocks(n: usize) -> u64 {
    (1u64 << (n - 4)) + (1u64 << (n - 6)) - 3
}

/// Rough operation count of naive evaluation from the normal form,
/// `(3n - 1)/2 * 2^n`.
pub fn naive_cost_estimate(n: usize) -> f64 {
    (3.0 * n as f64 - 1.0) / 2.0 * (1u64 << n) as f64
}
