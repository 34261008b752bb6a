//! Bit-packed truth tables.
//!
//! Index `i` encodes the assignment `i = sum_k x_k * 2^(n-k)`, so `x_1` is the
//! most significant index bit and index 1 is the point `(0, ..., 0, 1)`.

use crate::bitvec::BitVec;
use crate::error::{check_size, Error, Result, MAX_VARS};
use std::fmt;
use std::ops::{BitXor, Not};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruthTable {
    n: usize,
    bits: BitVec,
}

/// Index of the assignment `(x_1, ..., x_n)`.
pub fn index_of(point: &[bool]) -> usize {
    point
        .iter()
        .fold(0usize, |acc, &b| (acc << 1) | usize::from(b))
}

/// Assignment `(x_1, ..., x_n)` encoded by `index`.
pub fn point_of(index: usize, n: usize) -> Vec<bool> {
    (1..=n).map(|k| (index >> (n - k)) & 1 == 1).collect()
}

/// Index-bit mask of variable `x_var` (1-based).
#[inline]
pub(crate) fn var_mask(var: usize, n: usize) -> usize {
    1usize << (n - var)
}

impl TruthTable {
    pub fn zero(n: usize) -> Result<Self> {
        check_size(n, 1, MAX_VARS)?;
        Ok(Self {
            n,
            bits: BitVec::zeros(1 << n),
        })
    }

    /// Table with bit `i` set to `f(i)`.
    pub fn from_fn(n: usize, f: impl FnMut(usize) -> bool) -> Result<Self> {
        check_size(n, 1, MAX_VARS)?;
        Ok(Self {
            n,
            bits: BitVec::from_fn(1 << n, f),
        })
    }

    /// Table from a `0`/`1` string in index order.
    pub fn from_bit_str(s: &str) -> Result<Self> {
        let bits: Vec<bool> = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::Parse {
                    line: 1,
                    message: format!("unexpected character {other:?} in bit string"),
                }),
            })
            .collect::<Result<_>>()?;
        let n = bits.len().trailing_zeros() as usize;
        if bits.len() < 2 || !bits.len().is_power_of_two() {
            return Err(Error::Parse {
                line: 1,
                message: format!("bit string length {} is not 2^n with n >= 1", bits.len()),
            });
        }
        Self::from_fn(n, |i| bits[i])
    }

    pub(crate) fn from_bitvec(n: usize, bits: BitVec) -> Self {
        debug_assert_eq!(bits.len(), 1 << n);
        Self { n, bits }
    }

    /// The linear function `l_b(x) = b . x`, with `b` given as an index.
    pub fn linear(n: usize, b: usize) -> Result<Self> {
        Self::from_fn(n, |x| (x & b).count_ones() % 2 == 1)
    }

    /// `l_b(x) ^ c`.
    pub fn affine(n: usize, b: usize, c: bool) -> Result<Self> {
        Self::from_fn(n, |x| ((x & b).count_ones() % 2 == 1) ^ c)
    }

    #[inline]
    pub fn num_vars(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn get(&self, index: usize) -> bool {
        self.bits.get(index)
    }

    pub fn eval(&self, point: &[bool]) -> bool {
        assert_eq!(point.len(), self.n, "assignment length must equal n");
        self.get(index_of(point))
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        self.bits.iter()
    }

    pub fn weight(&self) -> u64 {
        self.bits.count_ones()
    }

    /// Weight of the bit range `range` of the table.
    pub fn weight_in(&self, range: std::ops::Range<usize>) -> u64 {
        self.bits.count_ones_in(range)
    }

    pub fn is_balanced(&self) -> bool {
        self.weight() == (self.len() / 2) as u64
    }

    pub fn distance(&self, other: &TruthTable) -> Result<u64> {
        self.same_dim(other)?;
        Ok(self.bits.xor(&other.bits).count_ones())
    }

    pub(crate) fn same_dim(&self, other: &TruthTable) -> Result<()> {
        if self.n != other.n {
            return Err(Error::Dimension {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    /// `g0 || g1`: the new variable is `x_1`, and `g0` is the `x_1 = 0` half.
    pub fn concatenate(g0: &TruthTable, g1: &TruthTable) -> Result<TruthTable> {
        g0.same_dim(g1)?;
        check_size(g0.n + 1, 1, MAX_VARS)?;
        Ok(TruthTable {
            n: g0.n + 1,
            bits: g0.bits.concat(&g1.bits),
        })
    }

    /// Cofactor with `x_var` fixed to `value`, on the remaining `n - 1` variables.
    pub fn restrict(&self, var: usize, value: bool) -> Result<TruthTable> {
        if var == 0 || var > self.n {
            return Err(Error::Index {
                index: var,
                n: self.n,
            });
        }
        check_size(self.n, 2, MAX_VARS)?;
        let half = self.len() / 2;
        if var == 1 {
            let start = if value { half } else { 0 };
            return Ok(TruthTable {
                n: self.n - 1,
                bits: self.bits.slice(start..start + half),
            });
        }
        // Insert the fixed bit at position (n - var) of each reduced index.
        let shift = self.n - var;
        let low = (1usize << shift) - 1;
        let fixed = usize::from(value) << shift;
        TruthTable::from_fn(self.n - 1, |i| {
            let full = ((i & !low) << 1) | fixed | (i & low);
            self.get(full)
        })
    }

    /// The table of `x -> f(x ^ c)`, with `c` given as an index.
    pub fn shifted(&self, c: usize) -> TruthTable {
        debug_assert!(c < self.len());
        const MASKS: [u64; 6] = [
            0x5555_5555_5555_5555,
            0x3333_3333_3333_3333,
            0x0F0F_0F0F_0F0F_0F0F,
            0x00FF_00FF_00FF_00FF,
            0x0000_FFFF_0000_FFFF,
            0x0000_0000_FFFF_FFFF,
        ];
        let words = self.bits.words();
        let hi = c >> 6;
        let lo = c & 63;
        let mut out = BitVec::zeros(self.len());
        for (w, dst) in out.words_mut().iter_mut().enumerate() {
            let mut v = words[w ^ hi];
            for (k, &m) in MASKS.iter().enumerate() {
                if lo >> k & 1 == 1 {
                    let s = 1 << k;
                    v = ((v & m) << s) | ((v >> s) & m);
                }
            }
            *dst = v;
        }
        TruthTable {
            n: self.n,
            bits: out,
        }
    }

    /// Hex digits of the table, index 0 as the most significant bit of the
    /// first digit. Tables shorter than one digit are zero-padded on the right.
    pub fn to_hex(&self) -> String {
        let len = self.len();
        let digits = len.div_ceil(4);
        let mut s = String::with_capacity(digits);
        for d in 0..digits {
            let mut nib = 0u32;
            for k in 0..4 {
                let p = 4 * d + k;
                nib = (nib << 1) | u32::from(p < len && self.get(p));
            }
            s.push(char::from_digit(nib, 16).expect("nibble"));
        }
        s
    }

    pub fn from_hex(n: usize, hex: &str) -> Result<Self> {
        check_size(n, 1, MAX_VARS)?;
        let len = 1usize << n;
        let hex = hex.trim();
        let want = len.div_ceil(4);
        let parse_err = |message: String| Error::Parse { line: 2, message };
        if hex.len() != want {
            return Err(parse_err(format!(
                "expected {want} hex digits for n={n}, found {}",
                hex.len()
            )));
        }
        let nibbles: Vec<u32> = hex
            .chars()
            .map(|c| {
                c.to_digit(16)
                    .ok_or_else(|| parse_err(format!("invalid hex digit {c:?}")))
            })
            .collect::<Result<_>>()?;
        if len < 4 && nibbles[0] & ((1 << (4 - len)) - 1) != 0 {
            return Err(parse_err("nonzero padding bits".into()));
        }
        Self::from_fn(n, |p| (nibbles[p / 4] >> (3 - p % 4)) & 1 == 1)
    }

    /// Text form: `n=<k>` on the first line, the hex table on the second.
    pub fn to_text(&self) -> String {
        format!("n={}\n{}\n", self.n, self.to_hex())
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let (hl, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            message: "empty input, expected header \"n=<k>\"".into(),
        })?;
        let n: usize = header
            .strip_prefix("n=")
            .and_then(|v| v.trim().parse().ok())
            .ok_or_else(|| Error::Parse {
                line: hl,
                message: format!("expected header \"n=<k>\", found {header:?}"),
            })?;
        let (bl, body) = lines.next().ok_or(Error::Parse {
            line: hl + 1,
            message: "missing hex table line".into(),
        })?;
        if let Some((xl, extra)) = lines.next() {
            return Err(Error::Parse {
                line: xl,
                message: format!("unexpected trailing content {extra:?}"),
            });
        }
        Self::from_hex(n, body).map_err(|e| match e {
            Error::Parse { message, .. } => Error::Parse { line: bl, message },
            other => Error::Parse {
                line: hl,
                message: other.to_string(),
            },
        })
    }
}

impl Not for &TruthTable {
    type Output = TruthTable;
    fn not(self) -> TruthTable {
        let mut bits = self.bits.clone();
        bits.flip_all();
        TruthTable { n: self.n, bits }
    }
}

impl BitXor for &TruthTable {
    type Output = TruthTable;
    /// Panics on mismatched dimensions; use [`TruthTable::distance`] for a checked variant.
    fn bitxor(self, rhs: &TruthTable) -> TruthTable {
        assert_eq!(self.n, rhs.n, "xor of tables with different n");
        TruthTable {
            n: self.n,
            bits: self.bits.xor(&rhs.bits),
        }
    }
}

impl fmt::Debug for TruthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n <= 8 {
            write!(f, "TruthTable(n={}, {:?})", self.n, self.bits)
        } else {
            write!(f, "TruthTable(n={}, weight={})", self.n, self.weight())
        }
    }
}
