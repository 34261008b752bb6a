//! Named 4-bit blocks and the string operators used by the fast builders.
//!
//! Every operator that complements bits charges the [`OpCounter`] one unit
//! per complemented 4-bit block. Copies and concatenations are free.

use crate::bitvec::BitVec;
use crate::error::{Error, Result};
use std::fmt;

const MACRON: char = '\u{0304}';

/// One of the sixteen named 4-bit strings. The patterns cover every 4-bit
/// value exactly once.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Block4 {
    A,
    ABar,
    B,
    BBar,
    C,
    CBar,
    D,
    DBar,
    U,
    UBar,
    V,
    VBar,
    X,
    XBar,
    Y,
    YBar,
}

impl Block4 {
    pub const ALL: [Block4; 16] = [
        Block4::A,
        Block4::ABar,
        Block4::B,
        Block4::BBar,
        Block4::C,
        Block4::CBar,
        Block4::D,
        Block4::DBar,
        Block4::U,
        Block4::UBar,
        Block4::V,
        Block4::VBar,
        Block4::X,
        Block4::XBar,
        Block4::Y,
        Block4::YBar,
    ];

    /// Pattern read left to right as a binary number (`A = 0011 = 3`).
    pub const fn pattern(self) -> u8 {
        let base = match self.plain() {
            Block4::A => 0b0011,
            Block4::B => 0b0101,
            Block4::C => 0b0110,
            Block4::D => 0b0000,
            Block4::U => 0b1000,
            Block4::V => 0b0001,
            Block4::X => 0b0100,
            _ => 0b0010,
        };
        if self.is_barred() {
            !base & 0xF
        } else {
            base
        }
    }

    pub const fn is_barred(self) -> bool {
        matches!(
            self,
            Block4::ABar
                | Block4::BBar
                | Block4::CBar
                | Block4::DBar
                | Block4::UBar
                | Block4::VBar
                | Block4::XBar
                | Block4::YBar
        )
    }

    /// The unbarred block of the same letter.
    pub const fn plain(self) -> Block4 {
        match self {
            Block4::A | Block4::ABar => Block4::A,
            Block4::B | Block4::BBar => Block4::B,
            Block4::C | Block4::CBar => Block4::C,
            Block4::D | Block4::DBar => Block4::D,
            Block4::U | Block4::UBar => Block4::U,
            Block4::V | Block4::VBar => Block4::V,
            Block4::X | Block4::XBar => Block4::X,
            Block4::Y | Block4::YBar => Block4::Y,
        }
    }

    pub const fn complement(self) -> Block4 {
        match self {
            Block4::A => Block4::ABar,
            Block4::ABar => Block4::A,
            Block4::B => Block4::BBar,
            Block4::BBar => Block4::B,
            Block4::C => Block4::CBar,
            Block4::CBar => Block4::C,
            Block4::D => Block4::DBar,
            Block4::DBar => Block4::D,
            Block4::U => Block4::UBar,
            Block4::UBar => Block4::U,
            Block4::V => Block4::VBar,
            Block4::VBar => Block4::V,
            Block4::X => Block4::XBar,
            Block4::XBar => Block4::X,
            Block4::Y => Block4::YBar,
            Block4::YBar => Block4::Y,
        }
    }

    pub fn letter(self) -> char {
        match self.plain() {
            Block4::A => 'A',
            Block4::B => 'B',
            Block4::C => 'C',
            Block4::D => 'D',
            Block4::U => 'U',
            Block4::V => 'V',
            Block4::X => 'X',
            _ => 'Y',
        }
    }

    pub fn from_pattern(pattern: u8) -> Block4 {
        *Block4::ALL
            .iter()
            .find(|b| b.pattern() == pattern & 0xF)
            .expect("every 4-bit pattern is named")
    }

    fn from_letter(letter: char) -> Option<Block4> {
        Some(match letter {
            'A' => Block4::A,
            'B' => Block4::B,
            'C' => Block4::C,
            'D' => Block4::D,
            'U' => Block4::U,
            'V' => Block4::V,
            'X' => Block4::X,
            'Y' => Block4::Y,
            _ => return None,
        })
    }

    fn bit(self, k: usize) -> bool {
        (self.pattern() >> (3 - k)) & 1 == 1
    }
}

impl fmt::Display for Block4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())?;
        if self.is_barred() {
            write!(f, "{MACRON}")?;
        }
        Ok(())
    }
}

/// Tally of complemented 4-bit blocks during one build.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct OpCounter {
    block_complements: u64,
}

impl OpCounter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn block_complements(&self) -> u64 {
        self.block_complements
    }

    /// Same count in single-bit units.
    pub fn bit_complements(&self) -> u64 {
        4 * self.block_complements
    }

    pub fn reset(&mut self) {
        self.block_complements = 0;
    }

    pub(crate) fn charge_bits(&mut self, bits: usize) {
        debug_assert!(bits % 4 == 0);
        self.block_complements += (bits / 4) as u64;
    }
}

/// Bit string whose length is a power of two, at least 4.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitString {
    bits: BitVec,
}

impl BitString {
    fn from_bitvec(bits: BitVec) -> Result<Self> {
        let len = bits.len();
        if len < 4 || !len.is_power_of_two() {
            return Err(Error::StringLength { len, min: 4 });
        }
        Ok(Self { bits })
    }

    pub(crate) fn into_bitvec(self) -> BitVec {
        self.bits
    }

    pub(crate) fn as_bitvec(&self) -> &BitVec {
        &self.bits
    }

    pub fn block(b: Block4) -> Self {
        Self {
            bits: BitVec::from_fn(4, |k| b.bit(k)),
        }
    }

    /// Concatenation of the given blocks; the count must be a power of two.
    pub fn from_blocks(blocks: &[Block4]) -> Result<Self> {
        let bits = BitVec::from_fn(4 * blocks.len(), |p| blocks[p / 4].bit(p % 4));
        Self::from_bitvec(bits)
    }

    /// Parses letter notation such as `"VYVȲXŪX̄Ū"`. A combining macron
    /// (U+0304) or a precomposed barred letter marks a complemented block.
    pub fn parse_blocks(s: &str) -> Result<Self> {
        let mut blocks: Vec<Block4> = Vec::new();
        for ch in s.chars().filter(|c| !c.is_whitespace()) {
            let bad = || Error::Parse {
                line: 1,
                message: format!("unknown block symbol {ch:?}"),
            };
            match ch {
                MACRON => {
                    let last = blocks.last_mut().ok_or_else(bad)?;
                    *last = last.complement();
                }
                'Ā' => blocks.push(Block4::ABar),
                'Ū' => blocks.push(Block4::UBar),
                'Ȳ' => blocks.push(Block4::YBar),
                _ => blocks.push(Block4::from_letter(ch).ok_or_else(bad)?),
            }
        }
        Self::from_blocks(&blocks)
    }

    pub fn from_bit_str(s: &str) -> Result<Self> {
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        if let Some(&bad) = chars.iter().find(|&&c| c != '0' && c != '1') {
            return Err(Error::Parse {
                line: 1,
                message: format!("unexpected character {bad:?} in bit string"),
            });
        }
        Self::from_bitvec(BitVec::from_fn(chars.len(), |p| chars[p] == '1'))
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn get(&self, p: usize) -> bool {
        self.bits.get(p)
    }

    pub fn weight(&self) -> u64 {
        self.bits.count_ones()
    }

    pub fn blocks(&self) -> Vec<Block4> {
        (0..self.len() / 4)
            .map(|b| {
                let pat = (0..4).fold(0u8, |acc, k| (acc << 1) | u8::from(self.get(4 * b + k)));
                Block4::from_pattern(pat)
            })
            .collect()
    }

    /// `u || v`; both halves must have equal length to stay a power of two.
    pub fn concat(&self, other: &BitString) -> Result<BitString> {
        Self::from_bitvec(self.bits.concat(&other.bits))
    }

    /// `k` copies of `self`. Free of charge.
    pub fn repeat(&self, k: usize) -> Result<BitString> {
        if k == 0 {
            return Err(Error::StringLength { len: 0, min: 4 });
        }
        let len = self.len();
        let mut out = BitVec::zeros(len * k);
        for i in 0..k {
            out.write_at(i * len, &self.bits);
        }
        Self::from_bitvec(out)
    }

    /// Full complement; charges `len / 4`.
    pub fn complement(&self, counter: &mut OpCounter) -> BitString {
        let mut bits = self.bits.clone();
        bits.flip_all();
        counter.charge_bits(self.len());
        Self { bits }
    }

    /// Complements the second half; charges `len / 8`.
    pub fn tilde(&self, counter: &mut OpCounter) -> Result<BitString> {
        self.complement_suffix(2, counter)
    }

    /// Complements the last quarter; charges `len / 16`.
    pub fn hat(&self, counter: &mut OpCounter) -> Result<BitString> {
        self.complement_suffix(4, counter)
    }

    fn complement_suffix(&self, fraction: usize, counter: &mut OpCounter) -> Result<BitString> {
        let len = self.len();
        // Suffix must be whole blocks.
        let min = 4 * fraction;
        if len < min {
            return Err(Error::StringLength { len, min });
        }
        let mut bits = self.bits.clone();
        bits.flip_range(len - len / fraction..len);
        counter.charge_bits(len / fraction);
        Ok(Self { bits })
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.blocks() {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitString({self})")
    }
}
