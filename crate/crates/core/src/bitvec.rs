//! Packed bit storage shared by truth tables and block strings.
//!
//! Position `p` lives in word `p / 64` at bit `p % 64`. Bits past `len` in
//! the last word are always zero.

use std::ops::Range;

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub(crate) struct BitVec {
    words: Vec<u64>,
    len: usize,
}

#[inline]
fn words_for(len: usize) -> usize {
    len.div_ceil(WORD)
}

/// Mask selecting bits `lo..hi` of a single word (`hi <= 64`).
#[inline]
fn span_mask(lo: usize, hi: usize) -> u64 {
    debug_assert!(lo <= hi && hi <= WORD);
    if lo == hi {
        return 0;
    }
    let upper = if hi == WORD { u64::MAX } else { (1u64 << hi) - 1 };
    upper & !((1u64 << lo) - 1)
}

impl BitVec {
    pub(crate) fn zeros(len: usize) -> Self {
        Self {
            words: vec![0; words_for(len)],
            len,
        }
    }

    pub(crate) fn from_fn(len: usize, mut f: impl FnMut(usize) -> bool) -> Self {
        let mut v = Self::zeros(len);
        for p in 0..len {
            if f(p) {
                v.words[p / WORD] |= 1 << (p % WORD);
            }
        }
        v
    }

    #[inline]
    pub(crate) fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub(crate) fn words_mut(&mut self) -> &mut [u64] {
        &mut self.words
    }

    #[inline]
    pub(crate) fn get(&self, p: usize) -> bool {
        debug_assert!(p < self.len);
        (self.words[p / WORD] >> (p % WORD)) & 1 == 1
    }

    #[inline]
    pub(crate) fn set(&mut self, p: usize, value: bool) {
        debug_assert!(p < self.len);
        let bit = 1u64 << (p % WORD);
        if value {
            self.words[p / WORD] |= bit;
        } else {
            self.words[p / WORD] &= !bit;
        }
    }

    pub(crate) fn count_ones(&self) -> u64 {
        self.words.iter().map(|w| u64::from(w.count_ones())).sum()
    }

    pub(crate) fn count_ones_in(&self, range: Range<usize>) -> u64 {
        debug_assert!(range.end <= self.len);
        let mut total = 0u64;
        let mut p = range.start;
        while p < range.end {
            let w = p / WORD;
            let lo = p % WORD;
            let hi = (range.end - w * WORD).min(WORD);
            total += u64::from((self.words[w] & span_mask(lo, hi)).count_ones());
            p = w * WORD + hi;
        }
        total
    }

    /// Flips every bit in `range`.
    pub(crate) fn flip_range(&mut self, range: Range<usize>) {
        debug_assert!(range.end <= self.len);
        let mut p = range.start;
        while p < range.end {
            let w = p / WORD;
            let lo = p % WORD;
            let hi = (range.end - w * WORD).min(WORD);
            self.words[w] ^= span_mask(lo, hi);
            p = w * WORD + hi;
        }
    }

    pub(crate) fn flip_all(&mut self) {
        let len = self.len;
        self.flip_range(0..len);
    }

    /// Copies `src` onto the range starting at `dst`. The ranges must not overlap.
    pub(crate) fn copy_within(&mut self, src: Range<usize>, dst: usize) {
        let n = src.len();
        debug_assert!(src.end <= self.len && dst + n <= self.len);
        debug_assert!(dst >= src.end || dst + n <= src.start);
        if src.start % WORD == 0 && dst % WORD == 0 && n % WORD == 0 {
            let (s, d) = (src.start / WORD, dst / WORD);
            self.words.copy_within(s..s + n / WORD, d);
        } else {
            for k in 0..n {
                let b = self.get(src.start + k);
                self.set(dst + k, b);
            }
        }
    }

    /// Writes all of `other` at position `dst`.
    pub(crate) fn write_at(&mut self, dst: usize, other: &BitVec) {
        debug_assert!(dst + other.len <= self.len);
        if dst % WORD == 0 && other.len % WORD == 0 {
            let d = dst / WORD;
            self.words[d..d + other.words.len()].copy_from_slice(&other.words);
        } else {
            for k in 0..other.len {
                self.set(dst + k, other.get(k));
            }
        }
    }

    pub(crate) fn slice(&self, range: Range<usize>) -> BitVec {
        let mut out = BitVec::zeros(range.len());
        if range.start % WORD == 0 {
            let s = range.start / WORD;
            let nw = out.words.len();
            out.words.copy_from_slice(&self.words[s..s + nw]);
            out.clear_tail();
        } else {
            for k in 0..range.len() {
                out.set(k, self.get(range.start + k));
            }
        }
        out
    }

    pub(crate) fn concat(&self, other: &BitVec) -> BitVec {
        let mut out = BitVec::zeros(self.len + other.len);
        out.write_at(0, self);
        out.write_at(self.len, other);
        out
    }

    pub(crate) fn xor(&self, other: &BitVec) -> BitVec {
        debug_assert_eq!(self.len, other.len);
        BitVec {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a ^ b)
                .collect(),
            len: self.len,
        }
    }

    fn clear_tail(&mut self) {
        let used = self.len % WORD;
        if used != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << used) - 1;
            }
        }
    }

    pub(crate) fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |p| self.get(p))
    }
}

impl std::fmt::Debug for BitVec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for b in self.iter() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}
