//! Cryptographic criteria: nonlinearity, correlation, propagation, bentness.

use crate::error::{check_size, Error, Result};
use crate::truth_table::TruthTable;
use crate::walsh::{butterfly, walsh_transform, WalshSpectrum};
use serde::Serialize;
use std::cmp::Ordering;
use std::fmt;

/// Largest `n` accepted by [`pc_profile`].
pub const PC_PROFILE_MAX_VARS: usize = 20;

/// Exact rational `numerator / 2^log2_den` in lowest terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Dyadic {
    numerator: i64,
    log2_den: u32,
}

impl Dyadic {
    pub fn new(numerator: i64, log2_den: u32) -> Self {
        let mut d = Self {
            numerator,
            log2_den,
        };
        if d.numerator == 0 {
            d.log2_den = 0;
        }
        while d.log2_den > 0 && d.numerator % 2 == 0 {
            d.numerator /= 2;
            d.log2_den -= 1;
        }
        d
    }

    pub fn numerator(&self) -> i64 {
        self.numerator
    }

    pub fn log2_denominator(&self) -> u32 {
        self.log2_den
    }

    pub fn denominator(&self) -> u64 {
        1u64 << self.log2_den
    }

    pub fn to_f64(&self) -> f64 {
        self.numerator as f64 / self.denominator() as f64
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let e = self.log2_den.max(other.log2_den);
        let a = i128::from(self.numerator) << (e - self.log2_den);
        let b = i128::from(other.numerator) << (e - other.log2_den);
        a.cmp(&b)
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.log2_den == 0 {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "{}/{}", self.numerator, self.denominator())
        }
    }
}

/// `2^(n-1) - max|W_f| / 2`.
pub fn nonlinearity(tt: &TruthTable) -> u64 {
    nonlinearity_from_spectrum(&walsh_transform(tt))
}

pub fn nonlinearity_from_spectrum(spectrum: &WalshSpectrum) -> u64 {
    let half = 1u64 << (spectrum.num_vars() - 1);
    half - u64::from(spectrum.max_abs()) / 2
}

/// `c(g, h) = 1 - d(g, h) / 2^(n-1)`.
pub fn correlation(g: &TruthTable, h: &TruthTable) -> Result<Dyadic> {
    let d = g.distance(h)? as i64;
    let n = g.num_vars() as u32;
    Ok(Dyadic::new((1i64 << (n - 1)) - d, n - 1))
}

/// True iff the derivative `f(x) ^ f(x ^ c)` is balanced.
pub fn pc_check(f: &TruthTable, c: usize) -> Result<bool> {
    if c == 0 {
        return Err(Error::ZeroDirection);
    }
    if c >= f.len() {
        return Err(Error::Index {
            index: c,
            n: f.num_vars(),
        });
    }
    let derivative = f ^ &f.shifted(c);
    Ok(derivative.weight() == (f.len() / 2) as u64)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PcClass {
    pub weight: usize,
    pub satisfied: u64,
    pub total: u64,
}

impl PcClass {
    pub fn is_full(&self) -> bool {
        self.satisfied == self.total
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PcProfile {
    /// Entry `k - 1` covers directions of weight `k`.
    pub classes: Vec<PcClass>,
}

impl PcProfile {
    /// Largest `s` such that every direction of weight `1..=s` is satisfied.
    pub fn pc_degree(&self) -> usize {
        self.classes.iter().take_while(|c| c.is_full()).count()
    }

    pub fn is_sac(&self) -> bool {
        self.classes.first().is_some_and(PcClass::is_full)
    }

    pub fn class(&self, weight: usize) -> &PcClass {
        &self.classes[weight - 1]
    }
}

/// Autocorrelation `r(c) = sum_x (-1)^(f(x) ^ f(x ^ c))` for every `c`,
/// from the squared spectrum: `r = H(W^2) / 2^n`.
pub fn autocorrelation(f: &TruthTable) -> Vec<i64> {
    let spectrum = walsh_transform(f);
    let mut sq: Vec<i64> = spectrum
        .values()
        .iter()
        .map(|&v| i64::from(v) * i64::from(v))
        .collect();
    butterfly(&mut sq);
    let n = f.num_vars();
    sq.into_iter().map(|v| v >> n).collect()
}

/// Per-weight tallies of balanced derivatives over all nonzero directions.
pub fn pc_profile(f: &TruthTable) -> Result<PcProfile> {
    let n = f.num_vars();
    check_size(n, 1, PC_PROFILE_MAX_VARS)?;
    let mut classes: Vec<PcClass> = (1..=n)
        .map(|weight| PcClass {
            weight,
            satisfied: 0,
            total: 0,
        })
        .collect();
    for (c, r) in autocorrelation(f).into_iter().enumerate().skip(1) {
        let class = &mut classes[c.count_ones() as usize - 1];
        class.total += 1;
        if r == 0 {
            class.satisfied += 1;
        }
    }
    Ok(PcProfile { classes })
}

/// Even `n` and `|W_f(w)| = 2^(n/2)` everywhere.
pub fn is_bent(f: &TruthTable) -> bool {
    let n = f.num_vars();
    if n % 2 == 1 {
        return false;
    }
    is_bent_spectrum(&walsh_transform(f))
}

pub fn is_bent_spectrum(s: &WalshSpectrum) -> bool {
    let n = s.num_vars();
    if n % 2 == 1 {
        return false;
    }
    let flat = 1u32 << (n / 2);
    s.values().iter().all(|v| v.unsigned_abs() == flat)
}

/// For `n = 2k + 1`: balanced, spectrum in `{0, ±2^(k+1)}` with `2^(2k)`
/// zeros and `2^(2k)` nonzeros.
pub fn is_semi_bent_spectral(f: &TruthTable) -> bool {
    if f.num_vars() % 2 == 0 {
        return false;
    }
    is_semi_bent_spectrum(&walsh_transform(f))
}

pub fn is_semi_bent_spectrum(s: &WalshSpectrum) -> bool {
    let n = s.num_vars();
    if n % 2 == 0 {
        return false;
    }
    let k = (n - 1) / 2;
    let peak = 1u32 << (k + 1);
    let quota = 1usize << (2 * k);
    let mut zeros = 0usize;
    for v in s.values() {
        match v.unsigned_abs() {
            0 => zeros += 1,
            a if a == peak => {}
            _ => return false,
        }
    }
    s.get(0) == 0 && zeros == quota && s.values().len() - zeros == quota
}
