//! Rational generating functions with integer coefficients.

use crate::error::{Error, Result};

/// `numerator(z) / denominator(z)`, coefficients listed from `z^0` upward.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalGF {
    numerator: Vec<i128>,
    denominator: Vec<i128>,
}

/// Product of two coefficient lists.
pub fn poly_mul(a: &[i128], b: &[i128]) -> Vec<i128> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

impl RationalGF {
    /// Fails unless the denominator's constant term is `±1`.
    pub fn new(numerator: Vec<i128>, denominator: Vec<i128>) -> Result<Self> {
        match denominator.first() {
            Some(1) | Some(-1) => Ok(Self {
                numerator,
                denominator,
            }),
            Some(&c) => Err(Error::NonUnitConstant(c)),
            None => Err(Error::NonUnitConstant(0)),
        }
    }

    pub fn numerator(&self) -> &[i128] {
        &self.numerator
    }

    pub fn denominator(&self) -> &[i128] {
        &self.denominator
    }

    /// Coefficients of `z^0..=z^upto`, from
    /// `a_k = (p_k - sum_{j>=1} q_j a_(k-j)) / q_0`.
    pub fn series(&self, upto: usize) -> Vec<i128> {
        let q0 = self.denominator[0];
        let mut a: Vec<i128> = Vec::with_capacity(upto + 1);
        for k in 0..=upto {
            let mut acc = self.numerator.get(k).copied().unwrap_or(0);
            for (j, &q) in self.denominator.iter().enumerate().skip(1).take(k) {
                acc -= q * a[k - j];
            }
            a.push(acc * q0);
        }
        a
    }
}

pub fn gf_series(gf: &RationalGF, upto: usize) -> Vec<i128> {
    gf.series(upto)
}

/// The weight generating functions of `f_2` and `f_3`, cleared to a single
/// polynomial fraction:
///
/// * `f_2`: `(16z^5 - 8z^6 - 16z^7) / ((1 - 2z)(1 - 2z^2))`
/// * `f_3`: `(z^3 + 2z^4 - 4z^5) / ((1 - 2z)(1 - 2z^2 - 2z^3))`
pub fn builtin_gfs() -> (RationalGF, RationalGF) {
    let geometric = [1, -2];
    let f2 = RationalGF::new(
        vec![0, 0, 0, 0, 0, 16, -8, -16],
        poly_mul(&geometric, &[1, 0, -2]),
    )
    .expect("unit constant term");
    let f3 = RationalGF::new(
        vec![0, 0, 0, 1, 2, -4],
        poly_mul(&geometric, &[1, 0, -2, -2]),
    )
    .expect("unit constant term");
    (f2, f3)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric_series() {
        let gf = RationalGF::new(vec![1], vec![1, -1]).unwrap();
        assert_eq!(gf.series(6), vec![1; 7]);
        let neg = RationalGF::new(vec![1], vec![-1, 1]).unwrap();
        assert_eq!(neg.series(3), vec![-1; 4]);
    }

    #[test]
    fn non_unit_constant_rejected() {
        assert_eq!(
            RationalGF::new(vec![1], vec![2, 1]),
            Err(Error::NonUnitConstant(2))
        );
        assert!(RationalGF::new(vec![1], vec![]).is_err());
    }

    #[test]
    fn builtin_denominators() {
        let (f2, f3) = builtin_gfs();
        assert_eq!(f2.denominator(), &[1, -2, -2, 4]);
        assert_eq!(f3.denominator(), &[1, -2, -2, 2, 4]);
    }

    #[test]
    fn builtin_series_prefixes() {
        let (f2, f3) = builtin_gfs();
        assert_eq!(
            f3.series(12),
            vec![0, 0, 0, 1, 4, 6, 18, 36, 80, 172, 360, 760, 1576]
        );
        assert_eq!(f2.series(8), vec![0, 0, 0, 0, 0, 16, 24, 64, 112]);
        assert!(f2.series(4).iter().all(|&c| c == 0));
    }

    #[test]
    fn uncleared_form_agrees() {
        // Long division of the original mixed form
        // -(32 z^7/(1-2z) + 16 z^5 + 24 z^6) / (-1 + 2 z^2), term by term.
        let upto = 20;
        let geo: Vec<i128> = (0..=upto).map(|k| 1i128 << k).collect();
        let mut num = vec![0i128; upto + 1];
        for (k, g) in geo.iter().enumerate() {
            if k + 7 <= upto {
                num[k + 7] += 32 * g;
            }
        }
        num[5] += 16;
        num[6] += 24;
        // Divide by (1 - 2z^2) after absorbing the outer sign.
        let mut a = vec![0i128; upto + 1];
        for k in 0..=upto {
            a[k] = num[k] + if k >= 2 { 2 * a[k - 2] } else { 0 };
        }
        let (f2, _) = builtin_gfs();
        assert_eq!(f2.series(upto), a);
    }
}
