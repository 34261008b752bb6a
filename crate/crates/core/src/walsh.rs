//! Walsh–Hadamard spectrum of `(-1)^f`.

use crate::truth_table::TruthTable;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalshSpectrum {
    n: usize,
    values: Vec<i32>,
}

/// In-place unnormalized Hadamard butterfly, `n * 2^n` additions.
pub(crate) fn butterfly<T>(values: &mut [T])
where
    T: Copy + std::ops::Add<Output = T> + std::ops::Sub<Output = T>,
{
    let len = values.len();
    debug_assert!(len.is_power_of_two());
    let mut half = 1;
    while half < len {
        for block in values.chunks_exact_mut(2 * half) {
            let (lo, hi) = block.split_at_mut(half);
            for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                let (x, y) = (*a, *b);
                *a = x + y;
                *b = x - y;
            }
        }
        half *= 2;
    }
}

/// `values[w] = sum_x (-1)^(f(x) ^ w.x)`, with `w` indexed like the table.
pub fn walsh_transform(tt: &TruthTable) -> WalshSpectrum {
    let mut values: Vec<i32> = tt.iter().map(|b| if b { -1 } else { 1 }).collect();
    butterfly(&mut values);
    WalshSpectrum {
        n: tt.num_vars(),
        values,
    }
}

impl WalshSpectrum {
    pub fn num_vars(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[i32] {
        &self.values
    }

    pub fn get(&self, w: usize) -> i32 {
        self.values[w]
    }

    pub fn max_abs(&self) -> u32 {
        self.values.iter().map(|v| v.unsigned_abs()).max().unwrap_or(0)
    }

    /// `sum_w values[w]^2`, which Parseval pins to `2^(2n)`.
    pub fn sum_of_squares(&self) -> u128 {
        self.values
            .iter()
            .map(|&v| (i64::from(v) * i64::from(v)) as u128)
            .sum()
    }

    pub fn count_zeros(&self) -> usize {
        self.values.iter().filter(|&&v| v == 0).count()
    }

    /// CSV with header `w,value`, one row per `w` in ascending order.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("w,value\n");
        for (w, v) in self.values.iter().enumerate() {
            s.push_str(&format!("{w},{v}\n"));
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::anf::AnfPolynomial;

    fn direct(tt: &TruthTable, w: usize) -> i32 {
        (0..tt.len())
            .map(|x| {
                if tt.get(x) ^ ((x & w).count_ones() % 2 == 1) {
                    -1
                } else {
                    1
                }
            })
            .sum()
    }

    #[test]
    fn zero_function() {
        let s = walsh_transform(&TruthTable::zero(3).unwrap());
        assert_eq!(s.values(), &[8, 0, 0, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn linear_function_is_a_delta() {
        for b in 0..16 {
            let s = walsh_transform(&TruthTable::linear(4, b).unwrap());
            for w in 0..16 {
                assert_eq!(s.get(w), if w == b { 16 } else { 0 });
            }
        }
    }

    #[test]
    fn t4_is_flat() {
        let t4 = AnfPolynomial::new(4, [[1, 2], [2, 3], [3, 4]])
            .unwrap()
            .to_truth_table()
            .unwrap();
        let s = walsh_transform(&t4);
        assert!(s.values().iter().all(|v| v.abs() == 4));
    }

    #[test]
    fn butterfly_matches_direct_sum() {
        let f = TruthTable::from_fn(7, |i| (i * 37 + i / 3) % 5 < 2).unwrap();
        let s = walsh_transform(&f);
        for w in 0..128 {
            assert_eq!(s.get(w), direct(&f, w));
        }
        assert_eq!(s.sum_of_squares(), 1 << 14);
    }

    #[test]
    fn csv_export() {
        let s = walsh_transform(&TruthTable::zero(1).unwrap());
        assert_eq!(s.to_csv(), "w,value\n0,2\n1,0\n");
    }
}
