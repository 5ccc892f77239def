//! Fraction-free (Bareiss) elimination over integral domains.
//!
//! Every intermediate entry after step `s` is an `(s+1) × (s+1)` minor of the
//! input, so the division by the previous pivot is exact. This keeps integer
//! growth polynomial and lets the same routine compute determinants of
//! matrices with polynomial entries.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::field::{Field, Fp};

/// A commutative ring without zero divisors that supports exact division.
pub trait IntegralDomain: Clone + Zero + One {
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    /// `self / rhs`, assuming `rhs` divides `self`.
    fn exact_div(&self, rhs: &Self) -> Self;
}

impl IntegralDomain for BigInt {
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn exact_div(&self, rhs: &Self) -> Self {
        debug_assert!((self % rhs).is_zero());
        self / rhs
    }
}

impl<const P: u64> IntegralDomain for Fp<P> {
    fn mul_ref(&self, rhs: &Self) -> Self {
        *self * *rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        *self - *rhs
    }
    fn neg_ref(&self) -> Self {
        -*self
    }
    fn exact_div(&self, rhs: &Self) -> Self {
        self.div_exact(rhs).expect("division by zero in fraction-free elimination")
    }
}

/// Fraction-free forward elimination. Pivots are the first nonzero entry in
/// column order. Zero rows are dropped; returns the pivot columns.
pub fn bareiss_echelon<T: IntegralDomain>(rows: &mut Vec<Vec<T>>) -> Vec<usize> {
    let (pivots, _) = eliminate(rows);
    rows.truncate(pivots.len());
    pivots
}

pub fn bareiss_rank<T: IntegralDomain>(rows: &[Vec<T>]) -> usize {
    let mut work = rows.to_vec();
    eliminate(&mut work).0.len()
}

/// Determinant of a square matrix.
pub fn bareiss_det<T: IntegralDomain>(rows: &[Vec<T>]) -> T {
    let n = rows.len();
    if n == 0 {
        return T::one();
    }
    debug_assert!(rows.iter().all(|r| r.len() == n));
    let mut work = rows.to_vec();
    let (pivots, negate) = eliminate(&mut work);
    if pivots.len() < n {
        return T::zero();
    }
    let det = work[n - 1][n - 1].clone();
    if negate {
        det.neg_ref()
    } else {
        det
    }
}

/// Returns the pivot columns and whether an odd number of row swaps happened.
fn eliminate<T: IntegralDomain>(rows: &mut [Vec<T>]) -> (Vec<usize>, bool) {
    let n = rows.len();
    let cols = rows.first().map_or(0, Vec::len);
    let mut prev = T::one();
    let mut pivots = Vec::new();
    let mut odd_swaps = false;
    let mut r = 0;
    for c in 0..cols {
        if r == n {
            break;
        }
        let Some(p) = (r..n).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        if p != r {
            rows.swap(p, r);
            odd_swaps = !odd_swaps;
        }
        let (head, tail) = rows.split_at_mut(r + 1);
        let pivot_row = &head[r];
        let pivot = &pivot_row[c];
        for row in tail.iter_mut() {
            let lead = row[c].clone();
            for j in c + 1..cols {
                let v = pivot.mul_ref(&row[j]).sub_ref(&lead.mul_ref(&pivot_row[j]));
                row[j] = v.exact_div(&prev);
            }
            row[c] = T::zero();
        }
        prev = pivot.clone();
        pivots.push(c);
        r += 1;
    }
    (pivots, odd_swaps)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int_rows(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn integer_determinants() {
        assert_eq!(bareiss_det(&int_rows(&[&[2, 0], &[0, 3]])), BigInt::from(6));
        assert_eq!(bareiss_det(&int_rows(&[&[0, 1], &[1, 0]])), BigInt::from(-1));
        assert_eq!(
            bareiss_det(&int_rows(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 10]])),
            BigInt::from(-3)
        );
        assert_eq!(bareiss_det(&int_rows(&[&[1, 2], &[2, 4]])), BigInt::zero());
    }

    #[test]
    fn skipped_columns_stay_exact() {
        let rows = int_rows(&[&[0, 2, 4, 1], &[0, 1, 2, 5], &[0, 3, 6, 7]]);
        assert_eq!(bareiss_rank(&rows), 2);
    }
}
