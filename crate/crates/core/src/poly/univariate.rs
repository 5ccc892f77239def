use num_traits::{One, Zero};

use crate::algebra::bareiss::IntegralDomain;
use crate::algebra::Field;

/// Dense univariate polynomial, coefficients from the constant term up.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly<F> {
    coeffs: Vec<F>,
}

impl<F: Field> UniPoly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn monomial(c: F, e: usize) -> Self {
        let mut coeffs = vec![F::zero(); e + 1];
        coeffs[e] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &F) -> F {
        self.coeffs.iter().rev().fold(F::zero(), |acc, c| acc * x + c)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let get = |v: &[F], i: usize| v.get(i).cloned().unwrap_or_else(F::zero);
        Self::new((0..n).map(|i| get(&self.coeffs, i) + get(&other.coeffs, i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let get = |v: &[F], i: usize| v.get(i).cloned().unwrap_or_else(F::zero);
        Self::new((0..n).map(|i| get(&self.coeffs, i) - get(&other.coeffs, i)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::new(vec![]);
        }
        let mut out = vec![F::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a.clone() * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::new(self.coeffs.iter().map(|x| x.clone() * c).collect())
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let d = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = divisor.leading().and_then(Field::inv).expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        let Some(n) = self.degree() else {
            return (Self::new(vec![]), Self::new(vec![]));
        };
        if n < d {
            return (Self::new(vec![]), self.clone());
        }
        let mut quot = vec![F::zero(); n - d + 1];
        for i in (0..=n - d).rev() {
            let c = rem[i + d].clone() * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, b) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= c.clone() * b;
            }
            quot[i] = c;
        }
        rem.truncate(d);
        (Self::new(quot), Self::new(rem))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * F::from_i64(i as i64))
                .collect(),
        )
    }

    pub fn monic(&self) -> Self {
        match self.leading().and_then(Field::inv) {
            Some(inv) => self.scale(&inv),
            None => self.clone(),
        }
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// True iff `gcd(u, u′)` is a nonzero constant. Over a perfect field this
    /// is exactly the absence of repeated roots in the algebraic closure.
    pub fn is_squarefree(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        self.gcd(&self.derivative()).degree() == Some(0)
    }
}

impl<F: Field> Zero for UniPoly<F> {
    fn zero() -> Self {
        UniPoly { coeffs: vec![] }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<F: Field> std::ops::Add for UniPoly<F> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        UniPoly::add(&self, &rhs)
    }
}

impl<F: Field> std::ops::Mul for UniPoly<F> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        UniPoly::mul(&self, &rhs)
    }
}

impl<F: Field> One for UniPoly<F> {
    fn one() -> Self {
        UniPoly { coeffs: vec![F::one()] }
    }
}

impl<F: Field> IntegralDomain for UniPoly<F> {
    fn mul_ref(&self, rhs: &Self) -> Self {
        UniPoly::mul(self, rhs)
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        UniPoly::sub(self, rhs)
    }
    fn neg_ref(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
    fn exact_div(&self, rhs: &Self) -> Self {
        let (q, r) = self.div_rem(rhs);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::bareiss::bareiss_det;
    use crate::algebra::{ExactMatrix, Fp};
    use num_rational::BigRational;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    type F1009 = Fp<1009>;
    type Q = BigRational;

    fn q(coeffs: &[i64]) -> UniPoly<Q> {
        UniPoly::new(coeffs.iter().map(|&c| Q::from_i64(c)).collect())
    }

    #[test]
    fn squarefree_examples() {
        assert!(!q(&[0, 0, 1]).is_squarefree());
        assert!(q(&[0, -1, 1]).is_squarefree());
        assert!(q(&[5]).is_squarefree());
        assert!(!q(&[]).is_squarefree());
    }

    #[test]
    fn division_identity() {
        let a = q(&[1, 2, 3, 4, 5]);
        let b = q(&[1, 0, 2]);
        let (quot, rem) = a.div_rem(&b);
        assert_eq!(quot.mul(&b).add(&rem), a);
        assert!(rem.degree() < b.degree());
    }

    /// Discriminant oracle: `u` is squarefree iff the Sylvester determinant of
    /// `u` and `u′` is nonzero, computed with plain field elimination.
    fn squarefree_by_sylvester(u: &UniPoly<F1009>) -> bool {
        let du = u.derivative();
        let (m, n) = (u.degree().unwrap(), du.degree().unwrap());
        let size = m + n;
        let mut entries = vec![F1009::zero(); size * size];
        for r in 0..n {
            for (i, c) in u.coeffs().iter().rev().enumerate() {
                entries[r * size + r + i] = *c;
            }
        }
        for r in 0..m {
            for (i, c) in du.coeffs().iter().rev().enumerate() {
                entries[(n + r) * size + r + i] = *c;
            }
        }
        ExactMatrix::new(size, size, entries).unwrap().rank() == size
    }

    #[test]
    fn random_degree_nine_matches_discriminant_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        let mut saw_repeated = 0;
        for trial in 0..60 {
            let mut u = UniPoly::new((0..10).map(|_| F1009::random(&mut rng)).collect());
            if trial % 2 == 0 {
                // Force a repeated root on half the trials.
                let r = F1009::random(&mut rng);
                let lin = UniPoly::new(vec![-r, F1009::one()]);
                u = UniPoly::new((0..8).map(|_| F1009::random(&mut rng)).collect())
                    .mul(&lin)
                    .mul(&lin);
            }
            if u.degree() != Some(9) {
                continue;
            }
            let expected = squarefree_by_sylvester(&u);
            if !expected {
                saw_repeated += 1;
            }
            assert_eq!(u.is_squarefree(), expected);
        }
        assert!(saw_repeated >= 20);
    }

    #[test]
    fn polynomial_bareiss_determinant() {
        // det [[x, 1], [1, x]] = x^2 - 1
        let x = q(&[0, 1]);
        let one = q(&[1]);
        let det = bareiss_det(&[vec![x.clone(), one.clone()], vec![one, x]]);
        assert_eq!(det, q(&[-1, 0, 1]));
    }
}
