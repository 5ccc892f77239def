use std::collections::BTreeMap;
use std::fmt;

use rand::Rng;

use crate::algebra::Field;
use crate::error::PolyError;
use crate::poly::monomial::{monomial_basis, Monomial};

/// A homogeneous form of a fixed degree in `num_vars` variables.
///
/// Only nonzero coefficients are stored, and every stored monomial has total
/// degree exactly `degree`. The zero form keeps its nominal degree so that it
/// can be added to other forms of that degree.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly<F> {
    num_vars: usize,
    degree: u32,
    terms: BTreeMap<Monomial, F>,
}

impl<F: Field> MultiPoly<F> {
    pub fn zero(num_vars: usize, degree: u32) -> Self {
        MultiPoly { num_vars, degree, terms: BTreeMap::new() }
    }

    pub fn constant(num_vars: usize, c: F) -> Self {
        let mut p = Self::zero(num_vars, 0);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(num_vars), c);
        }
        p
    }

    pub fn variable(num_vars: usize, index: usize) -> Self {
        let mut p = Self::zero(num_vars, 1);
        p.terms.insert(Monomial::variable(num_vars, index), F::one());
        p
    }

    /// The linear form `Σ coeffs[i]·x_i`.
    pub fn linear(coeffs: &[F]) -> Self {
        let n = coeffs.len();
        let mut p = Self::zero(n, 1);
        for (i, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                p.terms.insert(Monomial::variable(n, i), c.clone());
            }
        }
        p
    }

    pub fn from_terms(
        num_vars: usize,
        degree: u32,
        terms: impl IntoIterator<Item = (Monomial, F)>,
    ) -> Result<Self, PolyError> {
        let mut p = Self::zero(num_vars, degree);
        for (m, c) in terms {
            if m.num_vars() != num_vars {
                return Err(PolyError::VariableMismatch { expected: num_vars, found: m.num_vars() });
            }
            if m.degree() != degree {
                return Err(PolyError::NotHomogeneous {
                    exponents: m.exponents().to_vec(),
                    expected: degree,
                    found: m.degree(),
                });
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    /// The form with coefficient `coeffs[i]` on `basis[i]`.
    pub fn from_coefficients(num_vars: usize, degree: u32, basis: &[Monomial], coeffs: &[F]) -> Self {
        debug_assert_eq!(basis.len(), coeffs.len());
        let mut p = Self::zero(num_vars, degree);
        for (m, c) in basis.iter().zip(coeffs) {
            if !c.is_zero() {
                p.terms.insert(m.clone(), c.clone());
            }
        }
        p
    }

    /// Dense random form: every monomial gets a random coefficient.
    pub fn random<R: Rng + ?Sized>(num_vars: usize, degree: u32, rng: &mut R) -> Self {
        let basis = monomial_basis(num_vars, degree);
        let coeffs: Vec<F> = basis.iter().map(|_| F::random(rng)).collect();
        Self::from_coefficients(num_vars, degree, &basis, &coeffs)
    }

    fn add_term(&mut self, m: Monomial, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().clone() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &F)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> F {
        self.terms.get(m).cloned().unwrap_or_else(F::zero)
    }

    /// Coefficient vector against `basis` (normally `monomial_basis`).
    pub fn coefficients_in(&self, basis: &[Monomial]) -> Vec<F> {
        basis.iter().map(|m| self.coefficient(m)).collect()
    }

    pub fn eval(&self, point: &[F]) -> Result<F, PolyError> {
        if point.len() != self.num_vars {
            return Err(PolyError::VariableMismatch { expected: self.num_vars, found: point.len() });
        }
        let powers = power_table(point, self.degree);
        Ok(self
            .terms
            .iter()
            .fold(F::zero(), |acc, (m, c)| acc + c.clone() * monomial_value(m, &powers)))
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, PolyError> {
        if self.num_vars != other.num_vars {
            return Err(PolyError::VariableMismatch { expected: self.num_vars, found: other.num_vars });
        }
        let mut out = Self::zero(self.num_vars, self.degree + other.degree);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca.clone() * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut out = Self::zero(self.num_vars, self.degree);
        if c.is_zero() {
            return out;
        }
        out.terms = self.terms.iter().map(|(m, x)| (m.clone(), x.clone() * c)).collect();
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(self.num_vars, F::one());
        for _ in 0..e {
            acc = acc.try_mul(self).expect("same variable count");
        }
        acc
    }

    /// Substitutes the linear forms `images[i]` (all in the same variables)
    /// for `x_i`.
    pub fn compose_linear(&self, images: &[MultiPoly<F>]) -> Result<Self, PolyError> {
        if images.len() != self.num_vars {
            return Err(PolyError::VariableMismatch { expected: self.num_vars, found: images.len() });
        }
        let target_vars = images.first().map_or(0, |l| l.num_vars);
        for l in images {
            if l.num_vars != target_vars {
                return Err(PolyError::VariableMismatch { expected: target_vars, found: l.num_vars });
            }
            if l.degree != 1 {
                return Err(PolyError::DegreeMismatch { expected: 1, found: l.degree });
            }
        }
        // powers[i][e] = images[i]^e
        let powers: Vec<Vec<MultiPoly<F>>> = images
            .iter()
            .map(|l| {
                let mut row = vec![Self::constant(target_vars, F::one())];
                for e in 1..=self.degree as usize {
                    let next = row[e - 1].try_mul(l).expect("same variable count");
                    row.push(next);
                }
                row
            })
            .collect();
        let mut out = Self::zero(target_vars, self.degree);
        for (m, c) in &self.terms {
            let mut term = Self::constant(target_vars, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    term = term.try_mul(&powers[i][e as usize])?;
                }
            }
            out = out.try_add(&term)?;
        }
        Ok(out)
    }

    /// Sets every variable outside `keep` to zero and renumbers the kept ones
    /// in the given order.
    pub fn restrict_to(&self, keep: &[usize]) -> Result<Self, PolyError> {
        for &i in keep {
            if i >= self.num_vars {
                return Err(PolyError::BadVariable { index: i, num_vars: self.num_vars });
            }
        }
        let mut out = Self::zero(keep.len(), self.degree);
        for (m, c) in &self.terms {
            let e = m.exponents();
            let kept: u32 = keep.iter().map(|&i| e[i]).sum();
            if kept == m.degree() {
                out.add_term(Monomial::new(keep.iter().map(|&i| e[i]).collect()), c.clone());
            }
        }
        Ok(out)
    }

    /// Largest exponent of `var` among the terms.
    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.exponents()[var]).max().unwrap_or(0)
    }

    fn check_compatible(&self, other: &Self) -> Result<(), PolyError> {
        if self.num_vars != other.num_vars {
            return Err(PolyError::VariableMismatch { expected: self.num_vars, found: other.num_vars });
        }
        if self.degree != other.degree {
            return Err(PolyError::DegreeMismatch { expected: self.degree, found: other.degree });
        }
        Ok(())
    }
}

/// `powers[i][e] = point[i]^e` for `e ≤ degree`.
pub(crate) fn power_table<F: Field>(point: &[F], degree: u32) -> Vec<Vec<F>> {
    point
        .iter()
        .map(|x| {
            let mut row = Vec::with_capacity(degree as usize + 1);
            row.push(F::one());
            for e in 1..=degree as usize {
                row.push(row[e - 1].clone() * x);
            }
            row
        })
        .collect()
}

pub(crate) fn monomial_value<F: Field>(m: &Monomial, powers: &[Vec<F>]) -> F {
    m.exponents()
        .iter()
        .enumerate()
        .fold(F::one(), |acc, (i, &e)| if e == 0 { acc } else { acc * &powers[i][e as usize] })
}

impl<F: fmt::Debug> fmt::Debug for MultiPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter().map(|(m, c)| (m.exponents(), c))).finish()
    }
}

impl<F: fmt::Display + num_traits::One + PartialEq> fmt::Display for MultiPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if m.degree() == 0 {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{c}*{m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Fp;
    use num_rational::BigRational;
    use num_traits::{One, Zero};
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    type F101 = Fp<101>;
    type Q = BigRational;

    fn x<F: Field>(n: usize, i: usize) -> MultiPoly<F> {
        MultiPoly::variable(n, i)
    }

    #[test]
    fn evaluation_examples() {
        let f = x::<Q>(3, 0);
        let p = [Q::zero(), Q::one(), Q::zero()];
        assert!(f.eval(&p).unwrap().is_zero());
        let g = x::<Q>(3, 0).try_mul(&x(3, 1)).unwrap();
        assert_eq!(g.eval(&[Q::one(), Q::one(), Q::one()]).unwrap(), Q::one());
        assert!(g.eval(&[Q::one()]).is_err());
    }

    #[test]
    fn random_cubic_matches_term_sum() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20 {
            let f = MultiPoly::<F101>::random(4, 3, &mut rng);
            let pt: Vec<F101> = (0..4).map(|_| F101::random(&mut rng)).collect();
            // Oracle: multiply each exponent out by repeated multiplication.
            let mut oracle = F101::zero();
            for (m, c) in f.terms() {
                let mut v = *c;
                for (i, &e) in m.exponents().iter().enumerate() {
                    for _ in 0..e {
                        v *= pt[i];
                    }
                }
                oracle += v;
            }
            assert_eq!(f.eval(&pt).unwrap(), oracle);
        }
    }

    #[test]
    fn homogeneity_is_enforced() {
        let bad = MultiPoly::<Q>::from_terms(2, 2, [(Monomial::new(vec![1, 0]), Q::one())]);
        assert!(matches!(bad, Err(PolyError::NotHomogeneous { .. })));
        assert!(x::<Q>(2, 0).try_add(&x::<Q>(2, 0).pow(2)).is_err());
    }

    #[test]
    fn cancellation_drops_terms() {
        let f = x::<Q>(2, 0);
        assert!(f.try_sub(&f).unwrap().is_zero());
    }

    #[test]
    fn compose_and_restrict() {
        // (x0 + x1)^2 with x0 -> y0, x1 -> y0 + y1
        let f = x::<Q>(2, 0).try_add(&x(2, 1)).unwrap().pow(2);
        let l0 = x::<Q>(2, 0);
        let l1 = x::<Q>(2, 0).try_add(&x(2, 1)).unwrap();
        let g = f.compose_linear(&[l0, l1]).unwrap();
        let pt = [Q::from_i64(2), Q::from_i64(3)];
        // (2 + 5)^2
        assert_eq!(g.eval(&pt).unwrap(), Q::from_i64(49));
        let h = x::<Q>(3, 0).try_mul(&x(3, 2)).unwrap().try_add(&x::<Q>(3, 1).pow(2)).unwrap();
        let r = h.restrict_to(&[0, 1]).unwrap();
        assert_eq!(r.num_terms(), 1);
        assert_eq!(r.degree(), 2);
    }

    proptest! {
        #[test]
        fn scaling_the_point_scales_the_value(seed in 0u64..500, lambda in 1u64..101) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let deg = (seed % 5) as u32;
            let f = MultiPoly::<F101>::random(3, deg, &mut rng);
            let pt: Vec<F101> = (0..3).map(|_| F101::random(&mut rng)).collect();
            let l = F101::new(lambda);
            let scaled: Vec<F101> = pt.iter().map(|c| *c * l).collect();
            prop_assert_eq!(f.eval(&scaled).unwrap(), l.pow(deg) * f.eval(&pt).unwrap());
        }

        #[test]
        fn products_stay_homogeneous(seed in 0u64..200) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let a = MultiPoly::<F101>::random(3, 2, &mut rng);
            let b = MultiPoly::<F101>::random(3, 3, &mut rng);
            let c = a.try_mul(&b).unwrap();
            prop_assert_eq!(c.degree(), 5);
            prop_assert!(c.terms().all(|(m, v)| m.degree() == 5 && !v.is_zero()));
        }
    }
}
