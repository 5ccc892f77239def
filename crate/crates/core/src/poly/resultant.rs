use num_traits::Zero;

use crate::algebra::bareiss::bareiss_det;
use crate::algebra::Field;
use crate::error::PolyError;
use crate::poly::monomial::Monomial;
use crate::poly::multipoly::MultiPoly;
use crate::poly::univariate::UniPoly;

/// Resultant of two ternary forms with respect to one variable.
///
/// The result is a binary form in the two remaining variables (kept in their
/// original order). It is the Sylvester determinant of `A` and `B` viewed as
/// polynomials in `x_e` whose coefficients are binary forms; the determinant
/// is computed fraction-free after setting the last remaining variable to 1
/// and homogenized back afterwards. Its degree is
/// `deg A · deg B − (deg A − a)(deg B − b)` where `a`, `b` are the degrees in
/// `x_e`, so it equals `deg A · deg B` exactly when both leading coefficients
/// in `x_e` are constants.
pub fn resultant_bivariate<F: Field>(
    a: &MultiPoly<F>,
    b: &MultiPoly<F>,
    eliminated_var: usize,
) -> Result<MultiPoly<F>, PolyError> {
    for p in [a, b] {
        if p.num_vars() != 3 {
            return Err(PolyError::VariableMismatch { expected: 3, found: p.num_vars() });
        }
    }
    if eliminated_var >= 3 {
        return Err(PolyError::BadVariable { index: eliminated_var, num_vars: 3 });
    }
    if a.is_zero() || b.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let rest: Vec<usize> = (0..3).filter(|&i| i != eliminated_var).collect();
    let u = rest[0];
    let da = a.degree_in(eliminated_var) as usize;
    let db = b.degree_in(eliminated_var) as usize;
    if da == 0 || db == 0 {
        return Err(PolyError::DegenerateLeadingCoefficient { var: eliminated_var });
    }

    let ca = coefficients_in_var(a, eliminated_var, u, da);
    let cb = coefficients_in_var(b, eliminated_var, u, db);
    let size = da + db;
    let mut sylvester = vec![vec![UniPoly::<F>::zero(); size]; size];
    for r in 0..db {
        for (i, c) in ca.iter().rev().enumerate() {
            sylvester[r][r + i] = c.clone();
        }
    }
    for r in 0..da {
        for (i, c) in cb.iter().rev().enumerate() {
            sylvester[db + r][r + i] = c.clone();
        }
    }
    let det = bareiss_det(&sylvester);

    let total = a.degree() * b.degree() - (a.degree() - da as u32) * (b.degree() - db as u32);
    let terms = det.coeffs().iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| {
        let i = i as u32;
        assert!(i <= total, "resultant degree exceeds the homogeneous bound");
        let mut e = [0u32; 2];
        e[0] = i;
        e[1] = total - i;
        (Monomial::new(e.to_vec()), c.clone())
    });
    MultiPoly::from_terms(2, total, terms)
}

/// Coefficients of `p` as a polynomial in `var`, each dehomogenized to a
/// univariate polynomial in `u` (the other remaining variable set to 1).
fn coefficients_in_var<F: Field>(p: &MultiPoly<F>, var: usize, u: usize, deg: usize) -> Vec<UniPoly<F>> {
    let mut coeffs = vec![UniPoly::zero(); deg + 1];
    for (m, c) in p.terms() {
        let e = m.exponents();
        let term = UniPoly::monomial(c.clone(), e[u] as usize);
        let slot = e[var] as usize;
        coeffs[slot] = coeffs[slot].add(&term);
    }
    coeffs
}

/// Squarefreeness of a binary form (or a single-variable form `c·x^d`).
///
/// A binary form is dehomogenized at its last variable; the root at infinity
/// has multiplicity `degree − deg(dehomogenization)`, and the finite part is
/// tested with `gcd(u, u′)`.
pub fn is_squarefree<F: Field>(form: &MultiPoly<F>) -> Result<bool, PolyError> {
    if form.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    match form.num_vars() {
        1 => Ok(form.degree() <= 1),
        2 => {
            let u = dehomogenize_binary(form);
            let finite_degree = u.degree().expect("nonzero form") as u32;
            let at_infinity = form.degree() - finite_degree;
            Ok(at_infinity <= 1 && u.is_squarefree())
        }
        n => Err(PolyError::VariableMismatch { expected: 2, found: n }),
    }
}

/// `f(x, 1)` for a binary form `f(x, y)`.
pub fn dehomogenize_binary<F: Field>(form: &MultiPoly<F>) -> UniPoly<F> {
    let mut coeffs = vec![F::zero(); form.degree() as usize + 1];
    for (m, c) in form.terms() {
        coeffs[m.exponents()[0] as usize] = c.clone();
    }
    UniPoly::new(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Fp;
    use num_rational::BigRational;
    use num_traits::One;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    type Q = BigRational;
    type F101 = Fp<101>;

    fn var<F: Field>(i: usize) -> MultiPoly<F> {
        MultiPoly::variable(3, i)
    }

    #[test]
    fn conic_and_line() {
        // A = x0·x2 − x1², B = x0 − x1: the common zeros are (0:0:1), (1:1:1).
        let a = var::<Q>(0).try_mul(&var(2)).unwrap().try_sub(&var::<Q>(1).pow(2)).unwrap();
        let b = var::<Q>(0).try_sub(&var(1)).unwrap();
        let r = resultant_bivariate(&a, &b, 0).unwrap();
        assert_eq!(r.degree(), 2);
        // In (x1, x2): x1(x1 − x2) up to sign, roots (0:1) and (1:1).
        assert!(r.eval(&[Q::zero(), Q::one()]).unwrap().is_zero());
        assert!(r.eval(&[Q::one(), Q::one()]).unwrap().is_zero());
        assert!(!r.eval(&[Q::one(), Q::from_i64(2)]).unwrap().is_zero());
        assert!(is_squarefree(&r).unwrap());
    }

    #[test]
    fn equal_inputs_have_zero_resultant() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let a = MultiPoly::<F101>::random(3, 3, &mut rng);
        assert!(resultant_bivariate(&a, &a, 2).unwrap().is_zero());
    }

    #[test]
    fn missing_variable_is_degenerate() {
        let a = var::<Q>(1);
        let b = var::<Q>(0);
        assert!(matches!(
            resultant_bivariate(&a, &b, 0),
            Err(PolyError::DegenerateLeadingCoefficient { var: 0 })
        ));
    }

    /// Points of ℙ²(𝔽_101) in normalized form.
    fn plane_points() -> Vec<[F101; 3]> {
        let mut pts = Vec::new();
        let all = || (0..101).map(F101::new);
        for a in all() {
            for b in all() {
                pts.push([F101::one(), a, b]);
            }
        }
        for b in all() {
            pts.push([F101::zero(), F101::one(), b]);
        }
        pts.push([F101::zero(), F101::zero(), F101::one()]);
        pts
    }

    #[test]
    fn random_conics_match_exhaustive_search() {
        let pts = plane_points();
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let mut checked = 0;
        while checked < 5 {
            let a = MultiPoly::<F101>::random(3, 2, &mut rng);
            let b = MultiPoly::<F101>::random(3, 2, &mut rng);
            let r = resultant_bivariate(&a, &b, 0).unwrap();
            if r.is_zero() || !is_squarefree(&r).unwrap() {
                continue;
            }
            assert_eq!(r.degree(), 4);
            let common = pts
                .iter()
                .filter(|p| a.eval(&p[..]).unwrap().is_zero() && b.eval(&p[..]).unwrap().is_zero())
                .count();
            let mut roots = (0..101)
                .filter(|&t| r.eval(&[F101::new(t), F101::one()]).unwrap().is_zero())
                .count();
            if r.eval(&[F101::one(), F101::zero()]).unwrap().is_zero() {
                roots += 1;
            }
            // Squarefree ⇒ each rational root of the resultant carries exactly
            // one intersection point, which is then rational.
            assert_eq!(common, roots);
            checked += 1;
        }
    }

    #[test]
    fn binary_squarefree_examples() {
        let x2 = MultiPoly::<Q>::variable(2, 0).pow(2);
        assert!(!is_squarefree(&x2).unwrap());
        let y2 = MultiPoly::<Q>::variable(2, 1).pow(2);
        assert!(!is_squarefree(&y2).unwrap());
        let xy = MultiPoly::<Q>::variable(2, 0).try_mul(&MultiPoly::variable(2, 1)).unwrap();
        assert!(is_squarefree(&xy).unwrap());
        let x = MultiPoly::<Q>::variable(2, 0);
        let f = x.try_mul(&x.try_sub(&MultiPoly::variable(2, 1)).unwrap()).unwrap();
        assert!(is_squarefree(&f).unwrap());
        assert!(is_squarefree(&MultiPoly::<Q>::zero(2, 3)).is_err());
    }
}
