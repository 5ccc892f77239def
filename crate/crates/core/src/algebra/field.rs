use std::fmt;
use std::hash::Hash;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::bareiss;
use crate::algebra::gauss_echelon;
use crate::error::AlgebraError;

/// Which coefficient field a document or computation lives over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldDescriptor {
    Rational,
    Prime(u64),
}

impl FieldDescriptor {
    /// Number of elements, `None` for the rationals.
    pub fn order(self) -> Option<u64> {
        match self {
            FieldDescriptor::Rational => None,
            FieldDescriptor::Prime(p) => Some(p),
        }
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::Rational => write!(f, "rational"),
            FieldDescriptor::Prime(p) => write!(f, "fp:{p}"),
        }
    }
}

impl FromStr for FieldDescriptor {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "rational" {
            return Ok(FieldDescriptor::Rational);
        }
        let p = s
            .strip_prefix("fp:")
            .and_then(|p| p.parse::<u64>().ok())
            .ok_or_else(|| AlgebraError::BadFieldDescriptor(s.to_string()))?;
        if !is_prime(p) {
            return Err(AlgebraError::BadFieldDescriptor(format!("{s}: modulus is not prime")));
        }
        Ok(FieldDescriptor::Prime(p))
    }
}

impl Serialize for FieldDescriptor {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FieldDescriptor {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

pub const fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact coefficient field.
///
/// Everything in this crate is generic over `Field`; the two provided
/// instances are [`BigRational`] and the prime fields [`Fp`].
pub trait Field:
    Clone
    + fmt::Debug
    + fmt::Display
    + Eq
    + Hash
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
{
    fn descriptor() -> FieldDescriptor;

    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;

    fn from_i64(v: i64) -> Self;

    fn parse_scalar(s: &str) -> Result<Self, AlgebraError>;

    /// A random element: uniform over a prime field, a small integer over ℚ.
    fn random<R: Rng + ?Sized>(rng: &mut R) -> Self;

    /// Brings `rows` to row echelon form in place, drops the zero rows and
    /// returns the pivot column of each remaining row. Row operations are
    /// invertible, so the row space is preserved.
    fn echelonize(rows: &mut Vec<Vec<Self>>) -> Vec<usize> {
        gauss_echelon(rows)
    }

    fn order() -> Option<u64> {
        Self::descriptor().order()
    }

    fn random_nonzero<R: Rng + ?Sized>(rng: &mut R) -> Self {
        loop {
            let x = Self::random(rng);
            if !x.is_zero() {
                return x;
            }
        }
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc *= base.clone();
            }
            base = base.clone() * &base;
            e >>= 1;
        }
        acc
    }

    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self.clone() * r)
    }
}

/// The prime field of order `P`. `P` must be prime and below 2^32 so that a
/// product of two residues fits in a `u64`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    const VALID: () = assert!(P < (1 << 32) && is_prime(P), "Fp modulus must be a prime below 2^32");

    pub fn new(v: u64) -> Self {
        #[allow(clippy::let_unit_value)]
        let () = Self::VALID;
        Fp(v % P)
    }

    pub fn residue(self) -> u64 {
        self.0
    }

    pub const fn modulus() -> u64 {
        P
    }
}

impl<const P: u64> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.0, P)
    }
}

impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Zero for Fp<P> {
    fn zero() -> Self {
        Fp::new(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Fp<P> {
    fn one() -> Self {
        Fp::new(1)
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let s = self.0 + rhs.0;
        Fp(if s >= P { s - P } else { s })
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Fp(if self.0 >= rhs.0 { self.0 - rhs.0 } else { self.0 + P - rhs.0 })
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp(self.0 * rhs.0 % P)
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp(if self.0 == 0 { 0 } else { P - self.0 })
    }
}

impl<'a, const P: u64> Add<&'a Fp<P>> for Fp<P> {
    type Output = Self;
    fn add(self, rhs: &'a Self) -> Self {
        self + *rhs
    }
}

impl<'a, const P: u64> Sub<&'a Fp<P>> for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: &'a Self) -> Self {
        self - *rhs
    }
}

impl<'a, const P: u64> Mul<&'a Fp<P>> for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: &'a Self) -> Self {
        self * *rhs
    }
}

impl<const P: u64> AddAssign for Fp<P> {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl<const P: u64> SubAssign for Fp<P> {
    fn sub_assign(&mut self, rhs: Self) {
        *self = *self - rhs;
    }
}

impl<const P: u64> MulAssign for Fp<P> {
    fn mul_assign(&mut self, rhs: Self) {
        *self = *self * rhs;
    }
}

impl<const P: u64> Field for Fp<P> {
    fn descriptor() -> FieldDescriptor {
        FieldDescriptor::Prime(P)
    }

    fn inv(&self) -> Option<Self> {
        if self.0 == 0 {
            return None;
        }
        // Fermat: a^(p-2) = a^-1.
        let mut base = self.0;
        let mut e = P - 2;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % P;
            }
            base = base * base % P;
            e >>= 1;
        }
        Some(Fp(acc))
    }

    fn from_i64(v: i64) -> Self {
        Fp::new(v.rem_euclid(P as i64) as u64)
    }

    fn parse_scalar(s: &str) -> Result<Self, AlgebraError> {
        let s = s.trim();
        let bad = || AlgebraError::BadScalar { text: s.to_string(), field: Self::descriptor() };
        match s.split_once('/') {
            Some((num, den)) => {
                let num = parse_residue::<P>(num).ok_or_else(bad)?;
                let den = parse_residue::<P>(den).ok_or_else(bad)?;
                num.div_exact(&den).ok_or_else(bad)
            }
            None => parse_residue::<P>(s).ok_or_else(bad),
        }
    }

    fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Fp::new(rng.gen_range(0..P))
    }
}

fn parse_residue<const P: u64>(s: &str) -> Option<Fp<P>> {
    let v: BigInt = s.trim().parse().ok()?;
    let r = ((v % BigInt::from(P)) + BigInt::from(P)) % BigInt::from(P);
    let r: u64 = r.try_into().ok()?;
    Some(Fp::new(r))
}

impl Field for BigRational {
    fn descriptor() -> FieldDescriptor {
        FieldDescriptor::Rational
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn parse_scalar(s: &str) -> Result<Self, AlgebraError> {
        let s = s.trim();
        let bad = || AlgebraError::BadScalar { text: s.to_string(), field: Self::descriptor() };
        match s.split_once('/') {
            Some((num, den)) => {
                let num: BigInt = num.trim().parse().map_err(|_| bad())?;
                let den: BigInt = den.trim().parse().map_err(|_| bad())?;
                if den.is_zero() {
                    return Err(bad());
                }
                Ok(BigRational::new(num, den))
            }
            None => {
                let num: BigInt = s.parse().map_err(|_| bad())?;
                Ok(BigRational::from_integer(num))
            }
        }
    }

    fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Self::from_i64(rng.gen_range(-9..=9))
    }

    fn echelonize(rows: &mut Vec<Vec<Self>>) -> Vec<usize> {
        // Clear denominators row by row, then run fraction-free elimination
        // over the integers.
        let mut int_rows: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|row| {
                let lcm = row
                    .iter()
                    .fold(BigInt::one(), |acc, x| num_integer::Integer::lcm(&acc, x.denom()));
                row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
            })
            .collect();
        let pivots = bareiss::bareiss_echelon(&mut int_rows);
        *rows = int_rows
            .into_iter()
            .take(pivots.len())
            .map(|row| {
                let g = row
                    .iter()
                    .fold(BigInt::zero(), |acc, x| num_integer::Integer::gcd(&acc, x));
                row.into_iter()
                    .map(|x| {
                        let x = if g.is_zero() { x } else { x / &g };
                        BigRational::from_integer(x)
                    })
                    .collect()
            })
            .collect();
        pivots
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type F101 = Fp<101>;

    #[test]
    fn descriptor_round_trip() {
        for s in ["rational", "fp:101", "fp:1009", "fp:2"] {
            let d: FieldDescriptor = s.parse().unwrap();
            assert_eq!(d.to_string(), s);
        }
        assert!("fp:100".parse::<FieldDescriptor>().is_err());
        assert!("fp:".parse::<FieldDescriptor>().is_err());
        assert!("real".parse::<FieldDescriptor>().is_err());
    }

    #[test]
    fn prime_field_inverse() {
        for v in 1..101 {
            let x = F101::new(v);
            assert_eq!(x * x.inv().unwrap(), F101::one());
        }
        assert!(F101::zero().inv().is_none());
    }

    #[test]
    fn parse_scalars() {
        assert_eq!(F101::parse_scalar("-1").unwrap(), F101::new(100));
        assert_eq!(F101::parse_scalar("1/2").unwrap() * F101::new(2), F101::one());
        assert!(F101::parse_scalar("1/101").is_err());
        let q = BigRational::parse_scalar("6/-4").unwrap();
        assert_eq!(q.to_string(), "-3/2");
        assert!(BigRational::parse_scalar("abc").is_err());
        assert!(BigRational::parse_scalar("1/0").is_err());
    }

    #[test]
    fn rational_echelon_keeps_row_space() {
        let h = |a: i64, b: i64| BigRational::new(a.into(), b.into());
        let mut rows = vec![
            vec![h(1, 2), h(1, 3), h(0, 1)],
            vec![h(1, 1), h(2, 3), h(0, 1)],
            vec![h(0, 1), h(0, 1), h(5, 7)],
        ];
        let pivots = BigRational::echelonize(&mut rows);
        assert_eq!(pivots, vec![0, 2]);
        assert_eq!(rows.len(), 2);
    }
}
