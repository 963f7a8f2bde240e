//! Exact multivariate polynomials over arbitrary-precision rationals.
//!
//! A [`Polynomial`] has a fixed arity and a sparse map from exponent vectors
//! to non-zero rational coefficients. Every operation returns a canonical
//! value (zero coefficients dropped, fractions reduced), so structural
//! equality is polynomial equality.

mod factorial;
mod intval;
mod text;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub use factorial::{falling_factorial, falling_factorial_identity, scaled_binomial};
pub use intval::DEFAULT_RESIDUE_BUDGET;

/// Coefficient domain: a reduced fraction with positive denominator.
pub type ExactRational = BigRational;

/// Exponent vector of a single term.
///
/// Ordered graded-lexicographically: total degree first, then the exponent
/// of `x1`, then `x2`, and so on.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(arity: usize) -> Self {
        Monomial(vec![0; arity])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    arity: usize,
    terms: BTreeMap<Monomial, ExactRational>,
}

fn check_arity(arity: usize) -> Result<()> {
    if arity == 0 {
        Err(Error::ZeroArity)
    } else {
        Ok(())
    }
}

impl Polynomial {
    /// The zero polynomial. Panics if `arity == 0`.
    pub fn zero(arity: usize) -> Self {
        assert!(arity > 0, "polynomial arity must be positive");
        Polynomial {
            arity,
            terms: BTreeMap::new(),
        }
    }

    /// Panics if `arity == 0`.
    pub fn constant(arity: usize, value: impl Into<ExactRational>) -> Self {
        let mut p = Polynomial::zero(arity);
        p.add_term(Monomial::one(arity), value.into());
        p
    }

    pub fn one(arity: usize) -> Self {
        Polynomial::constant(arity, BigRational::one())
    }

    /// The variable `x_{index+1}`. Panics if `index >= arity`.
    pub fn var(arity: usize, index: usize) -> Self {
        assert!(index < arity, "variable index {index} out of range for arity {arity}");
        let mut exps = vec![0; arity];
        exps[index] = 1;
        let mut p = Polynomial::zero(arity);
        p.add_term(Monomial(exps), BigRational::one());
        p
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, merging
    /// repeated monomials and dropping zero coefficients.
    pub fn from_terms<I>(arity: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, ExactRational)>,
    {
        check_arity(arity)?;
        let mut p = Polynomial::zero(arity);
        for (exps, coeff) in terms {
            if exps.len() != arity {
                return Err(Error::ArityMismatch {
                    left: arity,
                    right: exps.len(),
                });
            }
            p.add_term(Monomial(exps), coeff);
        }
        Ok(p)
    }

    fn add_term(&mut self, m: Monomial, c: ExactRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &ExactRational)> {
        self.terms.iter()
    }

    /// Coefficient of the given monomial (zero when absent).
    pub fn coefficient(&self, exponents: &[u32]) -> ExactRational {
        self.terms
            .get(&Monomial(exponents.to_vec()))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    fn same_arity(&self, other: &Polynomial) -> Result<()> {
        if self.arity == other.arity {
            Ok(())
        } else {
            Err(Error::ArityMismatch {
                left: self.arity,
                right: other.arity,
            })
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_arity(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_arity(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_arity(other)?;
        let mut out = Polynomial::zero(self.arity);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, factor: &ExactRational) -> Polynomial {
        if factor.is_zero() {
            return Polynomial::zero(self.arity);
        }
        Polynomial {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c * factor))
                .collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Polynomial {
        let mut result = Polynomial::one(self.arity);
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Exact value at an integer point.
    pub fn eval(&self, point: &[BigInt]) -> Result<ExactRational> {
        if point.len() != self.arity {
            return Err(Error::PointLength {
                expected: self.arity,
                got: point.len(),
            });
        }
        let d = self.denominator_lcm();
        let value = self.eval_scaled(&d, point);
        Ok(BigRational::new(value, d))
    }

    /// `(d * self)(point)` for a common denominator `d` of all coefficients.
    pub(crate) fn eval_scaled(&self, d: &BigInt, point: &[BigInt]) -> BigInt {
        let mut powers: Vec<Vec<BigInt>> = point.iter().map(|v| vec![BigInt::one(), v.clone()]).collect();
        let mut total = BigInt::zero();
        for (m, c) in &self.terms {
            let mut term = c.numer() * (d / c.denom());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let pw = &mut powers[i];
                while pw.len() <= e as usize {
                    let next = pw.last().unwrap() * &point[i];
                    pw.push(next);
                }
                term *= &pw[e as usize];
            }
            total += term;
        }
        total
    }

    /// Least `d >= 1` such that `d * self` has integer coefficients.
    pub fn denominator_lcm(&self) -> BigInt {
        self.terms
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    /// Substitutes `subs[i]` for `x_{i+1}`. All substitutes must share one
    /// arity, which becomes the arity of the result.
    pub fn compose(&self, subs: &[Polynomial]) -> Result<Polynomial> {
        if subs.len() != self.arity {
            return Err(Error::ArityMismatch {
                left: self.arity,
                right: subs.len(),
            });
        }
        let target = subs[0].arity;
        for s in subs {
            subs[0].same_arity(s)?;
        }
        let mut powers: Vec<Vec<Polynomial>> = subs
            .iter()
            .map(|s| vec![Polynomial::one(target), s.clone()])
            .collect();
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let pw = &mut powers[i];
                while pw.len() <= e as usize {
                    let next = pw.last().unwrap() * &subs[i];
                    pw.push(next);
                }
                term = &term * &pw[e as usize];
            }
            out = &out + &term;
        }
        Ok(out)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        text::write_polynomial(self, f)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Polynomial> for &Polynomial {
            type Output = Polynomial;

            /// Panics on arity mismatch; use the `try_` form to get an error instead.
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$checked(rhs).expect("polynomial arity mismatch")
            }
        }

        impl $trait<Polynomial> for Polynomial {
            type Output = Polynomial;

            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            arity: self.arity,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> ExactRational {
        BigRational::new(n.into(), d.into())
    }

    fn p1(s: &str) -> Polynomial {
        Polynomial::parse(s, 1).unwrap()
    }

    fn p2(s: &str) -> Polynomial {
        Polynomial::parse(s, 2).unwrap()
    }

    fn pt(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn add_examples() {
        assert!((&p1("x1") + &p1("-x1")).is_zero());
        assert_eq!(&p1("x1^2 + 1") + &p1("x1"), p1("x1^2 + x1 + 1"));
        assert_eq!(&p1("1/2 * x1") + &p1("1/2 * x1"), p1("x1"));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(&p2("x1 + x2") * &p2("x1 - x2"), p2("x1^2 - x2^2"));
        assert!((&p2("3 * x1 + x2^4") * &Polynomial::zero(2)).is_zero());
        assert_eq!(p1("x1 + 1").pow(2), p1("x1^2 + 2 * x1 + 1"));
    }

    #[test]
    fn arity_mismatch_is_an_error() {
        let a = Polynomial::var(1, 0);
        let b = Polynomial::var(2, 1);
        assert_eq!(a.try_add(&b), Err(Error::ArityMismatch { left: 1, right: 2 }));
        assert!(a.try_mul(&b).is_err());
        assert!(a.try_sub(&b).is_err());
        assert!(Polynomial::from_terms(2, [(vec![1], q(1, 1))]).is_err());
        assert_eq!(Polynomial::from_terms(0, []), Err(Error::ZeroArity));
    }

    #[test]
    fn eval_examples() {
        assert_eq!(p2("x1^2 + x2^2").eval(&pt(&[3, 4])).unwrap(), q(25, 1));
        assert_eq!(p1("1/2 * x1").eval(&pt(&[3])).unwrap(), q(3, 2));
        assert_eq!(Polynomial::zero(3).eval(&pt(&[7, -1, 2])).unwrap(), q(0, 1));
        assert_eq!(
            p2("x1").eval(&pt(&[1])),
            Err(Error::PointLength { expected: 2, got: 1 })
        );
    }

    #[test]
    fn denominator_lcm_examples() {
        assert_eq!(p2("1/2 * x1 + 1/3 * x2").denominator_lcm(), BigInt::from(6));
        assert_eq!(p1("x1^2 + 1").denominator_lcm(), BigInt::from(1));
        assert_eq!(Polynomial::zero(1).denominator_lcm(), BigInt::from(1));
    }

    #[test]
    fn degree_and_zero() {
        assert_eq!(Polynomial::zero(2).degree(), None);
        assert_eq!(p2("x1^2 * x2 + x2").degree(), Some(3));
        assert_eq!(Polynomial::constant(2, q(-3, 4)).degree(), Some(0));
    }

    #[test]
    fn compose_substitutes() {
        // (a^2 - b^2) with a = x1 + x2, b = x1 - x2 gives 4 x1 x2
        let outer = p2("x1^2 - x2^2");
        let got = outer.compose(&[p2("x1 + x2"), p2("x1 - x2")]).unwrap();
        assert_eq!(got, p2("4 * x1 * x2"));
        assert!(outer.compose(&[p2("x1")]).is_err());
    }

    #[test]
    fn graded_lex_order() {
        let a = Monomial::new(vec![0, 2]);
        let b = Monomial::new(vec![1, 0]);
        let c = Monomial::new(vec![1, 1]);
        assert!(b < a);
        assert!(a < c);
        assert!(Monomial::new(vec![0, 2]) < Monomial::new(vec![2, 0]));
    }
}
