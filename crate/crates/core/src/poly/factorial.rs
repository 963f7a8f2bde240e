//! The falling-factorial identity `x(x-1)...(x-k+1) = k! * C(x, k)` in `Q[x]`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::Polynomial;
use crate::error::{Error, Result};

/// `x(x-1)...(x-k+1)` as a univariate polynomial, built by repeated multiplication.
pub fn falling_factorial(k: u32) -> Polynomial {
    let x = Polynomial::var(1, 0);
    (0..k).fold(Polynomial::one(1), |acc, i| {
        &acc * &(&x - &Polynomial::constant(1, BigInt::from(i)))
    })
}

/// Signed Stirling numbers of the first kind `s(k, j)` for `j = 0..=k`.
fn stirling_first_kind(k: u32) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for n in 0..k {
        // s(n+1, j) = s(n, j-1) - n * s(n, j)
        let mut next = vec![BigInt::from(0); row.len() + 1];
        for (j, s) in row.iter().enumerate() {
            next[j + 1] += s;
            next[j] -= s * n;
        }
        row = next;
    }
    row
}

/// `k! * C(x, k)`, where the binomial polynomial `C(x, k)` is assembled from
/// Stirling numbers with rational coefficients `s(k, j) / k!`.
pub fn scaled_binomial(k: u32) -> Polynomial {
    let factorial: BigInt = (1..=k).map(BigInt::from).product();
    let binomial = Polynomial::from_terms(
        1,
        stirling_first_kind(k)
            .into_iter()
            .enumerate()
            .map(|(j, s)| (vec![j as u32], BigRational::new(s, factorial.clone()))),
    )
    .expect("arity 1");
    binomial.scale(&BigRational::from(factorial))
}

/// Checks the identity for one `k` in `1..=max_k`.
pub fn falling_factorial_identity(k: u32, max_k: u32) -> Result<bool> {
    if k == 0 {
        return Err(Error::Precondition("k must be at least 1".into()));
    }
    if k > max_k {
        return Err(Error::budget("falling factorial degree", k, max_k));
    }
    Ok(falling_factorial(k) == scaled_binomial(k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        assert_eq!(falling_factorial_identity(1, 20), Ok(true));
        assert_eq!(falling_factorial_identity(3, 20), Ok(true));
        assert_eq!(falling_factorial_identity(10, 20), Ok(true));
    }

    #[test]
    fn k3_expansion() {
        let expect = Polynomial::parse("x1^3 - 3 * x1^2 + 2 * x1", 1).unwrap();
        assert_eq!(falling_factorial(3), expect);
        assert_eq!(scaled_binomial(3), expect);
    }

    #[test]
    fn k10_against_coefficient_oracle() {
        // Expand prod (x - i) by convolution on plain integer vectors.
        let mut coeffs = vec![1i64];
        for i in 0..10i64 {
            let mut next = vec![0i64; coeffs.len() + 1];
            for (j, c) in coeffs.iter().enumerate() {
                next[j + 1] += c;
                next[j] -= i * c;
            }
            coeffs = next;
        }
        let oracle = Polynomial::from_terms(
            1,
            coeffs
                .into_iter()
                .enumerate()
                .map(|(j, c)| (vec![j as u32], BigRational::from(BigInt::from(c)))),
        )
        .unwrap();
        assert_eq!(scaled_binomial(10), oracle);
        assert_eq!(falling_factorial(10), oracle);
    }

    #[test]
    fn binomial_is_integer_valued() {
        let factorial: BigInt = (1..=5).map(BigInt::from).product();
        let c5 = scaled_binomial(5).scale(&BigRational::new(BigInt::one(), factorial));
        assert_eq!(c5.is_integer_valued(), Ok(true));
        assert_eq!(c5.denominator_lcm(), BigInt::from(120));
    }

    #[test]
    fn out_of_budget() {
        assert!(falling_factorial_identity(21, 20).unwrap_err().is_budget());
        assert!(matches!(falling_factorial_identity(0, 20), Err(Error::Precondition(_))));
    }
}
