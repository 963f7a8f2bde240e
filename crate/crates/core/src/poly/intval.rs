//! Deciding integer-valuedness.
//!
//! With `d = denominator_lcm(p)` and `g = d * p`, the value `g(a) mod d`
//! depends only on `a mod d`, so `p` is integer-valued on all of `Z^n` iff
//! `g(a) = 0 (mod d)` on the residue box `{0..d-1}^n`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use super::Polynomial;
use crate::error::{Error, Result};

/// Residue-box points visited by [`Polynomial::is_integer_valued`].
pub const DEFAULT_RESIDUE_BUDGET: u64 = 1_000_000;

impl Polynomial {
    pub fn is_integer_valued(&self) -> Result<bool> {
        self.is_integer_valued_within(DEFAULT_RESIDUE_BUDGET)
    }

    /// Errors when the residue box `d^arity` holds more than `budget` points.
    pub fn is_integer_valued_within(&self, budget: u64) -> Result<bool> {
        Ok(self.non_integer_witness(budget)?.is_none())
    }

    /// An integer point where the polynomial takes a non-integer value, if any.
    /// The witness coordinates lie in `0..d`.
    pub fn non_integer_witness(&self, budget: u64) -> Result<Option<Vec<BigInt>>> {
        let d = self.denominator_lcm();
        if d.is_one() {
            return Ok(None);
        }
        let points = num_traits::pow(d.clone(), self.arity());
        if points > BigInt::from(budget) {
            return Err(Error::budget("residue box", points, budget));
        }
        // points <= budget, so d fits comfortably in a u64
        let modulus = d.to_u64().expect("residue modulus within budget");

        let mut digits = vec![0u64; self.arity()];
        let mut point: Vec<BigInt> = vec![BigInt::from(0); self.arity()];
        loop {
            if !self.eval_scaled(&d, &point).is_multiple_of(&d) {
                return Ok(Some(point));
            }
            // odometer increment over {0..d-1}^arity
            let mut i = 0;
            loop {
                if i == digits.len() {
                    return Ok(None);
                }
                digits[i] += 1;
                if digits[i] < modulus {
                    point[i] = BigInt::from(digits[i]);
                    break;
                }
                digits[i] = 0;
                point[i] = BigInt::from(0);
                i += 1;
            }
        }
    }
}
