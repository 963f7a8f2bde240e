//! Exact integer helpers shared by the parametrization and the verifier.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Floor of the square root of a non-negative integer, by Newton iteration.
///
/// Panics on negative input.
pub fn isqrt(n: &BigInt) -> BigInt {
    assert!(n.sign() != Sign::Minus, "isqrt of negative number");
    if n.is_zero() {
        return BigInt::zero();
    }
    // 2^ceil(bits/2) is always >= sqrt(n), so the iteration decreases monotonically.
    let mut x = BigInt::one() << n.bits().div_ceil(2);
    loop {
        let next = (&x + n / &x) >> 1;
        if next >= x {
            return x;
        }
        x = next;
    }
}

/// `Some(r)` with `r >= 0` and `r*r == n`, or `None` when `n` is not a perfect square.
pub fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    // Squares are 0, 1, 4 or 9 mod 16.
    let low = n.iter_u32_digits().next().unwrap_or(0) & 15;
    if !matches!(low, 0 | 1 | 4 | 9) {
        return None;
    }
    let r = isqrt(n);
    (&r * &r == *n).then_some(r)
}

pub fn gcd3(a: &BigInt, b: &BigInt, c: &BigInt) -> BigInt {
    a.gcd(b).gcd(c)
}

pub fn is_even(n: &BigInt) -> bool {
    n.is_even()
}

/// Exact halving; the caller guarantees `n` is even.
pub(crate) fn half(n: BigInt) -> BigInt {
    debug_assert!(n.is_even(), "halving an odd number");
    n >> 1
}
