//! Constructive preimages.
//!
//! A nonzero triple is `sign * scale * primitive` with a primitive triple of
//! positive hypotenuse. The primitive triple is `T1(p, q)` when its first leg
//! is odd and `T2(p, q)` otherwise, and `2 T2(p, q) = T1(p + q, p - q)` turns
//! both cases into an admissible `(a, b, c)` for the T-map. Inverting the
//! substitution then only needs `w = 0` (even `c`) or `w = 1` (odd `c`).

use std::fmt;

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{exact_sqrt, gcd3, half};
use crate::error::{Error, Result};
use crate::param::{
    t1, t2, AdmissibleABC, ParamPoint4, PositivePoint, PositivePythTriple, PythTriple, SixteenParams,
};

/// `sign * scale * primitive == original`, coordinatewise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimitiveDecomposition {
    /// `+1` or `-1`, the sign of the original hypotenuse.
    pub sign: i8,
    pub scale: BigInt,
    pub primitive: PythTriple,
}

pub fn primitive_decompose(t: &PythTriple) -> Result<PrimitiveDecomposition> {
    // z = 0 forces x = y = 0
    if t.z().is_zero() {
        return Err(Error::ZeroTriple);
    }
    let sign: i8 = if t.z().is_negative() { -1 } else { 1 };
    let d = gcd3(t.x(), t.y(), t.z());
    let divisor = &d * sign;
    let primitive = PythTriple::new(t.x() / &divisor, t.y() / &divisor, t.z() / &divisor)?;
    Ok(PrimitiveDecomposition {
        sign,
        scale: d,
        primitive,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Form {
    T1,
    T2,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EuclidParams {
    pub p: BigInt,
    pub q: BigInt,
    pub form: Form,
}

/// Recovers `(p, q)` with `t1(p, q)` (odd first leg) or `t2(p, q)` (even first
/// leg) equal to the primitive triple. `p` is the non-negative root; `q`
/// carries the sign of the even leg.
pub fn euclid_params(t: &PythTriple) -> Result<EuclidParams> {
    let not_primitive = || Error::NotPrimitive {
        x: t.x().clone(),
        y: t.y().clone(),
        z: t.z().clone(),
    };
    if !t.z().is_positive() || !gcd3(t.x(), t.y(), t.z()).is_one() {
        return Err(not_primitive());
    }
    let (odd_leg, even_leg, form) = if t.x().is_odd() {
        (t.x(), t.y(), Form::T1)
    } else {
        (t.y(), t.x(), Form::T2)
    };
    let sum = t.z() + odd_leg;
    let (p, q) = if sum.is_zero() {
        (BigInt::zero(), BigInt::one())
    } else {
        // primitive with odd leg: z and that leg are both odd, so the sum is even
        let p = exact_sqrt(&half(sum)).ok_or_else(not_primitive)?;
        let (q, rem) = even_leg.div_rem(&(&p << 1));
        if !rem.is_zero() {
            return Err(not_primitive());
        }
        (p, q)
    };
    let rebuilt = match form {
        Form::T1 => t1(&p, &q),
        Form::T2 => t2(&p, &q),
    };
    if &rebuilt != t {
        return Err(not_primitive());
    }
    Ok(EuclidParams { p, q, form })
}

/// Some admissible `(a, b, c)` with `t_map_integral(a, b, c) == t`.
pub fn admissible_abc(t: &PythTriple) -> AdmissibleABC {
    if t.is_zero() {
        return AdmissibleABC::new(0, 0, 0).expect("zero is admissible");
    }
    let dec = primitive_decompose(t).expect("nonzero triple");
    let sd = &dec.scale * dec.sign;
    let ep = euclid_params(&dec.primitive).expect("decomposition yields a primitive triple");
    let abc = match ep.form {
        Form::T1 => AdmissibleABC::new(ep.p, ep.q, sd << 1),
        Form::T2 => AdmissibleABC::new(&ep.p + &ep.q, &ep.p - &ep.q, sd),
    };
    abc.expect("construction is admissible by parity")
}

/// A point with `sigma(point) == abc`, using `w = 0` for even `c` and `w = 1` otherwise.
pub fn invert_sigma(abc: &AdmissibleABC) -> ParamPoint4 {
    let (a, b, c) = (abc.a(), abc.b(), abc.c());
    if c.is_even() {
        ParamPoint4::new(half(c.clone()), a.clone(), b.clone(), 0)
    } else {
        ParamPoint4::new(c.clone(), half(a - b), half(a + b), 1)
    }
}

/// A point with `eval_f(point) == t`.
pub fn preimage(t: &PythTriple) -> ParamPoint4 {
    invert_sigma(&admissible_abc(t))
}

/// Arguments with `eval_positive(point) == t`.
///
/// For a positive triple the admissible triple from [`admissible_abc`] already
/// has `a > b > 0` and `c > 0`: in the T1 case `p^2 - q^2 > 0` with `p, q > 0`,
/// and in the T2 case `(p + q, p - q)` with `p > q > 0`. No reordering is needed.
pub fn preimage_positive(t: &PositivePythTriple) -> Result<PositivePoint> {
    let abc = admissible_abc(t.triple());
    let (a, b, c) = (abc.a(), abc.b(), abc.c());
    if !(a > b && b.is_positive() && c.is_positive()) {
        return Err(Error::Precondition(format!(
            "admissible triple {abc} for {t} is not ordered a > b > 0, c > 0"
        )));
    }
    if c.is_even() {
        PositivePoint::new(half(c.clone()), b.clone(), a - b, 0)
    } else {
        PositivePoint::new(c.clone(), b.clone(), half(a - b), 1)
    }
}

/// `target = sum of squares`, each square root non-negative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FourSquares {
    roots: [BigInt; 4],
    target: BigInt,
}

impl FourSquares {
    pub fn roots(&self) -> &[BigInt; 4] {
        &self.roots
    }

    pub fn target(&self) -> &BigInt {
        &self.target
    }
}

impl fmt::Display for FourSquares {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = &self.roots;
        write!(f, "({a}, {b}, {c}, {d})")
    }
}

/// Default upper bound on `n` for [`four_square`].
pub const DEFAULT_FOUR_SQUARE_LIMIT: u64 = 100_000_000;

/// Writes `n` as a sum of four squares by descending search: the largest
/// feasible first root, then second, then third, until the remainder is a
/// square. Deterministic; returns the first hit in that order.
pub fn four_square(n: &BigInt, limit: u64) -> Result<FourSquares> {
    if n.is_negative() {
        return Err(Error::Precondition(format!("n must be >= 0, got {n}")));
    }
    let small = n.to_u64().filter(|&v| v <= limit).ok_or_else(|| Error::budget("four-square", n, limit))?;
    let roots = four_square_u64(small).expect("every non-negative integer is a sum of four squares");
    Ok(FourSquares {
        roots: roots.map(BigInt::from),
        target: n.clone(),
    })
}

fn four_square_u64(n: u64) -> Option<[u64; 4]> {
    for w1 in (0..=n.sqrt()).rev() {
        let r1 = n - w1 * w1;
        for w2 in (0..=r1.sqrt()).rev() {
            let r2 = r1 - w2 * w2;
            for w3 in (0..=r2.sqrt()).rev() {
                let r3 = r2 - w3 * w3;
                let w4 = r3.sqrt();
                if w4 * w4 == r3 {
                    return Some([w1, w2, w3, w4]);
                }
            }
        }
    }
    None
}

/// Sixteen integers with `eval_positive_16(params) == t`.
pub fn preimage_positive_16(t: &PositivePythTriple, limit: u64) -> Result<SixteenParams> {
    let p = preimage_positive(t)?;
    let roots = |n: BigInt| -> Result<[BigInt; 4]> { Ok(four_square(&n, limit)?.roots.clone()) };
    Ok(SixteenParams {
        xs: roots(p.x() - 1)?,
        ys: roots(p.y() - 1)?,
        zs: roots(p.z() - 1)?,
        ws: roots(p.w().clone())?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::param::{eval_f, eval_positive_at, eval_positive_16};

    fn b(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn triple(x: i64, y: i64, z: i64) -> PythTriple {
        PythTriple::new(x, y, z).unwrap()
    }

    fn positive(x: i64, y: i64, z: i64) -> PositivePythTriple {
        PositivePythTriple::new(x, y, z).unwrap()
    }

    #[test]
    fn decompose_examples() {
        let d = primitive_decompose(&triple(6, 8, 10)).unwrap();
        assert_eq!((d.sign, d.scale, d.primitive), (1, b(2), triple(3, 4, 5)));
        let d = primitive_decompose(&triple(-3, -4, -5)).unwrap();
        assert_eq!((d.sign, d.scale, d.primitive), (-1, b(1), triple(3, 4, 5)));
        let d = primitive_decompose(&triple(0, -5, 5)).unwrap();
        assert_eq!((d.sign, d.scale, d.primitive), (1, b(5), triple(0, -1, 1)));
        assert_eq!(primitive_decompose(&PythTriple::zero()), Err(Error::ZeroTriple));
    }

    #[test]
    fn euclid_examples() {
        let ep = |x, y, z| {
            let e = euclid_params(&triple(x, y, z)).unwrap();
            (e.p, e.q, e.form)
        };
        assert_eq!(ep(3, 4, 5), (b(2), b(1), Form::T1));
        assert_eq!(ep(4, 3, 5), (b(2), b(1), Form::T2));
        assert_eq!(ep(-3, 4, 5), (b(1), b(2), Form::T1));
        assert_eq!(ep(-1, 0, 1), (b(0), b(1), Form::T1));
        assert_eq!(ep(0, -1, 1), (b(0), b(1), Form::T2));
    }

    #[test]
    fn euclid_rejects_non_primitive() {
        assert!(matches!(euclid_params(&triple(6, 8, 10)), Err(Error::NotPrimitive { .. })));
        assert!(matches!(euclid_params(&triple(3, 4, -5)), Err(Error::NotPrimitive { .. })));
        assert!(euclid_params(&PythTriple::zero()).is_err());
    }

    #[test]
    fn admissible_abc_examples() {
        let abc = |x, y, z| admissible_abc(&triple(x, y, z));
        assert_eq!(abc(3, 4, 5), AdmissibleABC::new(2, 1, 2).unwrap());
        assert_eq!(abc(4, 3, 5), AdmissibleABC::new(3, 1, 1).unwrap());
        assert_eq!(abc(0, 0, 0), AdmissibleABC::new(0, 0, 0).unwrap());
    }

    #[test]
    fn invert_sigma_examples() {
        let inv = |a, bb, c| invert_sigma(&AdmissibleABC::new(a, bb, c).unwrap());
        assert_eq!(inv(2, 1, 2), ParamPoint4::new(1, 2, 1, 0));
        assert_eq!(inv(3, 1, 1), ParamPoint4::new(1, 1, 2, 1));
        assert_eq!(inv(0, 0, 0), ParamPoint4::new(0, 0, 0, 0));
    }

    #[test]
    fn preimage_examples() {
        assert_eq!(preimage(&triple(3, 4, 5)), ParamPoint4::new(1, 2, 1, 0));
        assert_eq!(preimage(&triple(-3, -4, -5)), ParamPoint4::new(-1, 2, 1, 0));
        assert_eq!(preimage(&PythTriple::zero()), ParamPoint4::new(0, 0, 0, 0));
        for t in [triple(3, 4, 5), triple(4, 3, 5), triple(-3, -4, -5), triple(0, 7, -7)] {
            assert_eq!(eval_f(&preimage(&t)), t);
        }
    }

    #[test]
    fn four_square_examples() {
        assert_eq!(four_square(&b(0), 10).unwrap().roots(), &[b(0), b(0), b(0), b(0)]);
        assert_eq!(four_square(&b(7), 10).unwrap().roots(), &[b(2), b(1), b(1), b(1)]);
        let fs = four_square(&b(9999), DEFAULT_FOUR_SQUARE_LIMIT).unwrap();
        assert_eq!(fs.roots().iter().map(|r| r * r).sum::<BigInt>(), b(9999));
        assert!(matches!(four_square(&b(-1), 10), Err(Error::Precondition(_))));
        assert!(four_square(&b(11), 10).unwrap_err().is_budget());
    }

    #[test]
    fn four_square_is_total_to_ten_thousand() {
        for n in 0..=10_000u64 {
            let [a, bb, c, d] = four_square_u64(n).unwrap();
            assert_eq!(a * a + bb * bb + c * c + d * d, n);
        }
    }

    #[test]
    fn preimage_positive_examples() {
        let pp = |x, y, z| preimage_positive(&positive(x, y, z)).unwrap();
        assert_eq!(pp(3, 4, 5), PositivePoint::new(1, 1, 1, 0).unwrap());
        assert_eq!(pp(4, 3, 5), PositivePoint::new(1, 1, 1, 1).unwrap());
        assert_eq!(pp(6, 8, 10), PositivePoint::new(2, 1, 1, 0).unwrap());
        for t in [positive(3, 4, 5), positive(20, 21, 29), positive(21, 20, 29)] {
            assert_eq!(eval_positive_at(&preimage_positive(&t).unwrap()), t);
        }
    }

    #[test]
    fn preimage_positive_16_examples() {
        let p16 = |x, y, z| preimage_positive_16(&positive(x, y, z), 1000).unwrap();
        assert_eq!(p16(3, 4, 5), SixteenParams::default());
        let mut expect = SixteenParams::default();
        expect.ws[0] = b(1);
        assert_eq!(p16(4, 3, 5), expect);
        let mut expect = SixteenParams::default();
        expect.xs[0] = b(1);
        assert_eq!(p16(6, 8, 10), expect);
        let t = positive(33, 56, 65);
        assert_eq!(eval_positive_16(&preimage_positive_16(&t, 1000).unwrap()), t);
    }

    #[test]
    fn large_triple_round_trip() {
        let a = BigInt::from(10).pow(40) + 7;
        let bb = BigInt::from(3).pow(50);
        let t = t1(&a, &bb).scaled(&b(-6));
        assert_eq!(eval_f(&preimage(&t)), t);
        let t = t2(&a, &bb);
        assert_eq!(eval_f(&preimage(&t)), t);
    }
}
