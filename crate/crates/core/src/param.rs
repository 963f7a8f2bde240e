//! The forward parametrization maps.
//!
//! Every Pythagorean triple is `T(a, b, c) = (c(a^2-b^2)/2, cab, c(a^2+b^2)/2)`
//! for some integers `a, b, c`, and `T(a, b, c)` is integral exactly when `c`
//! is even or `a = b (mod 2)`. The substitution
//! `(a, b, c) = (y + zw, z - yw, 2x - xw)` reaches every such admissible
//! triple as `(x, y, z, w)` ranges over `Z^4`, which makes the composite a
//! single triple of integer-valued polynomials whose image is exactly the set
//! of Pythagorean triples.
//!
//! The positive variant substitutes `(y + (1+w)z, y, x + (1-w)^2 x)` with
//! `x, y, z >= 1` and `w >= 0`; replacing each constrained parameter by a sum
//! of four squares (plus one for `x, y, z`) gives sixteen free integer
//! parameters.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::half;
use crate::error::{Error, Result};
use crate::poly::Polynomial;

/// An integer triple with `x^2 + y^2 = z^2`. Coordinates may be zero or negative.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PythTriple {
    x: BigInt,
    y: BigInt,
    z: BigInt,
}

impl PythTriple {
    pub fn new(x: impl Into<BigInt>, y: impl Into<BigInt>, z: impl Into<BigInt>) -> Result<Self> {
        let (x, y, z) = (x.into(), y.into(), z.into());
        if satisfies_equation(&x, &y, &z) {
            Ok(PythTriple { x, y, z })
        } else {
            Err(Error::NotPythagorean { x, y, z })
        }
    }

    /// Callers must already know the equation holds.
    pub(crate) fn trusted(x: BigInt, y: BigInt, z: BigInt) -> Self {
        debug_assert!(satisfies_equation(&x, &y, &z));
        PythTriple { x, y, z }
    }

    pub fn zero() -> Self {
        PythTriple::trusted(BigInt::zero(), BigInt::zero(), BigInt::zero())
    }

    pub fn x(&self) -> &BigInt {
        &self.x
    }

    pub fn y(&self) -> &BigInt {
        &self.y
    }

    pub fn z(&self) -> &BigInt {
        &self.z
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.x.is_positive() && self.y.is_positive() && self.z.is_positive()
    }

    pub fn scaled(&self, k: &BigInt) -> PythTriple {
        PythTriple::trusted(&self.x * k, &self.y * k, &self.z * k)
    }

    pub fn into_parts(self) -> (BigInt, BigInt, BigInt) {
        (self.x, self.y, self.z)
    }
}

impl fmt::Display for PythTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

pub fn satisfies_equation(x: &BigInt, y: &BigInt, z: &BigInt) -> bool {
    x * x + y * y == z * z
}

/// A Pythagorean triple with all three coordinates strictly positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PositivePythTriple(PythTriple);

impl PositivePythTriple {
    pub fn new(x: impl Into<BigInt>, y: impl Into<BigInt>, z: impl Into<BigInt>) -> Result<Self> {
        PythTriple::new(x, y, z)?.try_into()
    }

    pub fn triple(&self) -> &PythTriple {
        &self.0
    }

    pub fn into_triple(self) -> PythTriple {
        self.0
    }
}

impl TryFrom<PythTriple> for PositivePythTriple {
    type Error = Error;

    fn try_from(t: PythTriple) -> Result<Self> {
        if t.is_positive() {
            Ok(PositivePythTriple(t))
        } else {
            let (x, y, z) = t.into_parts();
            Err(Error::NotPositive { x, y, z })
        }
    }
}

impl fmt::Display for PositivePythTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Argument of the four-variable parametrization.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ParamPoint4 {
    pub x: BigInt,
    pub y: BigInt,
    pub z: BigInt,
    pub w: BigInt,
}

impl ParamPoint4 {
    pub fn new(x: impl Into<BigInt>, y: impl Into<BigInt>, z: impl Into<BigInt>, w: impl Into<BigInt>) -> Self {
        ParamPoint4 {
            x: x.into(),
            y: y.into(),
            z: z.into(),
            w: w.into(),
        }
    }

    pub fn to_vec(&self) -> Vec<BigInt> {
        vec![self.x.clone(), self.y.clone(), self.z.clone(), self.w.clone()]
    }
}

impl fmt::Display for ParamPoint4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.x, self.y, self.z, self.w)
    }
}

/// `(a, b, c)` with `c` even or `a = b (mod 2)`: exactly the inputs on which
/// the T-map is integral.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AdmissibleABC {
    a: BigInt,
    b: BigInt,
    c: BigInt,
}

impl AdmissibleABC {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, c: impl Into<BigInt>) -> Result<Self> {
        let (a, b, c) = (a.into(), b.into(), c.into());
        if c.is_even() || a.is_even() == b.is_even() {
            Ok(AdmissibleABC { a, b, c })
        } else {
            Err(Error::NotAdmissible { a, b, c })
        }
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn c(&self) -> &BigInt {
        &self.c
    }
}

impl fmt::Display for AdmissibleABC {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

/// Exact rational solution of `x^2 + y^2 = z^2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalTriple {
    pub x: BigRational,
    pub y: BigRational,
    pub z: BigRational,
}

impl RationalTriple {
    pub fn satisfies_equation(&self) -> bool {
        &self.x * &self.x + &self.y * &self.y == &self.z * &self.z
    }

    /// The integer triple, if every coordinate is an integer.
    pub fn to_integral(&self) -> Option<PythTriple> {
        (self.x.is_integer() && self.y.is_integer() && self.z.is_integer()).then(|| {
            PythTriple::trusted(self.x.to_integer(), self.y.to_integer(), self.z.to_integer())
        })
    }
}

/// `(a^2 - b^2, 2ab, a^2 + b^2)`
pub fn t1(a: &BigInt, b: &BigInt) -> PythTriple {
    let (a2, b2) = (a * a, b * b);
    PythTriple::trusted(&a2 - &b2, (a * b) << 1, a2 + b2)
}

/// `(2ab, a^2 - b^2, a^2 + b^2)`
pub fn t2(a: &BigInt, b: &BigInt) -> PythTriple {
    let (a2, b2) = (a * a, b * b);
    PythTriple::trusted((a * b) << 1, &a2 - &b2, a2 + b2)
}

/// `(c(a^2 - b^2)/2, cab, c(a^2 + b^2)/2)` over the rationals.
pub fn t_map(a: &BigInt, b: &BigInt, c: &BigInt) -> RationalTriple {
    let (x2, y, z2) = t_numerators(a, b, c);
    let two = BigInt::from(2);
    RationalTriple {
        x: BigRational::new(x2, two.clone()),
        y: BigRational::from(y),
        z: BigRational::new(z2, two),
    }
}

/// `(c(a^2 - b^2), cab, c(a^2 + b^2))`, i.e. the T-map with the outer
/// coordinates doubled.
pub(crate) fn t_numerators(a: &BigInt, b: &BigInt, c: &BigInt) -> (BigInt, BigInt, BigInt) {
    let (a2, b2) = (a * a, b * b);
    (c * (&a2 - &b2), c * a * b, c * (a2 + b2))
}

/// The T-map on its integral domain. Halving is exact: when `c` is even the
/// numerators are even, and when `a = b (mod 2)` both `a^2 - b^2` and
/// `a^2 + b^2` are even.
pub fn t_map_integral(abc: &AdmissibleABC) -> PythTriple {
    let (x2, y, z2) = t_numerators(&abc.a, &abc.b, &abc.c);
    PythTriple::trusted(half(x2), y, half(z2))
}

pub(crate) fn sigma_raw(p: &ParamPoint4) -> (BigInt, BigInt, BigInt) {
    (
        &p.y + &p.z * &p.w,
        &p.z - &p.y * &p.w,
        (&p.x << 1) - &p.x * &p.w,
    )
}

/// `(x, y, z, w) -> (y + zw, z - yw, 2x - xw)`.
///
/// For even `w`, `c = x(2 - w)` is even. For odd `w`,
/// `a - b = (y - z) + (y + z)w = (y - z) + (y + z) = 2y (mod 2)`, so `a = b (mod 2)`.
pub fn sigma(p: &ParamPoint4) -> AdmissibleABC {
    let (a, b, c) = sigma_raw(p);
    AdmissibleABC::new(a, b, c).expect("sigma output is always admissible")
}

/// The four-variable parametrization `(f, g, h)` evaluated at a point.
pub fn eval_f(p: &ParamPoint4) -> PythTriple {
    t_map_integral(&sigma(p))
}

/// Arguments of the positive parametrization: `x, y, z >= 1`, `w >= 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PositivePoint {
    x: BigInt,
    y: BigInt,
    z: BigInt,
    w: BigInt,
}

impl PositivePoint {
    pub fn new(x: impl Into<BigInt>, y: impl Into<BigInt>, z: impl Into<BigInt>, w: impl Into<BigInt>) -> Result<Self> {
        let p = PositivePoint {
            x: x.into(),
            y: y.into(),
            z: z.into(),
            w: w.into(),
        };
        for (name, v) in [("x", &p.x), ("y", &p.y), ("z", &p.z)] {
            if !v.is_positive() {
                return Err(Error::Precondition(format!("{name} must be >= 1, got {v}")));
            }
        }
        if p.w.is_negative() {
            return Err(Error::Precondition(format!("w must be >= 0, got {}", p.w)));
        }
        Ok(p)
    }

    pub fn x(&self) -> &BigInt {
        &self.x
    }

    pub fn y(&self) -> &BigInt {
        &self.y
    }

    pub fn z(&self) -> &BigInt {
        &self.z
    }

    pub fn w(&self) -> &BigInt {
        &self.w
    }
}

impl fmt::Display for PositivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.x, self.y, self.z, self.w)
    }
}

/// `(x, y, z, w) -> (y + (1+w)z, y, x + (1-w)^2 x)` on validated arguments.
///
/// The result has `a > b > 0` and `c > 0`. Admissibility: for even `w`,
/// `1 + (1-w)^2` is even so `c` is even; for odd `w`, `a - b = (1+w)z` is even.
pub fn sigma_positive_at(p: &PositivePoint) -> AdmissibleABC {
    let one_minus_w = BigInt::one() - &p.w;
    let a = &p.y + (BigInt::one() + &p.w) * &p.z;
    let c = &p.x + &one_minus_w * &one_minus_w * &p.x;
    AdmissibleABC::new(a, p.y.clone(), c).expect("positive substitution is always admissible")
}

pub fn sigma_positive(x: &BigInt, y: &BigInt, z: &BigInt, w: &BigInt) -> Result<AdmissibleABC> {
    Ok(sigma_positive_at(&PositivePoint::new(x.clone(), y.clone(), z.clone(), w.clone())?))
}

pub fn eval_positive_at(p: &PositivePoint) -> PositivePythTriple {
    PositivePythTriple(t_map_integral(&sigma_positive_at(p)))
}

pub fn eval_positive(x: &BigInt, y: &BigInt, z: &BigInt, w: &BigInt) -> Result<PositivePythTriple> {
    Ok(eval_positive_at(&PositivePoint::new(x.clone(), y.clone(), z.clone(), w.clone())?))
}

/// Sixteen free integer parameters of the positive parametrization.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct SixteenParams {
    pub xs: [BigInt; 4],
    pub ys: [BigInt; 4],
    pub zs: [BigInt; 4],
    pub ws: [BigInt; 4],
}

impl SixteenParams {
    /// Parameters in the order `x1..x4, y1..y4, z1..z4, w1..w4`.
    pub fn from_slice(values: &[BigInt]) -> Result<Self> {
        if values.len() != 16 {
            return Err(Error::Precondition(format!("expected 16 parameters, got {}", values.len())));
        }
        let group = |i: usize| -> [BigInt; 4] { std::array::from_fn(|j| values[4 * i + j].clone()) };
        Ok(SixteenParams {
            xs: group(0),
            ys: group(1),
            zs: group(2),
            ws: group(3),
        })
    }

    pub fn to_vec(&self) -> Vec<BigInt> {
        self.xs.iter().chain(&self.ys).chain(&self.zs).chain(&self.ws).cloned().collect()
    }

    /// The constrained arguments `(sum x_i^2 + 1, sum y_i^2 + 1, sum z_i^2 + 1, sum w_i^2)`.
    pub fn positive_point(&self) -> PositivePoint {
        let sq = |v: &[BigInt; 4]| v.iter().map(|t| t * t).sum::<BigInt>();
        PositivePoint::new(sq(&self.xs) + 1, sq(&self.ys) + 1, sq(&self.zs) + 1, sq(&self.ws))
            .expect("sums of squares satisfy the bounds")
    }
}

impl fmt::Display for SixteenParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.to_vec().iter().map(BigInt::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

pub fn eval_positive_16(params: &SixteenParams) -> PositivePythTriple {
    eval_positive_at(&params.positive_point())
}

/// A triple of polynomials in a common ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicTriple {
    pub f: Polynomial,
    pub g: Polynomial,
    pub h: Polynomial,
}

impl SymbolicTriple {
    pub fn components(&self) -> [&Polynomial; 3] {
        [&self.f, &self.g, &self.h]
    }

    /// `f^2 + g^2 - h^2`
    pub fn defect(&self) -> Polynomial {
        &(&self.f.pow(2) + &self.g.pow(2)) - &self.h.pow(2)
    }

    pub fn eval(&self, point: &[BigInt]) -> Result<RationalTriple> {
        Ok(RationalTriple {
            x: self.f.eval(point)?,
            y: self.g.eval(point)?,
            z: self.h.eval(point)?,
        })
    }
}

fn half_q() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(2))
}

/// The T-map as polynomials in `(a, b, c) = (x1, x2, x3)`.
pub fn t_map_polynomials() -> SymbolicTriple {
    let a = Polynomial::var(3, 0);
    let b = Polynomial::var(3, 1);
    let c = Polynomial::var(3, 2);
    let (a2, b2) = (a.pow(2), b.pow(2));
    SymbolicTriple {
        f: (&c * &(&a2 - &b2)).scale(&half_q()),
        g: &(&c * &a) * &b,
        h: (&c * &(&a2 + &b2)).scale(&half_q()),
    }
}

/// The substitution `(y + zw, z - yw, 2x - xw)` as polynomials in
/// `(x, y, z, w) = (x1, x2, x3, x4)`.
pub fn sigma_polynomials() -> [Polynomial; 3] {
    let [x, y, z, w] = vars4();
    let two = Polynomial::constant(4, BigInt::from(2));
    [&y + &(&z * &w), &z - &(&y * &w), &(&two * &x) - &(&x * &w)]
}

fn vars4() -> [Polynomial; 4] {
    std::array::from_fn(|i| Polynomial::var(4, i))
}

/// `(f, g, h)` in `Q[x, y, z, w]`, built by substituting the sigma polynomials
/// into the T-map polynomials.
pub fn build_symbolic_f() -> SymbolicTriple {
    let t = t_map_polynomials();
    let subs = sigma_polynomials();
    let compose = |p: &Polynomial| p.compose(&subs).expect("sigma has arity 3 -> 4");
    SymbolicTriple {
        f: compose(&t.f),
        g: compose(&t.g),
        h: compose(&t.h),
    }
}

/// The closed-form triple written out factor by factor:
/// `((2x-xw)((y+zw)^2-(z-yw)^2)/2, (2x-xw)(y+zw)(z-yw), (2x-xw)((y+zw)^2+(z-yw)^2)/2)`.
pub fn transcribe_displayed_f() -> SymbolicTriple {
    let [x, y, z, w] = vars4();
    let two = Polynomial::constant(4, BigInt::from(2));
    let scale = &(&two * &x) - &(&x * &w);
    let first = &y + &(&z * &w);
    let second = &z - &(&y * &w);
    SymbolicTriple {
        f: (&scale * &(&first.pow(2) - &second.pow(2))).scale(&half_q()),
        g: &(&scale * &first) * &second,
        h: (&scale * &(&first.pow(2) + &second.pow(2))).scale(&half_q()),
    }
}
