use num_bigint::BigInt;
use num_integer::Integer;

use crate::arith::exact_sqrt;
use crate::error::{Error, Result};
use crate::param::{PositivePythTriple, PythTriple};

/// All integer triples with `max(|x|, |y|, |z|) <= bound` and `x^2 + y^2 = z^2`.
///
/// Legs are scanned in ascending `x`, then ascending `y`; for each hit the
/// negative hypotenuse comes before the positive one, and a zero hypotenuse
/// is emitted once. The output is therefore strictly increasing in
/// lexicographic `(x, y, z)` order. Independent of any parametrization.
pub fn enumerate_triples(bound: u64, limit: u64) -> Result<Vec<PythTriple>> {
    if bound > limit {
        return Err(Error::budget("enumeration bound", bound, limit));
    }
    let bound = BigInt::from(bound);
    let mut out = Vec::new();
    let mut x = -bound.clone();
    while x <= bound {
        let mut y = -bound.clone();
        while y <= bound {
            if let Some(r) = exact_sqrt(&(&x * &x + &y * &y)) {
                if r <= bound {
                    if r == BigInt::from(0) {
                        out.push(PythTriple::zero());
                    } else {
                        out.push(PythTriple::new(x.clone(), y.clone(), -r.clone())?);
                        out.push(PythTriple::new(x.clone(), y.clone(), r)?);
                    }
                }
            }
            y += 1;
        }
        x += 1;
    }
    if !out.windows(2).all(|w| w[0] < w[1]) {
        unreachable!("enumeration order is strictly increasing");
    }
    Ok(out)
}

/// All positive triples with `z <= zbound`, ordered by `x` then `y`.
pub fn enumerate_positive_triples(zbound: u64, limit: u64) -> Result<Vec<PositivePythTriple>> {
    if zbound > limit {
        return Err(Error::budget("enumeration bound", zbound, limit));
    }
    let zbound = BigInt::from(zbound);
    let mut out = Vec::new();
    let mut x = BigInt::from(1);
    while x < zbound {
        let mut y = BigInt::from(1);
        while y < zbound {
            if let Some(z) = exact_sqrt(&(&x * &x + &y * &y)) {
                if z <= zbound {
                    out.push(PositivePythTriple::new(x.clone(), y.clone(), z)?);
                }
            }
            y += 1;
        }
        x += 1;
    }
    Ok(out)
}

/// Primitive means `gcd(x, y, z) = 1`.
pub fn is_primitive(t: &PythTriple) -> bool {
    t.x().gcd(t.y()).gcd(t.z()) == BigInt::from(1)
}
