//! Exact rational scalars and plane points.
//!
//! Everything hull- and rotation-vector-related is computed over
//! `Ratio<BigInt>` so that vertex comparisons, slope monotonicity and
//! Lipschitz ratios are decided exactly, never by floating-point proximity.

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar.
pub type Rat = Ratio<BigInt>;

/// Shorthand constructor, `rat(13, 16) == 13/16`. Panics on zero denominator.
pub fn rat(num: i64, den: i64) -> Rat {
    Ratio::new(BigInt::from(num), BigInt::from(den))
}

/// `r^k` for a signed integer exponent.
pub fn rat_pow(r: &Rat, k: i32) -> Rat {
    let mut acc = Rat::from_integer(BigInt::from(1));
    let base = if k >= 0 {
        r.clone()
    } else {
        Rat::from_integer(BigInt::from(1)) / r.clone()
    };
    for _ in 0..k.unsigned_abs() {
        acc *= base.clone();
    }
    acc
}

/// Parse `p/q` or a bare integer.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let parse_int = |t: &str| -> Result<BigInt> {
        t.trim()
            .parse::<BigInt>()
            .map_err(|_| Error::ParamFile { message: format!("not an integer: `{t}`") })
    };
    match s.split_once('/') {
        Some((p, q)) => {
            let den = parse_int(q)?;
            if den.is_zero() {
                return Err(Error::ParamFile { message: format!("zero denominator in `{s}`") });
            }
            Ok(Ratio::new(parse_int(p)?, den))
        }
        None => Ok(Rat::from_integer(parse_int(s)?)),
    }
}

/// Exact point/vector in the plane.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vec2Q {
    pub x: Rat,
    pub y: Rat,
}

impl Vec2Q {
    pub fn new(x: Rat, y: Rat) -> Self {
        Vec2Q { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Vec2Q::new(rat(x, 1), rat(y, 1))
    }

    pub fn zero() -> Self {
        Vec2Q::from_ints(0, 0)
    }

    pub fn add(&self, other: &Vec2Q) -> Vec2Q {
        Vec2Q::new(self.x.clone() + other.x.clone(), self.y.clone() + other.y.clone())
    }

    pub fn sub(&self, other: &Vec2Q) -> Vec2Q {
        Vec2Q::new(self.x.clone() - other.x.clone(), self.y.clone() - other.y.clone())
    }

    pub fn scale(&self, s: &Rat) -> Vec2Q {
        Vec2Q::new(self.x.clone() * s.clone(), self.y.clone() * s.clone())
    }

    pub fn dot(&self, other: &Vec2Q) -> Rat {
        self.x.clone() * other.x.clone() + self.y.clone() * other.y.clone()
    }

    /// Sup-norm, the norm used by the decay and Lipschitz estimates.
    pub fn sup_norm(&self) -> Rat {
        let ax = self.x.abs();
        let ay = self.y.abs();
        if ax >= ay {
            ax
        } else {
            ay
        }
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (
            self.x.to_f64().expect("rational out of f64 range"),
            self.y.to_f64().expect("rational out of f64 range"),
        )
    }
}

impl std::fmt::Display for Vec2Q {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Signed area of the triangle `(o, a, b)`; positive iff `o -> a -> b` turns
/// counterclockwise.
pub fn cross(o: &Vec2Q, a: &Vec2Q, b: &Vec2Q) -> Rat {
    let ax = a.x.clone() - o.x.clone();
    let ay = a.y.clone() - o.y.clone();
    let bx = b.x.clone() - o.x.clone();
    let by = b.y.clone() - o.y.clone();
    ax * by - ay * bx
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rat_pow_handles_negative_exponents() {
        let half = rat(1, 2);
        assert_eq!(rat_pow(&half, 3), rat(1, 8));
        assert_eq!(rat_pow(&half, -2), rat(4, 1));
        assert_eq!(rat_pow(&half, 0), rat(1, 1));
    }

    #[test]
    fn parse_rat_accepts_fractions_and_integers() {
        assert_eq!(parse_rat("13/16").unwrap(), rat(13, 16));
        assert_eq!(parse_rat(" -3 ").unwrap(), rat(-3, 1));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn cross_sign_matches_orientation() {
        let o = Vec2Q::zero();
        let a = Vec2Q::from_ints(1, 0);
        let b = Vec2Q::from_ints(0, 1);
        assert!(cross(&o, &a, &b) > Rat::zero());
        assert!(cross(&o, &b, &a) < Rat::zero());
    }
}
