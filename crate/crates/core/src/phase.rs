//! Exact phases: rational multiples of π reduced modulo 2π.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;

use crate::error::ParseError;

/// A phase `(num/den)·π` kept in lowest terms with `0 ≤ num/den < 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Phase {
    num: i64,
    den: i64,
}

impl Default for Phase {
    fn default() -> Phase {
        Phase::ZERO
    }
}

impl Phase {
    pub const ZERO: Phase = Phase { num: 0, den: 1 };
    pub const PI: Phase = Phase { num: 1, den: 1 };
    pub const HALF_PI: Phase = Phase { num: 1, den: 2 };
    pub const MINUS_HALF_PI: Phase = Phase { num: 3, den: 2 };

    /// Builds `(num/den)·π`, normalized. Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Phase {
        assert!(den != 0, "phase denominator must be nonzero");
        let (mut num, mut den) = if den < 0 { (-num, -den) } else { (num, den) };
        let g = num.gcd(&den);
        num /= g;
        den /= g;
        Phase { num: num.rem_euclid(2 * den), den }
    }

    pub fn numerator(self) -> i64 {
        self.num
    }

    pub fn denominator(self) -> i64 {
        self.den
    }

    pub fn is_zero(self) -> bool {
        self.num == 0
    }

    pub fn is_pi(self) -> bool {
        self.num == 1 && self.den == 1
    }

    /// Const constructor for values already in lowest terms with `0 ≤ num/den < 2`.
    pub const fn new_const(num: i64, den: i64) -> Phase {
        Phase { num, den }
    }

    /// Multiplies the phase by an integer (the scaled models use this).
    pub fn scale(self, n: i64) -> Phase {
        Phase::new(self.num * n, self.den)
    }

    /// The angle in radians, in `[0, 2π)`.
    pub fn radians(self) -> f64 {
        std::f64::consts::PI * self.num as f64 / self.den as f64
    }
}

/// Sum of two phases modulo 2π.
pub fn phase_add(a: Phase, b: Phase) -> Phase {
    a + b
}

impl Add for Phase {
    type Output = Phase;
    fn add(self, rhs: Phase) -> Phase {
        let l = self.den.lcm(&rhs.den);
        Phase::new(self.num * (l / self.den) + rhs.num * (l / rhs.den), l)
    }
}

impl Neg for Phase {
    type Output = Phase;
    fn neg(self) -> Phase {
        Phase::new(-self.num, self.den)
    }
}

impl Sub for Phase {
    type Output = Phase;
    fn sub(self, rhs: Phase) -> Phase {
        self + (-rhs)
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl FromStr for Phase {
    type Err = ParseError;

    /// Accepts `p`, `p/q` or `-p/q`, meaning `(p/q)·π`.
    fn from_str(s: &str) -> Result<Phase, ParseError> {
        let bad = || ParseError::new(0, 0, format!("invalid phase `{s}`"));
        let (p, q) = match s.split_once('/') {
            Some((p, q)) => (p, q),
            None => (s, "1"),
        };
        let p: i64 = p.trim().parse().map_err(|_| bad())?;
        let q: i64 = q.trim().parse().map_err(|_| bad())?;
        if q <= 0 {
            return Err(bad());
        }
        Ok(Phase::new(p, q))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn addition_examples() {
        assert_eq!(Phase::new(1, 2) + Phase::new(3, 2), Phase::ZERO);
        assert_eq!(Phase::new(1, 2) + Phase::new(1, 2), Phase::PI);
        assert_eq!(Phase::new(-1, 2) + Phase::ZERO, Phase::new(3, 2));
    }

    #[test]
    fn parse_forms() {
        assert_eq!("3".parse::<Phase>().unwrap(), Phase::PI);
        assert_eq!("-1/2".parse::<Phase>().unwrap(), Phase::new(3, 2));
        assert_eq!("2/4".parse::<Phase>().unwrap(), Phase::HALF_PI);
        assert!("1/0".parse::<Phase>().is_err());
        assert!("x".parse::<Phase>().is_err());
    }

    #[test]
    fn display_round_trip() {
        for p in [Phase::ZERO, Phase::PI, Phase::new(2, 5), Phase::new(7, 4)] {
            assert_eq!(p.to_string().parse::<Phase>().unwrap(), p);
        }
    }
}
