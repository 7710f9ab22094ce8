//! Half-integers stored as twice their value.
//!
//! Spins, weights and Casimir labels all live in (1/2)Z. Storing the
//! doubled value keeps every computation in integer arithmetic; only the
//! scalar layer ever turns a half-integer exponent into a power of
//! u = q^(1/2).

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use crate::error::{Error, Result};

/// An element of (1/2)Z, stored as `2x`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct HalfInt(i64);

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt(0);
    pub const HALF: HalfInt = HalfInt(1);
    pub const ONE: HalfInt = HalfInt(2);

    /// Build from the doubled value: `from_twice(3)` is 3/2.
    pub const fn from_twice(twice: i64) -> Self {
        HalfInt(twice)
    }

    pub const fn from_int(n: i64) -> Self {
        HalfInt(2 * n)
    }

    /// The doubled value (always an integer).
    pub const fn twice(self) -> i64 {
        self.0
    }

    pub const fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    pub const fn is_negative(self) -> bool {
        self.0 < 0
    }

    pub fn as_integer(self) -> Option<i64> {
        if self.is_integer() {
            Some(self.0 / 2)
        } else {
            None
        }
    }

    pub fn to_f64(self) -> f64 {
        self.0 as f64 / 2.0
    }

    pub fn abs(self) -> HalfInt {
        HalfInt(self.0.abs())
    }

    pub fn min(self, other: HalfInt) -> HalfInt {
        if self <= other {
            self
        } else {
            other
        }
    }

    /// Dimension `2x + 1` of the spin-`x` module; requires `x >= 0`.
    pub fn dim(self) -> usize {
        assert!(self.0 >= 0, "dimension of negative spin");
        self.0 as usize + 1
    }

    /// Spins are decimals on the command line: "0.5", "1", "1.5".
    pub fn parse_decimal(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(head) = s.strip_suffix(".5") {
            let n: i64 = if head.is_empty() {
                0
            } else {
                head.parse()
                    .map_err(|_| Error::Parse(format!("bad half-integer '{s}'")))?
            };
            let twice = 2 * n + if head.starts_with('-') { -1 } else { 1 };
            return Ok(HalfInt(twice));
        }
        if let Some(head) = s.strip_suffix(".0") {
            let n: i64 = head
                .parse()
                .map_err(|_| Error::Parse(format!("bad half-integer '{s}'")))?;
            return Ok(HalfInt::from_int(n));
        }
        let n: i64 = s
            .parse()
            .map_err(|_| Error::Parse(format!("bad half-integer '{s}'")))?;
        Ok(HalfInt::from_int(n))
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 + rhs.0)
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 - rhs.0)
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt(-self.0)
    }
}

impl Add<i64> for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: i64) -> HalfInt {
        HalfInt(self.0 + 2 * rhs)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else if self.0 < 0 {
            write!(f, "-{}.5", (-self.0 - 1) / 2)
        } else {
            write!(f, "{}.5", (self.0 - 1) / 2)
        }
    }
}

impl FromStr for HalfInt {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        HalfInt::parse_decimal(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_round_trip() {
        for s in ["0", "1", "0.5", "1.5", "-0.5", "-2", "4.5"] {
            let h = HalfInt::parse_decimal(s).unwrap();
            assert_eq!(h.to_string(), s);
        }
        assert_eq!(HalfInt::parse_decimal("2.0").unwrap(), HalfInt::from_int(2));
        assert!(HalfInt::parse_decimal("0.3").is_err());
    }

    #[test]
    fn arithmetic() {
        let h = HalfInt::HALF;
        assert_eq!(h + h, HalfInt::ONE);
        assert_eq!((h - HalfInt::ONE).twice(), -1);
        assert_eq!(h.dim(), 2);
        assert_eq!(HalfInt::from_twice(3).to_f64(), 1.5);
        assert!(!HalfInt::from_twice(3).is_integer());
        assert_eq!(HalfInt::from_int(2).as_integer(), Some(2));
        assert_eq!(HalfInt::from_twice(3).as_integer(), None);
    }
}
