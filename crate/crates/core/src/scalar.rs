//! Exact scalars in the field Q(u) with u^2 = q, evaluated at a rational
//! point, plus a binary64 mode for fast approximate re-runs.
//!
//! Every quantity in this crate is a Laurent expression in u = q^(1/2)
//! with rational coefficients. Evaluating at a rational u keeps all
//! arithmetic exact (half-integer powers of q included) while staying far
//! cheaper than symbolic rational functions. Identities are certified by
//! exact equality at several independent sample points.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::halfint::HalfInt;

/// Arithmetic mode of a computation: exact rationals or binary64.
#[derive(Clone, Copy, PartialEq, Eq, Debug, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Float,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Exact => write!(f, "exact"),
            Mode::Float => write!(f, "float"),
        }
    }
}

/// Relative tolerance used by every float-mode verification.
pub const FLOAT_REL_TOL: f64 = 1e-9;

/// Tolerance for structural zero tests in float mode (series termination,
/// pivot detection). Much tighter than [`FLOAT_REL_TOL`]: these decide
/// control flow, not pass/fail.
pub(crate) const FLOAT_STRUCTURAL_EPS: f64 = 1e-12;

/// A scalar value: an exact rational or a binary64 approximation.
///
/// Mixed-mode arithmetic coerces to float, so running a whole
/// construction from a float-mode [`QPoint`] yields float results without
/// any other change.
#[derive(Clone, Debug)]
pub enum QScalar {
    Exact(BigRational),
    Float(f64),
}

impl QScalar {
    pub fn zero() -> Self {
        QScalar::Exact(BigRational::zero())
    }

    pub fn one() -> Self {
        QScalar::Exact(BigRational::one())
    }

    pub fn int(n: i64) -> Self {
        QScalar::Exact(BigRational::from_integer(BigInt::from(n)))
    }

    /// Exact rational `num/den`; panics if `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Self {
        QScalar::Exact(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn float(x: f64) -> Self {
        QScalar::Float(x)
    }

    pub fn mode(&self) -> Mode {
        match self {
            QScalar::Exact(_) => Mode::Exact,
            QScalar::Float(_) => Mode::Float,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            QScalar::Exact(r) => r.is_zero(),
            QScalar::Float(x) => *x == 0.0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            QScalar::Exact(r) => r.is_one(),
            QScalar::Float(x) => *x == 1.0,
        }
    }

    /// Structural zero test: exact zero, or below [`FLOAT_STRUCTURAL_EPS`]
    /// in float mode. Only for control-flow decisions.
    pub(crate) fn is_structural_zero(&self) -> bool {
        match self {
            QScalar::Exact(r) => r.is_zero(),
            QScalar::Float(x) => x.abs() < FLOAT_STRUCTURAL_EPS,
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            QScalar::Exact(r) => {
                // Ratio::to_f64 can give NaN for huge components; shift
                // numerator and denominator down together and retry.
                num::ToPrimitive::to_f64(r).unwrap_or_else(|| {
                    let n = r.numer();
                    let d = r.denom();
                    let s = n.bits().max(d.bits()).saturating_sub(512);
                    let nf = num::ToPrimitive::to_f64(&(n >> s)).unwrap_or(f64::NAN);
                    let df = num::ToPrimitive::to_f64(&(d >> s)).unwrap_or(f64::NAN);
                    nf / df
                })
            }
            QScalar::Float(x) => *x,
        }
    }

    pub fn abs_f64(&self) -> f64 {
        self.to_f64().abs()
    }

    pub fn as_exact(&self) -> Option<&BigRational> {
        match self {
            QScalar::Exact(r) => Some(r),
            QScalar::Float(_) => None,
        }
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self) -> QScalar {
        match self {
            QScalar::Exact(r) => {
                assert!(!r.is_zero(), "inverse of exact zero");
                QScalar::Exact(r.recip())
            }
            QScalar::Float(x) => QScalar::Float(1.0 / x),
        }
    }

    /// Integer power, negative exponents allowed for nonzero values.
    pub fn pow(&self, e: i64) -> QScalar {
        if e == 0 {
            return QScalar::one_like(self);
        }
        match self {
            QScalar::Exact(r) => {
                if e < 0 {
                    assert!(!r.is_zero(), "negative power of exact zero");
                    QScalar::Exact(r.recip().pow((-e) as i32))
                } else {
                    QScalar::Exact(r.pow(e as i32))
                }
            }
            QScalar::Float(x) => QScalar::Float(x.powi(e as i32)),
        }
    }

    fn one_like(other: &QScalar) -> QScalar {
        match other {
            QScalar::Exact(_) => QScalar::one(),
            QScalar::Float(_) => QScalar::Float(1.0),
        }
    }

    /// Render exactly: "p" or "p/q" in lowest terms; float values print
    /// with the shortest round-trip decimal.
    pub fn render(&self) -> String {
        match self {
            QScalar::Exact(r) => {
                if r.denom().is_one() {
                    format!("{}", r.numer())
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
            QScalar::Float(x) => format!("{x}"),
        }
    }

    /// Parse the [`render`](Self::render) grammar: exact "p/q" or "p",
    /// otherwise a decimal float.
    pub fn parse(s: &str) -> Result<QScalar> {
        let s = s.trim();
        if let Some((num, den)) = s.split_once('/') {
            let n: BigInt = num
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad rational '{s}'")))?;
            let d: BigInt = den
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad rational '{s}'")))?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in '{s}'")));
            }
            return Ok(QScalar::Exact(BigRational::new(n, d)));
        }
        if let Ok(n) = s.parse::<BigInt>() {
            return Ok(QScalar::Exact(BigRational::from_integer(n)));
        }
        s.parse::<f64>()
            .map(QScalar::Float)
            .map_err(|_| Error::Parse(format!("bad scalar '{s}'")))
    }
}

impl fmt::Display for QScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl PartialEq for QScalar {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (QScalar::Exact(a), QScalar::Exact(b)) => a == b,
            (a, b) => a.to_f64() == b.to_f64(),
        }
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $op:tt, $zero_check:expr) => {
        impl $trait<&QScalar> for &QScalar {
            type Output = QScalar;
            fn $method(self, rhs: &QScalar) -> QScalar {
                match (self, rhs) {
                    (QScalar::Exact(a), QScalar::Exact(b)) => {
                        let check: fn(&BigRational) = $zero_check;
                        check(b);
                        QScalar::Exact(a $op b)
                    }
                    (a, b) => QScalar::Float(a.to_f64() $op b.to_f64()),
                }
            }
        }
        impl $trait for QScalar {
            type Output = QScalar;
            fn $method(self, rhs: QScalar) -> QScalar {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&QScalar> for QScalar {
            type Output = QScalar;
            fn $method(self, rhs: &QScalar) -> QScalar {
                (&self).$method(rhs)
            }
        }
        impl $trait<QScalar> for &QScalar {
            type Output = QScalar;
            fn $method(self, rhs: QScalar) -> QScalar {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, +, |_| {});
binop!(Sub, sub, -, |_| {});
binop!(Mul, mul, *, |_| {});
binop!(Div, div, /, |b: &BigRational| assert!(!b.is_zero(), "exact division by zero"));

impl Neg for &QScalar {
    type Output = QScalar;
    fn neg(self) -> QScalar {
        match self {
            QScalar::Exact(r) => QScalar::Exact(-r),
            QScalar::Float(x) => QScalar::Float(-x),
        }
    }
}

impl Neg for QScalar {
    type Output = QScalar;
    fn neg(self) -> QScalar {
        -&self
    }
}

impl std::iter::Sum for QScalar {
    fn sum<I: Iterator<Item = QScalar>>(iter: I) -> QScalar {
        iter.fold(QScalar::zero(), |acc, x| acc + x)
    }
}

/// The evaluation point: a nonzero u with q = u^2.
///
/// All half-integer powers of q are integer powers of u, so fixing u
/// fixes every scalar in the theory. The q -> 1/q substitution is the
/// point u -> 1/u (see [`QPoint::inverted`]).
#[derive(Clone, Debug)]
pub struct QPoint {
    u: QScalar,
}

impl QPoint {
    /// Exact point u = num/den.
    pub fn exact(num: i64, den: i64) -> Result<Self> {
        if num == 0 || den == 0 {
            return Err(Error::InadmissiblePoint("u must be nonzero".into()));
        }
        Ok(QPoint {
            u: QScalar::ratio(num, den),
        })
    }

    /// Float-mode point.
    pub fn float(u: f64) -> Result<Self> {
        if u == 0.0 || !u.is_finite() {
            return Err(Error::InadmissiblePoint("u must be nonzero and finite".into()));
        }
        Ok(QPoint {
            u: QScalar::Float(u),
        })
    }

    pub fn from_scalar(u: QScalar) -> Result<Self> {
        if u.is_zero() {
            return Err(Error::InadmissiblePoint("u must be nonzero".into()));
        }
        Ok(QPoint { u })
    }

    pub fn mode(&self) -> Mode {
        self.u.mode()
    }

    /// u = q^(1/2).
    pub fn u(&self) -> QScalar {
        self.u.clone()
    }

    /// q = u^2.
    pub fn q(&self) -> QScalar {
        &self.u * &self.u
    }

    /// u^k, i.e. q^(k/2).
    pub fn u_pow(&self, k: i64) -> QScalar {
        self.u.pow(k)
    }

    /// q^e for integer e.
    pub fn q_pow(&self, e: i64) -> QScalar {
        self.u.pow(2 * e)
    }

    /// q^x for half-integer x.
    pub fn q_pow_half(&self, x: HalfInt) -> QScalar {
        self.u.pow(x.twice())
    }

    /// q - q^(-1); errors when q^2 = 1.
    pub fn q_minus_qinv(&self) -> Result<QScalar> {
        let d = self.q_pow(1) - self.q_pow(-1);
        if d.is_structural_zero() {
            return Err(Error::DivisionByZero("q - 1/q vanishes (q^2 = 1)".into()));
        }
        Ok(d)
    }

    /// q + q^(-1).
    pub fn q_plus_qinv(&self) -> QScalar {
        self.q_pow(1) + self.q_pow(-1)
    }

    /// The q -> 1/q substitution as a point: u -> 1/u.
    pub fn inverted(&self) -> QPoint {
        QPoint { u: self.u.inv() }
    }

    /// Admissibility guard: u nonzero and 1 - q^k nonzero for every
    /// 1 <= k <= k_max, so no denominator in the model can vanish.
    pub fn ensure_admissible(&self, k_max: u32) -> Result<()> {
        if self.u.is_zero() {
            return Err(Error::InadmissiblePoint("u = 0".into()));
        }
        match &self.u {
            QScalar::Exact(_) => {
                // For a rational u, 1 - q^k = 0 only at u = +-1; the loop
                // is kept anyway so float and exact modes share one guard.
                for k in 1..=k_max {
                    if (QScalar::one() - self.q_pow(k as i64)).is_zero() {
                        return Err(Error::InadmissiblePoint(format!(
                            "1 - q^{k} vanishes at u = {}",
                            self.u.render()
                        )));
                    }
                }
            }
            QScalar::Float(_) => {
                for k in 1..=k_max {
                    if (QScalar::one() - self.q_pow(k as i64)).is_structural_zero() {
                        return Err(Error::InadmissiblePoint(format!(
                            "1 - q^{k} vanishes (within eps) at u = {}",
                            self.u.render()
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for QPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.u.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_field_ops() {
        let a = QScalar::ratio(1, 2);
        let b = QScalar::ratio(1, 3);
        assert_eq!(&a + &b, QScalar::ratio(5, 6));
        assert_eq!(&a * &b, QScalar::ratio(1, 6));
        assert_eq!(&a - &b, QScalar::ratio(1, 6));
        assert_eq!(&a / &b, QScalar::ratio(3, 2));
        assert_eq!(a.inv(), QScalar::int(2));
        assert_eq!(a.pow(-2), QScalar::int(4));
        assert_eq!(QScalar::int(0).pow(0), QScalar::one());
    }

    #[test]
    fn mixed_mode_coerces_to_float() {
        let a = QScalar::ratio(1, 2);
        let b = QScalar::float(0.25);
        let c = &a + &b;
        assert_eq!(c.mode(), Mode::Float);
        assert_eq!(c.to_f64(), 0.75);
    }

    #[test]
    fn render_and_parse() {
        assert_eq!(QScalar::ratio(-81, 625).render(), "-81/625");
        assert_eq!(QScalar::int(7).render(), "7");
        assert_eq!(QScalar::parse("-81/625").unwrap(), QScalar::ratio(-81, 625));
        assert_eq!(QScalar::parse("7").unwrap(), QScalar::int(7));
        assert_eq!(QScalar::parse("0.25").unwrap(), QScalar::float(0.25));
        assert!(QScalar::parse("1/0").is_err());
    }

    #[test]
    fn point_powers() {
        let p = QPoint::exact(3, 5).unwrap();
        assert_eq!(p.q(), QScalar::ratio(9, 25));
        assert_eq!(p.u_pow(3), QScalar::ratio(27, 125));
        assert_eq!(p.q_pow(-1), QScalar::ratio(25, 9));
        assert_eq!(p.q_pow_half(HalfInt::from_twice(1)), QScalar::ratio(3, 5));
        let inv = p.inverted();
        assert_eq!(inv.q(), QScalar::ratio(25, 9));
    }

    #[test]
    fn admissibility_guard() {
        assert!(QPoint::exact(3, 5).unwrap().ensure_admissible(68).is_ok());
        assert!(QPoint::exact(1, 1).unwrap().ensure_admissible(4).is_err());
        assert!(QPoint::exact(-1, 1).unwrap().ensure_admissible(4).is_err());
        assert!(QPoint::exact(0, 1).is_err());
        assert!(QPoint::float(1.0).unwrap().ensure_admissible(4).is_err());
        assert!(QPoint::float(0.6).unwrap().ensure_admissible(68).is_ok());
    }
}
