//! Exact rational scalars.
//!
//! `Scalar` wraps an arbitrary-precision rational kept in reduced form with a
//! positive denominator (zero is 0/1). Everything in this crate computes over
//! these; there is no floating point anywhere. The textual form is `p/q`, or
//! just `p` when the denominator is 1, and that form is used verbatim in all
//! file formats and CLI output.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Scalar(BigRational);

impl Scalar {
    pub fn zero() -> Self {
        Scalar(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar(BigRational::from_integer(BigInt::from(n)))
    }

    /// Builds `p/q`. Panics on a zero denominator.
    pub fn ratio(p: i64, q: i64) -> Self {
        assert!(q != 0, "zero denominator");
        Scalar(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Scalar(BigRational::from_integer(n))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Scalar(self.0.abs())
    }

    /// Multiplicative inverse; panics on zero.
    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        Scalar(self.0.recip())
    }

    /// Exact division by a small nonzero integer.
    pub fn div_int(&self, k: i64) -> Self {
        assert!(k != 0, "division by zero");
        Scalar(&self.0 / BigRational::from_integer(BigInt::from(k)))
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational literal {input:?}: {reason}")]
pub struct ParseScalarError {
    pub input: String,
    pub reason: String,
}

impl FromStr for Scalar {
    type Err = ParseScalarError;

    /// Parses `p` or `p/q` with optional leading sign. Decimal points are
    /// rejected: inputs are exact rationals end to end.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason: &str| ParseScalarError {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let s = s.trim();
        if s.is_empty() {
            return Err(err("empty"));
        }
        if s.contains('.') {
            return Err(err("decimal notation not accepted; use p/q"));
        }
        let (p_str, q_str) = match s.split_once('/') {
            Some((p, q)) => (p, Some(q)),
            None => (s, None),
        };
        let p = BigInt::from_str(p_str.trim()).map_err(|_| err("bad numerator"))?;
        let q = match q_str {
            Some(q) => BigInt::from_str(q.trim()).map_err(|_| err("bad denominator"))?,
            None => BigInt::one(),
        };
        if q.is_zero() {
            return Err(err("zero denominator"));
        }
        Ok(Scalar(BigRational::new(p, q)))
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar((self.0).$method(rhs.0))
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                Scalar((self.0).$method(&rhs.0))
            }
        }
        impl $trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar((&self.0).$method(rhs.0))
            }
        }
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                Scalar((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Div for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        assert!(!rhs.is_zero(), "division by zero");
        Scalar(self.0 / rhs.0)
    }
}

impl Div<&Scalar> for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        assert!(!rhs.is_zero(), "division by zero");
        Scalar(&self.0 / &rhs.0)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-self.0)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-&self.0)
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.0 += &rhs.0;
    }
}

impl AddAssign for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        self.0 += rhs.0;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        self.0 *= &rhs.0;
    }
}

impl Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}

/// Rational literal: `rat!(3)`, `rat!(-1 / 2)`.
#[macro_export]
macro_rules! rat {
    ($p:literal / $q:literal) => {
        $crate::scalar::Scalar::ratio($p, $q)
    };
    ($p:literal) => {
        $crate::scalar::Scalar::from_int($p)
    };
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_form_and_display() {
        assert_eq!(Scalar::ratio(2, 4), Scalar::ratio(1, 2));
        assert_eq!(Scalar::ratio(1, -2).to_string(), "-1/2");
        assert_eq!(Scalar::ratio(-4, -2).to_string(), "2");
        assert_eq!(Scalar::zero().to_string(), "0");
    }

    #[test]
    fn parse_round_trip() {
        for s in ["0", "7", "-3", "1/2", "-22/7", "10/4"] {
            let v: Scalar = s.parse().unwrap();
            let back: Scalar = v.to_string().parse().unwrap();
            assert_eq!(v, back);
        }
        assert_eq!("10/4".parse::<Scalar>().unwrap(), Scalar::ratio(5, 2));
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert!("".parse::<Scalar>().is_err());
        assert!("1.5".parse::<Scalar>().is_err());
        assert!("1/0".parse::<Scalar>().is_err());
        assert!("x".parse::<Scalar>().is_err());
        assert!("1/2/3".parse::<Scalar>().is_err());
    }

    #[test]
    fn arithmetic() {
        let a = rat!(1 / 2);
        let b = rat!(1 / 3);
        assert_eq!(&a + &b, rat!(5 / 6));
        assert_eq!(&a - &b, rat!(1 / 6));
        assert_eq!(&a * &b, rat!(1 / 6));
        assert_eq!(&a / &b, rat!(3 / 2));
        assert_eq!(rat!(5 / 6).div_int(5), rat!(1 / 6));
    }
}
