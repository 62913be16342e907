//! Exact coefficient rings: arbitrary-precision integers and dense polynomials in `y`.
//!
//! Every coefficient ring used by the remainder-sequence engines implements [`Ring`].
//! Two instances are provided: [`Integer`] (the ring Z) and [`YPoly`] (the ring Z[y]).
//! Ring choice is a type parameter, so operands from different rings cannot be mixed.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::prs;

/// How "big" a nonzero coefficient is, used to pick the cheaper pseudo-division side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum SizeMeasure {
    /// Bit length of the integer; for `Z[y]` the maximum coefficient bit length plus the degree.
    #[default]
    Bits,
    /// Degree in `y` (integers have degree 0).
    Degree,
    /// Number of nonzero `y`-terms (integers count as one term).
    Terms,
}

impl FromStr for SizeMeasure {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "bits" => Ok(SizeMeasure::Bits),
            "degree" => Ok(SizeMeasure::Degree),
            "terms" => Ok(SizeMeasure::Terms),
            other => Err(format!(
                "unknown size measure `{other}` (expected bits, degree or terms)"
            )),
        }
    }
}

impl fmt::Display for SizeMeasure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SizeMeasure::Bits => "bits",
            SizeMeasure::Degree => "degree",
            SizeMeasure::Terms => "terms",
        })
    }
}

/// An exact commutative ring with gcd, used as the coefficient ring of [`Poly`].
pub trait Ring:
    Clone
    + PartialEq
    + Eq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn is_zero(&self) -> bool;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// Returns `q` with `q * divisor == self`, or [`Error::NotDivisible`].
    fn exact_div(&self, divisor: &Self) -> Result<Self>;

    /// A greatest common divisor, normalized with [`Ring::normalize`].
    fn gcd(&self, other: &Self) -> Result<Self>;

    fn relative_size(&self, measure: SizeMeasure) -> Result<u64>;

    /// True when the leading integer coefficient is negative.
    fn is_negative(&self) -> bool;

    /// Multiplies by the unit -1 if needed so the leading integer coefficient is positive.
    fn normalize(self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self
        }
    }

    fn pow(&self, exp: usize) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * &base;
            }
        }
        result
    }
}

/// Arbitrary-precision signed integer.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Integer(pub BigInt);

impl Integer {
    pub fn new(value: impl Into<BigInt>) -> Self {
        Integer(value.into())
    }

    pub fn as_bigint(&self) -> &BigInt {
        &self.0
    }

    pub fn bits(&self) -> u64 {
        self.0.bits()
    }

    pub fn abs(&self) -> Self {
        Integer(self.0.abs())
    }
}

impl From<i64> for Integer {
    fn from(n: i64) -> Self {
        Integer(BigInt::from(n))
    }
}

impl From<BigInt> for Integer {
    fn from(n: BigInt) -> Self {
        Integer(n)
    }
}

impl FromStr for Integer {
    type Err = num_bigint::ParseBigIntError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        s.parse().map(Integer)
    }
}

impl fmt::Display for Integer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

macro_rules! forward_binop {
    ($ty:ident, $tr:ident, $method:ident, $field:tt) => {
        impl std::ops::$tr for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                $ty(std::ops::$tr::$method(self.$field, rhs.$field))
            }
        }

        impl<'a> std::ops::$tr<&'a $ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: &'a $ty) -> $ty {
                $ty(std::ops::$tr::$method(self.$field, &rhs.$field))
            }
        }

        impl<'a, 'b> std::ops::$tr<&'b $ty> for &'a $ty {
            type Output = $ty;
            fn $method(self, rhs: &'b $ty) -> $ty {
                $ty(std::ops::$tr::$method(&self.$field, &rhs.$field))
            }
        }
    };
}

forward_binop!(Integer, Add, add, 0);
forward_binop!(Integer, Sub, sub, 0);
forward_binop!(Integer, Mul, mul, 0);
forward_binop!(YPoly, Add, add, 0);
forward_binop!(YPoly, Sub, sub, 0);
forward_binop!(YPoly, Mul, mul, 0);

impl Neg for Integer {
    type Output = Integer;
    fn neg(self) -> Integer {
        Integer(-self.0)
    }
}

impl Neg for YPoly {
    type Output = YPoly;
    fn neg(self) -> YPoly {
        YPoly(-self.0)
    }
}

impl Ring for Integer {
    fn zero() -> Self {
        Integer(BigInt::zero())
    }

    fn one() -> Self {
        Integer(BigInt::one())
    }

    fn from_i64(n: i64) -> Self {
        Integer::from(n)
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn is_one(&self) -> bool {
        self.0.is_one()
    }

    fn exact_div(&self, divisor: &Self) -> Result<Self> {
        if divisor.is_zero() {
            return Err(Error::ZeroOperand("divisor"));
        }
        let (q, r) = self.0.div_rem(&divisor.0);
        if r.is_zero() {
            Ok(Integer(q))
        } else {
            Err(Error::NotDivisible)
        }
    }

    fn gcd(&self, other: &Self) -> Result<Self> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::ZeroOperand("gcd of two zeros"));
        }
        Ok(Integer(self.0.gcd(&other.0)))
    }

    fn relative_size(&self, measure: SizeMeasure) -> Result<u64> {
        if self.is_zero() {
            return Err(Error::ZeroOperand("size of zero"));
        }
        Ok(match measure {
            SizeMeasure::Bits => self.bits(),
            SizeMeasure::Degree => 0,
            SizeMeasure::Terms => 1,
        })
    }

    fn is_negative(&self) -> bool {
        self.0.is_negative()
    }
}

/// Dense polynomial in `y` with integer coefficients, an element of Z[y].
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct YPoly(pub Poly<Integer>);

impl YPoly {
    /// Builds from ascending `y`-power coefficients.
    pub fn from_coeffs<I, T>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<Integer>,
    {
        YPoly(Poly::new(coeffs.into_iter().map(Into::into).collect()))
    }

    pub fn constant(c: impl Into<Integer>) -> Self {
        YPoly(Poly::constant(c.into()))
    }

    pub fn as_poly(&self) -> &Poly<Integer> {
        &self.0
    }

    pub fn into_poly(self) -> Poly<Integer> {
        self.0
    }
}

impl From<Poly<Integer>> for YPoly {
    fn from(p: Poly<Integer>) -> Self {
        YPoly(p)
    }
}

impl fmt::Display for YPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::text::format_poly(&self.0, 'y'))
    }
}

impl Ring for YPoly {
    fn zero() -> Self {
        YPoly(Poly::zero())
    }

    fn one() -> Self {
        YPoly(Poly::constant(Integer::one()))
    }

    fn from_i64(n: i64) -> Self {
        YPoly::constant(n)
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn exact_div(&self, divisor: &Self) -> Result<Self> {
        self.0.div_exact(&divisor.0).map(YPoly)
    }

    fn gcd(&self, other: &Self) -> Result<Self> {
        prs::classic_gcd(&self.0, &other.0).map(YPoly)
    }

    fn relative_size(&self, measure: SizeMeasure) -> Result<u64> {
        let deg = self.0.degree().ok_or(Error::ZeroOperand("size of zero"))? as u64;
        Ok(match measure {
            SizeMeasure::Bits => self.0.coeffs().iter().map(Integer::bits).max().unwrap_or(0) + deg,
            SizeMeasure::Degree => deg,
            SizeMeasure::Terms => self.0.coeffs().iter().filter(|c| !c.is_zero()).count() as u64,
        })
    }

    fn is_negative(&self) -> bool {
        self.0.lc().is_some_and(Integer::is_negative)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: i64) -> Integer {
        Integer::from(n)
    }

    fn yp(c: &[i64]) -> YPoly {
        YPoly::from_coeffs(c.iter().copied())
    }

    #[test]
    fn integer_arithmetic() {
        assert_eq!(z(3) + z(4), z(7));
        assert_eq!(z(3) - z(4), z(-1));
        assert_eq!(-z(5), z(-5));
        let two64 = z(2).pow(64);
        let mut doubled = z(1);
        for _ in 0..128 {
            doubled = doubled.clone() + &doubled;
        }
        assert_eq!(two64.clone() * &two64, doubled);
    }

    #[test]
    fn ypoly_difference_of_squares() {
        assert_eq!(yp(&[1, 1]) * yp(&[-1, 1]), yp(&[-1, 0, 1]));
        assert_eq!(yp(&[1, 1]) - yp(&[1, 1]), YPoly::zero());
        assert!(YPoly::zero().0.coeffs().is_empty());
    }

    #[test]
    fn exact_division() {
        assert_eq!(z(12).exact_div(&z(4)), Ok(z(3)));
        assert_eq!(z(7).exact_div(&z(2)), Err(Error::NotDivisible));
        assert_eq!(yp(&[-1, 0, 1]).exact_div(&yp(&[1, 1])), Ok(yp(&[-1, 1])));
        assert_eq!(
            yp(&[1, 0, 1]).exact_div(&yp(&[1, 1])),
            Err(Error::NotDivisible)
        );
        assert!(z(1).exact_div(&z(0)).is_err());
    }

    #[test]
    fn gcds() {
        assert_eq!(z(12).gcd(&z(18)), Ok(z(6)));
        assert_eq!(z(-4).gcd(&z(0)), Ok(z(4)));
        assert!(z(0).gcd(&z(0)).is_err());
        assert_eq!(yp(&[0, 2, 2]).gcd(&yp(&[0, 4])), Ok(yp(&[0, 2])));
        assert_eq!(yp(&[0, -3]).gcd(&YPoly::zero()), Ok(yp(&[0, 3])));
        assert!(YPoly::zero().gcd(&YPoly::zero()).is_err());
    }

    #[test]
    fn sizes() {
        assert_eq!(z(5).relative_size(SizeMeasure::Bits), Ok(3));
        assert_eq!(z(5).relative_size(SizeMeasure::Degree), Ok(0));
        assert_eq!(z(-5).relative_size(SizeMeasure::Terms), Ok(1));
        let p = yp(&[1, 0, 0, 1]);
        assert_eq!(p.relative_size(SizeMeasure::Degree), Ok(3));
        assert_eq!(p.relative_size(SizeMeasure::Terms), Ok(2));
        assert_eq!(p.relative_size(SizeMeasure::Bits), Ok(4));
        assert!(z(0).relative_size(SizeMeasure::Bits).is_err());
        assert!(YPoly::zero().relative_size(SizeMeasure::Degree).is_err());
    }

    #[test]
    fn size_measure_parses() {
        assert_eq!("BITS".parse::<SizeMeasure>(), Ok(SizeMeasure::Bits));
        assert_eq!("terms".parse::<SizeMeasure>(), Ok(SizeMeasure::Terms));
        assert!("bytes".parse::<SizeMeasure>().is_err());
    }
}
