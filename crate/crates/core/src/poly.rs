//! Dense univariate polynomials over a [`Ring`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::ring::Ring;

/// Dense polynomial with coefficients in ascending powers (`coeffs[i]` multiplies `x^i`).
///
/// The coefficient vector never ends in a zero; the zero polynomial is the empty vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> Poly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(R::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| R::from_i64(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(R::one())
    }

    pub fn constant(c: R) -> Self {
        Poly::new(vec![c])
    }

    /// `c * x^n`.
    pub fn monomial(c: R, n: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![R::zero(); n + 1];
        coeffs[n] = c;
        Poly { coeffs }
    }

    pub fn x() -> Self {
        Poly::monomial(R::one(), 1)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(R::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Index of the lowest nonzero coefficient; `None` for zero.
    pub fn trail_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn lc(&self) -> Option<&R> {
        self.coeffs.last()
    }

    /// Trailing coefficient: the lowest nonzero one.
    pub fn tc(&self) -> Option<&R> {
        self.coeffs.iter().find(|c| !c.is_zero())
    }

    /// A polynomial is full when its constant term is nonzero.
    pub fn is_full(&self) -> bool {
        self.coeffs.first().is_some_and(|c| !c.is_zero())
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Multiplies by `x^n`.
    pub fn shift(&self, n: usize) -> Self {
        if self.is_zero() || n == 0 {
            return self.clone();
        }
        let mut coeffs = vec![R::zero(); n];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn scale(&self, c: &R) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly::new(self.coeffs.iter().map(|a| a.clone() * c).collect())
    }

    /// Divides every coefficient exactly by `c`.
    pub fn exact_div_scalar(&self, c: &R) -> Result<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| a.exact_div(c))
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::new(coeffs))
    }

    /// The reverted polynomial `x^deg p * p(1/x)`; only defined for full polynomials.
    pub fn reverse(&self) -> Result<Self> {
        if !self.is_full() {
            return Err(Error::NotFull);
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Ok(Poly { coeffs })
    }

    /// Splits off the largest power of `x`: returns `(p / x^t, t)` with `t = trailDeg(p)`.
    pub fn full_reduce(&self) -> Result<(Self, usize)> {
        let t = self
            .trail_degree()
            .ok_or(Error::ZeroOperand("full_reduce of zero"))?;
        Ok((
            Poly {
                coeffs: self.coeffs[t..].to_vec(),
            },
            t,
        ))
    }

    /// Gcd of all coefficients, normalized.
    pub fn content(&self) -> Result<R> {
        let mut iter = self.coeffs.iter().filter(|c| !c.is_zero());
        let first = iter.next().ok_or(Error::ZeroOperand("content of zero"))?;
        let mut g = first.clone().normalize();
        for c in iter {
            if g.is_one() {
                break;
            }
            g = g.gcd(c)?;
        }
        Ok(g)
    }

    /// Returns `(cont(p), pp(p))` with `cont * pp = ±p` and `lc(pp)` positive.
    pub fn content_primitive(&self) -> Result<(R, Self)> {
        let c = self.content()?;
        let pp = self.exact_div_scalar(&c)?.normalize_sign();
        Ok((c, pp))
    }

    pub fn primitive_part(&self) -> Result<Self> {
        Ok(self.content_primitive()?.1)
    }

    /// Negates if needed so the leading coefficient's leading integer is positive.
    pub fn normalize_sign(self) -> Self {
        if self.lc().is_some_and(R::is_negative) {
            -self
        } else {
            self
        }
    }

    /// Exact quotient `self / divisor`, or [`Error::NotDivisible`] if `divisor` does not divide.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let dv = divisor
            .degree()
            .ok_or(Error::ZeroOperand("polynomial divisor"))?;
        let lc = divisor.lc().expect("nonzero divisor");
        let mut rem = self.coeffs.clone();
        let Some(du) = self.degree() else {
            return Ok(Poly::zero());
        };
        if du < dv {
            return Err(Error::NotDivisible);
        }
        let mut quot = vec![R::zero(); du - dv + 1];
        for i in (dv..=du).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let q = rem[i].exact_div(lc)?;
            let s = i - dv;
            for (j, c) in divisor.coeffs.iter().enumerate() {
                rem[s + j] = rem[s + j].clone() - q.clone() * c;
            }
            quot[s] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::NotDivisible);
        }
        Ok(Poly::new(quot))
    }

    /// True iff `self` divides `other` exactly.
    pub fn divides(&self, other: &Self) -> bool {
        if other.is_zero() {
            return true;
        }
        !self.is_zero() && other.div_exact(self).is_ok()
    }

    /// Largest coefficient size under `measure`, `None` for the zero polynomial.
    pub fn max_coeff_size(&self, measure: crate::ring::SizeMeasure) -> Option<u64> {
        self.coeffs
            .iter()
            .filter(|c| !c.is_zero())
            .filter_map(|c| c.relative_size(measure).ok())
            .max()
    }

    pub fn eval(&self, at: &R) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(R::zero(), |acc, c| acc * at + c)
    }
}

fn add_coeffs<R: Ring>(a: Vec<R>, b: &[R], negate_b: bool) -> Vec<R> {
    let mut out = a;
    if out.len() < b.len() {
        out.resize(b.len(), R::zero());
    }
    for (o, c) in out.iter_mut().zip(b) {
        let lhs = std::mem::replace(o, R::zero());
        *o = if negate_b { lhs - c } else { lhs + c };
    }
    out
}

impl<R: Ring> Add for Poly<R> {
    type Output = Poly<R>;
    fn add(self, rhs: Poly<R>) -> Poly<R> {
        self + &rhs
    }
}

impl<'a, R: Ring> Add<&'a Poly<R>> for Poly<R> {
    type Output = Poly<R>;
    fn add(self, rhs: &'a Poly<R>) -> Poly<R> {
        Poly::new(add_coeffs(self.coeffs, &rhs.coeffs, false))
    }
}

impl<'b, R: Ring> Add<&'b Poly<R>> for &Poly<R> {
    type Output = Poly<R>;
    fn add(self, rhs: &'b Poly<R>) -> Poly<R> {
        self.clone() + rhs
    }
}

impl<R: Ring> Sub for Poly<R> {
    type Output = Poly<R>;
    fn sub(self, rhs: Poly<R>) -> Poly<R> {
        self - &rhs
    }
}

impl<'a, R: Ring> Sub<&'a Poly<R>> for Poly<R> {
    type Output = Poly<R>;
    fn sub(self, rhs: &'a Poly<R>) -> Poly<R> {
        Poly::new(add_coeffs(self.coeffs, &rhs.coeffs, true))
    }
}

impl<'b, R: Ring> Sub<&'b Poly<R>> for &Poly<R> {
    type Output = Poly<R>;
    fn sub(self, rhs: &'b Poly<R>) -> Poly<R> {
        self.clone() - rhs
    }
}

impl<'b, R: Ring> Mul<&'b Poly<R>> for &Poly<R> {
    type Output = Poly<R>;
    fn mul(self, rhs: &'b Poly<R>) -> Poly<R> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let prev = std::mem::replace(&mut out[i + j], R::zero());
                out[i + j] = prev + &(a.clone() * b);
            }
        }
        Poly::new(out)
    }
}

impl<'a, R: Ring> Mul<&'a Poly<R>> for Poly<R> {
    type Output = Poly<R>;
    fn mul(self, rhs: &'a Poly<R>) -> Poly<R> {
        &self * rhs
    }
}

impl<R: Ring> Mul for Poly<R> {
    type Output = Poly<R>;
    fn mul(self, rhs: Poly<R>) -> Poly<R> {
        &self * &rhs
    }
}

impl<R: Ring> Neg for Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Poly<R> {
        Poly {
            coeffs: self.coeffs.into_iter().map(Neg::neg).collect(),
        }
    }
}

impl<R: Ring> fmt::Display for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::text::format_poly(self, 'x'))
    }
}
