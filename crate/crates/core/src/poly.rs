//! Dense univariate polynomials with arbitrary-precision integer coefficients.
//!
//! Index `i` of the coefficient vector holds the coefficient of `x^i`. The
//! vector never carries trailing zeros, so the zero polynomial is the empty
//! vector and two equal polynomials always have identical representations.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::from_coeffs(vec![c])
    }

    /// Builds a polynomial from coefficients, constant term first.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `c * x^k`.
    pub fn monomial(k: usize, c: BigInt) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        IntPoly::from_coeffs(coeffs)
    }

    /// `x^d - 1`.
    pub fn x_pow_minus_one(d: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); d + 1];
        coeffs[0] = BigInt::from(-1);
        coeffs[d] += BigInt::one();
        IntPoly::from_coeffs(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    /// Sum of absolute values of the coefficients.
    pub fn l1_norm(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).sum()
    }

    /// Coefficients as `i64`, or `None` if any coefficient does not fit.
    pub fn to_i64_vec(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(ToPrimitive::to_i64).collect()
    }

    /// Coefficients rounded to `f64` (infinite if out of range).
    pub fn to_f64_vec(&self) -> Vec<f64> {
        self.coeffs
            .iter()
            .map(|c| c.to_f64().unwrap_or(f64::INFINITY))
            .collect()
    }

    /// Exact schoolbook product.
    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        IntPoly::from_coeffs(out)
    }

    pub fn pow(&self, mut k: u32) -> IntPoly {
        let mut base = self.clone();
        let mut acc = IntPoly::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Schoolbook long division by a divisor whose leading coefficient is a
    /// unit. Returns `(quotient, remainder)` with `deg remainder < deg divisor`.
    pub fn div_rem(&self, divisor: &IntPoly) -> Result<(IntPoly, IntPoly)> {
        let lead = divisor.leading_coeff().ok_or(Error::DivisionByZero)?;
        let lead_is_one = if lead.is_one() {
            true
        } else if (-lead).is_one() {
            false
        } else {
            return Err(Error::NonUnitLeadingCoefficient);
        };
        let dd = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return Ok((IntPoly::zero(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let qlen = rem.len() - dd;
        let mut quot = vec![BigInt::zero(); qlen];
        for k in (0..qlen).rev() {
            let top = std::mem::take(&mut rem[k + dd]);
            if top.is_zero() {
                continue;
            }
            let q = if lead_is_one { top } else { -top };
            for (j, b) in divisor.coeffs[..dd].iter().enumerate() {
                if !b.is_zero() {
                    rem[k + j] -= &q * b;
                }
            }
            quot[k] = q;
        }
        rem.truncate(dd);
        Ok((IntPoly::from_coeffs(quot), IntPoly::from_coeffs(rem)))
    }

    /// Exact quotient `self / divisor`, or [`Error::NotDivisible`] when no
    /// integer polynomial `q` satisfies `q * divisor == self`.
    pub fn div_exact(&self, divisor: &IntPoly) -> Result<IntPoly> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NotDivisible)
        }
    }

    /// `coeffs[i] == coeffs[deg - i]` for every `i`.
    pub fn is_palindromic(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let c = &self.coeffs;
        Ok(c.iter().eq(c.iter().rev()))
    }

    /// Horner evaluation at a complex point in double precision.
    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        self.to_f64_vec()
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        let x = BigInt::from(x);
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * &x + c)
    }

    /// Parses a JSON-style list of decimal coefficients such as `["1","-1","0","1"]`
    /// or a comma separated list `1,-1,0,1`, constant term first.
    pub fn parse_coeff_list(s: &str) -> Result<IntPoly> {
        let trimmed = s.trim().trim_start_matches('[').trim_end_matches(']');
        if trimmed.trim().is_empty() {
            return Ok(IntPoly::zero());
        }
        trimmed
            .split(',')
            .map(|tok| {
                let tok = tok.trim().trim_matches('"');
                tok.parse::<BigInt>()
                    .map_err(|_| Error::Parse(format!("bad coefficient {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(IntPoly::from_coeffs)
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            if i == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(&c.to_string())?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw: Vec<String> = Vec::deserialize(deserializer)?;
        let coeffs = raw
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(de::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        let poly = IntPoly::from_coeffs(coeffs);
        if poly.coeffs.len() != raw.len() {
            return Err(de::Error::custom("trailing zero coefficients"));
        }
        Ok(poly)
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        IntPoly::mul(self, rhs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}
