use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{parse_poly, Ring};
use crate::error::{Error, Result};

/// Arbitrary-precision rational number, always stored in lowest terms.
pub type Rational = num_rational::BigRational;

/// Writes `a` or `a/b` for a rational in lowest terms.
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub(crate) fn rational_from_i64(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Element `re + im*i` of the field of Gaussian rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn real(re: Rational) -> Self {
        GaussianRational { re, im: Rational::zero() }
    }

    pub fn from_int(v: i64) -> Self {
        Self::real(rational_from_i64(v))
    }

    pub fn i() -> Self {
        GaussianRational { re: Rational::zero(), im: Rational::one() }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::real(Rational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussianRational { re: self.re.clone(), im: -self.im.clone() }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let norm = &self.re * &self.re + &self.im * &self.im;
        Some(GaussianRational { re: &self.re / &norm, im: -(&self.im / &norm) })
    }

    pub fn scale(&self, q: &Rational) -> Self {
        GaussianRational { re: &self.re * q, im: &self.im * q }
    }
}

impl From<Rational> for GaussianRational {
    fn from(q: Rational) -> Self {
        GaussianRational::real(q)
    }
}

impl Add for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, o: &GaussianRational) -> GaussianRational {
        GaussianRational { re: &self.re + &o.re, im: &self.im + &o.im }
    }
}

impl Sub for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, o: &GaussianRational) -> GaussianRational {
        GaussianRational { re: &self.re - &o.re, im: &self.im - &o.im }
    }
}

impl Mul for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, o: &GaussianRational) -> GaussianRational {
        if self.im.is_zero() && o.im.is_zero() {
            return GaussianRational::real(&self.re * &o.re);
        }
        GaussianRational { re: &self.re * &o.re - &self.im * &o.im, im: &self.re * &o.im + &self.im * &o.re }
    }
}

impl Div for &GaussianRational {
    type Output = GaussianRational;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, o: &GaussianRational) -> GaussianRational {
        let inv = o.inv().expect("division by zero Gaussian rational");
        self * &inv
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational { re: -self.re.clone(), im: -self.im.clone() }
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational { re: -self.re, im: -self.im }
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let im_part = |q: &Rational| -> String {
            if q.abs().is_one() {
                "i".to_string()
            } else {
                format!("{}*i", format_rational(&q.abs()))
            }
        };
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", format_rational(&self.re)),
            (true, false) => {
                let sign = if self.im.is_negative() { "-" } else { "" };
                write!(f, "{}{}", sign, im_part(&self.im))
            }
            (false, false) => {
                let sign = if self.im.is_negative() { "-" } else { "+" };
                write!(f, "{}{}{}", format_rational(&self.re), sign, im_part(&self.im))
            }
        }
    }
}

impl FromStr for GaussianRational {
    type Err = Error;

    /// Accepts rational literals and affine expressions in `i`, such as
    /// `-3/2`, `i`, `1-2*i` or `1/2+3/4*i`.
    fn from_str(s: &str) -> Result<Self> {
        let ring: Arc<Ring> = Ring::new(["i"])?;
        let p = parse_poly(s, &ring)?;
        let mut out = GaussianRational::zero();
        for (c, m) in p.terms() {
            match m.exponents()[0] {
                0 => out.re = c.clone(),
                1 => out.im = c.clone(),
                _ => return Err(Error::Syntax { column: 1, message: format!("`{s}` is not of the form a+b*i") }),
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print_gaussian() {
        for s in ["0", "1", "-3/2", "i", "-i", "2*i", "1+i", "1-2*i", "1/2+3/4*i"] {
            let g: GaussianRational = s.parse().unwrap();
            assert_eq!(g.to_string(), s);
        }
        assert!("i^2".parse::<GaussianRational>().is_err());
    }

    #[test]
    fn inverse_roundtrip() {
        let g: GaussianRational = "3-4*i".parse().unwrap();
        let prod = &g * &g.inv().unwrap();
        assert_eq!(prod, GaussianRational::one());
        assert!(GaussianRational::zero().inv().is_none());
    }
}
