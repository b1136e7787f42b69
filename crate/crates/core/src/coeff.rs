//! Exact Gaussian rationals used as polynomial coefficients.

use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::C64;

/// `re + im·i` with both parts exact rationals in lowest terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExactComplex {
    pub re: BigRational,
    pub im: BigRational,
}

impl ExactComplex {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn real(re: BigRational) -> Self {
        Self { re, im: BigRational::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::real(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::real(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn i() -> Self {
        Self { re: BigRational::zero(), im: BigRational::one() }
    }

    /// Exact conversion of a finite double (every finite double is dyadic).
    pub fn from_f64(x: f64) -> Option<Self> {
        BigRational::from_float(x).map(Self::real)
    }

    pub fn zero() -> Self {
        Self { re: BigRational::zero(), im: BigRational::zero() }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self { re: self.re.clone(), im: -self.im.clone() }
    }

    pub fn scale_int(&self, k: i64) -> Self {
        let k = BigRational::from_integer(BigInt::from(k));
        Self { re: &self.re * &k, im: &self.im * &k }
    }

    pub fn to_c64(&self) -> C64 {
        C64::new(ratio_to_f64(&self.re), ratio_to_f64(&self.im))
    }

    /// Exact inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let norm = &self.re * &self.re + &self.im * &self.im;
        Some(Self { re: &self.re / &norm, im: -(&self.im / &norm) })
    }
}

pub fn ratio_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // numerator or denominator beyond f64 range
        let n = r.numer().to_f64().unwrap_or(f64::NAN);
        let d = r.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

impl From<i64> for ExactComplex {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<BigRational> for ExactComplex {
    fn from(r: BigRational) -> Self {
        Self::real(r)
    }
}

impl Add for &ExactComplex {
    type Output = ExactComplex;
    fn add(self, rhs: &ExactComplex) -> ExactComplex {
        ExactComplex { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl Add for ExactComplex {
    type Output = ExactComplex;
    fn add(self, rhs: ExactComplex) -> ExactComplex {
        &self + &rhs
    }
}

impl AddAssign<&ExactComplex> for ExactComplex {
    fn add_assign(&mut self, rhs: &ExactComplex) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl Sub for &ExactComplex {
    type Output = ExactComplex;
    fn sub(self, rhs: &ExactComplex) -> ExactComplex {
        ExactComplex { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl Sub for ExactComplex {
    type Output = ExactComplex;
    fn sub(self, rhs: ExactComplex) -> ExactComplex {
        &self - &rhs
    }
}

impl Mul for &ExactComplex {
    type Output = ExactComplex;
    fn mul(self, rhs: &ExactComplex) -> ExactComplex {
        ExactComplex {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Mul for ExactComplex {
    type Output = ExactComplex;
    fn mul(self, rhs: ExactComplex) -> ExactComplex {
        &self * &rhs
    }
}

impl Neg for ExactComplex {
    type Output = ExactComplex;
    fn neg(self) -> ExactComplex {
        ExactComplex { re: -self.re, im: -self.im }
    }
}

impl Neg for &ExactComplex {
    type Output = ExactComplex;
    fn neg(self) -> ExactComplex {
        -self.clone()
    }
}

fn fmt_ratio(r: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if r.is_integer() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

/// Writes a rational's absolute value in the expression grammar.
pub(crate) fn fmt_abs_ratio(r: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    fmt_ratio(&r.abs(), f)
}

impl fmt::Display for ExactComplex {
    /// Grammar-compatible rendering: `3/2`, `-5`, `2*i`, `(1 - 2*i)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return fmt_ratio(&self.re, f);
        }
        if self.re.is_zero() {
            if self.im.is_negative() {
                f.write_str("-")?;
            }
            if !self.im.abs().is_one() {
                fmt_abs_ratio(&self.im, f)?;
                f.write_str("*")?;
            }
            return f.write_str("i");
        }
        f.write_str("(")?;
        fmt_ratio(&self.re, f)?;
        f.write_str(if self.im.is_negative() { " - " } else { " + " })?;
        if !self.im.abs().is_one() {
            fmt_abs_ratio(&self.im, f)?;
            f.write_str("*")?;
        }
        f.write_str("i)")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn lowest_terms_and_exact_equality() {
        let a = ExactComplex::from_ratio(2, 4);
        let b = ExactComplex::from_ratio(-1, -2);
        assert_eq!(a, b);
        assert_eq!(a.re.denom(), &BigInt::from(2));
        assert!(b.re.denom().is_positive());
    }

    #[test]
    fn inverse_and_conjugate() {
        let z = ExactComplex::new(
            BigRational::from_integer(3.into()),
            BigRational::from_integer(4.into()),
        );
        let w = z.inv().unwrap();
        assert_eq!(&z * &w, ExactComplex::one());
        assert_eq!(z.conj().conj(), z);
        assert!(ExactComplex::zero().inv().is_none());
    }

    #[test]
    fn display_forms() {
        assert_eq!(ExactComplex::from_ratio(3, 2).to_string(), "3/2");
        assert_eq!(ExactComplex::from_int(-5).to_string(), "-5");
        assert_eq!(ExactComplex::i().scale_int(2).to_string(), "2*i");
        assert_eq!(ExactComplex::i().scale_int(-1).to_string(), "-i");
        let z = ExactComplex::one() - ExactComplex::i().scale_int(2);
        assert_eq!(z.to_string(), "(1 - 2*i)");
    }

    #[test]
    fn dyadic_conversion_is_exact() {
        let h = ExactComplex::from_f64(2.5).unwrap();
        assert_eq!(h, ExactComplex::from_ratio(5, 2));
        assert!(ExactComplex::from_f64(f64::NAN).is_none());
    }
}
