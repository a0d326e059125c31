//! Multiprecision real backed by MPFR.
//!
//! The working precision is process-global and is meant to be set once at
//! startup with [`set_digits`]. Every result is rounded to the precision that
//! is current when it is produced.

use crate::scalar::{Real, Scalar};
use num_traits::{Num, One, Zero};
use rug::float::{Constant, Round};
use rug::ops::Pow;
use rug::Float;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Rem, Sub};
use std::sync::atomic::{AtomicU32, Ordering};

pub const DEFAULT_DIGITS: u32 = 60;

/// Extra bits carried beyond the requested decimal digits.
const GUARD_BITS: u32 = 32;

static PREC_BITS: AtomicU32 = AtomicU32::new(digits_to_bits(DEFAULT_DIGITS));

const fn digits_to_bits(digits: u32) -> u32 {
    // log2(10) < 3.3220
    (digits * 33220).div_ceil(10000) + GUARD_BITS
}

/// Sets the working precision in significant decimal digits.
pub fn set_digits(digits: u32) {
    PREC_BITS.store(digits_to_bits(digits.max(8)), Ordering::Relaxed);
}

pub fn digits() -> u32 {
    ((PREC_BITS.load(Ordering::Relaxed) - GUARD_BITS) * 10000) / 33220
}

pub fn prec() -> u32 {
    PREC_BITS.load(Ordering::Relaxed)
}

#[derive(Clone, PartialEq, PartialOrd)]
pub struct Mp(pub Float);

impl Mp {
    pub fn new<T>(val: T) -> Self
    where
        Float: rug::Assign<T>,
    {
        Mp(Float::with_val(prec(), val))
    }

    pub fn inner(&self) -> &Float {
        &self.0
    }
}

impl fmt::Debug for Mp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mp({})", self.to_decimal(digits() as usize))
    }
}

impl fmt::Display for Mp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().unwrap_or(digits() as usize);
        f.write_str(&self.to_decimal(digits))
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $op:tt) => {
        impl $tr for Mp {
            type Output = Mp;
            fn $m(self, rhs: Mp) -> Mp {
                Mp(Float::with_val(prec(), &self.0 $op &rhs.0))
            }
        }
        impl<'a> $tr<&'a Mp> for &'a Mp {
            type Output = Mp;
            fn $m(self, rhs: &'a Mp) -> Mp {
                Mp(Float::with_val(prec(), &self.0 $op &rhs.0))
            }
        }
    };
}

binop!(Add, add, +);
binop!(Sub, sub, -);
binop!(Mul, mul, *);
binop!(Div, div, /);

impl Rem for Mp {
    type Output = Mp;
    fn rem(self, rhs: Mp) -> Mp {
        let q = Float::with_val(prec(), &self.0 / &rhs.0).trunc();
        Mp(Float::with_val(prec(), &self.0 - &q * &rhs.0))
    }
}

impl Neg for Mp {
    type Output = Mp;
    fn neg(self) -> Mp {
        Mp(-self.0)
    }
}

impl Zero for Mp {
    fn zero() -> Self {
        Mp::new(0)
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl One for Mp {
    fn one() -> Self {
        Mp::new(1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseMpError;

impl fmt::Display for ParseMpError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("invalid multiprecision literal")
    }
}

impl std::error::Error for ParseMpError {}

impl Num for Mp {
    type FromStrRadixErr = ParseMpError;
    fn from_str_radix(s: &str, radix: u32) -> Result<Self, ParseMpError> {
        let p = Float::parse_radix(s, radix as i32).map_err(|_| ParseMpError)?;
        Ok(Mp::new(p))
    }
}

impl Scalar for Mp {
    fn from_i64(n: i64) -> Self {
        Mp::new(n)
    }

    fn from_decimal(s: &str) -> Self {
        Mp::from_str_radix(s.trim(), 10).unwrap_or_else(|_| panic!("malformed decimal literal {s:?}"))
    }

    fn ratio(n: i64, d: i64) -> Self {
        Mp(Float::with_val(prec(), n) / d)
    }
}

impl Real for Mp {
    fn from_f64(x: f64) -> Self {
        Mp::new(x)
    }
    fn to_f64(&self) -> f64 {
        self.0.to_f64()
    }
    fn pi() -> Self {
        Mp::new(Constant::Pi)
    }
    fn euler_gamma() -> Self {
        Mp::new(Constant::Euler)
    }
    fn epsilon() -> Self {
        Mp(Float::with_val(prec(), 1) >> (prec() - 1))
    }
    fn digits() -> u32 {
        digits()
    }
    fn exp(&self) -> Self {
        Mp(Float::with_val(prec(), self.0.exp_ref()))
    }
    fn ln(&self) -> Self {
        Mp(Float::with_val(prec(), self.0.ln_ref()))
    }
    fn sqrt(&self) -> Self {
        Mp(Float::with_val(prec(), self.0.sqrt_ref()))
    }
    fn cbrt(&self) -> Self {
        Mp(Float::with_val(prec(), self.0.cbrt_ref()))
    }
    fn sin(&self) -> Self {
        Mp(Float::with_val(prec(), self.0.sin_ref()))
    }
    fn cos(&self) -> Self {
        Mp(Float::with_val(prec(), self.0.cos_ref()))
    }
    fn tan(&self) -> Self {
        Mp(Float::with_val(prec(), self.0.tan_ref()))
    }
    fn atan(&self) -> Self {
        Mp(Float::with_val(prec(), self.0.atan_ref()))
    }
    fn atan2(&self, x: &Self) -> Self {
        Mp(Float::with_val(prec(), self.0.atan2_ref(&x.0)))
    }
    fn sinh(&self) -> Self {
        Mp(Float::with_val(prec(), self.0.sinh_ref()))
    }
    fn cosh(&self) -> Self {
        Mp(Float::with_val(prec(), self.0.cosh_ref()))
    }
    fn tanh(&self) -> Self {
        Mp(Float::with_val(prec(), self.0.tanh_ref()))
    }
    fn powf(&self, e: &Self) -> Self {
        Mp(Float::with_val(prec(), (&self.0).pow(&e.0)))
    }
    fn powi(&self, n: i32) -> Self {
        Mp(Float::with_val(prec(), (&self.0).pow(n)))
    }
    fn abs(&self) -> Self {
        Mp(Float::with_val(prec(), self.0.abs_ref()))
    }
    fn floor(&self) -> Self {
        Mp(Float::with_val(prec(), self.0.floor_ref()))
    }
    fn is_finite(&self) -> bool {
        self.0.is_finite()
    }
    fn cot(&self) -> Self {
        Mp(Float::with_val(prec(), self.0.cot_ref()))
    }

    fn to_decimal(&self, digits: usize) -> String {
        if self.0.is_zero() {
            return format!("{:.*e}", digits.saturating_sub(1), 0.0);
        }
        if !self.0.is_finite() {
            return self.0.to_f64().to_string();
        }
        let digits = digits.max(1);
        let (neg, mut s, exp) = self.0.to_sign_string_exp_round(10, Some(digits), Round::Nearest);
        let exp = exp.unwrap_or(0) - 1;
        s.insert(1, '.');
        let s = if s.ends_with('.') { s.trim_end_matches('.').to_string() } else { s };
        format!("{}{}e{}", if neg { "-" } else { "" }, s, exp)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_carries_working_precision() {
        let third = Mp::ratio(1, 3);
        let back = third.clone() * Mp::from_i64(3);
        let err = (back - Mp::one()).abs();
        assert!(err < Mp::tenth_pow(55));
    }

    #[test]
    fn decimal_formatting_is_scientific() {
        assert_eq!(Mp::from_decimal("12.5").to_decimal(4), "1.250e1");
        assert_eq!(Mp::from_decimal("-0.00125").to_decimal(3), "-1.25e-3");
        assert_eq!(Mp::zero().to_decimal(3), "0.00e0");
        assert_eq!(Mp::one().to_decimal(1), "1e0");
    }

    #[test]
    fn pi_matches_reference_digits() {
        let s = Mp::pi().to_decimal(40);
        assert_eq!(s, "3.141592653589793238462643383279502884197e0");
    }

    #[test]
    fn remainder_truncates_toward_zero() {
        let r = Mp::from_i64(7) % Mp::from_i64(3);
        assert_eq!(r, Mp::one());
    }
}
