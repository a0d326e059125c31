//! Scalar abstractions shared by every module.
//!
//! [`Scalar`] is the field-like surface needed by pure coefficient algebra and
//! is implemented for floats and for exact rationals. [`Real`] adds the
//! transcendental functions and is implemented for `f32`, `f64` and [`Mp`].
//!
//! [`Mp`]: crate::mp::Mp

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, One, Zero};
use std::fmt::{Debug, Display};
use std::ops::Neg;

pub trait Scalar: Clone + PartialOrd + Debug + Num + Neg<Output = Self> + Send + Sync + 'static {
    fn from_i64(n: i64) -> Self;

    /// Parses a plain decimal literal such as `"0.225"` or `"-1.5e-3"`.
    ///
    /// Rational implementations are exact. Panics on malformed input, so only
    /// use it for literals; user input goes through [`parse_decimal`].
    fn from_decimal(s: &str) -> Self;

    fn ratio(n: i64, d: i64) -> Self {
        Self::from_i64(n) / Self::from_i64(d)
    }
}

pub trait Real: Scalar + Display {
    fn from_f64(x: f64) -> Self;
    fn to_f64(&self) -> f64;

    fn pi() -> Self;
    fn euler_gamma() -> Self;
    /// Unit roundoff at the current working precision.
    fn epsilon() -> Self;
    /// Significant decimal digits carried at the current working precision.
    fn digits() -> u32;

    fn exp(&self) -> Self;
    fn ln(&self) -> Self;
    fn sqrt(&self) -> Self;
    fn cbrt(&self) -> Self;
    fn sin(&self) -> Self;
    fn cos(&self) -> Self;
    fn tan(&self) -> Self;
    fn atan(&self) -> Self;
    fn atan2(&self, x: &Self) -> Self;
    fn sinh(&self) -> Self;
    fn cosh(&self) -> Self;
    fn tanh(&self) -> Self;
    fn powf(&self, e: &Self) -> Self;
    fn powi(&self, n: i32) -> Self;
    fn abs(&self) -> Self;
    fn floor(&self) -> Self;
    fn is_finite(&self) -> bool;

    /// Scientific notation with `digits` significant digits.
    fn to_decimal(&self, digits: usize) -> String;

    fn two() -> Self {
        Self::from_i64(2)
    }

    fn half() -> Self {
        Self::ratio(1, 2)
    }

    fn sq(&self) -> Self {
        self.clone() * self.clone()
    }

    fn max(self, other: Self) -> Self {
        if other > self {
            other
        } else {
            self
        }
    }

    fn min(self, other: Self) -> Self {
        if other < self {
            other
        } else {
            self
        }
    }

    fn cot(&self) -> Self {
        Self::one() / self.tan()
    }

    /// `10^-n` at the working precision.
    fn tenth_pow(n: u32) -> Self {
        Self::from_i64(10).powi(-(n as i32))
    }
}

/// Parses a decimal literal, reporting malformed input instead of panicking.
pub fn parse_decimal<T: Scalar>(s: &str) -> Option<T> {
    let r = parse_rational(s)?;
    let (n, d) = (r.numer().to_string(), r.denom().to_string());
    Some(T::from_decimal(&n) / T::from_decimal(&d))
}

fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    let (mantissa, exp) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i32>().ok()?),
        None => (s, 0),
    };
    let (neg, mantissa) = match mantissa.strip_prefix('-') {
        Some(m) => (true, m),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int, frac) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if int.is_empty() && frac.is_empty() {
        return None;
    }
    if !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits = format!("{int}{frac}");
    let mut n: BigInt = if digits.is_empty() { BigInt::zero() } else { digits.parse().ok()? };
    if neg {
        n = -n;
    }
    let scale = exp - frac.len() as i32;
    let ten = BigInt::from(10);
    let r = if scale >= 0 {
        BigRational::from_integer(n * num_traits::pow(ten, scale as usize))
    } else {
        BigRational::new(n, num_traits::pow(ten, (-scale) as usize))
    };
    Some(r)
}

impl Scalar for BigRational {
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn from_decimal(s: &str) -> Self {
        parse_rational(s).unwrap_or_else(|| panic!("malformed decimal literal {s:?}"))
    }
}

/// Nearest `f64` to an exact rational.
pub fn rational_to_f64(x: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or(f64::NAN)
}

/// Converts an exact rational into any real type without a binary detour.
pub fn rational_to_real<T: Real>(x: &BigRational) -> T {
    if x.is_zero() {
        return T::zero();
    }
    if x.denom().is_one() {
        return T::from_decimal(&x.numer().to_string());
    }
    T::from_decimal(&x.numer().to_string()) / T::from_decimal(&x.denom().to_string())
}

macro_rules! impl_float {
    ($f:ident, $digits:expr) => {
        impl Scalar for $f {
            fn from_i64(n: i64) -> Self {
                n as $f
            }

            fn from_decimal(s: &str) -> Self {
                s.trim().parse().unwrap_or_else(|_| panic!("malformed decimal literal {s:?}"))
            }
        }

        impl Real for $f {
            fn from_f64(x: f64) -> Self {
                x as $f
            }
            fn to_f64(&self) -> f64 {
                *self as f64
            }
            fn pi() -> Self {
                std::$f::consts::PI
            }
            fn euler_gamma() -> Self {
                0.577_215_664_901_532_9_f64 as $f
            }
            fn epsilon() -> Self {
                $f::EPSILON
            }
            fn digits() -> u32 {
                $digits
            }
            fn exp(&self) -> Self {
                $f::exp(*self)
            }
            fn ln(&self) -> Self {
                $f::ln(*self)
            }
            fn sqrt(&self) -> Self {
                $f::sqrt(*self)
            }
            fn cbrt(&self) -> Self {
                $f::cbrt(*self)
            }
            fn sin(&self) -> Self {
                $f::sin(*self)
            }
            fn cos(&self) -> Self {
                $f::cos(*self)
            }
            fn tan(&self) -> Self {
                $f::tan(*self)
            }
            fn atan(&self) -> Self {
                $f::atan(*self)
            }
            fn atan2(&self, x: &Self) -> Self {
                $f::atan2(*self, *x)
            }
            fn sinh(&self) -> Self {
                $f::sinh(*self)
            }
            fn cosh(&self) -> Self {
                $f::cosh(*self)
            }
            fn tanh(&self) -> Self {
                $f::tanh(*self)
            }
            fn powf(&self, e: &Self) -> Self {
                $f::powf(*self, *e)
            }
            fn powi(&self, n: i32) -> Self {
                $f::powi(*self, n)
            }
            fn abs(&self) -> Self {
                $f::abs(*self)
            }
            fn floor(&self) -> Self {
                $f::floor(*self)
            }
            fn is_finite(&self) -> bool {
                $f::is_finite(*self)
            }
            fn to_decimal(&self, digits: usize) -> String {
                format!("{:.*e}", digits.saturating_sub(1), self)
            }
        }
    };
}

impl_float!(f32, 7);
impl_float!(f64, 16);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_literals_are_exact() {
        let x = BigRational::from_decimal("10.01055");
        assert_eq!(x, BigRational::new(BigInt::from(1001055), BigInt::from(100000)));
        let y = BigRational::from_decimal("-2.5e-3");
        assert_eq!(y, BigRational::new(BigInt::from(-1), BigInt::from(400)));
        assert_eq!(BigRational::from_decimal("3e2"), BigRational::from_i64(300));
    }

    #[test]
    fn malformed_decimals_are_rejected() {
        assert!(parse_decimal::<f64>("1.2.3").is_none());
        assert!(parse_decimal::<f64>("").is_none());
        assert!(parse_decimal::<f64>("abc").is_none());
        assert_eq!(parse_decimal::<f64>("0.25"), Some(0.25));
    }

    #[test]
    fn rational_to_real_round_trips() {
        let r = BigRational::from_decimal("0.225");
        assert_eq!(rational_to_real::<f64>(&r), 0.225);
        assert_eq!(rational_to_f64(&r), 0.225);
    }
}
