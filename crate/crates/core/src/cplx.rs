//! Elementary functions on `Complex<T>` for any [`Real`] `T`.
//!
//! `num_complex` only provides these for its own `Float` bound, which the
//! multiprecision type does not satisfy.

use crate::scalar::Real;
use num_complex::Complex;
use num_traits::{One, Zero};

pub type C<T> = Complex<T>;

pub fn re<T: Real>(x: T) -> C<T> {
    Complex::new(x, T::zero())
}

pub fn c<T: Real>(re: T, im: T) -> C<T> {
    Complex::new(re, im)
}

pub fn cf<T: Real>(re: f64, im: f64) -> C<T> {
    Complex::new(T::from_f64(re), T::from_f64(im))
}

pub fn scale<T: Real>(z: &C<T>, k: &T) -> C<T> {
    Complex::new(z.re.clone() * k.clone(), z.im.clone() * k.clone())
}

pub fn abs<T: Real>(z: &C<T>) -> T {
    let (a, b) = (z.re.abs(), z.im.abs());
    let (big, small) = if a >= b { (a, b) } else { (b, a) };
    if big.is_zero() {
        return big;
    }
    let r = small / big.clone();
    big * (T::one() + r.sq()).sqrt()
}

pub fn norm_sqr<T: Real>(z: &C<T>) -> T {
    z.re.sq() + z.im.sq()
}

pub fn arg<T: Real>(z: &C<T>) -> T {
    z.im.atan2(&z.re)
}

pub fn exp<T: Real>(z: &C<T>) -> C<T> {
    let m = z.re.exp();
    Complex::new(m.clone() * z.im.cos(), m * z.im.sin())
}

pub fn ln<T: Real>(z: &C<T>) -> C<T> {
    Complex::new(abs(z).ln(), arg(z))
}

pub fn sin<T: Real>(z: &C<T>) -> C<T> {
    Complex::new(z.re.sin() * z.im.cosh(), z.re.cos() * z.im.sinh())
}

pub fn cos<T: Real>(z: &C<T>) -> C<T> {
    Complex::new(z.re.cos() * z.im.cosh(), -(z.re.sin() * z.im.sinh()))
}

/// `cot z`, evaluated as `(sin 2x − i sinh 2y) / (cosh 2y − cos 2x)` so that
/// large imaginary parts do not overflow.
pub fn cot<T: Real>(z: &C<T>) -> C<T> {
    let two = T::two();
    let x2 = two.clone() * z.re.clone();
    let y2 = two * z.im.clone();
    let den = y2.cosh() - x2.cos();
    if y2.abs() > T::from_i64(40) {
        // cosh dominates; avoid inf/inf.
        let s = if y2 > T::zero() { -T::one() } else { T::one() };
        let k = (-(y2.abs())).exp();
        let imag = s * (T::one() - k.clone() * k.clone()) / (T::one() - T::two() * k.clone() * x2.cos() + k.sq());
        let real = T::two() * x2.sin() * k.clone() / (T::one() - T::two() * k.clone() * x2.cos() + k.sq());
        return Complex::new(real, imag);
    }
    Complex::new(x2.sin() / den.clone(), -(y2.sinh()) / den)
}

/// `cot z − 1/z`, which is analytic at 0; near the origin the Laurent series
/// `−Σ 2^{2k} |B_{2k}| z^{2k−1} / (2k)!` replaces the cancelling difference.
pub fn cot_minus_inv<T: Real>(z: &C<T>) -> C<T> {
    if abs(z) < T::ratio(1, 4) {
        let z2 = z.clone() * z.clone();
        let mut pow = z.clone();
        let mut acc = C::<T>::zero();
        for k in 1..=crate::bernoulli::COT_SERIES_TERMS {
            let coef: T = crate::bernoulli::cot_series_coefficient(k);
            acc = acc + scale(&pow, &coef);
            pow = pow * z2.clone();
        }
        acc
    } else {
        cot(z) - C::<T>::one() / z.clone()
    }
}

pub fn powi<T: Real>(z: &C<T>, n: u32) -> C<T> {
    let mut acc = C::<T>::one();
    for _ in 0..n {
        acc = acc * z.clone();
    }
    acc
}

/// `x^s` for real `x > 0`.
pub fn real_pow<T: Real>(x: &T, s: &C<T>) -> C<T> {
    exp(&scale(s, &x.ln()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: C<f64>, b: C<f64>, tol: f64) -> bool {
        (a - b).norm() <= tol
    }

    #[test]
    fn cot_matches_ratio_of_sin_and_cos() {
        for &(x, y) in &[(0.3, 0.2), (1.1, -2.0), (-0.7, 5.0), (0.2, 30.0)] {
            let z = cf::<f64>(x, y);
            let direct = cos(&z) / sin(&z);
            assert!(close(cot(&z), direct, 1e-12), "{z}");
        }
    }

    #[test]
    fn cot_survives_huge_imaginary_parts() {
        let v = cot(&cf::<f64>(0.5, 400.0));
        assert!((v.im + 1.0).abs() < 1e-15 && v.re.abs() < 1e-15);
    }

    #[test]
    fn cot_minus_inv_is_continuous_across_the_series_switch() {
        for &(x, y) in &[(0.2499, 0.0), (0.0, 0.2499), (0.17, 0.17)] {
            let small = cot_minus_inv(&cf::<f64>(x, y));
            let big = cot(&cf::<f64>(x, y)) - C::<f64>::one() / cf::<f64>(x, y);
            assert!(close(small, big, 1e-13));
        }
        assert!(cot_minus_inv(&cf::<f64>(0.0, 0.0)).norm() == 0.0);
    }

    #[test]
    fn modulus_avoids_overflow() {
        let z = cf::<f64>(1e200, 1e200);
        assert!((abs(&z) / 1e200 - 2f64.sqrt()).abs() < 1e-15);
    }
}
