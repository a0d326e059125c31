//! One-dimensional root finding and minimization.

use crate::scalar::Real;

/// Bisection on a bracketing interval until its width is below `tol`.
/// Returns `None` when `f(a)` and `f(b)` share a strict sign.
pub fn bisect<T: Real, F: FnMut(&T) -> T>(mut f: F, a: T, b: T, tol: &T) -> Option<T> {
    let (mut lo, mut hi) = (a, b);
    let mut flo = f(&lo);
    let fhi = f(&hi);
    if flo.is_zero() {
        return Some(lo);
    }
    if fhi.is_zero() {
        return Some(hi);
    }
    if (flo > T::zero()) == (fhi > T::zero()) {
        return None;
    }
    for _ in 0..10_000 {
        if (hi.clone() - lo.clone()).abs() <= tol.clone() {
            break;
        }
        let mid = (lo.clone() + hi.clone()) * T::half();
        // A tolerance below the spacing of representable numbers is never met.
        if mid == lo || mid == hi {
            break;
        }
        let fm = f(&mid);
        if fm.is_zero() {
            return Some(mid);
        }
        if (fm > T::zero()) == (flo > T::zero()) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    Some((lo + hi) * T::half())
}

/// Newton iteration from `x0`, stopping when the step falls below `tol`.
/// `fd` returns `(f(x), f'(x))`.
pub fn newton<T: Real, F: FnMut(&T) -> (T, T)>(mut fd: F, x0: T, tol: &T, max_iter: usize) -> Option<T> {
    let mut x = x0;
    for _ in 0..max_iter {
        let (v, d) = fd(&x);
        if d.is_zero() || !d.is_finite() {
            return None;
        }
        let step = v / d;
        x = x - step.clone();
        if step.abs() <= tol.clone() {
            return Some(x);
        }
    }
    None
}

/// Scans `[a, b]` in `n` equal steps and returns every bracketing subinterval.
pub fn sign_changes<T: Real, F: FnMut(&T) -> T>(mut f: F, a: &T, b: &T, n: usize) -> Vec<(T, T)> {
    let step = (b.clone() - a.clone()) / T::from_i64(n as i64);
    let mut out = Vec::new();
    let mut x0 = a.clone();
    let mut f0 = f(&x0);
    for i in 1..=n {
        let x1 = a.clone() + step.clone() * T::from_i64(i as i64);
        let f1 = f(&x1);
        if (f0 > T::zero()) != (f1 > T::zero()) {
            out.push((x0.clone(), x1.clone()));
        }
        x0 = x1;
        f0 = f1;
    }
    out
}

/// Golden-section search for a minimum of a unimodal `f` on `[a, b]`.
/// Returns `(argmin, min)`.
pub fn golden_min<T: Real, F: FnMut(&T) -> T>(mut f: F, a: T, b: T, tol: &T) -> (T, T) {
    let inv_phi = (T::from_i64(5).sqrt() - T::one()) * T::half();
    let (mut a, mut b) = (a, b);
    let mut c = b.clone() - inv_phi.clone() * (b.clone() - a.clone());
    let mut d = a.clone() + inv_phi.clone() * (b.clone() - a.clone());
    let mut fc = f(&c);
    let mut fd = f(&d);
    for _ in 0..400 {
        if (b.clone() - a.clone()).abs() <= tol.clone() {
            break;
        }
        if fc < fd {
            b = d;
            d = c.clone();
            fd = fc;
            c = b.clone() - inv_phi.clone() * (b.clone() - a.clone());
            fc = f(&c);
        } else {
            a = c;
            c = d.clone();
            fc = fd;
            d = a.clone() + inv_phi.clone() * (b.clone() - a.clone());
            fd = f(&d);
        }
    }
    if fc < fd {
        (c, fc)
    } else {
        (d, fd)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mp::Mp;
    use num_traits::One;

    #[test]
    fn bisection_then_newton_reach_full_precision() {
        let f = |x: &Mp| x.sq() - Mp::two();
        let rough = bisect(f, Mp::one(), Mp::two(), &Mp::tenth_pow(8)).unwrap();
        let root = newton(|x: &Mp| (x.sq() - Mp::two(), Mp::two() * x.clone()), rough, &Mp::tenth_pow(55), 50).unwrap();
        assert!((root - Mp::two().sqrt()).abs() < Mp::tenth_pow(55));
    }

    #[test]
    fn bisection_rejects_missing_brackets() {
        assert!(bisect(|x: &f64| x * x + 1.0, -1.0, 1.0, &1e-12).is_none());
    }

    #[test]
    fn sign_scan_finds_each_root() {
        let roots = sign_changes(|x: &f64| x.sin(), &0.5, &10.0, 1000);
        assert_eq!(roots.len(), 3);
    }

    #[test]
    fn golden_section_locates_parabola_vertex() {
        // The argmin is only determined to about sqrt(eps) by function values.
        let (x, v) = golden_min(|x: &f64| (x - 0.3).powi(2) + 1.0, -2.0, 2.0, &1e-10);
        assert!((x - 0.3).abs() < 1e-7 && (v - 1.0).abs() < 1e-14);
    }
}
