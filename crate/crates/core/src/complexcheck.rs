//! Sampled boundary certificates for inequalities of the form `Re f(z) ≥ c`
//! on regions where `Re f` is harmonic, so that the minimum sits on the
//! boundary.

use crate::cplx::{self, c, re, C};
use crate::error::{domain, Result};
use crate::mollifier::{g_eval, MollifierKernel};
use crate::quad::GaussLegendre;
use crate::report::{Entry, Orientation};
use crate::roots::golden_min;
use crate::scalar::Real;

/// One piece of a boundary, parameterized by `t ∈ [0, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub enum Piece<T> {
    Segment { from: C<T>, to: C<T> },
    Arc { center: C<T>, radius: T, from: T, to: T },
}

impl<T: Real> Piece<T> {
    pub fn point(&self, t: &T) -> C<T> {
        match self {
            Piece::Segment { from, to } => from.clone() + cplx::scale(&(to.clone() - from.clone()), t),
            Piece::Arc { center, radius, from, to } => {
                let phi = from.clone() + (to.clone() - from.clone()) * t.clone();
                center.clone() + c(radius.clone() * phi.cos(), radius.clone() * phi.sin())
            }
        }
    }

    pub fn length(&self) -> T {
        match self {
            Piece::Segment { from, to } => cplx::abs(&(to.clone() - from.clone())),
            Piece::Arc { radius, from, to, .. } => radius.clone() * (to.clone() - from.clone()).abs(),
        }
    }

    pub fn describe(&self) -> String {
        let p = |z: &C<T>| format!("{}{:+}i", z.re.to_decimal(6), z.im.to_f64());
        match self {
            Piece::Segment { from, to } => format!("segment {} .. {}", p(from), p(to)),
            Piece::Arc { center, radius, from, to } => format!(
                "arc |z-({})| = {} for arg in [{}, {}]",
                p(center),
                radius.to_decimal(6),
                from.to_decimal(6),
                to.to_decimal(6)
            ),
        }
    }

    /// Distance from `z` to this piece's curve, for checking reported
    /// locations.
    pub fn distance(&self, z: &C<T>) -> T {
        match self {
            Piece::Segment { from, to } => {
                let d = to.clone() - from.clone();
                let len2 = cplx::norm_sqr(&d);
                let w = z.clone() - from.clone();
                let t = ((w.re.clone() * d.re.clone() + w.im.clone() * d.im.clone()) / len2).max(T::zero()).min(T::one());
                cplx::abs(&(z.clone() - self.point(&t)))
            }
            Piece::Arc { center, radius, .. } => (cplx::abs(&(z.clone() - center.clone())) - radius.clone()).abs(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryCheck<T> {
    pub name: String,
    pub statement: String,
    pub region: Vec<Piece<T>>,
    pub sample_count: usize,
    pub min_value: T,
    pub min_location: C<T>,
    /// Refined local minima, in boundary order.
    pub local_minima: Vec<(C<T>, T)>,
    pub threshold: T,
    pub tolerance: T,
    pub pass: bool,
}

impl<T: Real> BoundaryCheck<T> {
    pub fn to_entry(&self) -> Entry {
        let region = self.region.iter().map(Piece::describe).collect::<Vec<_>>().join("; ");
        let z = &self.min_location;
        Entry::check(&self.name, &self.statement, &self.min_value, Orientation::AtLeast, &self.threshold, &self.tolerance)
            .sampled()
            .with_note(format!(
                "{} samples on {}; minimum at {}{:+.12}i",
                self.sample_count,
                region,
                z.re.to_decimal(12),
                z.im.to_f64()
            ))
    }
}

/// Minimizes `f` over the pieces: a uniform scan of each piece with sample
/// counts proportional to length, followed by golden-section refinement of
/// every discrete local minimum. Ties keep the earliest piece and parameter.
#[allow(clippy::type_complexity)]
pub fn boundary_minimum<T: Real, F: FnMut(&C<T>) -> T>(pieces: &[Piece<T>], samples: usize, mut f: F) -> (T, C<T>, Vec<(C<T>, T)>) {
    let total = pieces.iter().fold(T::zero(), |acc, p| acc + p.length());
    let mut minima: Vec<(C<T>, T)> = Vec::new();
    let mut best: Option<(T, C<T>)> = None;
    let tol = T::epsilon().sqrt() * T::from_i64(4);
    for piece in pieces {
        let share = (piece.length() / total.clone()).to_f64();
        let n = ((samples as f64 * share).round() as usize).max(3);
        let ts: Vec<T> = (0..n).map(|i| T::from_i64(i as i64) / T::from_i64(n as i64 - 1)).collect();
        let vals: Vec<T> = ts.iter().map(|t| f(&piece.point(t))).collect();
        for i in 0..n {
            let left_ok = i == 0 || vals[i] <= vals[i - 1];
            let right_ok = i == n - 1 || vals[i] <= vals[i + 1];
            if !(left_ok && right_ok) {
                continue;
            }
            let lo = ts[i.saturating_sub(1)].clone();
            let hi = ts[(i + 1).min(n - 1)].clone();
            let (t, v) = golden_min(|t: &T| f(&piece.point(t)), lo, hi, &tol);
            let (t, v) = if v < vals[i] { (t, v) } else { (ts[i].clone(), vals[i].clone()) };
            let z = piece.point(&t);
            if best.as_ref().map_or(true, |(bv, _)| v < *bv) {
                best = Some((v.clone(), z.clone()));
            }
            minima.push((z, v));
        }
    }
    let (v, z) = best.expect("boundary has at least one piece");
    (v, z, minima)
}

#[allow(clippy::too_many_arguments)]
fn run<T: Real, F: FnMut(&C<T>) -> T>(
    name: &str,
    statement: &str,
    region: Vec<Piece<T>>,
    samples: usize,
    threshold: T,
    tolerance: T,
    f: F,
) -> BoundaryCheck<T> {
    let (min_value, min_location, local_minima) = boundary_minimum(&region, samples, f);
    let pass = min_value.is_finite() && min_value >= threshold.clone() - tolerance.clone();
    BoundaryCheck {
        name: name.into(),
        statement: statement.into(),
        region,
        sample_count: samples,
        min_value,
        min_location,
        local_minima,
        threshold,
        tolerance,
        pass,
    }
}

/// `Re(cot z − 1/z + 4z/π²) ≥ 0` on the boundary of the right half-disc of
/// radius π/2. On the imaginary segment the value vanishes identically.
pub fn check_cot_lemma<T: Real>(samples: usize) -> BoundaryCheck<T> {
    let r = T::pi() * T::half();
    let region = vec![
        Piece::Segment { from: c(T::zero(), -r.clone()), to: c(T::zero(), r.clone()) },
        Piece::Arc { center: re(T::zero()), radius: r.clone(), from: -r.clone(), to: r },
    ];
    let k = T::from_i64(4) / T::pi().sq();
    run(
        "complex.cot_lemma",
        "Re(cot z - 1/z + 4z/pi^2) >= 0 for Re z >= 0, |z| <= pi/2",
        region,
        samples.max(100),
        T::zero(),
        T::from_f64(1e-18),
        |z: &C<T>| (cplx::cot_minus_inv(z) + cplx::scale(z, &k)).re,
    )
}

/// The real part on the imaginary segment, which must vanish to round-off.
pub fn cot_lemma_axis_residual<T: Real>(samples: usize) -> T {
    let r = T::pi() * T::half();
    let k = T::from_i64(4) / T::pi().sq();
    (0..samples).fold(T::zero(), |acc, i| {
        let y = r.clone() * (T::two() * T::from_i64(i as i64) / T::from_i64(samples as i64 - 1) - T::one());
        let z = c(T::zero(), y);
        acc.max((cplx::cot_minus_inv(&z) + cplx::scale(&z, &k)).re.abs())
    })
}

pub const COT1_CENTER: &str = "0.6421";
pub const COT1_THRESHOLD: &str = "0.3758";
pub const COT1_TOLERANCE: f64 = 2e-4;

/// `Re (π/5) cot(πz/5) ≥ 0.3758` on the boundary of
/// `{Re z ≥ 0.6421, |z − 0.6421| ≤ 1}`.
pub fn check_cot1<T: Real>(samples: usize) -> BoundaryCheck<T> {
    let x0 = T::from_decimal(COT1_CENTER);
    let half_pi = T::pi() * T::half();
    let region = vec![
        Piece::Segment { from: c(x0.clone(), -T::one()), to: c(x0.clone(), T::one()) },
        Piece::Arc { center: re(x0), radius: T::one(), from: -half_pi.clone(), to: half_pi },
    ];
    let k = T::pi() / T::from_i64(5);
    run(
        "complex.cot1",
        "Re (pi/5) cot(pi z/5) >= 0.3758 for Re z >= 0.6421, |z - 0.6421| <= 1",
        region,
        samples.max(1000),
        T::from_decimal(COT1_THRESHOLD),
        T::from_f64(COT1_TOLERANCE),
        |z: &C<T>| cplx::scale(&cplx::cot(&cplx::scale(z, &k)), &k).re,
    )
}

/// `Re V_c(z) ≥ −c₅ c² w(0)` with
/// `V_c(z) = c w(0)(cot z − 1/z) + W(z/c − 1)`, on the boundary of
/// `{Re z ≥ c, |z| ≤ π/2}`.
pub fn check_vc_lower<T: Real>(cc: &T, r: &T, k: &MollifierKernel<T>, c5: &T, samples: usize) -> Result<BoundaryCheck<T>> {
    if *r < T::from_i64(3) {
        return Err(domain("V_c lower bound needs R >= 3"));
    }
    if !(*cc > T::zero()) || *cc > T::pi() / (T::two() * r.clone() + T::two()) {
        return Err(domain("V_c lower bound needs 0 < c <= pi/(2R+2)"));
    }
    let rad = T::pi() * T::half();
    let y = (rad.sq() - cc.sq()).sqrt();
    let phi = y.atan2(cc);
    let region = vec![
        Piece::Segment { from: c(cc.clone(), -y.clone()), to: c(cc.clone(), y) },
        Piece::Arc { center: re(T::zero()), radius: rad, from: -phi.clone(), to: phi },
    ];
    let threshold = -(c5.clone() * cc.sq() * k.w0.clone());
    let scale = cc.clone() * k.w0.clone();
    Ok(run(
        &format!("complex.vc_lower.c5_{}", c5.to_decimal(6)),
        "Re[c w(0)(cot z - 1/z) + W(z/c - 1)] >= -c5 c^2 w(0) for Re z >= c, |z| <= pi/2",
        region,
        samples.max(100),
        threshold,
        T::zero(),
        |z: &C<T>| vc_eval(z, cc, &scale, k).re,
    ))
}

pub fn vc_eval<T: Real>(z: &C<T>, cc: &T, cw0: &T, k: &MollifierKernel<T>) -> C<T> {
    cplx::scale(&cplx::cot_minus_inv(z), cw0) + k.f_eval(z, cc)
}

/// `∫₀^{θ/tanθ} g(u) cos(uy) du` by Gauss–Legendre.
pub fn g_cosine_transform<T: Real>(y: &T, theta: &T) -> T {
    let s = theta.clone() / theta.tan();
    let rule = GaussLegendre::<T>::cached(24);
    let tol = crate::mollifier::quad_tol::<T>(20);
    rule.integrate(|u: &T| g_eval(u, theta) * (u.clone() * y.clone()).cos(), T::zero(), s, &tol).value
}

/// Largest `|Re W(iy) − 2(∫g(u)cos(uy)du)²|` on `y = 0, h, …, ymax`.
pub fn rew_identity_deviation<T: Real>(k: &MollifierKernel<T>, ymax: &T, n: usize) -> T {
    (0..n).fold(T::zero(), |acc, i| {
        let y = ymax.clone() * T::from_i64(i as i64) / T::from_i64(n as i64 - 1);
        let lhs = k.w_closed(&c(T::zero(), y.clone())).re;
        let rhs = T::two() * g_cosine_transform(&y, &k.theta).sq();
        acc.max((lhs - rhs).abs())
    })
}

/// `Re W ≥ 0` on the imaginary axis and on interior sample points of the
/// right half-plane.
pub fn check_rew_nonneg<T: Real>(k: &MollifierKernel<T>, samples: usize) -> BoundaryCheck<T> {
    let ymax = T::from_i64(60);
    let xmax = T::from_i64(20);
    let region = vec![
        Piece::Segment { from: c(T::zero(), -ymax.clone()), to: c(T::zero(), ymax.clone()) },
        Piece::Segment { from: c(T::zero(), ymax.clone()), to: c(xmax.clone(), ymax.clone()) },
        Piece::Segment { from: c(xmax.clone(), ymax.clone()), to: c(xmax.clone(), -ymax.clone()) },
        Piece::Segment { from: c(xmax, -ymax.clone()), to: c(T::zero(), -ymax) },
    ];
    let mut check = run(
        "complex.re_w_nonneg",
        "Re W(z) >= 0 for Re z >= 0",
        region,
        samples.max(100),
        T::zero(),
        T::from_f64(1e-12),
        |z: &C<T>| k.w_closed(z).re,
    );
    // Interior points: Re W is not harmonic-minimal there, so sample a grid.
    let n = ((samples as f64).sqrt() as usize).max(10);
    for i in 0..n {
        for j in 0..n {
            let x = T::from_i64(20) * T::from_i64(i as i64) / T::from_i64(n as i64 - 1);
            let y = T::from_i64(60) * (T::two() * T::from_i64(j as i64) / T::from_i64(n as i64 - 1) - T::one());
            let z = c(x, y);
            let v = k.w_closed(&z).re;
            if v < check.min_value {
                check.min_value = v;
                check.min_location = z;
            }
        }
    }
    check.sample_count += n * n;
    check.pass = check.min_value >= check.threshold.clone() - check.tolerance.clone();
    check
}

/// `cot x − 1/x ≥ −bound·x` on `(0, xmax]`, checked as
/// `(cot x − 1/x)/x ≥ −bound` including the limit `−1/3` at `0⁺`.
pub fn check_cot_linear<T: Real>(bound: &T, xmax: &T, samples: usize) -> Result<BoundaryCheck<T>> {
    if !(*xmax > T::zero()) || *xmax > T::pi() * T::half() {
        return Err(domain("cot linear bound needs 0 < xmax <= pi/2"));
    }
    let region = vec![Piece::Segment { from: re(T::zero()), to: re(xmax.clone()) }];
    Ok(run(
        &format!("complex.cot_linear.{}_{}", bound.to_decimal(4), xmax.to_decimal(4)),
        "(cot x - 1/x)/x >= -bound on (0, xmax]",
        region,
        samples.max(10),
        -bound.clone(),
        T::zero(),
        |z: &C<T>| {
            if z.re.is_zero() {
                -T::ratio(1, 3)
            } else {
                cplx::cot_minus_inv(&re(z.re.clone())).re / z.re.clone()
            }
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mp::Mp;
    use crate::scalar::Scalar;
    use crate::trig::coefficients;

    fn kernel() -> MollifierKernel<f64> {
        let c = coefficients(0.225f64, 0.9);
        MollifierKernel::from_coefficients(c.b0(), c.b1()).unwrap()
    }

    #[test]
    fn cot_lemma_holds_and_the_axis_is_exact() {
        let ck = check_cot_lemma::<Mp>(4000);
        assert!(ck.pass, "{:?}", ck.min_value);
        assert!(cot_lemma_axis_residual::<Mp>(200) < Mp::tenth_pow(18));
        let end = re(Mp::pi() * Mp::half());
        let v = (cplx::cot_minus_inv(&end) + cplx::scale(&end, &(Mp::from_i64(4) / Mp::pi().sq()))).re;
        assert!(v.abs() < Mp::tenth_pow(50));
    }

    #[test]
    fn cot1_minimizers_sit_at_the_predicted_points() {
        let ck = check_cot1::<f64>(4000);
        assert!(ck.pass);
        let f = |z: C<f64>| {
            let k = std::f64::consts::PI / 5.0;
            (cplx::cot(&cplx::scale(&z, &k)) * k).re
        };
        assert!((f(cplx::cf(1.6421, 0.0)) - 0.37580857).abs() < 1e-8);
        assert!((f(cplx::cf(0.6421, 1.0)) - 0.37580900).abs() < 1e-8);
        let targets = [cplx::cf(1.6421, 0.0), cplx::cf(0.6421, 1.0), cplx::cf(0.6421, -1.0)];
        assert!(targets.iter().any(|t| (ck.min_location - t).norm() < 1e-2));
        for t in targets {
            assert!(ck.local_minima.iter().any(|(z, _)| (z - t).norm() < 1e-2), "{t}");
        }
        // On the segment the value rises towards the real axis.
        assert!(f(cplx::cf(0.6421, 0.5)) > f(cplx::cf(0.6421, 1.0)));
    }

    #[test]
    fn refinement_is_resolution_stable() {
        let a = check_cot1::<f64>(1000);
        let b = check_cot1::<f64>(4000);
        assert!((a.min_value - b.min_value).abs() < 1e-6);
        let a = check_cot_lemma::<f64>(500);
        let b = check_cot_lemma::<f64>(2000);
        assert!((a.min_value - b.min_value).abs() < 1e-6);
    }

    #[test]
    fn reported_location_reproduces_the_minimum() {
        let ck = check_cot1::<f64>(2000);
        let k = std::f64::consts::PI / 5.0;
        let v = (cplx::cot(&cplx::scale(&ck.min_location, &k)) * k).re;
        assert!((v - ck.min_value).abs() < 1e-12);
        assert!(ck.region.iter().any(|p| p.distance(&ck.min_location) < 1e-12));
    }

    #[test]
    fn vc_lower_at_the_operating_point() {
        let k = kernel();
        let cc = std::f64::consts::PI / 500.0;
        let bc = k.bound_constants(&249.0).unwrap();
        let ck = check_vc_lower(&cc, &249.0, &k, &bc.c5, 4000).unwrap();
        assert!(ck.pass && ck.min_value > ck.threshold);
        assert!(check_vc_lower(&(cc * 1.01), &249.0, &k, &bc.c5, 100).is_err());
        let at_c = vc_eval(&re(cc), &cc, &(cc * k.w0), &k).re;
        assert!((at_c - (cc * k.w0 * (1.0 / cc.tan() - 1.0 / cc) + k.w_at_0)).abs() < 1e-9);
    }

    #[test]
    fn re_w_identity_and_sign() {
        let k = kernel();
        assert!(rew_identity_deviation(&k, &20.0, 81) < 1e-10);
        let w = k.w_closed(&cplx::cf(0.0, 0.0)).re;
        assert!((w - k.w_at_0).abs() < 1e-12);
        assert!(k.w_closed(&cplx::cf(3.0, 4.0)).re >= -1e-12);
        assert!(check_rew_nonneg(&k, 2000).pass);
    }

    #[test]
    fn cot_linear_bounds() {
        let q = std::f64::consts::FRAC_PI_4;
        assert!(check_cot_linear(&0.348, &q, 2000).unwrap().pass);
        assert!(!check_cot_linear(&0.333, &q, 2000).unwrap().pass);
        let x = std::f64::consts::PI / 160.0;
        assert!(check_cot_linear(&0.3334, &x, 500).unwrap().pass);
        assert!(check_cot_linear(&0.348, &2.0, 10).is_err());
    }
}
