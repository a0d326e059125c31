//! The smoothing kernel: the θ-equation, `g`, `w = g∗g`, the closed form of
//! the Laplace transform `W`, the scaled transforms `F`, `F₀`, and the decay
//! constants `H(R)`, `c₄`, `c₅`.

use crate::cplx::{self, c, re, C};
use crate::error::{domain, Error, Result};
use crate::quad::GaussLegendre;
use crate::report::{Entry, Orientation};
use crate::roots::bisect;
use crate::scalar::Real;
use num_traits::{One, Zero};

/// Radius around the removable singularities of the closed form inside which
/// `W` is evaluated from a local Taylor expansion. Outside it the direct
/// formula loses about `ε/r²` to cancellation.
pub const POLE_RADIUS: f64 = 0.25;

/// Taylor order used inside [`POLE_RADIUS`]. The exponential factor has
/// coefficients `(2θ/tanθ)^k/k!` with `2θ/tanθ < 1`, so the truncation error
/// is below `0.25^41/41!`.
pub const TAYLOR_ORDER: usize = 40;

#[derive(Debug, Clone, PartialEq)]
pub struct MollifierKernel<T> {
    pub theta: T,
    pub tan_theta: T,
    /// θ/tanθ, the support radius of `g`.
    pub support_half: T,
    pub w0: T,
    pub w_at_0: T,
    pub w_at_minus1: T,
    pub c0: T,
    pub c1: T,
    pub c2: T,
    pub c3: T,
    /// Coefficients of `z` and `z³` for which the rational-exponential closed
    /// form equals the Laplace transform. The printed `c₁`, `c₃` do not; they
    /// are kept because `H(R)` is defined through them.
    pub odd1: T,
    pub odd3: T,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundConstants<T> {
    pub r: T,
    pub h_r: T,
    pub c4: T,
    pub c5: T,
}

/// Quadrature tolerance `10^-target`, capped by what the working precision
/// can deliver.
pub(crate) fn quad_tol<T: Real>(target: u32) -> T {
    let cap = T::digits().saturating_sub(3).max(4);
    T::tenth_pow(target.min(cap))
}

fn theta_residual<T: Real>(theta: &T, k: &T) -> T {
    theta.sin().sq() - k.clone() * (T::one() - theta.clone() * theta.cot())
}

fn theta_residual_derivative<T: Real>(theta: &T, k: &T) -> T {
    let s = theta.sin();
    (T::two() * theta.clone()).sin() + k.clone() * (theta.cot() - theta.clone() / s.sq())
}

/// The unique θ in (0, π/2) with `sin²θ = (b₁/b₀)(1 − θ cot θ)`.
pub fn solve_theta<T: Real>(b0: &T, b1: &T) -> Result<T> {
    if !(*b0 > T::zero() && *b1 > T::zero()) {
        return Err(domain("theta equation needs b0 > 0 and b1 > 0"));
    }
    let k = b1.clone() / b0.clone();
    let eps = T::tenth_pow(6);
    let hi = T::pi() * T::half() - eps.clone();
    let coarse = bisect(|th: &T| theta_residual(th, &k), eps, hi, &T::tenth_pow(8))
        .ok_or_else(|| Error::NoRoot(format!("theta residual keeps one sign for b1/b0 = {}", k.to_decimal(12))))?;
    let tol = T::epsilon() * T::from_i64(64);
    let mut th = coarse;
    for _ in 0..100 {
        let step = theta_residual(&th, &k) / theta_residual_derivative(&th, &k);
        th = th - step.clone();
        if step.abs() <= tol.clone() * th.abs() {
            break;
        }
    }
    Ok(th)
}

pub fn kernel_constants<T: Real>(theta: &T) -> MollifierKernel<T> {
    let (s, co) = (theta.sin(), theta.cos());
    let t = s.clone() / co.clone();
    let cot = co.clone() / s.clone();
    let sec2 = T::one() / co.sq();
    let th = theta.clone();
    let i = T::from_i64;

    let w0 = sec2.clone() * (th.clone() * t.clone() + i(3) * th.clone() * cot.clone() - i(3));
    let w_at_0 = T::two() * sec2 * (T::one() - th.clone() * cot.clone()).sq();
    let w_at_minus1 = T::two() * t.sq() + i(3) - i(3) * th.clone() * (t.clone() + cot);
    let c0 = T::one() / (s.clone() * co.powi(3));
    let t2 = t.sq();
    let t4 = t2.sq();
    let c1 = (T::one() + T::two() * (th.clone() * co.clone() - s.clone()) * co.clone()) * t4.clone();
    let c2 = t.powi(3) * s.sq();
    let c3 = (T::two() - i(5) * s.clone() * co.clone() + th.clone() + i(4) * th.clone() * co.sq()) * t2.clone();
    let kappa = s * co - th.clone();
    MollifierKernel {
        support_half: th.clone() / t.clone(),
        theta: th,
        tan_theta: t,
        w0,
        w_at_0,
        w_at_minus1,
        c0,
        c1,
        c2,
        c3,
        odd1: kappa.clone() * t4,
        odd3: kappa * t2,
    }
}

/// `g(u) = (cos(u tanθ) − cosθ) sec²θ` on `|u| ≤ θ/tanθ`, zero outside.
pub fn g_eval<T: Real>(u: &T, theta: &T) -> T {
    let t = theta.tan();
    if u.abs() > theta.clone() / t.clone() {
        return T::zero();
    }
    let co = theta.cos();
    ((u.clone() * t).cos() - co.clone()) / co.sq()
}

/// `w(u) = (g∗g)(u)` by adaptive Gauss–Legendre over the support overlap.
pub fn w_eval<T: Real>(u: &T, theta: &T) -> T {
    w_eval_tol(u, theta, &quad_tol(22))
}

pub fn w_eval_tol<T: Real>(u: &T, theta: &T, tol: &T) -> T {
    let s = theta.clone() / theta.tan();
    let u = u.abs();
    if u >= T::two() * s.clone() {
        return T::zero();
    }
    let rule = GaussLegendre::<T>::cached(24);
    let lo = u.clone() - s.clone();
    rule.integrate(|v: &T| g_eval(v, theta) * g_eval(&(u.clone() - v.clone()), theta), lo, s, tol).value
}

/// Direct quadrature of `∫₀^{2θ/tanθ} e^{−zu} w(u) du`.
pub fn laplace_oracle<T: Real>(z: &C<T>, theta: &T) -> C<T> {
    laplace_oracle_tol(z, theta, &quad_tol(17))
}

pub fn laplace_oracle_tol<T: Real>(z: &C<T>, theta: &T, tol: &T) -> C<T> {
    let s = theta.clone() / theta.tan();
    let width = T::two() * s;
    let inner = tol.clone() / T::from_i64(100);
    let rule = GaussLegendre::<T>::cached(24);
    let f = |u: &T| {
        let e = cplx::exp(&cplx::scale(&-z.clone(), u));
        cplx::scale(&e, &w_eval_tol(u, theta, &inner))
    };
    // Split where e^{-zu} oscillates so each panel sees a bounded phase.
    let pieces = (cplx::abs(z).to_f64() * width.to_f64() / 6.0).ceil().max(1.0) as i64;
    let step = width / T::from_i64(pieces);
    let share = tol.clone() / T::from_i64(pieces);
    let mut acc = C::<T>::zero();
    for p in 0..pieces {
        let a = step.clone() * T::from_i64(p);
        let b = step.clone() * T::from_i64(p + 1);
        acc = acc + rule.integrate(f, a, b, &share).value;
    }
    acc
}

fn binomial<T: Real>(n: usize, k: usize) -> T {
    let mut acc = T::one();
    for i in 0..k {
        acc = acc * T::from_i64((n - i) as i64) / T::from_i64((i + 1) as i64);
    }
    acc
}

/// Taylor coefficients in `h` of `p(z0 + h)` for real polynomial `p`.
fn shift<T: Real>(p: &[T], z0: &C<T>) -> Vec<C<T>> {
    let mut pow = vec![C::<T>::one()];
    for _ in 1..p.len() {
        let last = pow.last().cloned().unwrap();
        pow.push(last * z0.clone());
    }
    (0..p.len())
        .map(|k| {
            (k..p.len()).fold(C::<T>::zero(), |acc, j| {
                acc + cplx::scale(&pow[j - k], &(p[j].clone() * binomial::<T>(j, k)))
            })
        })
        .collect()
}

impl<T: Real> MollifierKernel<T> {
    pub fn from_coefficients(b0: &T, b1: &T) -> Result<Self> {
        Ok(kernel_constants(&solve_theta(b0, b1)?))
    }

    /// Numerator `P` of `W = P / D` with `D = z²(z²+tan²θ)²`, split into the
    /// polynomial part (real coefficients, ascending) and the factor of
    /// `(z+1)² e^{−2(θ/tanθ)z}`.
    fn numerator_polynomial(&self) -> [T; 6] {
        let t2 = self.tan_theta.sq();
        let c0c2 = self.c0.clone() * self.c2.clone();
        [
            -c0c2.clone(),
            t2.sq() * self.w0.clone() + self.c0.clone() * self.odd1.clone(),
            c0c2,
            T::two() * t2 * self.w0.clone() + self.c0.clone() * self.odd3.clone(),
            T::zero(),
            self.w0.clone(),
        ]
    }

    fn denominator_polynomial(&self) -> [T; 7] {
        let t2 = self.tan_theta.sq();
        [T::zero(), T::zero(), t2.sq(), T::zero(), T::two() * t2, T::zero(), T::one()]
    }

    /// Taylor coefficients `p_k`, `d_k` (k ≥ 2) of numerator and denominator
    /// about a removable singularity `z0`.
    fn taylor_about(&self, z0: &C<T>) -> (Vec<C<T>>, Vec<C<T>>) {
        let n = TAYLOR_ORDER + 2;
        let mut p = shift(&self.numerator_polynomial(), z0);
        p.resize(n + 1, C::<T>::zero());
        let d_full = shift(&self.denominator_polynomial(), z0);
        let two_s = T::two() * self.support_half.clone();
        let lead = cplx::scale(&cplx::exp(&cplx::scale(z0, &-two_s.clone())), &(self.c0.clone() * self.c2.clone()));
        let zp1 = z0.clone() + C::<T>::one();
        let a = zp1.clone() * zp1.clone();
        let b = cplx::scale(&zp1, &T::two());
        let mut alpha = vec![T::one()];
        for k in 1..=n {
            let prev = alpha[k - 1].clone();
            alpha.push(prev * -two_s.clone() / T::from_i64(k as i64));
        }
        for (k, pk) in p.iter_mut().enumerate() {
            let mut e = cplx::scale(&a, &alpha[k]);
            if k >= 1 {
                e = e + cplx::scale(&b, &alpha[k - 1]);
            }
            if k >= 2 {
                e = e + re(alpha[k - 2].clone());
            }
            *pk = pk.clone() + lead.clone() * e;
        }
        (p.split_off(2), d_full.into_iter().skip(2).collect())
    }

    fn eval_taylor(&self, z0: &C<T>, z: &C<T>) -> C<T> {
        let (p, d) = self.taylor_about(z0);
        let h = z.clone() - z0.clone();
        let horner = |cs: &[C<T>]| cs.iter().rev().fold(C::<T>::zero(), |acc, x| acc * h.clone() + x.clone());
        horner(&p) / horner(&d)
    }

    fn near_singularity(&self, z: &C<T>) -> Option<C<T>> {
        let r = T::from_f64(POLE_RADIUS);
        let t = self.tan_theta.clone();
        [C::<T>::zero(), c(T::zero(), t.clone()), c(T::zero(), -t)]
            .into_iter()
            .find(|z0| cplx::abs(&(z.clone() - z0.clone())) < r)
    }

    /// `W₀(z) = W(z) − w(0)/z` from the closed form (pole at 0 retained).
    pub fn w0_part(&self, z: &C<T>) -> C<T> {
        self.w0_form(z, &self.odd1, &self.odd3)
    }

    /// The closed form with the printed odd coefficients `c₁`, `c₃`.
    pub fn w0_part_printed(&self, z: &C<T>) -> C<T> {
        self.w0_form(z, &self.c1, &self.c3)
    }

    fn w0_form(&self, z: &C<T>, k1: &T, k3: &T) -> C<T> {
        let two_s = T::two() * self.support_half.clone();
        let z2 = z.clone() * z.clone();
        let zp1 = z.clone() + C::<T>::one();
        let e = cplx::exp(&cplx::scale(z, &-two_s));
        let even = zp1.clone() * zp1 * e + z2.clone() - C::<T>::one();
        let num = cplx::scale(&even, &self.c2) + cplx::scale(z, k1) + cplx::scale(&(z2.clone() * z.clone()), k3);
        let q = z2.clone() + re(self.tan_theta.sq());
        cplx::scale(&num, &self.c0) / (z2 * q.clone() * q)
    }

    /// `W(z) = w(0)/z + W₀(z)`, entire; removable singularities are handled
    /// by local expansion.
    pub fn w_closed(&self, z: &C<T>) -> C<T> {
        if let Some(z0) = self.near_singularity(z) {
            return self.eval_taylor(&z0, z);
        }
        re(self.w0.clone()) / z.clone() + self.w0_part(z)
    }

    pub fn w_real(&self, x: &T) -> T {
        self.w_closed(&re(x.clone())).re
    }

    /// `W′(0)` read off the expansion at the origin: `p₃ / d₂`.
    pub fn w_prime_at_zero(&self) -> T {
        let (p, d) = self.taylor_about(&C::<T>::zero());
        (p[1].clone() / d[0].clone()).re
    }

    /// Central difference `(W(x+h) − W(x−h)) / 2h`.
    pub fn w_prime_central(&self, x: &T, h: &T) -> T {
        (self.w_real(&(x.clone() + h.clone())) - self.w_real(&(x.clone() - h.clone()))) / (T::two() * h.clone())
    }

    /// `F(z) = W(z/λ − 1)`.
    pub fn f_eval(&self, z: &C<T>, lambda: &T) -> C<T> {
        let zp = cplx::scale(z, &(T::one() / lambda.clone())) - C::<T>::one();
        self.w_closed(&zp)
    }

    /// `F₀(z) = F(z) − f(0)/z` with `f(0) = λ w(0)`.
    pub fn f0_eval(&self, z: &C<T>, lambda: &T) -> C<T> {
        self.f_eval(z, lambda) - re(lambda.clone() * self.w0.clone()) / z.clone()
    }

    pub fn h_bound(&self, r: &T) -> Result<T> {
        let t = self.tan_theta.clone();
        if *r < T::from_i64(3) {
            return Err(domain("H(R) needs R >= 3"));
        }
        if *r <= t.clone() * (T::one() + T::tenth_pow(9)) {
            return Err(domain("H(R) needs R > tan(theta)"));
        }
        let r2 = r.sq();
        let e = (T::two() * self.support_half.clone()).exp();
        let inner = self.c2.clone() * (r.clone() + T::one()).sq() / r.powi(3) * (e + T::one()) + self.c1.clone() / r2.clone() + self.c3.clone();
        let den = (T::one() - t.sq() / r2).sq();
        Ok(self.c0.clone() * inner / den)
    }

    pub fn bound_constants(&self, r: &T) -> Result<BoundConstants<T>> {
        let h = self.h_bound(r)?;
        let c4 = h.clone() * (r.clone() + T::one()).sq() / (r.powi(3) * self.w0.clone()) + T::one() + T::one() / r.clone();
        let c5 = T::from_i64(4) / T::pi().sq() * (c4.clone() - T::one() / r.clone());
        Ok(BoundConstants { r: r.clone(), h_r: h, c4, c5 })
    }

    /// Boundary points of `{Re z ≥ −1, |z| ≥ R}` plus rays out to `100R`.
    fn decay_samples(&self, r: &T, samples: usize) -> Vec<C<T>> {
        let samples = samples.max(16);
        let n_arc = samples / 2;
        let n_line = samples / 4;
        let n_ray = samples - n_arc - n_line;
        let mut pts = Vec::with_capacity(samples);
        let phi_max = (-(T::one() / r.clone())).acos_real();
        for i in 0..n_arc {
            let phi = -phi_max.clone() + T::two() * phi_max.clone() * T::from_i64(i as i64) / T::from_i64(n_arc as i64 - 1);
            pts.push(c(r.clone() * phi.cos(), r.clone() * phi.sin()));
        }
        let y0 = (r.sq() - T::one()).sqrt();
        let span = (T::from_i64(100) * r.clone() / y0.clone()).ln();
        let half_line = n_line / 2;
        for i in 0..half_line {
            let y = y0.clone() * (span.clone() * T::from_i64(i as i64) / T::from_i64(half_line.max(2) as i64 - 1)).exp();
            pts.push(c(-T::one(), y.clone()));
            pts.push(c(-T::one(), -y));
        }
        let angles = [0.0, 0.25, -0.25, 0.5, -0.5];
        let per_ray = (n_ray / angles.len()).max(2);
        let rspan = T::from_i64(100).ln();
        for a in angles {
            let phi = T::pi() * T::from_f64(a);
            for i in 0..per_ray {
                let rr = r.clone() * (rspan.clone() * T::from_i64(i as i64) / T::from_i64(per_ray as i64 - 1)).exp();
                pts.push(c(rr.clone() * phi.cos(), rr * phi.sin()));
            }
        }
        pts
    }

    /// `max |W₀(z)| |z|³` over the sampled region and where it occurs.
    pub fn w0_decay_sup(&self, r: &T, samples: usize) -> (T, C<T>) {
        let mut best = (T::zero(), C::<T>::zero());
        for z in self.decay_samples(r, samples) {
            let v = cplx::abs(&self.w0_part(&z)) * cplx::abs(&z).powi(3);
            if v > best.0 {
                best = (v, z);
            }
        }
        best
    }
}

/// Portable `acos` for any real type, via `atan2`.
trait AcosReal {
    fn acos_real(&self) -> Self;
}

impl<T: Real> AcosReal for T {
    fn acos_real(&self) -> T {
        let s = (T::one() - self.sq()).sqrt();
        s.atan2(self)
    }
}

pub fn w_closed<T: Real>(z: &C<T>, k: &MollifierKernel<T>) -> C<T> {
    k.w_closed(z)
}

pub fn h_bound<T: Real>(r: &T, k: &MollifierKernel<T>) -> Result<T> {
    k.h_bound(r)
}

pub fn bound_constants<T: Real>(r: &T, k: &MollifierKernel<T>) -> Result<BoundConstants<T>> {
    k.bound_constants(r)
}

pub fn f_eval<T: Real>(z: &C<T>, lambda: &T, k: &MollifierKernel<T>) -> C<T> {
    k.f_eval(z, lambda)
}

pub fn f0_eval<T: Real>(z: &C<T>, lambda: &T, k: &MollifierKernel<T>) -> C<T> {
    k.f0_eval(z, lambda)
}

/// Samples `|W₀(z)||z|³ ≤ H(R)` on `{Re z ≥ −1, |z| ≥ R}`.
pub fn verify_w0_decay<T: Real>(r: &T, k: &MollifierKernel<T>, samples: usize) -> Result<Entry> {
    let h = k.h_bound(r)?;
    Ok(verify_w0_decay_against(r, k, samples, &h))
}

/// As [`verify_w0_decay`] with an arbitrary asserted bound.
pub fn verify_w0_decay_against<T: Real>(r: &T, k: &MollifierKernel<T>, samples: usize, bound: &T) -> Entry {
    let (sup, at) = k.w0_decay_sup(r, samples);
    Entry::exact(
        format!("mollifier.w0_decay.r{}", r.to_decimal(4)),
        "|W0(z)| |z|^3 <= H(R) on Re z >= -1, |z| >= R",
        &sup,
        Orientation::AtMost,
        bound,
    )
    .sampled()
    .with_note(format!("{} samples, worst at z = {} {:+}i", samples, at.re.to_decimal(8), at.im.to_f64()))
}

/// Samples `|F₀(z)| ≤ c₄ λ f(0) / |z|²` on `{Re z ≥ 0, |z| ≥ (R+1)λ}`.
pub fn verify_f0_decay<T: Real>(r: &T, lambda: &T, k: &MollifierKernel<T>, samples: usize) -> Result<Entry> {
    let bc = k.bound_constants(r)?;
    let rho = (r.clone() + T::one()) * lambda.clone();
    let f0 = lambda.clone() * k.w0.clone();
    let mut worst = T::zero();
    let n = samples.max(8);
    let radii = [T::one(), T::from_i64(3), T::from_i64(10), T::from_i64(100)];
    for factor in &radii {
        let rr = rho.clone() * factor.clone();
        for i in 0..n {
            let phi = T::pi() * (T::from_i64(i as i64) / T::from_i64(n as i64 - 1) - T::half());
            let z = c(rr.clone() * phi.cos(), rr.clone() * phi.sin());
            let lhs = cplx::abs(&k.f0_eval(&z, lambda));
            let ratio = lhs * cplx::abs(&z).sq() / (lambda.clone() * f0.clone());
            worst = worst.max(ratio);
        }
    }
    Ok(Entry::exact(
        format!("mollifier.f0_decay.r{}", r.to_decimal(4)),
        "|F0(z)| |z|^2 / (lambda f(0)) <= c4 on Re z >= 0, |z| >= (R+1) lambda",
        &worst,
        Orientation::AtMost,
        &bc.c4,
    )
    .sampled())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mp::Mp;
    use crate::scalar::Scalar;
    use crate::trig::coefficients;

    fn kernel_mp() -> MollifierKernel<Mp> {
        let c = coefficients(Mp::from_decimal("0.225"), Mp::from_decimal("0.9"));
        MollifierKernel::from_coefficients(c.b0(), c.b1()).unwrap()
    }

    fn kernel_f64() -> MollifierKernel<f64> {
        let c = coefficients(0.225f64, 0.9);
        MollifierKernel::from_coefficients(c.b0(), c.b1()).unwrap()
    }

    #[test]
    fn theta_matches_printed_digits() {
        let th = solve_theta(&Mp::from_decimal("10.01055"), &Mp::from_decimal("17.145")).unwrap();
        let want = Mp::from_decimal("1.152214629976363048877");
        assert!((th.clone() - want).abs() < Mp::tenth_pow(21));
        let k = Mp::from_decimal("17.145") / Mp::from_decimal("10.01055");
        assert!(theta_residual(&th, &k).abs() < Mp::tenth_pow(40));
    }

    #[test]
    fn theta_for_equal_coefficients_has_no_interior_root() {
        // sin²θ − (1 − θcotθ) = cosθ(θ/sinθ − cosθ) > 0 on (0, π/2).
        assert!(matches!(solve_theta(&1.0f64, &1.0), Err(Error::NoRoot(_))));
        assert!(solve_theta(&1.0f64, &0.0).is_err());
    }

    #[test]
    fn theta_agrees_with_a_sign_scan_oracle() {
        let k = 1.6f64;
        let mut prev = theta_residual(&1e-3, &k);
        let mut bracket = None;
        for i in 2..1571 {
            let x = i as f64 * 1e-3;
            let v = theta_residual(&x, &k);
            if (v > 0.0) != (prev > 0.0) {
                bracket = Some((x - 1e-3, x));
                break;
            }
            prev = v;
        }
        let (a, b) = bracket.unwrap();
        let oracle = bisect(|x: &f64| theta_residual(x, &k), a, b, &1e-15).unwrap();
        let th = solve_theta(&35.0f64, &56.0).unwrap();
        assert!((th - oracle).abs() < 1e-13);
    }

    #[test]
    fn kernel_constants_match_printed_digits() {
        let k = kernel_mp();
        let tol = Mp::tenth_pow(19);
        let cases = [
            (&k.w0, "6.82602968445295450905"),
            (&k.c0, "16.2983216223932350562"),
            (&k.c1, "16.2878103682166631825"),
            (&k.c2, "9.4813169452950521682"),
            (&k.c3, "10.3924962150333624895"),
        ];
        for (v, s) in cases {
            assert!((v.clone() - Mp::from_decimal(s)).abs() < tol, "{s} vs {v}");
        }
    }

    #[test]
    fn quarter_pi_collapses_w_minus_one() {
        let k = kernel_constants(&std::f64::consts::FRAC_PI_4);
        let want = 5.0 - 1.5 * std::f64::consts::PI;
        assert!((k.w_at_minus1 - want).abs() < 1e-14);
    }

    #[test]
    fn g_vanishes_at_the_support_edge() {
        let k = kernel_f64();
        assert!(g_eval(&k.support_half, &k.theta).abs() < 1e-15);
        assert_eq!(g_eval(&(k.support_half * 1.0001), &k.theta), 0.0);
        let g0 = g_eval(&0.0, &k.theta);
        assert!((g0 - (1.0 - k.theta.cos()) / k.theta.cos().powi(2)).abs() < 1e-15);
    }

    #[test]
    fn convolution_reproduces_w0() {
        let k = kernel_mp();
        let v = w_eval(&Mp::zero(), &k.theta);
        assert!((v - k.w0.clone()).abs() < Mp::tenth_pow(20));
        assert_eq!(w_eval(&(Mp::two() * k.support_half.clone()), &k.theta), Mp::zero());
    }

    #[test]
    fn laplace_oracle_reproduces_closed_values() {
        let k = kernel_f64();
        let w0 = laplace_oracle(&re(0.0f64), &k.theta);
        let wm1 = laplace_oracle(&re(-1.0f64), &k.theta);
        assert!((w0.re - k.w_at_0).abs() < 1e-12);
        assert!((wm1.re - k.w_at_minus1).abs() < 1e-12);
    }

    #[test]
    fn closed_form_matches_oracle_off_the_axis() {
        let k = kernel_f64();
        for z in [cplx::cf(1.7, 2.3), cplx::cf(-0.9, 0.4), cplx::cf(0.0, 10.0), cplx::cf(12.0, -30.0)] {
            let a = k.w_closed(&z);
            let b = laplace_oracle(&z, &k.theta);
            assert!((a - b).norm() < 1e-10, "{z}: {a} vs {b}");
        }
    }

    #[test]
    fn printed_odd_coefficients_do_not_give_the_transform() {
        let k = kernel_f64();
        let z = cplx::cf(1.7, 2.3);
        let printed = re(k.w0) / z + k.w0_part_printed(&z);
        let oracle = laplace_oracle(&z, &k.theta);
        assert!((printed - oracle).norm() > 1e-2);
    }

    #[test]
    fn expansion_is_continuous_at_the_switch_radius() {
        let k = kernel_mp();
        let t = k.tan_theta.clone();
        let r = Mp::from_f64(POLE_RADIUS);
        for z0 in [C::<Mp>::zero(), c(Mp::zero(), t.clone()), c(Mp::zero(), -t)] {
            let inside = z0.clone() + c(r.clone() * Mp::from_f64(0.999), Mp::zero());
            let outside = z0.clone() + c(r.clone() * Mp::from_f64(1.001), Mp::zero());
            let direct = |z: &C<Mp>| re(k.w0.clone()) / z.clone() + k.w0_part(z);
            let a = k.w_closed(&inside);
            let b = direct(&inside);
            assert!(cplx::abs(&(a - b)) < Mp::tenth_pow(40));
            let a = k.w_closed(&outside);
            let b = k.eval_taylor(&z0, &outside);
            assert!(cplx::abs(&(a - b)) < Mp::tenth_pow(40));
        }
    }

    #[test]
    fn closed_form_hits_the_identities() {
        let k = kernel_mp();
        let w0 = k.w_closed(&C::<Mp>::zero());
        let wm1 = k.w_closed(&re(-Mp::one()));
        assert!((w0.re - k.w_at_0.clone()).abs() < Mp::tenth_pow(50));
        assert!((wm1.re - k.w_at_minus1.clone()).abs() < Mp::tenth_pow(50));
    }

    #[test]
    fn derivative_at_zero_two_ways() {
        let k = kernel_mp();
        let series = k.w_prime_at_zero();
        let central = k.w_prime_central(&Mp::zero(), &Mp::tenth_pow(8));
        assert!((series.clone() - central).abs() < Mp::tenth_pow(14));
        assert!(series.abs() <= Mp::from_decimal("0.7475"));
    }

    #[test]
    fn h_and_c4_at_the_operating_radii() {
        let k = kernel_mp();
        let b = k.bound_constants(&Mp::from_i64(249)).unwrap();
        assert!(b.h_r <= Mp::from_decimal("171.8"));
        assert!(b.c4 <= Mp::from_decimal("1.106"));
        let id = Mp::pi().sq() * b.c5 - Mp::from_i64(4) * b.c4;
        assert!((id + Mp::from_i64(4) / Mp::from_i64(249)).abs() < Mp::tenth_pow(50));
        let b79 = k.bound_constants(&Mp::from_i64(79)).unwrap();
        assert!(b79.c4 <= Mp::from_decimal("1.35"));
        assert!(k.h_bound(&Mp::two()).is_err());
    }

    #[test]
    fn h_tends_to_c0_c3() {
        let k = kernel_f64();
        let h = k.h_bound(&1e6).unwrap();
        assert!((h - k.c0 * k.c3).abs() < 1e-3);
    }

    #[test]
    fn decay_bound_holds_and_the_failure_path_fires() {
        let k = kernel_f64();
        let e = verify_w0_decay(&249.0, &k, 2000).unwrap();
        assert!(e.passed(), "{e:?}");
        let z = re(249.0);
        assert!(cplx::abs(&k.w0_part(&z)) * 249f64.powi(3) <= k.h_bound(&249.0).unwrap());
        let (sup, _) = k.w0_decay_sup(&249.0, 2000);
        assert!(!verify_w0_decay_against(&249.0, &k, 2000, &(0.9 * sup)).passed());
    }

    #[test]
    fn f_at_special_points() {
        let k = kernel_f64();
        let lam = 0.01;
        assert!((k.f_eval(&re(lam), &lam).re - k.w_at_0).abs() < 1e-12);
        assert!((k.f_eval(&re(0.0), &lam).re - k.w_at_minus1).abs() < 1e-12);
        assert!(verify_f0_decay(&249.0, &lam, &k, 400).unwrap().passed());
    }
}
