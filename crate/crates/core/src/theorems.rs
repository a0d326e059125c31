//! Assembly of the zero-free-region constants: the zero inequality, the
//! Vinogradov–Korobov pipeline, the classical pipeline beyond the verified
//! height, and tabulated region curves.
//!
//! Heights are carried as `log t` ([`Height`]) because the operating point
//! `t = e^{54550}` is far outside any fixed exponent range.

use crate::error::{domain, Error, Result};
use crate::mollifier::MollifierKernel;
use crate::report::{Entry, Orientation};
use crate::roots::bisect;
use crate::scalar::{rational_to_real, Real, Scalar};
use crate::trig::{coefficients, main_constant, TrigCoefficients};
use crate::zetatools::{j_of_log, lambda_sum, zeta_real};
use num_rational::BigRational;
use std::fmt::Write as _;

fn n<T: Real>(s: &str) -> T {
    T::from_decimal(s)
}

fn third<T: Real>() -> T {
    T::ratio(1, 3)
}

fn two_thirds<T: Real>() -> T {
    T::ratio(2, 3)
}

/// A height `t > 1`, stored as `log t`.
#[derive(Debug, Clone, PartialEq)]
pub struct Height<T> {
    log_t: T,
}

impl<T: Real> Height<T> {
    pub fn from_log(log_t: T) -> Result<Self> {
        if !(log_t > T::zero() && log_t.is_finite()) {
            return Err(domain("height needs 0 < log t < infinity"));
        }
        Ok(Height { log_t })
    }

    pub fn from_t(t: &T) -> Result<Self> {
        if !(*t > T::one()) {
            return Err(domain("height needs t > 1"));
        }
        Self::from_log(t.ln())
    }

    pub fn log_t(&self) -> &T {
        &self.log_t
    }

    pub fn loglog_t(&self) -> T {
        self.log_t.ln()
    }

    /// `L₁ = log(4t+1)`.
    pub fn l1(&self) -> T {
        let four = T::from_i64(4);
        // Beyond this height 1/(4t) is below the working precision of L₁.
        let cutoff = T::from_f64(2.4 * T::digits() as f64 + 10.0);
        if self.log_t > cutoff {
            self.log_t.clone() + four.ln()
        } else {
            (four * self.log_t.exp() + T::one()).ln()
        }
    }

    /// `L₂ = log log(4t+1)`.
    pub fn l2(&self) -> T {
        self.l1().ln()
    }

    /// The height `4t+1`.
    pub fn quadrupled(&self) -> Height<T> {
        Height { log_t: self.l1() }
    }
}

/// `|ζ(σ+it)| ≤ A|t|^{B(1−σ)^{3/2}} log^{2/3}|t|` for `|t| ≥ 3`, `½ ≤ σ ≤ 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct RichertBound<T> {
    pub a: T,
    pub b: T,
}

impl<T: Real> RichertBound<T> {
    pub fn new(a: T, b: T) -> Result<Self> {
        if !(a > T::one()) {
            return Err(domain("Richert bound needs A > 1"));
        }
        if !(b > T::zero()) {
            return Err(domain("Richert bound needs B > 0"));
        }
        Ok(RichertBound { a, b })
    }

    /// `A = 76.2`, `B = 4.45`.
    pub fn standard() -> Self {
        RichertBound { a: n("76.2"), b: n("4.45") }
    }

    /// The zero inequality needs `A > 6.5`.
    pub fn require_zero_inequality_range(&self) -> Result<()> {
        if !(self.a > n("6.5")) {
            return Err(domain("zero inequality needs A > 6.5"));
        }
        Ok(())
    }
}

/// The numbers appearing in the zero inequality
///
/// `(1/λ)[N − S((1−β)/λ − 1)] ≤ P(1−β)/η² + (1/2η)[Q(⅔L₂ + Bη^{3/2}L₁ + log A) + log ζ(1+η)]
///  + Rλ[(U + V·B(η^{−½}−2))L₁ + 4L₂ + ((log(A/η) + ⅔L₂)/K + C)/η²]`.
#[derive(Debug, Clone, PartialEq)]
pub struct LemmaConstants<T> {
    /// `N`, at most `cos²θ`.
    pub numerator: T,
    /// `S`, at least `|W′(0)| b₁/(b₀ w(0))`.
    pub slope: T,
    /// `P`, at least `κ (π²/4) b₁/b₀` with `κ` the cotangent constant on `(0, π/4]`.
    pub beta_eta: T,
    /// `Q = b₅/b₀`.
    pub zeta_weight: T,
    /// `R`, at least `c₄(249) b₅/b₀`.
    pub lambda_weight: T,
    /// `U`, at least `6.132 + ⅓`.
    pub l1_base: T,
    pub b_weight: T,
    pub l2_weight: T,
    pub count_denominator: T,
    pub count_shift: T,
}

impl<T: Real> LemmaConstants<T> {
    pub fn printed() -> Self {
        LemmaConstants {
            numerator: n("0.16521"),
            slope: n("0.1876"),
            beta_eta: n("1.471"),
            zeta_weight: T::from_i64(666550) / T::from_i64(200211),
            lambda_weight: n("3.683"),
            l1_base: n("6.466"),
            b_weight: n("5.392"),
            l2_weight: T::from_i64(4),
            count_denominator: n("1.879"),
            count_shift: n("0.224"),
        }
    }

    /// The same constants recomputed from the kernel, the coefficients and
    /// `c₄(249)`, before any rounding.
    pub fn derived(k: &MollifierKernel<T>, c: &TrigCoefficients<T>) -> Result<Self> {
        let b0 = c.b0().clone();
        let b1_b0 = c.b1().clone() / b0.clone();
        let b5_b0 = c.b5.clone() / b0;
        let c4 = k.bound_constants(&T::from_i64(249))?.c4;
        let kappa = cot_linear_constant(&(T::pi() / T::from_i64(4)));
        Ok(LemmaConstants {
            numerator: k.theta.cos().sq(),
            slope: k.w_prime_at_zero().abs() * b1_b0.clone() / k.w0.clone(),
            beta_eta: kappa * T::pi().sq() / T::from_i64(4) * b1_b0,
            zeta_weight: b5_b0.clone(),
            lambda_weight: c4 * b5_b0,
            l1_base: n::<T>("6.132") + third(),
            ..Self::printed()
        })
    }
}

/// Smallest `κ` with `cot x − 1/x ≥ −κx` on `(0, x_max]`. The ratio
/// `(1/x − cot x)/x` increases on `(0, π)`, so this is its value at `x_max`.
pub fn cot_linear_constant<T: Real>(x_max: &T) -> T {
    (T::one() / x_max.clone() - x_max.cot()) / x_max.clone()
}

pub fn log_zeta_one_plus<T: Real>(eta: &T) -> Result<T> {
    if !(*eta > T::zero()) {
        return Err(domain("log zeta(1+eta) needs eta > 0"));
    }
    Ok(zeta_real(&(T::one() + eta.clone()), T::digits())?.ln())
}

/// Both sides of the zero inequality; `rhs` holds its three lines.
#[derive(Debug, Clone, PartialEq)]
pub struct LemmaSides<T> {
    pub lhs: T,
    pub rhs: [T; 3],
}

impl<T: Real> LemmaSides<T> {
    pub fn rhs_total(&self) -> T {
        self.rhs[0].clone() + self.rhs[1].clone() + self.rhs[2].clone()
    }

    pub fn gap(&self) -> T {
        self.rhs_total() - self.lhs.clone()
    }
}

fn zero_inequality_preconditions<T: Real>(
    h: &Height<T>,
    one_minus_beta: &T,
    lambda: &T,
    eta: &T,
    rb: &RichertBound<T>,
) -> Result<()> {
    if *h.log_t() < T::from_i64(10_000).ln() {
        return Err(domain("zero inequality needs t >= 10000"));
    }
    if !(*one_minus_beta > T::zero()) {
        return Err(domain("zero inequality needs beta < 1"));
    }
    if *one_minus_beta > eta.clone() * T::half() {
        return Err(domain("zero inequality needs 1-beta <= eta/2"));
    }
    if !(*lambda > T::zero()) {
        return Err(domain("zero inequality needs lambda > 0"));
    }
    if lambda > one_minus_beta {
        return Err(domain("zero inequality needs lambda <= 1-beta"));
    }
    if *lambda > eta.clone() / T::from_i64(250) {
        return Err(domain("zero inequality needs lambda <= eta/250"));
    }
    rb.require_zero_inequality_range()
}

/// Evaluates the zero inequality with `log ζ(1+η)` supplied by the caller.
pub fn zero_inequality_sides<T: Real>(
    h: &Height<T>,
    one_minus_beta: &T,
    lambda: &T,
    eta: &T,
    rb: &RichertBound<T>,
    k: &LemmaConstants<T>,
    log_zeta: &T,
) -> Result<LemmaSides<T>> {
    zero_inequality_preconditions(h, one_minus_beta, lambda, eta, rb)?;
    let (l1, l2) = (h.l1(), h.l2());
    let ratio = one_minus_beta.clone() / lambda.clone() - T::one();
    let lhs = (k.numerator.clone() - k.slope.clone() * ratio) / lambda.clone();
    let line1 = k.beta_eta.clone() * one_minus_beta.clone() / eta.sq();
    let inner = two_thirds::<T>() * l2.clone() + rb.b.clone() * eta.powf(&T::ratio(3, 2)) * l1.clone() + rb.a.ln();
    let line2 = (k.zeta_weight.clone() * inner + log_zeta.clone()) / (T::two() * eta.clone());
    let linear = (k.l1_base.clone() + k.b_weight.clone() * rb.b.clone() * (T::one() / eta.sqrt() - T::two())) * l1;
    let count = ((rb.a.clone() / eta.clone()).ln() + two_thirds::<T>() * l2.clone()) / k.count_denominator.clone() + k.count_shift.clone();
    let line3 = k.lambda_weight.clone() * lambda.clone() * (linear + k.l2_weight.clone() * l2 + count / eta.sq());
    Ok(LemmaSides { lhs, rhs: [line1, line2, line3] })
}

/// Right side minus left side of the zero inequality at the zero `β+it`
/// (given through `1−β`). A negative gap means such a zero cannot exist.
pub fn zero_inequality_gap<T: Real>(
    h: &Height<T>,
    one_minus_beta: &T,
    lambda: &T,
    eta: &T,
    rb: &RichertBound<T>,
    k: &LemmaConstants<T>,
) -> Result<T> {
    zero_inequality_preconditions(h, one_minus_beta, lambda, eta, rb)?;
    let lz = log_zeta_one_plus(eta)?;
    Ok(zero_inequality_sides(h, one_minus_beta, lambda, eta, rb, k, &lz)?.gap())
}

/// `4(1 + b₀/b₅)/3` for `(a₁, a₂) = (0.225, 0.9)`, exactly.
pub fn e_rational() -> BigRational {
    let c = coefficients(BigRational::from_decimal("0.225"), BigRational::from_decimal("0.9"));
    let one = BigRational::from_i64(1);
    (one + c.b0().clone() / c.b5.clone()) * BigRational::ratio(4, 3)
}

/// `E = (4(1 + b₀/b₅)/3)^{2/3}`.
pub fn e_constant<T: Real>() -> T {
    rational_to_real::<T>(&e_rational()).powf(&two_thirds())
}

/// `η = E B^{−2/3} (L₂/L₁)^{2/3}`.
pub fn eta_choice<T: Real>(h: &Height<T>, b: &T) -> T {
    e_constant::<T>() * (h.l2() / (b.clone() * h.l1())).powf(&two_thirds())
}

/// `λ = M L₁^{−2/3} L₂^{−1/3} B^{−2/3}`.
pub fn lambda_choice<T: Real>(h: &Height<T>, b: &T, m: &T) -> T {
    m.clone() / ((b.clone() * h.l1()).powf(&two_thirds()) * h.l2().cbrt())
}

/// `1 − β` for a zero with `(1−β)(B log t)^{2/3}(log log t)^{1/3} = M`.
pub fn one_minus_beta_at<T: Real>(h: &Height<T>, b: &T, m: &T) -> T {
    m.clone() / ((b.clone() * h.log_t().clone()).powf(&two_thirds()) * h.loglog_t().cbrt())
}

fn x_parts<T: Real>(rb: &RichertBound<T>) -> (T, T) {
    let base = n::<T>("1.1585") * rb.a.ln() + n("0.859") + n::<T>("0.2327") * rb.b.ln();
    let kappa = n::<T>("1.313") / rb.b.powf(&T::ratio(4, 3)) - n::<T>("2.188") / rb.b.cbrt();
    (base, kappa)
}

/// `X(t) = 1.1585 log A + 0.859 + 0.2327 log(B/log log t)
///  + (1.313 B^{−4/3} − 2.188 B^{−1/3})(log log t / log t)^{1/3}`.
pub fn x_t<T: Real>(h: &Height<T>, rb: &RichertBound<T>) -> T {
    let (base, kappa) = x_parts(rb);
    let u = h.loglog_t();
    base - n::<T>("0.2327") * u.ln() + kappa * (u / h.log_t().clone()).cbrt()
}

/// `6.22660 − 0.2327 log log log t − 1.1508 (log log t / log t)^{1/3}`, the
/// simplified form for `A = 76.2`, `B = 4.45`.
pub fn x_t_intermediate<T: Real>(h: &Height<T>) -> T {
    let u = h.loglog_t();
    n::<T>("6.22660") - n::<T>("0.2327") * u.ln() - n::<T>("1.1508") * (u / h.log_t().clone()).cbrt()
}

/// `X/log log t` against `u = log log t`, with `(u e^{−u})^{1/3}` in place
/// of `(log log t/log t)^{1/3}`.
fn x_ratio_of_u<T: Real>(u: &T, base: &T, kappa: &T) -> T {
    let phi = u.cbrt() * (-u.clone() / T::from_i64(3)).exp();
    (base.clone() - n::<T>("0.2327") * u.ln() + kappa.clone() * phi) / u.clone()
}

/// Sign of `d/du (X/u)`: `u²` times the derivative.
fn x_ratio_slope<T: Real>(u: &T, base: &T, kappa: &T) -> T {
    let c = n::<T>("0.2327");
    let phi = u.cbrt() * (-u.clone() / T::from_i64(3)).exp();
    c.clone() * u.ln() - c - base.clone() - kappa.clone() * phi * (two_thirds::<T>() + u.clone() / T::from_i64(3))
}

/// Past `u = log log t = 450` the `(u e^{−u})^{1/3}` term is below `10⁻⁶⁵` and
/// `X/u` has no further interior maximum.
const X_SCAN_END: i64 = 450;
const X_SCAN_POINTS: usize = 3000;

#[derive(Debug, Clone, PartialEq)]
pub struct RatioMax<T> {
    pub value: T,
    /// `log log t` of the maximiser; `None` when the supremum is the limit 0
    /// as `t → ∞`.
    pub at_loglog: Option<T>,
}

/// `sup_{t ≥ T₀} X(t)/log log t`: the value at `T₀`, every interior
/// stationary maximum of the closed form, and the limit 0 at infinity.
pub fn x_ratio_max<T: Real>(h0: &Height<T>, rb: &RichertBound<T>) -> RatioMax<T> {
    let (base, kappa) = x_parts(rb);
    let u0 = h0.loglog_t();
    let mut best = RatioMax { value: x_t(h0, rb) / u0.clone(), at_loglog: Some(u0.clone()) };
    let end = T::from_i64(X_SCAN_END);
    if u0 < end {
        let step = (end - u0.clone()) / T::from_i64(X_SCAN_POINTS as i64);
        let slope = |u: &T| x_ratio_slope(u, &base, &kappa);
        let tol = T::epsilon().sqrt() * u0.clone();
        let mut a = u0.clone();
        let mut sa = slope(&a);
        for i in 1..=X_SCAN_POINTS {
            let b = u0.clone() + step.clone() * T::from_i64(i as i64);
            let sb = slope(&b);
            if sa > T::zero() && !(sb > T::zero()) {
                if let Some(u) = bisect(slope, a.clone(), b.clone(), &tol) {
                    let v = x_ratio_of_u(&u, &base, &kappa);
                    if v > best.value {
                        best = RatioMax { value: v, at_loglog: Some(u) };
                    }
                }
            }
            a = b;
            sa = sb;
        }
    }
    if best.value < T::zero() {
        best = RatioMax { value: T::zero(), at_loglog: None };
    }
    best
}

pub fn theorem2_hypotheses<T: Real>(h0: &Height<T>, rb: &RichertBound<T>) -> Result<()> {
    if *h0.log_t() < T::from_i64(30_000) {
        return Err(domain("M1 needs T0 >= e^30000"));
    }
    if h0.log_t().clone() / h0.loglog_t() < T::from_i64(1740) / rb.b.clone() {
        return Err(domain("M1 needs log T0 / loglog T0 >= 1740/B"));
    }
    Ok(())
}

fn m1_from_ratio<T: Real>(ratio: &T) -> T {
    (n::<T>("0.1652") / (n::<T>("2.9997") + ratio.clone())).min(n("0.05507"))
}

/// `M₁ = min(0.05507, 0.1652/(2.9997 + max_{t≥T₀} X(t)/log log t))`.
pub fn m1<T: Real>(h0: &Height<T>, rb: &RichertBound<T>) -> Result<T> {
    theorem2_hypotheses(h0, rb)?;
    Ok(m1_from_ratio(&x_ratio_max(h0, rb).value))
}

/// `M₁` with the maximum replaced by the constant `5.6008/log log T₀`.
pub fn m1_displayed<T: Real>(h0: &Height<T>) -> T {
    m1_from_ratio(&(n::<T>("5.6008") / h0.loglog_t()))
}

/// Smallest `log log T₀` from which `M₁ = 0.05507`.
pub fn m1_saturation_loglog<T: Real>(rb: &RichertBound<T>) -> Result<T> {
    let target = n::<T>("0.1652") / n::<T>("0.05507") - n::<T>("2.9997");
    let sup_at = |u: &T| -> Result<T> {
        let log_t = u.exp();
        if !log_t.is_finite() {
            return Err(domain("M1 saturation height is beyond the scalar's exponent range"));
        }
        Ok(x_ratio_max(&Height::from_log(log_t)?, rb).value)
    };
    let mut lo = T::from_i64(30_000).ln();
    if sup_at(&lo)? <= target {
        return Ok(lo);
    }
    let mut hi = lo.clone() * T::two();
    while sup_at(&hi)? > target {
        lo = hi.clone();
        hi = hi * T::two();
        if hi > T::from_f64(1e18) {
            return Err(Error::NoRoot("M1 never reaches 0.05507".into()));
        }
    }
    let tol = T::epsilon().sqrt() * hi.clone();
    while hi.clone() - lo.clone() > tol {
        let mid = (lo.clone() + hi.clone()) * T::half();
        if sup_at(&mid)? > target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(hi)
}

/// `0.05507 B^{−2/3}`.
pub fn theorem1_constant<T: Real>(b: &T) -> T {
    n::<T>("0.05507") / b.powf(&two_thirds())
}

/// `M₁ B^{−2/3}`, the constant of the region valid for `t ≥ T₀`.
pub fn vk_constant<T: Real>(h0: &Height<T>, rb: &RichertBound<T>) -> Result<T> {
    Ok(m1(h0, rb)? / rb.b.powf(&two_thirds()))
}

/// The `M` at which the zero inequality becomes an equality for a zero with
/// `(1−β)(B log t)^{2/3}(log log t)^{1/3} = M` and `λ` from the same `M`.
/// Zeros with smaller `M` violate the inequality. When the inequality fails
/// over the whole admissible range `λ ≤ η/250`, the upper end of that range
/// is returned as a lower bound for the root.
pub fn zero_inequality_root<T: Real>(h: &Height<T>, rb: &RichertBound<T>, k: &LemmaConstants<T>) -> Result<T> {
    let eta = eta_choice(h, &rb.b);
    let lz = log_zeta_one_plus(&eta)?;
    // λ/η = M/(E L₂) exactly.
    let hi = e_constant::<T>() * h.l2() / T::from_i64(250) * (T::one() - T::tenth_pow(12));
    let lo = hi.clone() * T::tenth_pow(6);
    let gap = |m: &T| -> Result<T> {
        let lambda = lambda_choice(h, &rb.b, m);
        let omb = one_minus_beta_at(h, &rb.b, m);
        Ok(zero_inequality_sides(h, &omb, &lambda, &eta, rb, k, &lz)?.gap())
    };
    if gap(&hi)? < T::zero() {
        return Ok(hi);
    }
    if gap(&lo)? > T::zero() {
        return Err(Error::NoRoot("zero inequality holds for every admissible M".into()));
    }
    let tol = hi.clone() * T::tenth_pow((T::digits() / 2).max(8));
    bisect(|m: &T| gap(m).unwrap_or_else(|_| T::zero()), lo, hi, &tol).ok_or_else(|| Error::NoRoot("zero inequality root".into()))
}

/// The verified height `5.45·10⁸` below which every zero is on the line.
pub fn classical_t0<T: Real>() -> T {
    T::from_i64(545_000_000)
}

fn require_classical<T: Real>(h: &Height<T>) -> Result<()> {
    if *h.log_t() < classical_t0::<T>().ln() {
        return Err(domain("classical region needs t >= 5.45e8"));
    }
    Ok(())
}

/// `c₆ = 1/(J(t) + 1.15)`.
pub fn c6<T: Real>(h: &Height<T>) -> T {
    T::one() / (j_of_log(h.log_t()) + n("1.15"))
}

/// `(0.04962 − 0.0196 c₆)/(J(t) + 0.685 + 0.155 log log t)`.
pub fn classical_region<T: Real>(h: &Height<T>) -> Result<T> {
    require_classical(h)?;
    let j = j_of_log(h.log_t());
    Ok((n::<T>("0.04962") - n::<T>("0.0196") * c6(h)) / (j + n("0.685") + n::<T>("0.155") * h.loglog_t()))
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClassicalM<T> {
    /// `(0.04962 − 0.0196c₆)c₆`.
    pub one_minus_beta_cap: T,
    /// `0.25562 + (1−β)[1.696 + 1.35(3.5691L₁ + 5.316L₂ + 18.475)]`.
    pub first_line: T,
    /// `0.25562 + (1−β)[33.812 + 4.8183 log t + 7.1766 log log t]`.
    pub second_line: T,
    /// `0.685 + 0.155 log log t`.
    pub envelope: T,
    /// `J(4t+1) − J(t)`.
    pub j_increment: T,
}

/// The self-consistency bound on `M` in the classical argument, at the cap
/// `1−β ≤ (0.04962 − 0.0196c₆)c₆`.
pub fn clas_m_fixed_point<T: Real>(h: &Height<T>) -> Result<ClassicalM<T>> {
    require_classical(h)?;
    let c = c6(h);
    let cap = (n::<T>("0.04962") - n::<T>("0.0196") * c.clone()) * c;
    let inner = n::<T>("3.5691") * h.l1() + n::<T>("5.316") * h.l2() + n("18.475");
    let first_line = n::<T>("0.25562") + cap.clone() * (n::<T>("1.696") + n::<T>("1.35") * inner);
    let ll = h.loglog_t();
    let second = n::<T>("33.812") + n::<T>("4.8183") * h.log_t().clone() + n::<T>("7.1766") * ll.clone();
    let second_line = n::<T>("0.25562") + cap.clone() * second;
    let envelope = n::<T>("0.685") + n::<T>("0.155") * ll;
    let j_increment = j_of_log(&h.l1()) - j_of_log(h.log_t());
    Ok(ClassicalM { one_minus_beta_cap: cap, first_line, second_line, envelope, j_increment })
}

/// `c₅ = 4/π² + π(1−β)H(79)/(w(0)(π/2 − π(1−β))³)`, from the lower bound
/// for `Re V_c` with `c = π(1−β)`.
pub fn c5_classical<T: Real>(one_minus_beta: &T, k: &MollifierKernel<T>) -> Result<T> {
    let c = T::pi() * one_minus_beta.clone();
    if !(c > T::zero() && c < T::pi() * T::half()) {
        return Err(domain("classical c5 needs 0 < 1-beta < 1/2"));
    }
    let h79 = k.h_bound(&T::from_i64(79))?;
    Ok(T::from_i64(4) / T::pi().sq() + c.clone() * h79 / (k.w0.clone() * (T::pi() * T::half() - c).powi(3)))
}

/// `c₄ = H(79)(R+1)²/(R³w(0)) + 1 + 1/R`.
pub fn c4_classical<T: Real>(r: &T, k: &MollifierKernel<T>) -> Result<T> {
    let h79 = k.h_bound(&T::from_i64(79))?;
    Ok(h79 * (r.clone() + T::one()).sq() / (r.powi(3) * k.w0.clone()) + T::one() + T::one() / r.clone())
}

/// `points` values of `log t`, equally spaced in `log t` (so log-spaced in
/// `t`) from `lo` to `hi`.
pub fn log_grid<T: Real>(lo: &T, hi: &T, points: usize) -> Vec<T> {
    if points <= 1 || lo == hi {
        return vec![lo.clone()];
    }
    let step = (hi.clone() - lo.clone()) / T::from_i64(points as i64 - 1);
    (0..points).map(|i| if i + 1 == points { hi.clone() } else { lo.clone() + step.clone() * T::from_i64(i as i64) }).collect()
}

/// `points` values of `log t` in geometric progression from `lo` to `hi`.
pub fn geometric_grid<T: Real>(lo: &T, hi: &T, points: usize) -> Vec<T> {
    if points <= 1 || lo == hi {
        return vec![lo.clone()];
    }
    let r = (hi.clone() / lo.clone()).ln() / T::from_i64(points as i64 - 1);
    (0..points).map(|i| if i + 1 == points { hi.clone() } else { lo.clone() * (r.clone() * T::from_i64(i as i64)).exp() }).collect()
}

fn heights<T: Real>(logs: &[T]) -> Result<Vec<Height<T>>> {
    logs.iter().map(|l| Height::from_log(l.clone())).collect()
}

/// Evaluates `lhs ≤ rhs` at each height and returns the pair with the
/// smallest margin.
fn worst_over<T: Real>(grid: &[Height<T>], mut f: impl FnMut(&Height<T>) -> Result<(T, T)>) -> Result<(T, T, T)> {
    let mut worst: Option<(T, T, T)> = None;
    for h in grid {
        let (l, r) = f(h)?;
        let m = r.clone() - l.clone();
        if worst.as_ref().map_or(true, |(wl, wr, _)| m < wr.clone() - wl.clone()) {
            worst = Some((l, r, h.log_t().clone()));
        }
    }
    worst.ok_or_else(|| domain("empty height grid"))
}

fn grid_entry<T: Real>(name: &str, statement: &str, grid: &[Height<T>], f: impl FnMut(&Height<T>) -> Result<(T, T)>) -> Result<Entry> {
    let (l, r, at) = worst_over(grid, f)?;
    Ok(Entry::exact(name, statement, &l, Orientation::AtMost, &r)
        .sampled()
        .with_note(format!("worst of {} heights at log t = {}", grid.len(), at.to_decimal(8))))
}

fn at_most<T: Real>(name: &str, statement: &str, computed: &T, bound: &T) -> Entry {
    Entry::exact(name, statement, computed, Orientation::AtMost, bound)
}

fn at_least<T: Real>(name: &str, statement: &str, computed: &T, bound: &T) -> Entry {
    Entry::exact(name, statement, computed, Orientation::AtLeast, bound)
}

/// Printed zero-inequality constants against their unrounded sources.
pub fn lemma_constant_checks<T: Real>(k: &MollifierKernel<T>, c: &TrigCoefficients<T>) -> Result<Vec<Entry>> {
    let p = LemmaConstants::<T>::printed();
    let d = LemmaConstants::derived(k, c)?;
    let exact = coefficients(BigRational::from_decimal("0.225"), BigRational::from_decimal("0.9"));
    let ratio = exact.b5.clone() / exact.b0().clone();
    let printed_ratio = BigRational::ratio(666550, 200211);
    let ratio_err = rational_to_real::<T>(&(ratio - printed_ratio)).abs();
    let b5_b0 = c.b5.clone() / c.b0().clone();
    let six_half = n::<T>("6.5");
    let negative = n::<T>("1.8") + n::<T>("1.8") / b5_b0 + n::<T>("13.5") - n::<T>("8.5") * six_half.ln();
    Ok(vec![
        at_most("lemma.numerator", "0.16521 <= cos^2 theta", &p.numerator, &d.numerator),
        at_least("lemma.slope", "0.1876 >= |W'(0)| b1/(b0 w(0))", &p.slope, &d.slope),
        at_least("lemma.w_prime", "0.7475 >= |W'(0)|", &n::<T>("0.7475"), &k.w_prime_at_zero().abs()),
        at_least("lemma.cot_quarter", "0.348 >= (1/x - cot x)/x at x = pi/4", &n::<T>("0.348"), &cot_linear_constant(&(T::pi() / T::from_i64(4)))),
        at_least("lemma.beta_eta", "1.471 >= 0.348 (pi^2/4) b1/b0", &p.beta_eta, &(n::<T>("0.348") * T::pi().sq() / T::from_i64(4) * c.b1().clone() / c.b0().clone())),
        at_most("lemma.zeta_weight", "|b5/b0 - 666550/200211| = 0 in rationals", &ratio_err, &T::zero()),
        at_least("lemma.lambda_weight", "3.683 >= c4(249) b5/b0", &p.lambda_weight, &d.lambda_weight),
        at_least("lemma.l1_base", "6.466 >= 6.132 + 1/3", &p.l1_base, &d.l1_base),
        at_most("lemma.constants_negative", "1.8 + 1.8 b0/b5 + 13.5 - 8.5 log 6.5 <= 0", &negative, &T::zero()),
    ])
}

/// Every displayed step of the Vinogradov–Korobov assembly at `T₀`, plus the
/// zero inequality itself at the worst admissible `M`, on heights from `T₀`
/// upward.
pub fn theorem2_pipeline<T: Real>(
    h0: &Height<T>,
    rb: &RichertBound<T>,
    c: &TrigCoefficients<T>,
) -> Result<Vec<Entry>> {
    theorem2_hypotheses(h0, rb)?;
    rb.require_zero_inequality_range()?;
    let i = T::from_i64;
    let (a, b) = (rb.a.clone(), rb.b.clone());
    let e = e_constant::<T>();
    let log_t0 = h0.log_t().clone();
    let l2_0 = h0.l2();
    let m_worst = n::<T>("0.05507");
    let b5_b0 = c.b5.clone() / c.b0().clone();
    let printed = LemmaConstants::<T>::printed();
    let hi = (log_t0.clone() * i(50)).max(T::from_f64(1e6));
    let mut logs = geometric_grid(&log_t0, &hi, 16);
    let ratio = x_ratio_max(h0, rb);
    if let Some(u) = &ratio.at_loglog {
        logs.push(u.exp());
    }
    let grid = heights(&logs)?;
    let unit = |h: &Height<T>| (b.clone() * h.l1() / h.l2()).powf(&two_thirds());
    let mut out = Vec::new();

    // Hypotheses.
    let floor_log = ratio_floor_log(&b)?;
    let floor = Height::from_log(floor_log.clone())?;
    out.push(at_most("thm2.eta_at_ratio_floor", "eta <= 0.01 where log t / loglog t = 1740/B", &eta_choice(&floor, &b), &n("0.01")));
    out.push(
        at_most(
            "thm2.lambda_over_eta_at_ratio_floor",
            "lambda/eta <= 1/250 where log t / loglog t = 1740/B, M = 0.05507",
            &(lambda_choice(&floor, &b, &m_worst) / eta_choice(&floor, &b)),
            &(T::one() / i(250)),
        )
        .with_note("lambda/eta = M/(E L2), so this needs L2 >= 9.54; the floor log t >= 30000 supplies it"),
    );
    out.push(at_most("thm2.eta_at_t0", "eta(T0) <= 0.01", &eta_choice(h0, &b), &n("0.01")));
    out.push(at_most(
        "thm2.lambda_over_eta",
        "lambda/eta <= 1/250 at T0 with M = 0.05507",
        &(lambda_choice(h0, &b, &m_worst) / eta_choice(h0, &b)),
        &(T::one() / i(250)),
    ));
    out.push(at_most("thm2.l2_over_l1", "L2/L1 <= 0.00035 at T0", &(l2_0.clone() / h0.l1()), &n("0.00035")));

    // (1−β)/λ − 1 does not depend on M.
    out.push(grid_entry("thm2.beta_over_lambda", "(1-beta)/lambda - 1 <= 0.97/log T0", &grid, |h| {
        let r = one_minus_beta_at(h, &b, &T::one()) / lambda_choice(h, &b, &T::one()) - T::one();
        Ok((r, n::<T>("0.97") / log_t0.clone()))
    })?);
    out.push(at_most("thm2.slack_182", "0.1876 * 0.97 <= 0.182", &(n::<T>("0.1876") * n("0.97")), &n("0.182")));

    // log ζ(1+η).
    let mut log_zeta = Vec::with_capacity(grid.len());
    for h in &grid {
        log_zeta.push(log_zeta_one_plus(&eta_choice(h, &b))?);
    }
    let mut lz_iter = log_zeta.iter();
    out.push(grid_entry("thm2.log_zeta", "log zeta(1+eta) - log(1/eta) <= 0.006", &grid, |h| {
        let eta = eta_choice(h, &b);
        Ok((lz_iter.next().expect("one per height").clone() + eta.ln(), n("0.006")))
    })?);
    let hundredth = n::<T>("0.01");
    out.push(at_most(
        "thm2.log_zeta_at_hundredth",
        "log zeta(1.01) - log 100 <= 0.006",
        &(log_zeta_one_plus(&hundredth)? + hundredth.ln()),
        &n("0.006"),
    ));

    // Main term.
    let mc = main_constant(c);
    let main_eval = {
        let eta = eta_choice(h0, &b);
        let (l1, l2) = (h0.l1(), h0.l2());
        let br = b5_b0.clone() * (two_thirds::<T>() * l2.clone() + b.clone() * eta.powf(&T::ratio(3, 2)) * l1.clone()) + two_thirds::<T>() * l2.clone();
        br / (T::two() * eta) / ((b.clone() * l1).powf(&two_thirds()) * l2.cbrt())
    };
    let tight = T::tenth_pow(T::digits().saturating_sub(10).max(6));
    out.push(Entry::agrees("thm2.main_term.identity", "(1/2eta)[(b5/b0)(2L2/3 + B eta^1.5 L1) + 2L2/3] = C (B L1)^(2/3) L2^(1/3)", &main_eval, &mc, &tight));
    out.push(at_most("thm2.main_term.coefficient", "(b5/b0)(1+b0/b5)^(1/3)(3/4)^(2/3) <= 2.99968", &mc, &n("2.99968")));

    // Error term 1.
    let err1 = n::<T>("1.471") * m_worst.clone() * (T::one() + n::<T>("0.97") / log_t0.clone()) / e.sq();
    out.push(at_most("thm2.error1.coefficient_039", "1.471 * 0.05507 (1 + 0.97/log T0)/E^2 <= 0.039", &err1, &n("0.039")));
    out.push(at_most("thm2.error1.coefficient_0038", "0.039/L2(T0) <= 0.0038", &(n::<T>("0.039") / l2_0.clone()), &n("0.0038")));
    out.push(grid_entry("thm2.error1.pointwise", "1.471 (1-beta)/eta^2 <= 0.0038 (B L1/L2)^(2/3)", &grid, |h| {
        let eta = eta_choice(h, &b);
        let v = n::<T>("1.471") * one_minus_beta_at(h, &b, &m_worst) / eta.sq() / unit(h);
        Ok((v, n("0.0038")))
    })?);

    // Error term 2.
    let log_b_sign_negative = b <= l2_0;
    let third_e = T::one() / (i(3) * e.clone());
    out.push(at_least("thm2.error2.coefficient_33293", "3.3293 >= b5/b0", &n::<T>("3.3293"), &b5_b0));
    out.push(at_least("thm2.error2.coefficient_03608", "-0.3608 >= -log E + 0.006", &n::<T>("-0.3608"), &(n::<T>("0.006") - e.ln())));
    out.push(at_least("thm2.error2.coefficient_11534", "1.1534 >= (b5/b0)/(2E)", &n::<T>("1.1534"), &(b5_b0.clone() / (T::two() * e.clone()))));
    out.push(at_least("thm2.error2.coefficient_0125", "-0.125 >= (0.006 - log E)/(2E)", &n::<T>("-0.125"), &((n::<T>("0.006") - e.ln()) / (T::two() * e.clone()))));
    out.push(if log_b_sign_negative {
        Entry::exact("thm2.error2.coefficient_02310", "0.2310 <= 1/(3E), as log(B/L2) < 0 here", &n::<T>("0.2310"), Orientation::AtMost, &third_e)
            .with_note("the displayed line still holds through slack in the other two coefficients; see thm2.error2.rounding")
    } else {
        Entry::exact("thm2.error2.coefficient_02310", "0.2310 >= 1/(3E), as log(B/L2) >= 0 here", &n::<T>("0.2310"), Orientation::AtLeast, &third_e)
    });
    let mut lz_iter = log_zeta.iter();
    let err2_exact = |h: &Height<T>, lz: &T| -> T {
        let eta = eta_choice(h, &b);
        (b5_b0.clone() * a.ln() + lz.clone() - two_thirds::<T>() * h.l2()) / (T::two() * eta) / unit(h)
    };
    let err2_display = |h: &Height<T>| -> T { n::<T>("1.1534") * a.ln() - n::<T>("0.125") + n::<T>("0.2310") * (b.clone() / h.l2()).ln() };
    out.push(grid_entry("thm2.error2.pointwise", "remaining second line <= (B L1/L2)^(2/3)(1.1534 log A - 0.125 + 0.2310 log(B/L2))", &grid, |h| {
        Ok((err2_exact(h, lz_iter.next().expect("one per height")), err2_display(h)))
    })?);
    out.push(grid_entry("thm2.error2.rounding", "(1/2eta)[(b5/b0) log A - log E + (2/3) log(B/L2) + 0.006] <= displayed bound", &grid, |h| {
        let eta = eta_choice(h, &b);
        let v = (b5_b0.clone() * a.ln() - e.ln() + two_thirds::<T>() * (b.clone() / h.l2()).ln() + n("0.006")) / (T::two() * eta) / unit(h);
        Ok((v, err2_display(h)))
    })?);

    // Error term 3.
    let c2029 = n::<T>("0.2029");
    out.push(at_least("thm2.error3.coefficient_02029", "0.2029 >= 3.683 * 0.05507", &c2029, &(n::<T>("3.683") * m_worst.clone())));
    out.push(at_least("thm2.error3.coefficient_6468", "6.468 >= 6.466 + 4 * 0.00035", &n::<T>("6.468"), &(n::<T>("6.466") + n::<T>("0.0014"))));
    out.push(at_least("thm2.error3.coefficient_1313", "1.313 >= 0.2029 * 6.468", &n::<T>("1.313"), &(c2029.clone() * n("6.468"))));
    out.push(at_most("thm2.error3.coefficient_2188", "2.188 <= 0.2029 * 10.784", &n::<T>("2.188"), &(c2029.clone() * n("10.784"))));
    let c9798 = c2029.clone() * n::<T>("5.392") / e.sqrt() + c2029.clone() * T::ratio(4, 3) / (n::<T>("1.879") * e.sq());
    out.push(at_least("thm2.error3.coefficient_09798", "0.9798 >= 0.2029 (5.392/sqrt E + (4/3)/(1.879 E^2))", &n::<T>("0.9798"), &c9798));
    out.push(at_least("thm2.error3.coefficient_005185", "0.05185 >= 0.2029/(1.879 E^2)", &n::<T>("0.05185"), &(c2029.clone() / (n::<T>("1.879") * e.sq()))));
    out.push(at_least("thm2.error3.coefficient_005401", "0.05401 >= 1.879 * 0.224 - log E", &n::<T>("0.05401"), &(n::<T>("1.879") * n("0.224") - e.ln())));
    out.push(at_least("thm2.error3.coefficient_00051", "0.0051 >= 0.05185/L2(T0)", &n::<T>("0.0051"), &(n::<T>("0.05185") / l2_0.clone())));
    out.push(at_least(
        "thm2.error3.coefficient_09801",
        "0.9801 >= 0.9798 + 0.05185 * 0.05401/L2(T0)",
        &n::<T>("0.9801"),
        &(n::<T>("0.9798") + n::<T>("0.05185") * n("0.05401") / l2_0.clone()),
    ));
    let err3_exact = |h: &Height<T>| -> T {
        let eta = eta_choice(h, &b);
        let lambda = lambda_choice(h, &b, &m_worst);
        let (l1, l2) = (h.l1(), h.l2());
        let linear = (printed.l1_base.clone() + printed.b_weight.clone() * b.clone() * (T::one() / eta.sqrt() - T::two())) * l1;
        let count = ((a.clone() / eta.clone()).ln() + two_thirds::<T>() * l2.clone()) / printed.count_denominator.clone() + printed.count_shift.clone();
        printed.lambda_weight.clone() * lambda * (linear + i(4) * l2 + count / eta.sq()) / unit(h)
    };
    let err3_middle = |h: &Height<T>| -> T {
        let (l1, l2) = (h.l1(), h.l2());
        let r = l1.clone() / l2.clone();
        let b43 = b.powf(&T::ratio(4, 3));
        let lin = (n::<T>("6.468") + n::<T>("5.392") * b43.clone() / e.sqrt() * r.cbrt() - n::<T>("10.784") * b.clone()) * l1.clone();
        let cnt = b43 / e.sq() * r.powf(&T::ratio(4, 3))
            * ((a.ln() + T::ratio(4, 3) * l2.clone() + two_thirds::<T>() * (b.clone() / l2.clone()).ln() - e.ln()) / n::<T>("1.879") + n("0.224"));
        c2029.clone() / ((b.clone() * l1).powf(&two_thirds()) * l2.cbrt()) * (lin + cnt) / unit(h)
    };
    let kappa = |h: &Height<T>| (n::<T>("1.313") - n::<T>("2.188") * b.clone()) / b.powf(&T::ratio(4, 3)) * (h.l2() / h.l1()).cbrt();
    let err3_middle2 = |h: &Height<T>| -> T {
        let l2 = h.l2();
        n::<T>("0.9798") + kappa(h) + n::<T>("0.05185") / l2.clone() * (a.ln() + two_thirds::<T>() * (b.clone() / l2).ln() + n("0.05401"))
    };
    let err3_display = |h: &Height<T>| -> T { kappa(h) + n::<T>("0.0051") * (a.ln() + two_thirds::<T>() * (b.clone() / h.l2()).ln()) + n("0.9801") };
    out.push(grid_entry("thm2.error3.first_step", "third line <= 0.2029 L1^(-2/3) L2^(-1/3) B^(-2/3) [...]", &grid, |h| Ok((err3_exact(h), err3_middle(h))))?);
    out.push(grid_entry("thm2.error3.second_step", "0.2029 [...] <= (B L1/L2)^(2/3)[0.9798 + ... + 0.05185/L2 (...)]", &grid, |h| Ok((err3_middle(h), err3_middle2(h))))?);
    out.push(grid_entry("thm2.error3.third_step", "(B L1/L2)^(2/3)[0.9798 + ...] <= (B L1/L2)^(2/3)[... + 0.0051(...) + 0.9801]", &grid, |h| Ok((err3_middle2(h), err3_display(h))))?);

    // Collecting into X(t).
    out.push(grid_entry("thm2.collect_x", "0.0038 + error2 + error3 coefficients <= X(t)", &grid, |h| {
        Ok((n::<T>("0.0038") + err2_display(h) + err3_display(h), x_t(h, rb)))
    })?);
    let mut lz_iter = log_zeta.iter();
    out.push(grid_entry("thm2.combined", "zero-inequality right side at M = 0.05507 <= (B L1)^(2/3) L2^(1/3) (2.99968 + X(t)/L2)", &grid, |h| {
        let eta = eta_choice(h, &b);
        let lambda = lambda_choice(h, &b, &m_worst);
        let omb = one_minus_beta_at(h, &b, &m_worst);
        let s = zero_inequality_sides(h, &omb, &lambda, &eta, rb, &printed, lz_iter.next().expect("one per height"))?;
        let scale = (b.clone() * h.l1()).powf(&two_thirds()) * h.l2().cbrt();
        Ok((s.rhs_total() / scale, n::<T>("2.99968") + x_t(h, rb) / h.l2()))
    })?);

    // Final M.
    let m1v = m1_from_ratio(&ratio.value);
    let m_lower = (n::<T>("0.16521") - n::<T>("0.182") / log_t0.clone()) / (n::<T>("2.99968") + ratio.value.clone());
    let at = ratio.at_loglog.as_ref().map_or_else(|| "t -> infinity".to_string(), |u| format!("loglog t = {}", u.to_decimal(10)));
    out.push(at_least("thm2.m_lower", "(0.16521 - 0.182/log T0)/(2.99968 + max X/loglog t) >= M1", &m_lower, &m1v).with_note(format!("max of X/loglog t = {} at {at}", ratio.value.to_decimal(12))));
    out.push(at_most("thm2.rounding.numerator", "0.1652 <= 0.16521 - 0.182/log T0", &n::<T>("0.1652"), &(n::<T>("0.16521") - n::<T>("0.182") / log_t0.clone())));
    out.push(at_least("thm2.rounding.denominator", "2.9997 >= 2.99968", &n::<T>("2.9997"), &n::<T>("2.99968")));
    out.push(
        at_least("thm2.m1_displayed", "M1 >= min(0.05507, 0.1652/(2.9997 + 5.6008/loglog T0))", &m1v, &m1_displayed(h0))
            .with_note("holds only if X(t) <= 5.6008 for t >= T0; see thm2.x_envelope"),
    );

    // The inequality itself: zeros with M below the root cannot exist.
    let mut worst_root: Option<(T, T)> = None;
    for h in &grid {
        let r = zero_inequality_root(h, rb, &printed)?;
        if worst_root.as_ref().map_or(true, |(w, _)| r < *w) {
            worst_root = Some((r, h.log_t().clone()));
        }
    }
    let (root, root_at) = worst_root.expect("nonempty grid");
    out.push(
        at_least("thm2.zero_inequality_root", "smallest M consistent with the zero inequality >= M1", &root, &m1v)
            .sampled()
            .with_note(format!("minimum over {} heights at log t = {}", grid.len(), root_at.to_decimal(8))),
    );
    Ok(out)
}

/// `log t` where `log t / log log t = 1740/B`.
fn ratio_floor_log<T: Real>(b: &T) -> Result<T> {
    let target = T::from_i64(1740) / b.clone();
    let f = |l: &T| l.clone() / l.ln() - target.clone();
    let (lo, mut hi) = (T::from_i64(3), T::from_i64(16));
    while f(&hi) < T::zero() {
        hi = hi * T::two();
    }
    let tol = T::epsilon().sqrt() * hi.clone();
    bisect(f, lo, hi, &tol).ok_or_else(|| Error::NoRoot("ratio floor".into()))
}

/// `X(t) ≤ 5.6008` over `points` heights equally spaced in `log t`, and the
/// simplified form for the standard pair.
pub fn check_x_envelope<T: Real>(rb: &RichertBound<T>, lo_log: &T, hi_log: &T, points: usize) -> Result<Vec<Entry>> {
    let grid = heights(&log_grid(lo_log, hi_log, points))?;
    let mut out = vec![grid_entry("thm2.x_envelope", "X(t) <= 5.6008", &grid, |h| Ok((x_t(h, rb), n("5.6008"))))?];
    if !out[0].passed() {
        let (base, kappa) = x_parts(rb);
        // X as a function of u = loglog t peaks where 3(0.2327) = kappa (1-u)(u e^{-u})^{1/3}.
        let peak = |u: &T| kappa.clone() * u.cbrt() * (-u.clone() / T::from_i64(3)).exp() * (T::one() - u.clone()) - n::<T>("0.2327") * T::from_i64(3);
        let sup = bisect(peak, T::from_i64(3), T::from_i64(40), &T::epsilon().sqrt())
            .map(|u| base - n::<T>("0.2327") * u.ln() + kappa * u.cbrt() * (-u.clone() / T::from_i64(3)).exp())
            .map(|v| format!("; sup of X(t) over all t is {}", v.to_decimal(8)))
            .unwrap_or_default();
        let note = format!("{}{sup}", out[0].note);
        out[0] = out[0].clone().with_note(note);
    }
    if *rb == RichertBound::standard() {
        out.push(grid_entry("thm2.x_intermediate", "X(t) <= 6.22660 - 0.2327 logloglog t - 1.1508 (loglog t/log t)^(1/3)", &grid, |h| {
            Ok((x_t(h, rb), x_t_intermediate(h)))
        })?);
    }
    Ok(out)
}

/// The region `1/(c (log t)^{2/3}(log log t)^{1/3})` for all
/// `t ≥ 3`, from the Vinogradov–Korobov constant above `T₀` and the classical
/// region below.
pub fn theorem5_checks<T: Real>(h0: &Height<T>, rb: &RichertBound<T>, claimed: &T) -> Result<Vec<Entry>> {
    let vk = vk_constant(h0, rb)?;
    let target = T::one() / claimed.clone();
    let curve = RegionCurve::Vk { c: target.clone() };
    let lo = classical_t0::<T>().ln();
    let grid = heights(&geometric_grid(&lo, h0.log_t(), 60))?;
    let below = heights(&geometric_grid(&T::from_i64(3).ln(), &lo, 30))?;
    Ok(vec![
        at_least("thm5.vk_constant", "M1 B^(-2/3) >= 1/c", &vk, &target),
        at_least("thm1.constant", "0.05507 B^(-2/3) >= 1/49.13", &theorem1_constant(&rb.b), &(T::one() / n::<T>("49.13"))),
        grid_entry("thm5.classical_handoff", "VK curve <= classical region for 5.45e8 <= t <= T0", &grid, |h| Ok((curve.bound(h)?, classical_region(h)?)))?,
        grid_entry("thm5.below_verified_height", "VK curve <= 1/2 for 3 <= t <= 5.45e8", &below, |h| Ok((curve.bound(h)?, T::half())))?,
    ])
}

/// The classical assembly above `5.45·10⁸`: the von Mangoldt sum, the
/// zero-sum constants from the counting envelope, `c₄(79)`, `c₅`, the
/// final zero inequality and the bound on `M`.
pub fn theorem3_pipeline<T: Real>(k: &MollifierKernel<T>, c: &TrigCoefficients<T>) -> Result<Vec<Entry>> {
    let i = T::from_i64;
    let pi = T::pi();
    let b0_b5 = c.b0().clone() / c.b5.clone();
    let b1_b0 = c.b1().clone() / c.b0().clone();
    let mut out = Vec::new();

    let ls = lambda_sum::<T>();
    out.push(at_most("thm3.lambda_sum", "2 sum Lambda(n)/(n^2-n) <= 1.702", &(ls.value.clone() * T::two()), &n("1.702")).with_note(format!(
        "partial sum to {} plus tail {}",
        ls.cutoff,
        ls.tail_bound.to_decimal(6)
    )));
    out.push(at_least("thm3.half_lambda_sum", "0.851 >= sum Lambda(n)/(n^2-n)", &n::<T>("0.851"), &ls.value));

    // Counting-envelope constants behind the second zero sum.
    let (q_log, q_ll, q_c) = (n::<T>("0.137"), n::<T>("0.443"), n::<T>("1.588"));
    let log_2pi = (T::two() * pi.clone()).ln();
    let i_log = T::one() / (T::two() * pi.clone()) + T::two() * q_log.clone();
    let i_const = T::two() * q_c.clone() - log_2pi.clone() / (T::two() * pi.clone());
    out.push(at_least("thm3.rosser.i_log", "0.4332 >= 1/(2pi) + 2 * 0.137", &n::<T>("0.4332"), &i_log));
    out.push(at_least("thm3.rosser.s1_log", "0.8664 >= 2 * 0.4332", &n::<T>("0.8664"), &(T::two() * n::<T>("0.4332"))));
    out.push(at_least("thm3.rosser.s1_const", "5.77 >= 2 (2 * 1.588 - log(2pi)/(2pi)) + 0.001 + 0.00014", &n::<T>("5.77"), &(T::two() * i_const + n("0.001") + n("0.00014"))));
    let n23_log = T::one() / pi.clone() + T::two() * q_log.clone();
    let n23_const = T::two() * q_c - log_2pi / pi.clone();
    out.push(at_least("thm3.rosser.n23_log", "0.59231 >= 1/pi + 2 * 0.137", &n::<T>("0.59231"), &n23_log));
    out.push(at_least("thm3.rosser.n23_const", "2.591 >= 2 * 1.588 - log(2pi)/pi", &n::<T>("2.591"), &n23_const));
    out.push(at_least("thm3.sum_zero2.log", "3.2357 >= 0.8664 + 4 * 0.59231", &n::<T>("3.2357"), &(n::<T>("0.8664") + i(4) * n::<T>("0.59231"))));
    out.push(at_least("thm3.sum_zero2.loglog", "5.316 >= 4 * 0.443 + 4 * 0.886", &n::<T>("5.316"), &(i(4) * q_ll.clone() + i(8) * q_ll)));
    out.push(at_least("thm3.sum_zero2.const", "16.134 >= 5.77 + 4 * 2.591", &n::<T>("16.134"), &(n::<T>("5.77") + i(4) * n::<T>("2.591"))));

    // Kernel constants at R = 79.
    let r79 = i(79);
    let c4_79 = k.bound_constants(&r79)?.c4;
    out.push(at_most("thm3.c4_79", "c4(79) <= 1.35", &c4_79, &n("1.35")));
    for r in [79i64, 1000] {
        let rr = i(r);
        let omb = T::one() / (T::two() * (rr.clone() + T::one()));
        let diff = pi.sq() * c5_classical(&omb, k)? - i(4) * c4_classical(&rr, k)?;
        out.push(Entry::agrees(format!("thm3.c5_identity.r{r}"), "pi^2 c5 - 4 c4 = -4/R", &diff, &(-i(4) / rr), &T::tenth_pow(T::digits().saturating_sub(10).max(6))));
    }
    let kappa160 = cot_linear_constant(&(pi.clone() / i(160)));
    out.push(at_least("thm3.cot_160", "0.3334 >= (1/x - cot x)/x at x = pi/160", &n::<T>("0.3334"), &kappa160));

    // The classical zero inequality and its rescaling.
    out.push(at_least("thm3.lemma.beta", "5.646 >= 0.3334 pi^2 b1/b0", &n::<T>("5.646"), &(n::<T>("0.3334") * pi.sq() * b1_b0)));
    out.push(at_least("thm3.lemma.l1", "3.5691 >= 3.2357 + 1/3", &n::<T>("3.5691"), &(n::<T>("3.2357") + third())));
    out.push(at_least("thm3.lemma.const", "18.475 >= 16.134 + 1.8 + 1.8 b0/b5", &n::<T>("18.475"), &(n::<T>("17.934") + n::<T>("1.8") * b0_b5.clone())));
    out.push(at_most("thm3.scale.numerator", "0.04962 <= 0.16521 b0/b5", &n::<T>("0.04962"), &(n::<T>("0.16521") * b0_b5.clone())));
    out.push(at_least("thm3.scale.slope", "0.0196 >= 0.1876 * 0.3466 b0/b5", &n::<T>("0.0196"), &(n::<T>("0.1876") * n("0.3466") * b0_b5.clone())));
    out.push(at_least("thm3.j_increment", "0.3466 >= (1/4) log 4", &n::<T>("0.3466"), &(i(4).ln() / i(4))));
    out.push(at_least("thm3.mm.const", "0.25562 >= 0.851 b0/b5", &n::<T>("0.25562"), &(n::<T>("0.851") * b0_b5.clone())));
    out.push(at_least("thm3.mm.beta", "1.696 >= 5.646 b0/b5", &n::<T>("1.696"), &(n::<T>("5.646") * b0_b5)));
    out.push(at_least("thm3.mm.log", "4.8183 >= 1.35 * 3.5691", &n::<T>("4.8183"), &(n::<T>("1.35") * n("3.5691"))));
    out.push(at_least("thm3.mm.loglog", "7.1766 >= 1.35 * 5.316", &n::<T>("7.1766"), &(n::<T>("1.35") * n("5.316"))));

    // The integral bound for I(t).
    let t0 = classical_t0::<T>();
    let q = t0.powf(&T::ratio(1, 4));
    let env = (i(57) + i(6) * (t0.clone() + t0.ln()).powf(&T::ratio(1, 4))) / q;
    out.push(at_least("thm3.cg_envelope", "6.37306 t^(1/4) >= 57 + 6 (t + log t)^(1/4) at t = 5.45e8", &n::<T>("6.37306"), &env));
    let l0 = t0.ln();
    let tail = i(8) * (-T::two() * l0.clone()).exp() * (T::two() * l0 + T::one()) / i(4);
    out.push(at_least("thm3.cg_constant", "3.7042 >= 2 log 6.37306 + 8 int_{log t}^inf u e^(-2u) du", &n::<T>("3.7042"), &(T::two() * n::<T>("6.37306").ln() + tail)));

    // Pointwise statements from T0 upward.
    let lo = t0.ln();
    let near = heights(&log_grid(&lo, &i(200), 50))?;
    let far = heights(&geometric_grid(&lo, &T::from_f64(1e6), 40))?;
    let h_t0 = Height::from_log(lo.clone())?;
    let prod0 = classical_region(&h_t0)? * lo.clone();
    out.push(at_least("thm4.constant", "classical region at 5.45e8 times log t >= 1/8.463", &prod0, &(T::one() / n::<T>("8.463"))));
    out.push(grid_entry("thm4.monotone", "classical region times log t is nondecreasing", &near[1..], {
        let mut prev = prod0.clone();
        move |h| {
            let p = classical_region(h)? * h.log_t().clone();
            let step = (prev.clone(), p.clone());
            prev = p;
            Ok(step)
        }
    })?);
    out.push(grid_entry("thm3.envelope_decreasing", "(J(t) + 0.685 + 0.155 loglog t)/log t is nonincreasing", &far[1..], {
        let ratio = |h: &Height<T>| (j_of_log(h.log_t()) + n("0.685") + n::<T>("0.155") * h.loglog_t()) / h.log_t().clone();
        let mut prev = ratio(&far[0]);
        move |h| {
            let p = ratio(h);
            let step = (p.clone(), prev.clone());
            prev = p;
            Ok(step)
        }
    })?);
    let both: Vec<Height<T>> = near.iter().chain(far.iter()).cloned().collect();
    out.push(grid_entry("thm3.j_increment_grid", "J(4t+1) - J(t) <= 0.3466", &both, |h| Ok((clas_m_fixed_point(h)?.j_increment, n("0.3466"))))?);
    out.push(grid_entry("thm3.cap_160", "(0.04962 - 0.0196 c6) c6 <= 1/160", &both, |h| Ok((clas_m_fixed_point(h)?.one_minus_beta_cap, T::one() / i(160))))?);
    out.push(grid_entry("thm3.mm.lines", "first line of the M bound <= second line", &both, |h| {
        let m = clas_m_fixed_point(h)?;
        Ok((m.first_line, m.second_line))
    })?);
    out.push(grid_entry("thm3.mm.envelope", "M bound <= 0.685 + 0.155 loglog t", &both, |h| {
        let m = clas_m_fixed_point(h)?;
        Ok((m.second_line, m.envelope))
    })?);
    out.push(grid_entry("thm3.mm.below_17", "M bound <= 1.7", &both, |h| Ok((clas_m_fixed_point(h)?.second_line, n("1.7"))))?);
    Ok(out)
}

/// Shapes of zero-free regions `1 − β ≤ bound(t)`.
#[derive(Debug, Clone, PartialEq)]
pub enum RegionCurve<T> {
    /// `c / ((log t)^{2/3}(log log t)^{1/3})`, for `t ≥ 3`.
    Vk { c: T },
    /// The classical region above `5.45·10⁸`.
    Classical,
    /// `c / log t`, for `t ≥ 3`.
    Linear { c: T },
}

impl<T: Real> RegionCurve<T> {
    pub fn kind(&self) -> &'static str {
        match self {
            RegionCurve::Vk { .. } => "vk",
            RegionCurve::Classical => "classical",
            RegionCurve::Linear { .. } => "linear",
        }
    }

    pub fn min_log_t(&self) -> T {
        match self {
            RegionCurve::Classical => classical_t0::<T>().ln(),
            _ => T::from_i64(3).ln(),
        }
    }

    pub fn bound(&self, h: &Height<T>) -> Result<T> {
        if *h.log_t() < self.min_log_t() {
            return Err(domain(format!("{} curve needs log t >= {}", self.kind(), self.min_log_t().to_decimal(10))));
        }
        match self {
            RegionCurve::Vk { c } => Ok(c.clone() / (h.log_t().powf(&two_thirds()) * h.loglog_t().cbrt())),
            RegionCurve::Classical => classical_region(h),
            RegionCurve::Linear { c } => Ok(c.clone() / h.log_t().clone()),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CurveRow<T> {
    pub log_t: T,
    pub bound: T,
}

/// The curve on `steps` heights equally spaced in `log t`.
pub fn region_curve<T: Real>(curve: &RegionCurve<T>, lo_log: &T, hi_log: &T, steps: usize) -> Result<Vec<CurveRow<T>>> {
    if hi_log < lo_log {
        return Err(domain("curve range needs t_min <= t_max"));
    }
    log_grid(lo_log, hi_log, steps.max(1))
        .into_iter()
        .map(|l| {
            let h = Height::from_log(l.clone())?;
            Ok(CurveRow { bound: curve.bound(&h)?, log_t: l })
        })
        .collect()
}

/// Heights (as `log t`) in `[lo, hi]` where the two curves cross, located on
/// a `steps`-point grid and refined by bisection.
pub fn curve_crossings<T: Real>(a: &RegionCurve<T>, b: &RegionCurve<T>, lo_log: &T, hi_log: &T, steps: usize) -> Result<Vec<T>> {
    let diff = |l: &T| -> Result<T> {
        let h = Height::from_log(l.clone())?;
        Ok(a.bound(&h)? - b.bound(&h)?)
    };
    let grid = log_grid(lo_log, hi_log, steps.max(2));
    let mut out = Vec::new();
    let mut prev = diff(&grid[0])?;
    for w in grid.windows(2) {
        let next = diff(&w[1])?;
        if (prev > T::zero()) != (next > T::zero()) {
            let tol = T::epsilon().sqrt() * w[1].clone();
            if let Some(x) = bisect(|l: &T| diff(l).unwrap_or_else(|_| T::zero()), w[0].clone(), w[1].clone(), &tol) {
                out.push(x);
            }
        }
        prev = next;
    }
    Ok(out)
}

/// Significant digits written for curve tables.
pub const CURVE_DIGITS: usize = 17;

/// `t,one_minus_beta` rows, with `t` written as `e^{log t}` in the form
/// `exp(<log t>)` when it would not fit a double.
pub fn curve_csv<T: Real>(rows: &[CurveRow<T>], header: &[(&str, String)]) -> String {
    let mut s = String::new();
    for (k, v) in header {
        let _ = writeln!(s, "# {k}={v}");
    }
    s.push_str("t,one_minus_beta\n");
    for r in rows {
        let t = if r.log_t < T::from_i64(700) {
            r.log_t.exp().to_decimal(CURVE_DIGITS)
        } else {
            format!("exp({})", r.log_t.to_decimal(CURVE_DIGITS))
        };
        let _ = writeln!(s, "{t},{}", r.bound.to_decimal(CURVE_DIGITS));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mp::Mp;

    fn setup() -> (MollifierKernel<f64>, TrigCoefficients<f64>) {
        let c = coefficients(0.225f64, 0.9);
        (MollifierKernel::from_coefficients(c.b0(), c.b1()).unwrap(), c)
    }

    fn vk_height<T: Real>() -> Height<T> {
        Height::from_log(T::from_i64(54_550)).unwrap()
    }

    #[test]
    fn e_is_the_printed_rational() {
        assert_eq!(e_rational(), BigRational::ratio(1733522, 999825));
        assert!((e_constant::<f64>() - 1.443234528).abs() < 1e-9);
    }

    #[test]
    fn theorem1_constant_scales_with_b() {
        assert!((theorem1_constant(&8.0f64) - 0.05507 / 4.0).abs() < 1e-15);
    }

    #[test]
    fn vk_constant_at_standard_height() {
        let rb = RichertBound::<Mp>::standard();
        let m = m1(&vk_height(), &rb).unwrap();
        assert!((m.to_f64() - 0.0470194529).abs() < 1e-9, "{}", m.to_f64());
        let c = vk_constant(&vk_height(), &rb).unwrap();
        assert!(c >= Mp::from_i64(1) / Mp::from_decimal("57.54"));
    }

    #[test]
    fn x_ratio_maximum_is_at_the_start() {
        let rb = RichertBound::<f64>::standard();
        let h0 = vk_height::<f64>();
        let r = x_ratio_max(&h0, &rb);
        assert!((r.value - 0.51373943).abs() < 1e-7, "{}", r.value);
        assert_eq!(r.at_loglog, Some(h0.loglog_t()));
        // Far past the interior region the ratio is positive and decreasing.
        let h = Height::from_log(1e30f64).unwrap();
        assert!(x_t(&h, &rb) / h.loglog_t() < r.value);
    }

    #[test]
    fn x_sits_below_the_intermediate_form() {
        let rb = RichertBound::<f64>::standard();
        for l in [30_000.0, 54_550.0, 1e5, 1e7, 1e12] {
            let h = Height::from_log(l).unwrap();
            assert!(x_t(&h, &rb) <= x_t_intermediate(&h));
        }
    }

    #[test]
    fn x_never_reaches_the_displayed_envelope_from_below_everywhere() {
        let rb = RichertBound::<f64>::standard();
        let h = Height::from_log(4e4f64).unwrap();
        assert!(x_t(&h, &rb) > 5.6008);
    }

    #[test]
    fn classical_region_at_verified_height() {
        let h = Height::<f64>::from_t(&545_000_000.0).unwrap();
        let v = classical_region(&h).unwrap();
        assert!((v - 0.0058743736).abs() < 1e-9, "{v}");
        assert!(classical_region(&Height::<f64>::from_t(&1e8).unwrap()).is_err());
    }

    #[test]
    fn c5_cube_makes_the_classical_identity_exact() {
        let (k, _) = setup();
        let r = 79.0f64;
        let omb = 1.0 / (2.0 * (r + 1.0));
        let pi = std::f64::consts::PI;
        let cube = pi * pi * c5_classical(&omb, &k).unwrap() - 4.0 * c4_classical(&r, &k).unwrap();
        assert!((cube + 4.0 / r).abs() < 1e-9);
        // With a squared denominator the difference turns positive.
        let c = pi * omb;
        let c5_sq = 4.0 / (pi * pi) + c * k.h_bound(&79.0).unwrap() / (k.w0 * (pi / 2.0 - c).powi(2));
        assert!(pi * pi * c5_sq - 4.0 * c4_classical(&r, &k).unwrap() > 0.5);
    }

    #[test]
    fn zero_inequality_fails_below_m1() {
        let rb = RichertBound::<f64>::standard();
        let k = LemmaConstants::<f64>::printed();
        let h = vk_height::<f64>();
        let m1v = m1(&h, &rb).unwrap();
        let eta = eta_choice(&h, &rb.b);
        let gap = zero_inequality_gap(&h, &one_minus_beta_at(&h, &rb.b, &m1v), &lambda_choice(&h, &rb.b, &m1v), &eta, &rb, &k).unwrap();
        assert!(gap <= 0.0, "{gap}");
        assert!(zero_inequality_root(&h, &rb, &k).unwrap() >= m1v);
    }

    #[test]
    fn zero_inequality_preconditions_name_the_inequality() {
        let rb = RichertBound::<f64>::standard();
        let k = LemmaConstants::<f64>::printed();
        let h = vk_height::<f64>();
        let err = zero_inequality_sides(&h, &0.01, &0.001, &0.01, &rb, &k, &0.0).unwrap_err();
        assert!(err.to_string().contains("1-beta <= eta/2"));
        let small = RichertBound::new(5.0, 4.45).unwrap();
        let err = zero_inequality_sides(&h, &0.001, &0.00001, &0.01, &small, &k, &0.0).unwrap_err();
        assert!(err.to_string().contains("A > 6.5"));
    }

    #[test]
    fn derived_lemma_constants_round_to_printed() {
        let (kern, c) = setup();
        let d = LemmaConstants::derived(&kern, &c).unwrap();
        let p = LemmaConstants::<f64>::printed();
        assert!(p.numerator <= d.numerator && d.numerator - p.numerator < 1e-4);
        assert!(p.slope >= d.slope && p.slope - d.slope < 1e-4);
        assert!(p.lambda_weight >= d.lambda_weight && p.lambda_weight - d.lambda_weight < 2e-3);
        assert!((cot_linear_constant(&(std::f64::consts::PI / 4.0)) - 0.34790).abs() < 1e-5);
    }

    #[test]
    fn height_l1_switches_to_asymptotic_form_smoothly() {
        let h = Height::from_log(30.0f64).unwrap();
        assert!((h.l1() - (4.0 * 30f64.exp() + 1.0).ln()).abs() < 1e-14);
        let big = Height::from_log(1e4f64).unwrap();
        assert_eq!(big.l1(), 1e4 + 4f64.ln());
    }

    #[test]
    fn curves_and_csv() {
        let rows = region_curve(&RegionCurve::Vk { c: 1.0 / 57.54 }, &5.0f64, &10.0, 6).unwrap();
        assert_eq!(rows.len(), 6);
        assert_eq!(rows[5].log_t, 10.0);
        assert_eq!(region_curve(&RegionCurve::Linear { c: 1.0f64 }, &5.0, &5.0, 1).unwrap().len(), 1);
        assert!(region_curve(&RegionCurve::<f64>::Classical, &5.0, &30.0, 3).is_err());
        let csv = curve_csv(&rows, &[("kind", "vk".to_string())]);
        assert!(csv.starts_with("# kind=vk\nt,one_minus_beta\n"));
        assert_eq!(csv.lines().count(), 8);
        let x = curve_crossings(&RegionCurve::Vk { c: 1.0 / 57.54 }, &RegionCurve::Classical, &classical_t0::<f64>().ln(), &60_000.0, 200).unwrap();
        assert_eq!(x.len(), 1);
        assert!((x[0] - 54_550.0).abs() < 300.0, "{}", x[0]);
    }

    #[test]
    fn lemma_checks_pass() {
        let (k, c) = setup();
        for e in lemma_constant_checks(&k, &c).unwrap() {
            assert!(e.passed(), "{e:?}");
        }
    }
}
