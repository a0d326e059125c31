//! Numerical integration: adaptive Gauss–Legendre for smooth integrands and
//! tanh-sinh for integrands with endpoint singularities.

use crate::cplx::{self, C};
use crate::scalar::Real;
use num_traits::Zero;
use std::any::{Any, TypeId};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// Values a quadrature rule can accumulate.
pub trait QuadValue<T: Real>: Clone {
    fn zero() -> Self;
    fn add(&self, other: &Self) -> Self;
    fn scale(&self, k: &T) -> Self;
    fn mag(&self) -> T;
}

impl<T: Real> QuadValue<T> for T {
    fn zero() -> Self {
        <T as Zero>::zero()
    }
    fn add(&self, other: &Self) -> Self {
        self.clone() + other.clone()
    }
    fn scale(&self, k: &T) -> Self {
        self.clone() * k.clone()
    }
    fn mag(&self) -> T {
        self.abs()
    }
}

impl<T: Real> QuadValue<T> for C<T> {
    fn zero() -> Self {
        <C<T> as Zero>::zero()
    }
    fn add(&self, other: &Self) -> Self {
        self.clone() + other.clone()
    }
    fn scale(&self, k: &T) -> Self {
        cplx::scale(self, k)
    }
    fn mag(&self) -> T {
        cplx::abs(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult<V> {
    pub value: V,
    pub error: f64,
    pub evaluations: usize,
}

/// Nodes and weights of the `n`-point Gauss–Legendre rule on `[-1, 1]`.
#[derive(Debug, Clone)]
pub struct GaussLegendre<T> {
    nodes: Vec<T>,
    weights: Vec<T>,
}

impl<T: Real> GaussLegendre<T> {
    pub fn new(n: usize) -> Self {
        assert!(n >= 2);
        let mut nodes = Vec::with_capacity(n);
        let mut weights = Vec::with_capacity(n);
        let tol = T::epsilon() * T::from_i64(16);
        let nf = n as f64;
        for i in 1..=n.div_ceil(2) {
            let guess = (std::f64::consts::PI * (i as f64 - 0.25) / (nf + 0.5)).cos();
            let mut x = T::from_f64(guess);
            let mut dp = T::one();
            for _ in 0..100 {
                let (p, d) = legendre(n, &x);
                dp = d.clone();
                let dx = p / d;
                x = x - dx.clone();
                if dx.abs() <= tol {
                    let (_, d) = legendre(n, &x);
                    dp = d;
                    break;
                }
            }
            let w = T::two() / ((T::one() - x.sq()) * dp.sq());
            nodes.push(x);
            weights.push(w);
        }
        let half = n / 2;
        let mut all_nodes = Vec::with_capacity(n);
        let mut all_weights = Vec::with_capacity(n);
        for i in 0..half {
            all_nodes.push(-nodes[i].clone());
            all_weights.push(weights[i].clone());
        }
        if n % 2 == 1 {
            all_nodes.push(T::zero());
            all_weights.push(weights[half].clone());
        }
        for i in (0..half).rev() {
            all_nodes.push(nodes[i].clone());
            all_weights.push(weights[i].clone());
        }
        GaussLegendre { nodes: all_nodes, weights: all_weights }
    }

    /// Shared rule for the current type and working precision.
    pub fn cached(n: usize) -> Arc<Self> {
        type Key = (TypeId, usize, u32);
        static CACHE: OnceLock<Mutex<HashMap<Key, Arc<dyn Any + Send + Sync>>>> = OnceLock::new();
        let key = (TypeId::of::<T>(), n, T::digits());
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(hit) = cache.lock().expect("quadrature cache poisoned").get(&key) {
            return hit.clone().downcast::<Self>().expect("type-keyed cache");
        }
        let rule = Arc::new(Self::new(n));
        cache
            .lock()
            .expect("quadrature cache poisoned")
            .insert(key, rule.clone() as Arc<dyn Any + Send + Sync>);
        rule
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[T] {
        &self.nodes
    }

    /// Single application of the rule on `[a, b]`.
    pub fn apply<V, F>(&self, f: &mut F, a: &T, b: &T) -> V
    where
        V: QuadValue<T>,
        F: FnMut(&T) -> V,
    {
        let mid = (a.clone() + b.clone()) * T::half();
        let rad = (b.clone() - a.clone()) * T::half();
        let mut acc = V::zero();
        for (x, w) in self.nodes.iter().zip(&self.weights) {
            let u = mid.clone() + rad.clone() * x.clone();
            acc = acc.add(&f(&u).scale(w));
        }
        acc.scale(&rad)
    }

    /// Globally adaptive bisection until the two-panel estimate agrees with
    /// the one-panel estimate to `tol` (absolute, shared in proportion to width)
    /// on every leaf, or to rounding level.
    pub fn integrate<V, F>(&self, mut f: F, a: T, b: T, tol: &T) -> QuadResult<V>
    where
        V: QuadValue<T>,
        F: FnMut(&T) -> V,
    {
        let mut evaluations = 0;
        let whole = self.apply(&mut f, &a, &b);
        evaluations += self.len();
        let mut stack = vec![(a, b, whole, 0u32)];
        let mut total = V::zero();
        let mut error = 0.0;
        let width_total = {
            let (a0, b0) = (&stack[0].0, &stack[0].1);
            (b0.clone() - a0.clone()).abs()
        };
        while let Some((a, b, est, depth)) = stack.pop() {
            let m = (a.clone() + b.clone()) * T::half();
            let left = self.apply(&mut f, &a, &m);
            let right = self.apply(&mut f, &m, &b);
            evaluations += 2 * self.len();
            let refined = left.add(&right);
            let diff = refined.add(&est.scale(&-T::one())).mag();
            let share = tol.clone() * (b.clone() - a.clone()).abs() / width_total.clone();
            // Below this the difference is rounding noise and splitting cannot help.
            let floor = T::epsilon() * T::from_i64(64) * refined.mag();
            if diff <= share || diff <= floor || depth >= 40 {
                total = total.add(&refined);
                error += diff.to_f64();
            } else {
                stack.push((m.clone(), b, right, depth + 1));
                stack.push((a, m, left, depth + 1));
            }
        }
        QuadResult { value: total, error, evaluations }
    }
}

/// `(P_n(x), P_n'(x))` by the three-term recurrence.
fn legendre<T: Real>(n: usize, x: &T) -> (T, T) {
    let mut p0 = T::one();
    let mut p1 = x.clone();
    for k in 2..=n {
        let kf = T::from_i64(k as i64);
        let p2 = ((T::two() * kf.clone() - T::one()) * x.clone() * p1.clone() - (kf.clone() - T::one()) * p0.clone()) / kf;
        p0 = p1;
        p1 = p2;
    }
    let nf = T::from_i64(n as i64);
    let d = nf * (x.clone() * p1.clone() - p0) / (x.sq() - T::one());
    (p1, d)
}

/// Tanh-sinh quadrature on `[a, b]`. The integrand receives the abscissa
/// together with its distance to the nearer endpoint, computed without
/// cancellation, so logarithmic endpoint singularities stay resolvable.
pub fn tanh_sinh<F>(mut f: F, a: f64, b: f64, tol: f64, max_level: u32) -> QuadResult<f64>
where
    F: FnMut(f64, f64) -> f64,
{
    let half = 0.5 * (b - a);
    let pi2 = std::f64::consts::FRAC_PI_2;
    // Abscissae are spaced in t; beyond |t| = t_max the weights underflow.
    let t_max = 6.5;
    let mut evaluations = 0;
    let mut eval = |t: f64, f: &mut F| -> f64 {
        let s = pi2 * t.sinh();
        let ch = s.cosh();
        let w = pi2 * t.cosh() / (ch * ch);
        // 1 - tanh|s| = 2 / (e^{2|s|} + 1)
        let gap = half * 2.0 / ((2.0 * s.abs()).exp() + 1.0);
        if gap == 0.0 || w == 0.0 {
            return 0.0;
        }
        let x = if s >= 0.0 { b - gap } else { a + gap };
        evaluations += 1;
        let v = f(x, gap);
        if v.is_finite() {
            v * w
        } else {
            0.0
        }
    };
    let mut h = 1.0;
    let mut sum = eval(0.0, &mut f);
    let mut k = 1;
    while k as f64 * h <= t_max {
        let t = k as f64 * h;
        sum += eval(t, &mut f) + eval(-t, &mut f);
        k += 1;
    }
    let mut estimate = sum * h * half;
    let mut error = f64::INFINITY;
    for _ in 1..=max_level {
        h *= 0.5;
        let mut k = 1;
        while k as f64 * h <= t_max {
            let t = k as f64 * h;
            sum += eval(t, &mut f) + eval(-t, &mut f);
            k += 2;
        }
        let next = sum * h * half;
        error = (next - estimate).abs();
        estimate = next;
        if error <= tol.max(1e-15 * estimate.abs()) {
            break;
        }
    }
    QuadResult { value: estimate, error, evaluations }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mp::Mp;
    use crate::scalar::Scalar;

    #[test]
    fn gauss_legendre_integrates_polynomials_exactly() {
        let rule = GaussLegendre::<f64>::new(10);
        let v: f64 = rule.apply(&mut |x: &f64| x.powi(19) + x.powi(18), &-1.0, &1.0);
        assert!((v - 2.0 / 19.0).abs() < 1e-14);
    }

    #[test]
    fn adaptive_rule_reaches_multiprecision_targets() {
        let rule = GaussLegendre::<Mp>::cached(32);
        let tol = Mp::tenth_pow(45);
        let one = Mp::from_i64(1);
        let r = rule.integrate(|x: &Mp| x.exp(), Mp::from_i64(0), one.clone(), &tol);
        let exact = one.exp() - one;
        assert!((r.value - exact).abs() < Mp::tenth_pow(44));
    }

    #[test]
    fn cached_rules_are_shared() {
        let a = GaussLegendre::<f64>::cached(12);
        let b = GaussLegendre::<f64>::cached(12);
        assert!(Arc::ptr_eq(&a, &b));
    }

    #[test]
    fn tanh_sinh_handles_log_endpoint_singularities() {
        // ∫_0^1 ln x dx = -1, with the singular end fed by its gap.
        let r = tanh_sinh(|x, gap| if x < 0.5 { gap.ln() } else { x.ln() }, 0.0, 1.0, 1e-13, 12);
        assert!((r.value + 1.0).abs() < 1e-12, "{}", r.value);
    }

    #[test]
    fn complex_integrands_accumulate() {
        let rule = GaussLegendre::<f64>::cached(16);
        let r: QuadResult<C<f64>> = rule.integrate(|x: &f64| cplx::cf(x.cos(), x.sin()), 0.0, 1.0, &1e-14);
        assert!((r.value.re - 1f64.sin()).abs() < 1e-13);
        assert!((r.value.im - (1.0 - 1f64.cos())).abs() < 1e-13);
    }
}
