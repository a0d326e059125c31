//! The nonnegative cosine polynomial `Σ b_j cos(jθ) = 8(cosθ+a₁)²(cosθ+a₂)²`
//! and the search for good `(a₁, a₂)`.

use crate::error::Result;
use crate::mollifier::solve_theta;
use crate::scalar::{Real, Scalar};

#[derive(Debug, Clone, PartialEq)]
pub struct TrigCoefficients<T> {
    pub a1: T,
    pub a2: T,
    /// `b[j]` multiplies `cos(jθ)`.
    pub b: [T; 5],
    /// `b1 + b2 + b3 + b4`.
    pub b5: T,
}

impl<T: Scalar> TrigCoefficients<T> {
    pub fn b0(&self) -> &T {
        &self.b[0]
    }
    pub fn b1(&self) -> &T {
        &self.b[1]
    }
}

/// Coefficients of the cosine polynomial for the pair `(a₁, a₂)`.
pub fn coefficients<T: Scalar>(a1: T, a2: T) -> TrigCoefficients<T> {
    let i = T::from_i64;
    let p = a1.clone() * a2.clone();
    let s = a1.clone() + a2.clone();
    let b4 = T::one();
    let b3 = i(4) * s.clone();
    // Grouped so that swapping a₁ and a₂ is bit-exact in floating point.
    let b2 = i(4) * (T::one() + (a1.clone() * a1.clone() + a2.clone() * a2.clone()) + i(4) * p.clone());
    let b1 = s * (i(12) + i(16) * p.clone());
    let b0 = b2.clone() - T::one() + i(8) * p.clone() * p;
    let b5 = b1.clone() + b2.clone() + b3.clone() + b4.clone();
    TrigCoefficients { a1, a2, b: [b0, b1, b2, b3, b4], b5 }
}

pub fn polynomial<T: Real>(c: &TrigCoefficients<T>, theta: &T) -> T {
    c.b.iter()
        .enumerate()
        .fold(T::zero(), |acc, (j, b)| acc + b.clone() * (T::from_i64(j as i64) * theta.clone()).cos())
}

/// `Σ b_j cos(jθ) − 8(cosθ+a₁)²(cosθ+a₂)²`.
pub fn identity_residual<T: Real>(c: &TrigCoefficients<T>, theta: &T) -> T {
    let x = theta.cos();
    let rhs = T::from_i64(8) * (x.clone() + c.a1.clone()).sq() * (x + c.a2.clone()).sq();
    polynomial(c, theta) - rhs
}

#[derive(Debug, Clone, PartialEq)]
pub struct FigureOfMerit<T> {
    /// `cos²θ`, with θ the kernel parameter for this `b₁/b₀`.
    pub numerator: T,
    /// `(b₅/b₀)(1+b₀/b₅)^{1/3}(3/4)^{2/3}`.
    pub main_constant: T,
    pub asymptotic_m: T,
}

pub fn main_constant<T: Real>(c: &TrigCoefficients<T>) -> T {
    let r = c.b5.clone() / c.b0().clone();
    let three_quarters = T::ratio(3, 4);
    r.clone() * (T::one() + T::one() / r).cbrt() * three_quarters.cbrt().sq()
}

pub fn figure_of_merit<T: Real>(a1: T, a2: T) -> Result<FigureOfMerit<T>> {
    let c = coefficients(a1, a2);
    let theta = solve_theta(c.b0(), c.b1())?;
    let numerator = theta.cos().sq();
    let main_constant = main_constant(&c);
    let asymptotic_m = numerator.clone() / main_constant.clone();
    Ok(FigureOfMerit { numerator, main_constant, asymptotic_m })
}

#[derive(Debug, Clone, PartialEq)]
pub struct SearchBox<T> {
    pub a1: (T, T),
    pub a2: (T, T),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Optimum<T> {
    pub best_a1: T,
    pub best_a2: T,
    pub best_m: T,
}

fn merit_or_floor<T: Real>(a1: &T, a2: &T) -> Option<T> {
    figure_of_merit(a1.clone(), a2.clone()).ok().map(|f| f.asymptotic_m)
}

/// Grid search for the largest asymptotic constant, then coordinate descent
/// from the best grid point. Ties keep the point found first in row-major
/// order (smaller `a₁`, then smaller `a₂`), so the result is reproducible.
pub fn optimize<T: Real>(bx: &SearchBox<T>, grid: usize, refine_iters: usize) -> Optimum<T> {
    let grid = grid.max(2);
    let axis = |(lo, hi): &(T, T)| -> Vec<T> {
        if lo == hi {
            return vec![lo.clone()];
        }
        let step = (hi.clone() - lo.clone()) / T::from_i64(grid as i64 - 1);
        (0..grid).map(|i| lo.clone() + step.clone() * T::from_i64(i as i64)).collect()
    };
    let xs = axis(&bx.a1);
    let ys = axis(&bx.a2);
    let mut best: Option<(T, T, T)> = None;
    for x in &xs {
        for y in &ys {
            if let Some(m) = merit_or_floor(x, y) {
                if best.as_ref().map_or(true, |(_, _, bm)| m > *bm) {
                    best = Some((x.clone(), y.clone(), m));
                }
            }
        }
    }
    let (mut x, mut y, mut m) = best.unwrap_or_else(|| (bx.a1.0.clone(), bx.a2.0.clone(), T::zero()));
    let spacing = |(lo, hi): &(T, T)| (hi.clone() - lo.clone()) / T::from_i64(grid as i64 - 1);
    let mut steps = [spacing(&bx.a1), spacing(&bx.a2)];
    let clamp = |v: T, (lo, hi): &(T, T)| v.max(lo.clone()).min(hi.clone());
    for _ in 0..refine_iters {
        let mut improved = false;
        for (axis_ix, step) in steps.iter().enumerate() {
            let step = step.clone();
            if step.is_zero() {
                continue;
            }
            for dir in [-T::one(), T::one()] {
                let (cx, cy) = if axis_ix == 0 {
                    (clamp(x.clone() + dir.clone() * step.clone(), &bx.a1), y.clone())
                } else {
                    (x.clone(), clamp(y.clone() + dir.clone() * step.clone(), &bx.a2))
                };
                if let Some(cm) = merit_or_floor(&cx, &cy) {
                    if cm > m {
                        x = cx;
                        y = cy;
                        m = cm;
                        improved = true;
                        break;
                    }
                }
            }
        }
        if !improved {
            for s in steps.iter_mut() {
                *s = s.clone() * T::half();
            }
        }
    }
    Optimum { best_a1: x, best_a2: y, best_m: m }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mp::Mp;
    use num_rational::BigRational;

    #[test]
    fn printed_coefficients_are_exact_in_rationals() {
        let c = coefficients(BigRational::from_decimal("0.225"), BigRational::from_decimal("0.9"));
        let want = ["10.01055", "17.145", "10.6825", "4.5", "1"];
        for (b, w) in c.b.iter().zip(want) {
            assert_eq!(*b, BigRational::from_decimal(w));
        }
        assert_eq!(c.b5, BigRational::from_decimal("33.3275"));
    }

    #[test]
    fn degenerate_pairs_collapse() {
        let z = coefficients(0i64 as f64, 0.0);
        assert_eq!(z.b, [3.0, 0.0, 4.0, 0.0, 1.0]);
        assert_eq!(z.b5, 5.0);
        let o = coefficients(1.0f64, 1.0);
        assert_eq!(o.b, [35.0, 56.0, 28.0, 8.0, 1.0]);
        assert_eq!(o.b5, 93.0);
    }

    #[test]
    fn fourier_oracle_recovers_the_unit_pair() {
        // Read b_j off 8(cosθ+1)^4 with a 4096-point discrete cosine transform.
        let n = 4096;
        let mut b = [0.0f64; 5];
        for k in 0..n {
            let th = 2.0 * std::f64::consts::PI * k as f64 / n as f64;
            let v = 8.0 * (th.cos() + 1.0).powi(4);
            for (j, bj) in b.iter_mut().enumerate() {
                *bj += v * (j as f64 * th).cos();
            }
        }
        let scale = |j: usize| if j == 0 { 1.0 / n as f64 } else { 2.0 / n as f64 };
        let c = coefficients(1.0f64, 1.0);
        for (j, bj) in b.iter().enumerate() {
            assert!((bj * scale(j) - c.b[j]).abs() < 1e-9, "b{j}");
        }
    }

    #[test]
    fn residual_vanishes_at_multiprecision() {
        let c = coefficients(Mp::from_decimal("0.225"), Mp::from_decimal("0.9"));
        for th in ["0", "1.3", "2.7"] {
            let r = identity_residual(&c, &Mp::from_decimal(th));
            assert!(r.abs() < Mp::tenth_pow(50), "{th}: {r}");
        }
    }

    #[test]
    fn perturbing_b0_shows_in_the_residual() {
        let mut c = coefficients(0.225f64, 0.9);
        c.b[0] += 1e-3;
        let r = identity_residual(&c, &std::f64::consts::FRAC_PI_2);
        assert!((r - 1e-3).abs() < 1e-12);
    }

    #[test]
    fn merit_at_the_chosen_pair() {
        let f = figure_of_merit(0.225f64, 0.9).unwrap();
        assert!((f.numerator - 0.16521).abs() < 5e-6);
        assert!(f.main_constant <= 2.99968 && f.main_constant > 2.9996);
        assert!((f.asymptotic_m - 0.05507).abs() < 1e-5);
        let g = figure_of_merit(0.9f64, 0.225).unwrap();
        assert_eq!(f, g);
    }

    #[test]
    fn degenerate_box_returns_its_point() {
        let bx = SearchBox { a1: (0.225, 0.225), a2: (0.9, 0.9) };
        let o = optimize(&bx, 8, 5);
        assert_eq!((o.best_a1, o.best_a2), (0.225, 0.9));
    }
}
