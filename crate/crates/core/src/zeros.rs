//! Datasets of zero ordinates, the explicit zero-counting formula, and
//! empirical checks of the zero-density sums used in the detector.
//!
//! Zeros in a dataset are taken to lie on the critical line, as the
//! published tables list ordinates only and the line has been verified far
//! beyond any desk-scale dataset.

use crate::error::{domain, Error, Result};
use crate::quad::GaussLegendre;
use crate::report::{Entry, Orientation};
use crate::scalar::Real;
use std::path::Path;

/// Ordinates closer than this are treated as a duplicated line.
pub const DUPLICATE_GAP: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct ZeroDataset {
    /// Strictly ascending ordinates `γ > 14.1` of zeros `1/2 + iγ`.
    pub ordinates: Vec<f64>,
    /// Height up to which the list is complete.
    pub t_max: f64,
    pub source: String,
}

pub fn parse_zeros(path: impl AsRef<Path>) -> Result<ZeroDataset> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_zeros_str(&text, &path.display().to_string())
}

/// Parses the line format: `# key=value` headers, one ordinate per line.
pub fn parse_zeros_str(text: &str, origin: &str) -> Result<ZeroDataset> {
    let mut ordinates: Vec<f64> = Vec::new();
    let mut t_max = None;
    let mut source = origin.to_string();
    let err = |line: usize, msg: String| Error::Parse { line, msg };
    for (ix, raw) in text.lines().enumerate() {
        let line = ix + 1;
        let l = raw.trim();
        if l.is_empty() {
            continue;
        }
        if let Some(header) = l.strip_prefix('#') {
            if let Some((k, v)) = header.trim().split_once('=') {
                match k.trim() {
                    "tmax" => {
                        let v: f64 = v.trim().parse().map_err(|_| err(line, format!("bad tmax value {:?}", v.trim())))?;
                        if !(v.is_finite() && v > 0.0) {
                            return Err(err(line, "tmax must be positive and finite".into()));
                        }
                        t_max = Some(v);
                    }
                    "source" => source = v.trim().to_string(),
                    _ => {}
                }
            }
            continue;
        }
        let g: f64 = l.parse().map_err(|_| err(line, format!("not a decimal ordinate: {l:?}")))?;
        if !g.is_finite() {
            return Err(err(line, "ordinate is not finite".into()));
        }
        if g <= 0.0 {
            return Err(err(line, "ordinate must be positive".into()));
        }
        if ordinates.is_empty() && g <= 14.1 {
            return Err(err(line, "no zero lies below height 14.1".into()));
        }
        if let Some(&prev) = ordinates.last() {
            if (g - prev).abs() <= DUPLICATE_GAP {
                return Err(err(line, format!("duplicate ordinate {g}")));
            }
            if g < prev {
                return Err(err(line, format!("ordering violation: {g} follows {prev}")));
            }
        }
        ordinates.push(g);
    }
    let Some(&last) = ordinates.last() else {
        return Err(err(0, "file contains no ordinates".into()));
    };
    Ok(ZeroDataset { t_max: t_max.unwrap_or(last), ordinates, source })
}

impl ZeroDataset {
    pub fn len(&self) -> usize {
        self.ordinates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ordinates.is_empty()
    }

    /// Number of ordinates in `(0, t]`.
    pub fn count_below(&self, t: f64) -> usize {
        self.ordinates.partition_point(|&g| g <= t)
    }

    /// Number of ordinates in `[lo, hi]`.
    pub fn count_between(&self, lo: f64, hi: f64) -> usize {
        self.ordinates.partition_point(|&g| g <= hi) - self.ordinates.partition_point(|&g| g < lo)
    }

    fn require(&self, t: f64) -> Result<()> {
        if t > self.t_max {
            return Err(Error::BeyondDataset { t, t_max: self.t_max });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RosserN<T> {
    pub main: T,
    pub q_bound: T,
}

/// `N(T) = (T/2π)log(T/2π) − T/2π + 7/8 + Q(T)` with
/// `|Q(T)| ≤ 0.137 log T + 0.443 log log T + 1.588`.
pub fn rosser_n<T: Real>(t: &T) -> Result<RosserN<T>> {
    if *t < T::two() {
        return Err(domain("counting formula needs T >= 2"));
    }
    let x = t.clone() / (T::two() * T::pi());
    let main = x.clone() * x.ln() - x + T::ratio(7, 8);
    let l = t.ln();
    let q_bound = T::from_decimal("0.137") * l.clone() + T::from_decimal("0.443") * l.ln() + T::from_decimal("1.588");
    Ok(RosserN { main, q_bound })
}

/// Largest `|N(T) − main(T)| / Q_bound(T)` over `samples` equally spaced
/// heights in `[20, t_max]`, and the height where it occurs.
pub fn rosser_bracket_ratio(ds: &ZeroDataset, samples: usize) -> (f64, f64) {
    let samples = samples.max(2);
    let mut worst = (0.0, 20.0);
    for i in 0..samples {
        let t = 20.0 + (ds.t_max - 20.0) * i as f64 / (samples - 1) as f64;
        let r = rosser_n(&t).expect("t >= 20");
        let dev = (ds.count_below(t) as f64 - r.main).abs() / r.q_bound;
        if dev > worst.0 {
            worst = (dev, t);
        }
    }
    worst
}

pub fn check_rosser_bracket(ds: &ZeroDataset, samples: usize) -> Entry {
    let (ratio, at) = rosser_bracket_ratio(ds, samples);
    Entry::exact(
        "zeros.rosser_bracket",
        "|N(T) - main(T)| / Q_bound(T) <= 1 at sampled heights",
        &ratio,
        Orientation::AtMost,
        &1.0,
    )
    .with_note(format!("{samples} heights in [20, {}], worst at T = {at:.3}", ds.t_max))
}

/// Number of zeros with `|1+it−ρ| ≤ R`, i.e. `|t−γ| ≤ √(R²−1/4)`.
pub fn empirical_n_t_r(ds: &ZeroDataset, t: f64, r: f64) -> Result<usize> {
    ds.require(t + r)?;
    if r < 0.5 {
        return Ok(0);
    }
    let half = (r * r - 0.25).sqrt();
    Ok(ds.count_between(t - half, t + half))
}

pub fn n_t_r_bound<T: Real>(t: &T, r: &T, a: &T, b: &T) -> T {
    let l = t.ln();
    T::from_decimal("1.3478") * r.powf(&T::from_decimal("1.5")) * b.clone() * l.clone()
        + T::from_decimal("0.49")
        + (a.ln() - r.ln() + T::from_i64(2) / T::from_i64(3) * l.ln()) / T::from_decimal("1.879")
}

pub fn check_n_t_r_bound(ds: &ZeroDataset, t: f64, r: f64, a: f64, b: f64) -> Result<Entry> {
    if !(r > 0.0 && r <= 0.25) || t < 100.0 || a <= 1.0 || b <= 0.0 {
        return Err(domain("zero count bound needs 0 < R <= 1/4, t >= 100, A > 1, B > 0"));
    }
    let n = empirical_n_t_r(ds, t, r)? as f64;
    Ok(Entry::exact(
        format!("zeros.n_t_r.t{t}_r{r}"),
        "N(t,R) <= 1.3478 R^(3/2) B log t + 0.49 + (log A - log R + (2/3) loglog t)/1.879",
        &n,
        Orientation::AtMost,
        &n_t_r_bound(&t, &r, &a, &b),
    ))
}

#[derive(Debug, Clone, PartialEq)]
pub struct SumInvRhoSq<T> {
    pub empirical_partial: T,
    /// `Σ Re ρ/|ρ|² = 1 + γ/2 − ½ log 4π`.
    pub identity_value: T,
    pub bound: T,
}

pub fn sum_inv_rho_sq<T: Real>(ds: &ZeroDataset) -> SumInvRhoSq<T> {
    let identity_value = T::one() + T::euler_gamma() * T::half() - (T::from_i64(4) * T::pi()).ln() * T::half();
    let m = T::from_decimal("14.1");
    let bound = (T::one() + (T::one() + T::one() / m.sq()).sqrt()) * identity_value.clone();
    let quarter = T::ratio(1, 4);
    // Summed from the top so the small terms are not lost.
    let empirical_partial = ds
        .ordinates
        .iter()
        .rev()
        .fold(T::zero(), |acc, &g| acc + T::two() / (quarter.clone() + T::from_f64(g).sq()));
    SumInvRhoSq { empirical_partial, identity_value, bound }
}

/// `1/|1+it−ρ|²` for `ρ = 1/2 + iγ`.
fn inv_dist2(t: f64, g: f64) -> f64 {
    1.0 / (0.25 + (t - g) * (t - g))
}

/// Upper bound for `Σ_{γ > t_max} 1/(γ − y)²` from the counting formula:
/// partial summation against `main + Q_bound`, minus the exact count at
/// `t_max`.
pub fn dataset_tail(ds: &ZeroDataset, y: f64) -> f64 {
    let tm = ds.t_max;
    let d = tm - y;
    let envelope = |u: f64| {
        let r = rosser_n(&u).expect("u >= 2");
        r.main + r.q_bound
    };
    // u = t_max + d·x/(1−x) maps [0, 1) onto [t_max, ∞).
    let rule = GaussLegendre::<f64>::cached(24);
    let integral = rule
        .integrate(
            |x: &f64| {
                if *x >= 1.0 {
                    return 0.0;
                }
                let u = tm + d * x / (1.0 - x);
                let du = d / ((1.0 - x) * (1.0 - x));
                envelope(u) / (u - y).powi(3) * du
            },
            0.0,
            1.0,
            &1e-12,
        )
        .value;
    (2.0 * integral - ds.count_below(tm) as f64 / (d * d)).max(0.0)
}

#[derive(Debug, Clone, PartialEq)]
pub struct NearSums {
    /// Zeros in the upper half-plane with `|1+it−ρ| ≥ v`, from the dataset.
    pub upper: f64,
    /// Their conjugates.
    pub conjugate: f64,
    /// Bound for zeros above `t_max`, both half-planes.
    pub tail: f64,
    /// Part with `|γ − t| ≥ 1`, upper and conjugate, tail included.
    pub s1: f64,
}

impl NearSums {
    pub fn total(&self) -> f64 {
        self.upper + self.conjugate + self.tail
    }
}

/// `Σ_{|1+it−ρ| ≥ v} |1+it−ρ|^{-2}` over all nontrivial zeros.
pub fn near_sums(ds: &ZeroDataset, t: f64, v: f64) -> Result<NearSums> {
    ds.require(t + 2.0)?;
    let mut upper = 0.0;
    let mut conjugate = 0.0;
    let mut s1 = 0.0;
    for &g in ds.ordinates.iter().rev() {
        if g > ds.t_max {
            continue;
        }
        let d = inv_dist2(t, g);
        if d.sqrt().recip() >= v {
            upper += d;
            if (g - t).abs() >= 1.0 {
                s1 += d;
            }
        }
        let dc = inv_dist2(t, -g);
        conjugate += dc;
        s1 += dc;
    }
    let tail = dataset_tail(ds, t) + dataset_tail(ds, -t);
    Ok(NearSums { upper, conjugate, tail, s1: s1 + tail })
}

pub fn zeros_near_bound(t: f64, v: f64, a: f64, b: f64, n_t_v: f64) -> f64 {
    let (l, ll) = (t.ln(), t.ln().ln());
    (6.132 + 5.392 * b * (v.powf(-0.5) - 2.0)) * l + 13.5 - 8.5 * a.ln()
        + 4.0 * ll
        + ((a.ln() - v.ln() + 2.0 / 3.0 * ll) / 1.879 + 0.224 - n_t_v) / (v * v)
}

pub fn s1_bound(t: f64) -> f64 {
    0.8664 * t.ln() + 1.772 * t.ln().ln() + 5.77
}

/// The near-zero sum against its envelope, and the `|γ−t| ≥ 1` part alone.
pub fn check_zeros_near_bound(ds: &ZeroDataset, t: f64, v: f64, a: f64, b: f64) -> Result<Vec<Entry>> {
    if t < 1e4 || !(v > 0.0 && v <= 0.25) || a <= 1.0 || b <= 0.0 {
        return Err(domain("near-zero sum needs t >= 1e4, 0 < v <= 1/4, A > 1, B > 0"));
    }
    let sums = near_sums(ds, t, v)?;
    let n = empirical_n_t_r(ds, t, v)? as f64;
    let note = format!("dataset zeros placed on the critical line; tail beyond {} bounded by {:.3e}", ds.t_max, sums.tail);
    Ok(vec![
        Entry::exact(
            format!("zeros.near_sum.t{t}_v{v}"),
            "sum over |1+it-rho| >= v of |1+it-rho|^-2 <= (6.132 + 5.392 B (v^-1/2 - 2)) log t + 13.5 - 8.5 log A + 4 loglog t + (...)/v^2",
            &sums.total(),
            Orientation::AtMost,
            &zeros_near_bound(t, v, a, b, n),
        )
        .with_note(note),
        Entry::exact(
            format!("zeros.s1.t{t}"),
            "sum over |Im rho - t| >= 1 of |1+it-rho|^-2 <= 0.8664 log t + 1.772 loglog t + 5.77",
            &sums.s1,
            Orientation::AtMost,
            &s1_bound(t),
        ),
    ])
}

pub fn sum_zero2_bound(t: f64, n_half: f64) -> f64 {
    3.2357 * t.ln() + 5.316 * t.ln().ln() + 16.134 - 4.0 * n_half
}

pub fn check_sum_zero2(ds: &ZeroDataset, t: f64) -> Result<Entry> {
    if t < 1e4 {
        return Err(domain("second near-zero sum needs t >= 1e4"));
    }
    let sums = near_sums(ds, t, 0.5)?;
    let n = empirical_n_t_r(ds, t, 0.5)? as f64;
    Ok(Entry::exact(
        format!("zeros.sum_zero2.t{t}"),
        "sum over |1+it-rho| >= 1/2 of |1+it-rho|^-2 <= 3.2357 log t + 5.316 loglog t + 16.134 - 4 N(t,1/2)",
        &sums.total(),
        Orientation::AtMost,
        &sum_zero2_bound(t, n),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    const FIRST: &str = "14.134725141734693\n21.022039638771555\n25.010857580145689\n";

    #[test]
    fn parses_the_first_three_zeros() {
        let ds = parse_zeros_str(FIRST, "inline").unwrap();
        assert_eq!(ds.len(), 3);
        assert_eq!(ds.t_max, 25.010_857_580_145_69);
        let with_header = format!("# tmax=30\n# source=table\n{FIRST}");
        let ds = parse_zeros_str(&with_header, "inline").unwrap();
        assert_eq!((ds.t_max, ds.source.as_str()), (30.0, "table"));
    }

    #[test]
    fn rejects_malformed_files() {
        let bad = |s: &str| parse_zeros_str(s, "x").unwrap_err();
        assert_eq!(bad("21.0\n14.2\n"), Error::Parse { line: 2, msg: "ordering violation: 14.2 follows 21".into() });
        assert!(matches!(bad("14.2\n14.2\n"), Error::Parse { line: 2, .. }));
        assert!(matches!(bad("NaN\n"), Error::Parse { line: 1, .. }));
        assert!(matches!(bad("-15\n"), Error::Parse { line: 1, .. }));
        assert!(matches!(bad("x1\n"), Error::Parse { line: 1, .. }));
        assert!(matches!(bad("13.0\n"), Error::Parse { line: 1, .. }));
        assert!(matches!(bad("# tmax=5\n"), Error::Parse { line: 0, .. }));
    }

    #[test]
    fn counting_formula_collapses_at_two_pi_e() {
        let t = 2.0 * std::f64::consts::PI * std::f64::consts::E;
        assert!((rosser_n(&t).unwrap().main - 0.875).abs() < 1e-14);
        let r = rosser_n(&100.0f64).unwrap();
        assert!((r.main - 29.0).abs() < 0.01);
        assert!((29.0 - r.main).abs() <= r.q_bound);
        assert!(rosser_n(&1.0f64).is_err());
    }

    #[test]
    fn small_disks_miss_the_line() {
        let ds = parse_zeros_str(&format!("# tmax=30\n{FIRST}"), "x").unwrap();
        assert_eq!(empirical_n_t_r(&ds, 20.0, 0.4).unwrap(), 0);
        assert_eq!(empirical_n_t_r(&ds, 14.134725, 0.6).unwrap(), 1);
        assert!(matches!(empirical_n_t_r(&ds, 29.5, 1.0), Err(Error::BeyondDataset { .. })));
    }

    #[test]
    fn identity_and_bound_values() {
        let ds = parse_zeros_str(FIRST, "x").unwrap();
        let s = sum_inv_rho_sq::<f64>(&ds);
        assert!((s.identity_value - 0.0230957).abs() < 1e-6);
        assert!(s.bound <= 0.0463 && (s.bound - 0.04625).abs() < 1e-4);
        assert!(s.empirical_partial < s.bound);
    }

    #[test]
    fn near_bound_seam_at_a_quarter() {
        // At v = 1/4 the v^-1/2 - 2 factor vanishes.
        let a = zeros_near_bound(1e4, 0.25, 76.2, 4.45, 0.0);
        let b = zeros_near_bound(1e4, 0.25, 76.2, 0.0, 0.0);
        assert!((a - b).abs() < 1e-12);
        assert_eq!(sum_zero2_bound(1e4, 0.0), 3.2357 * 1e4f64.ln() + 5.316 * 1e4f64.ln().ln() + 16.134);
    }
}
