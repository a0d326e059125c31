//! Exact Bernoulli numbers and the series coefficients derived from them.

use crate::scalar::{rational_to_real, Real};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::sync::OnceLock;

/// Largest index `n` for which [`bernoulli`] is tabulated.
pub const MAX_INDEX: usize = 160;

/// Terms used by the Laurent-subtracted cotangent series for `|z| < 1/4`;
/// the ratio of successive terms is at most `(1/(4π))²`.
pub const COT_SERIES_TERMS: usize = 34;

fn table() -> &'static [BigRational] {
    static TABLE: OnceLock<Vec<BigRational>> = OnceLock::new();
    TABLE.get_or_init(|| {
        // Akiyama–Tanigawa yields B_n with the B_1 = +1/2 convention.
        let n_max = MAX_INDEX;
        let mut a: Vec<BigRational> = Vec::with_capacity(n_max + 1);
        let mut out = Vec::with_capacity(n_max + 1);
        for m in 0..=n_max {
            a.push(BigRational::new(BigInt::one(), BigInt::from(m as u64 + 1)));
            for j in (1..=m).rev() {
                let diff = a[j - 1].clone() - a[j].clone();
                a[j - 1] = BigRational::from_integer(BigInt::from(j as u64)) * diff;
            }
            out.push(a[0].clone());
        }
        out[1] = -out[1].clone();
        out
    })
}

/// `B_n` with the convention `B_1 = −1/2`.
pub fn bernoulli(n: usize) -> &'static BigRational {
    assert!(n <= MAX_INDEX, "Bernoulli index {n} beyond table");
    &table()[n]
}

fn factorial(n: usize) -> BigInt {
    (1..=n as u64).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// `B_{2k} / (2k)!`, the Euler–Maclaurin weight.
pub fn em_weight(k: usize) -> BigRational {
    em_table()[k].0.clone()
}

fn em_table() -> &'static [(BigRational, f64)] {
    static TABLE: OnceLock<Vec<(BigRational, f64)>> = OnceLock::new();
    TABLE.get_or_init(|| {
        (0..=MAX_INDEX / 2)
            .map(|k| {
                let w = bernoulli(2 * k).clone() / BigRational::from_integer(factorial(2 * k));
                let f = crate::scalar::rational_to_f64(&w);
                (w, f)
            })
            .collect()
    })
}

/// [`em_weight`] in `T`. Types no wider than a double take the cached
/// nearest double.
pub fn em_weight_real<T: Real>(k: usize) -> T {
    let (w, f) = &em_table()[k];
    if T::digits() <= 17 {
        T::from_f64(*f)
    } else {
        rational_to_real(w)
    }
}

/// Coefficient of `z^{2k−1}` in `cot z − 1/z`.
pub fn cot_series_rational(k: usize) -> BigRational {
    let sign = if k % 2 == 0 { BigInt::one() } else { -BigInt::one() };
    let pow = BigInt::one() << (2 * k);
    BigRational::from_integer(sign * pow) * em_weight(k)
}

pub fn cot_series_coefficient<T: Real>(k: usize) -> T {
    static CACHE: OnceLock<Vec<BigRational>> = OnceLock::new();
    let table = CACHE.get_or_init(|| (1..=COT_SERIES_TERMS).map(cot_series_rational).collect());
    let r = &table[k - 1];
    if r.is_zero() {
        T::zero()
    } else {
        rational_to_real(r)
    }
}
