//! Named verification suites, each producing a finished [`Report`].

use crate::complexcheck::{check_cot1, check_cot_lemma, check_cot_linear, check_rew_nonneg, check_vc_lower};
use crate::cplx::re;
use crate::error::{domain, Result};
use crate::mollifier::{laplace_oracle, solve_theta, verify_f0_decay, verify_w0_decay, MollifierKernel};
use crate::report::{Entry, Orientation, Report};
use crate::scalar::{rational_to_real, Real, Scalar};
use crate::theorems::{
    check_x_envelope, e_rational, lemma_constant_checks, m1, theorem1_constant, theorem2_pipeline, theorem3_pipeline,
    theorem5_checks, Height, RichertBound,
};
use crate::trig::{coefficients, figure_of_merit, identity_residual, optimize, SearchBox, TrigCoefficients};
use crate::zeros::{check_n_t_r_bound, check_rosser_bracket, check_sum_zero2, check_zeros_near_bound, sum_inv_rho_sq, ZeroDataset};
use crate::zetatools::{
    check_clas_int_bound, check_halfline_logderiv, check_line_integral_bound, check_zeta_sigma_bounds, lambda_sum, lambda_sum_to,
    LineIntegralSpec,
};
use num_rational::BigRational;
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Constants,
    Inequalities,
    Integrals,
    Zeros,
    Theorems,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 6] = ["constants", "inequalities", "integrals", "zeros", "theorems", "all"];
}

impl FromStr for Suite {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "constants" => Suite::Constants,
            "inequalities" => Suite::Inequalities,
            "integrals" => Suite::Integrals,
            "zeros" => Suite::Zeros,
            "theorems" => Suite::Theorems,
            "all" => Suite::All,
            _ => return Err(domain(format!("unknown suite {s:?}; expected one of {}", Suite::NAMES.join(", ")))),
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let i = *self as usize;
        f.write_str(Suite::NAMES[i])
    }
}

/// Inputs shared by the suites.
#[derive(Debug, Clone)]
pub struct SuiteParams<T> {
    pub richert: RichertBound<T>,
    /// `log T₀` for the Vinogradov–Korobov pipeline.
    pub log_t0: T,
    pub zeros: Option<ZeroDataset>,
}

impl<T: Real> SuiteParams<T> {
    /// `A = 76.2`, `B = 4.45`, `T₀ = e^{54550}`, no dataset.
    pub fn standard() -> Self {
        SuiteParams { richert: RichertBound::standard(), log_t0: T::from_i64(54_550), zeros: None }
    }
}

/// The printed `(a₁, a₂)` pair.
pub fn standard_coefficients<T: Real>() -> TrigCoefficients<T> {
    coefficients(T::from_decimal("0.225"), T::from_decimal("0.9"))
}

pub fn standard_kernel<T: Real>() -> Result<MollifierKernel<T>> {
    let c = standard_coefficients::<T>();
    MollifierKernel::from_coefficients(c.b0(), c.b1())
}

/// Printed digits need enough working precision to be reproduced.
fn printed_tol<T: Real>(want: u32) -> T {
    T::tenth_pow(want.min(T::digits().saturating_sub(4)))
}

pub fn run_suite<T: Real>(suite: Suite, p: &SuiteParams<T>) -> Result<Report> {
    let mut r = Report::new(T::digits());
    match suite {
        Suite::Constants => r.extend(constants::<T>()?),
        Suite::Inequalities => r.extend(inequalities::<T>()?),
        Suite::Integrals => r.extend(integrals()?),
        Suite::Zeros => r.extend(zeros(p.zeros.as_ref())?),
        Suite::Theorems => r.extend(theorems(p)?),
        Suite::All => {
            r.extend(constants::<T>()?);
            r.extend(inequalities::<T>()?);
            r.extend(integrals()?);
            r.extend(zeros(p.zeros.as_ref())?);
            r.extend(theorems(p)?);
        }
    }
    Ok(r.finish())
}

/// The printed kernel values.
pub const PRINTED_THETA: &str = "1.152214629976363048877";
pub const PRINTED_KERNEL: [(&str, &str); 5] = [
    ("w0", "6.82602968445295450905"),
    ("c0", "16.2983216223932350562"),
    ("c1", "16.2878103682166631825"),
    ("c2", "9.4813169452950521682"),
    ("c3", "10.3924962150333624895"),
];
pub const PRINTED_B: [&str; 6] = ["10.01055", "17.145", "10.6825", "4.5", "1", "33.3275"];

pub fn constants<T: Real>() -> Result<Vec<Entry>> {
    let c = standard_coefficients::<T>();
    let k = standard_kernel::<T>()?;
    let mut out = Vec::new();

    let theta = solve_theta(&T::from_decimal("10.01055"), &T::from_decimal("17.145"))?;
    out.push(Entry::agrees("constants.theta", "theta solving sin^2 theta = (b1/b0)(1 - theta cot theta)", &theta, &T::from_decimal(PRINTED_THETA), &printed_tol(18)));
    let values = [&k.w0, &k.c0, &k.c1, &k.c2, &k.c3];
    for ((name, printed), v) in PRINTED_KERNEL.iter().zip(values) {
        out.push(Entry::agrees(format!("constants.kernel.{name}"), format!("{name} matches {printed}"), v, &T::from_decimal(printed), &printed_tol(18)));
    }
    let oracle_tol = T::from_f64(1e-12);
    let w0_oracle = laplace_oracle(&re(T::zero()), &k.theta).re;
    let wm1_oracle = laplace_oracle(&re(-T::one()), &k.theta).re;
    out.push(Entry::agrees("constants.kernel.w_at_0", "closed form W(0) matches the quadrature transform", &k.w_at_0, &w0_oracle, &oracle_tol));
    out.push(Entry::agrees("constants.kernel.w_at_minus1", "closed form W(-1) matches the quadrature transform", &k.w_at_minus1, &wm1_oracle, &oracle_tol));

    let exact = coefficients(BigRational::from_decimal("0.225"), BigRational::from_decimal("0.9"));
    let all_b = exact.b.iter().chain(std::iter::once(&exact.b5));
    for (j, (b, printed)) in all_b.zip(PRINTED_B).enumerate() {
        let diff = rational_to_real::<T>(&(b.clone() - BigRational::from_decimal(printed))).abs();
        out.push(Entry::exact(format!("constants.b{j}"), format!("b{j} = {printed} in rational arithmetic"), &diff, Orientation::AtMost, &T::zero()));
    }
    out.push(Entry::exact(
        "constants.e_rational",
        "4(1 + b0/b5)/3 - 1733522/999825 = 0 in rational arithmetic",
        &rational_to_real::<T>(&(e_rational() - BigRational::ratio(1733522, 999825))).abs(),
        Orientation::AtMost,
        &T::zero(),
    ));
    let grid = 4096;
    let residual = (0..grid).fold(T::zero(), |acc, i| {
        let th = T::two() * T::pi() * T::from_i64(i) / T::from_i64(grid);
        acc.max(identity_residual(&c, &th).abs())
    });
    out.push(
        Entry::exact("constants.trig_identity", "|sum b_j cos(j theta) - 8(cos theta + a1)^2(cos theta + a2)^2| < 1e-25", &residual, Orientation::AtMost, &T::tenth_pow(25))
            .sampled()
            .with_note(format!("{grid} equally spaced theta in [0, 2pi)")),
    );

    let fm = figure_of_merit(T::from_decimal("0.225"), T::from_decimal("0.9"))?;
    out.push(Entry::exact("constants.main_term.upper", "(b5/b0)(1+b0/b5)^(1/3)(3/4)^(2/3) <= 2.99968", &fm.main_constant, Orientation::AtMost, &T::from_decimal("2.99968")));
    out.push(Entry::exact("constants.main_term.lower", "(b5/b0)(1+b0/b5)^(1/3)(3/4)^(2/3) > 2.9996", &fm.main_constant, Orientation::AtLeast, &T::from_decimal("2.9996")));
    out.push(Entry::exact("constants.merit.lower", "cos^2 theta / main constant >= 0.05507", &fm.asymptotic_m, Orientation::AtLeast, &T::from_decimal("0.05507")));
    out.push(Entry::exact("constants.merit.upper", "cos^2 theta / main constant < 0.05508", &fm.asymptotic_m, Orientation::AtMost, &T::from_decimal("0.05508")));
    let bx = SearchBox { a1: (T::from_decimal("0.1"), T::from_decimal("0.4")), a2: (T::from_decimal("0.7"), T::from_decimal("1.1")) };
    let opt = optimize(&bx, 16, 40);
    out.push(
        Entry::exact("constants.merit.near_optimal", "best merit on [0.1,0.4] x [0.7,1.1] minus merit at (0.225, 0.9) < 1e-4", &(opt.best_m.clone() - fm.asymptotic_m.clone()), Orientation::AtMost, &T::tenth_pow(4))
            .with_note(format!("best at a1 = {}, a2 = {}, merit {}", opt.best_a1.to_decimal(8), opt.best_a2.to_decimal(8), opt.best_m.to_decimal(10))),
    );

    let bc249 = k.bound_constants(&T::from_i64(249))?;
    out.push(Entry::exact("constants.h_249", "H(249) <= 171.8", &bc249.h_r, Orientation::AtMost, &T::from_decimal("171.8")));
    out.push(Entry::exact("constants.c4_249", "c4(249) <= 1.106", &bc249.c4, Orientation::AtMost, &T::from_decimal("1.106")));
    out.push(Entry::exact("constants.c4_79", "c4(79) <= 1.35", &k.bound_constants(&T::from_i64(79))?.c4, Orientation::AtMost, &T::from_decimal("1.35")));

    let ident = T::one() + T::euler_gamma() * T::half() - (T::from_i64(4) * T::pi()).ln() * T::half();
    let inv_sq_bound = (T::one() + (T::one() + T::one() / T::from_decimal("14.1").sq()).sqrt()) * ident.clone();
    out.push(Entry::exact("constants.inv_rho_sq", "sum 1/|rho|^2 <= (1 + sqrt(1 + 1/14.1^2))(1 + gamma/2 - log(4 pi)/2) <= 0.0463", &inv_sq_bound, Orientation::AtMost, &T::from_decimal("0.0463")));

    let ls = lambda_sum::<T>();
    out.push(
        Entry::exact("constants.lambda_sum", "2 sum Lambda(n)/(n^2 - n) <= 1.702, tail included", &(ls.value.clone() * T::two()), Orientation::AtMost, &T::from_decimal("1.702"))
            .with_note(format!("partial sum to {} plus tail bound {}", ls.cutoff, ls.tail_bound.to_decimal(6))),
    );
    let half = lambda_sum_to::<T>(ls.cutoff / 2);
    out.push(Entry::exact(
        "constants.lambda_sum.stability",
        "partial(N) - partial(N/2) <= tail bound at N/2",
        &(ls.partial.clone() - half.partial),
        Orientation::AtMost,
        &half.tail_bound,
    ));
    out.extend(lemma_constant_checks(&k, &c)?);
    Ok(out)
}

pub fn inequalities<T: Real>() -> Result<Vec<Entry>> {
    let k = standard_kernel::<T>()?;
    let mut out = vec![check_cot_lemma::<T>(2000).to_entry(), check_cot1::<T>(4000).to_entry()];
    let r249 = T::from_i64(249);
    let c5 = k.bound_constants(&r249)?.c5;
    out.push(check_vc_lower(&(T::pi() / T::from_i64(500)), &r249, &k, &c5, 2000)?.to_entry());
    out.push(check_rew_nonneg(&k, 2000).to_entry());
    let quarter = T::pi() / T::from_i64(4);
    out.push(check_cot_linear(&T::from_decimal("0.348"), &quarter, 2000)?.to_entry());
    out.push(check_cot_linear(&T::from_decimal("0.333"), &quarter, 2000)?.to_entry().expect_failure());
    out.push(check_cot_linear(&T::from_decimal("0.3334"), &(T::pi() / T::from_i64(160)), 500)?.to_entry());
    out.push(verify_w0_decay(&r249, &k, 2000)?);
    out.push(verify_w0_decay(&T::from_i64(79), &k, 2000)?);
    out.push(verify_f0_decay(&r249, &T::from_decimal("0.001"), &k, 200)?);
    let sigmas: Vec<T> = ["1.0001", "1.001", "1.01", "1.03", "1.06"].iter().map(|s| T::from_decimal(s)).collect();
    out.extend(check_zeta_sigma_bounds(&sigmas)?);
    let us: Vec<T> = [0i64, 1, 3, 10, 30, 100, 300, 1000].iter().map(|&u| T::from_i64(u)).collect();
    out.extend(check_halfline_logderiv(&us)?);
    Ok(out)
}

/// Heights for the sech²-weighted integral checks.
pub const INTEGRAL_HEIGHTS: [f64; 3] = [100.0, 1000.0, 1e4];

/// Quadrature empirics, evaluated in double precision.
pub fn integrals() -> Result<Vec<Entry>> {
    let mut out = Vec::new();
    for t in INTEGRAL_HEIGHTS {
        out.extend(check_clas_int_bound(t)?);
    }
    // The Richert bound at σ = 3/4: X = A, Y = B/8, Z = 2/3.
    let spec = LineIntegralSpec::new(0.75, 500.0, 0.2);
    out.extend(check_line_integral_bound(&spec, 76.2, 4.45 / 8.0, 2.0 / 3.0)?);
    Ok(out)
}

/// Dataset checks; every entry is reported as skipped without a dataset.
pub fn zeros(ds: Option<&ZeroDataset>) -> Result<Vec<Entry>> {
    let Some(ds) = ds else {
        let note = "no zeros file given";
        return Ok(vec![
            Entry::skipped("zeros.rosser_bracket", "|N(T) - main(T)| / Q_bound(T) <= 1 at sampled heights", note),
            Entry::skipped("zeros.inv_rho_sq_partial", "partial sum of 1/|rho|^2 <= bound", note),
            Entry::skipped("zeros.n_t_r", "N(t,R) bound at sampled heights", note),
            Entry::skipped("zeros.near_sum", "near-zero sums at t = 1e4", note),
        ]);
    };
    let mut out = Vec::new();
    let mut rosser = check_rosser_bracket(ds, 200);
    if ds.len() < 10_000 {
        rosser = rosser.with_note(format!("only {} ordinates; at least 10000 are needed for a meaningful bracket", ds.len()));
    }
    out.push(rosser);
    let s = sum_inv_rho_sq::<f64>(ds);
    out.push(
        Entry::exact("zeros.inv_rho_sq_partial", "sum over dataset zeros of 1/|rho|^2 <= bound", &s.empirical_partial, Orientation::AtMost, &s.bound)
            .with_note(format!("{} zeros up to {}", ds.len(), ds.t_max)),
    );
    let (a, b) = (76.2, 4.45);
    for t in [100.0, 1000.0, 5000.0, 10_000.0] {
        if t + 0.25 <= ds.t_max {
            for r in [0.1, 0.25] {
                out.push(check_n_t_r_bound(ds, t, r, a, b)?.with_note("dataset zeros lie on the critical line, at distance >= 1/2 from 1+it"));
            }
        }
    }
    if ds.t_max >= 10_002.0 {
        out.extend(check_zeros_near_bound(ds, 10_000.0, 0.25, a, b)?);
        out.push(check_sum_zero2(ds, 10_000.0)?);
    }
    Ok(out)
}

pub fn theorems<T: Real>(p: &SuiteParams<T>) -> Result<Vec<Entry>> {
    let c = standard_coefficients::<T>();
    let k = standard_kernel::<T>()?;
    let h0 = Height::from_log(p.log_t0.clone())?;
    let rb = &p.richert;
    let mut out = Vec::new();
    out.extend(theorem2_pipeline(&h0, rb, &c)?);
    out.extend(theorem3_pipeline(&k, &c)?);
    out.extend(theorem5_checks(&h0, rb, &T::from_decimal("57.54"))?);
    out.extend(check_x_envelope(rb, &T::from_i64(30_000), &T::from_i64(1_000_000), 100)?);
    let t1 = theorem1_constant(&rb.b);
    out.push(Entry::exact("thm1.constant.upper", "0.05507 B^(-2/3) <= 1/49.12", &t1, Orientation::AtMost, &(T::one() / T::from_decimal("49.12"))));
    out.push(Entry::exact("thm1.constant.lower", "0.05507 B^(-2/3) >= 1/49.14", &t1, Orientation::AtLeast, &(T::one() / T::from_decimal("49.14"))));
    let m = m1(&h0, rb)?;
    out.push(Entry::exact("thm2.m1", "M1 <= 0.05507", &m, Orientation::AtMost, &T::from_decimal("0.05507")));
    Ok(out)
}
