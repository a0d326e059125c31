//! One line per acceptance criterion. Exits nonzero only when a criterion
//! outside the known-failing list fails.

use std::process::ExitCode;
use zfr_core::complexcheck::check_cot1;
use zfr_core::mollifier::solve_theta;
use zfr_core::report::Report;
use zfr_core::suites::{run_suite, Suite, SuiteParams};
use zfr_core::zeros::{parse_zeros, sum_inv_rho_sq};
use zfr_core::{mp, Mp, Real, Scalar};

/// X(t) peaks at 5.60340 near log t = 43349, above the displayed 5.6008.
const KNOWN_FAILING: [u32; 1] = [10];

struct Outcome {
    id: u32,
    title: &'static str,
    pass: bool,
    detail: String,
}

fn entries_pass(r: &Report, names: &[&str]) -> (bool, String) {
    let mut bad = Vec::new();
    for name in names {
        match r.get(name) {
            Some(e) if e.passed() => {}
            Some(e) => bad.push(format!("{name} (computed {}, bound {})", e.computed, e.bound)),
            None => bad.push(format!("{name} missing")),
        }
    }
    if bad.is_empty() {
        (true, format!("{} {} pass", names.len(), if names.len() == 1 { "entry" } else { "entries" }))
    } else {
        (false, bad.join("; "))
    }
}

fn prefix_pass(r: &Report, prefix: &str) -> (bool, Vec<String>) {
    let names: Vec<String> = r.entries.iter().filter(|e| e.name.starts_with(prefix)).map(|e| e.name.clone()).collect();
    let ok = !names.is_empty() && names.iter().all(|n| r.get(n).is_some_and(|e| e.passed()));
    (ok, names)
}

fn positive_margins(r: &Report, names: &[&str]) -> (bool, String) {
    let (ok, detail) = entries_pass(r, names);
    let margins: Vec<String> = names.iter().filter_map(|n| r.get(n)).map(|e| format!("{} margin {}", e.name, e.margin)).collect();
    (ok && names.iter().all(|n| r.get(n).is_some_and(|e| e.margin() > 0.0)), if ok { margins.join(", ") } else { detail })
}

fn main() -> ExitCode {
    mp::set_digits(mp::DEFAULT_DIGITS);
    let zeros_path = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/data/zeros.txt");
    let ds = match parse_zeros(zeros_path) {
        Ok(ds) => ds,
        Err(e) => {
            eprintln!("cannot read {zeros_path}: {e}");
            return ExitCode::FAILURE;
        }
    };
    let params = SuiteParams::<Mp> { zeros: Some(ds.clone()), ..SuiteParams::standard() };
    let (first, second) = match (run_suite(Suite::All, &params), run_suite(Suite::All, &params)) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => {
            eprintln!("suite error: {e}");
            return ExitCode::FAILURE;
        }
    };
    let r = &first;
    let mut out = Vec::new();
    let mut push = |id, title, (pass, detail): (bool, String)| out.push(Outcome { id, title, pass, detail });

    let theta = solve_theta(&Mp::from_decimal("10.01055"), &Mp::from_decimal("17.145")).unwrap();
    let dev = (theta - Mp::from_decimal("1.152214629976363048877")).abs();
    push(1, "theta reproduction", (dev <= Mp::tenth_pow(18), format!("deviation {}", dev.to_decimal(3))));

    push(
        2,
        "kernel constants",
        entries_pass(
            r,
            &["constants.kernel.w0", "constants.kernel.c0", "constants.kernel.c1", "constants.kernel.c2", "constants.kernel.c3", "constants.kernel.w_at_0", "constants.kernel.w_at_minus1"],
        ),
    );
    push(3, "coefficients", entries_pass(r, &["constants.b0", "constants.b1", "constants.b2", "constants.b3", "constants.b4", "constants.b5", "constants.trig_identity"]));
    push(4, "main-term constant", entries_pass(r, &["constants.main_term.lower", "constants.main_term.upper"]));
    push(5, "figure of merit", entries_pass(r, &["constants.merit.lower", "constants.merit.upper", "constants.merit.near_optimal"]));
    push(6, "H and c4", positive_margins(r, &["constants.h_249", "constants.c4_249", "constants.c4_79"]));

    let ident = sum_inv_rho_sq::<Mp>(&ds).identity_value;
    let ident_dev = (ident - Mp::from_decimal("0.02309570896612103381431")).abs();
    let (ok7, d7) = entries_pass(r, &["constants.inv_rho_sq", "zeros.inv_rho_sq_partial"]);
    push(7, "sum over zeros of 1/|rho|^2", (ok7 && ident_dev <= Mp::tenth_pow(15), format!("identity deviation {}; {d7}", ident_dev.to_decimal(3))));
    push(8, "Lambda sum", entries_pass(r, &["constants.lambda_sum", "constants.lambda_sum.stability"]));
    push(9, "region constants", entries_pass(r, &["thm1.constant.lower", "thm1.constant.upper", "thm5.vk_constant", "thm4.constant", "thm4.monotone"]));

    let (ok10, d10) = entries_pass(r, &["thm2.x_envelope"]);
    let note10 = r.get("thm2.x_envelope").map(|e| e.note.clone()).unwrap_or_default();
    push(10, "X(t) envelope", (ok10, if ok10 { d10 } else { format!("{d10}; {note10}") }));

    let cot1 = check_cot1::<Mp>(4000);
    let targets: [(f64, f64); 3] = [(1.6421, 0.0), (0.6421, 1.0), (0.6421, -1.0)];
    let minima_ok = targets.iter().all(|t| {
        cot1.local_minima.iter().any(|(z, _)| (z.re.to_f64() - t.0).hypot(z.im.to_f64() - t.1) < 1e-2)
    });
    let cot1_ok = cot1.min_value >= Mp::from_decimal("0.3757") && minima_ok;
    let quarter = (Mp::pi() / Mp::from_i64(4)).to_decimal(4);
    let linear = |b: &str| format!("complex.cot_linear.{}_{quarter}", Mp::from_decimal(b).to_decimal(4));
    let vc = r.entries.iter().find(|e| e.name.starts_with("complex.vc_lower")).map(|e| e.name.clone()).unwrap_or_default();
    // The 0.333 entry is marked as expected to fail, so it passes only when the raw check fails.
    let (ok11, d11) = entries_pass(r, &["complex.cot_lemma", &vc, &linear("0.348"), &linear("0.333")]);
    push(11, "boundary certificates", (ok11 && cot1_ok, format!("cot1 min {} with minimizers matched: {minima_ok}; {d11}", cot1.min_value.to_decimal(8))));

    let (ok12, d12) = entries_pass(r, &["zeros.rosser_bracket"]);
    push(12, "Rosser bracket", (ok12 && ds.len() >= 10_000, format!("{} ordinates up to {}; {d12}", ds.len(), ds.t_max)));

    let (ok13, names13) = prefix_pass(r, "integral.");
    let heights_ok = ["100", "1000", "10000"].iter().all(|t| names13.contains(&format!("integral.clas.{t}")) && names13.contains(&format!("integral.clas.hypothesis.{t}")));
    let general_ok = names13.iter().any(|n| n.starts_with("integral.general.s0.75")) && names13.iter().any(|n| n.starts_with("integral.general.hypothesis.s0.75"));
    push(13, "quadrature empirics", (ok13 && heights_ok && general_ok, format!("{} entries pass", names13.len())));

    let (a, b) = (first.to_json(), second.to_json());
    push(14, "determinism", (a == b, format!("{} bytes per report", a.len())));

    let mut unexpected = 0;
    for o in &out {
        let known = KNOWN_FAILING.contains(&o.id);
        let tag = match (o.pass, known) {
            (true, false) => "PASS",
            (true, true) => "PASS (listed as known-failing)",
            (false, true) => "FAIL (known)",
            (false, false) => {
                unexpected += 1;
                "FAIL"
            }
        };
        println!("criterion {:>2} {:<32} {tag}: {}", o.id, o.title, o.detail);
    }
    println!("{} of {} criteria pass; {unexpected} unexpected failures", out.iter().filter(|o| o.pass).count(), out.len());
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
