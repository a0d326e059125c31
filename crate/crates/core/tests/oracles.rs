//! Values computed independently with mpmath at 50 digits.

use zfr_core::mollifier::solve_theta;
use zfr_core::theorems::*;
use zfr_core::trig::{coefficients, figure_of_merit};
use zfr_core::zeros::{parse_zeros, sum_inv_rho_sq};
use zfr_core::zetatools::{j_eval, zeta_real};
use zfr_core::{Mp, Real, Scalar};

fn close(got: &Mp, want: &str, tol: u32) {
    let w = Mp::from_decimal(want);
    let d = (got.clone() - w).abs();
    assert!(d <= Mp::tenth_pow(tol), "{} vs {want}", got.to_decimal(30));
}

fn rb() -> RichertBound<Mp> {
    RichertBound::standard()
}

fn h(log_t: i64) -> Height<Mp> {
    Height::from_log(Mp::from_i64(log_t)).unwrap()
}

#[test]
fn kernel_angle() {
    let c = coefficients(Mp::from_decimal("0.225"), Mp::from_decimal("0.9"));
    close(&solve_theta(c.b0(), c.b1()).unwrap(), "1.152214629976363048877329662", 25);
}

#[test]
fn figure_of_merit_at_the_standard_pair() {
    let f = figure_of_merit(Mp::from_decimal("0.225"), Mp::from_decimal("0.9")).unwrap();
    close(&f.main_constant, "2.999677161875543784185", 20);
    close(&f.asymptotic_m, "0.05507719415473586549531", 22);
}

#[test]
fn eta_constant() {
    close(&e_constant::<Mp>(), "1.443234528467687036079", 20);
}

#[test]
fn x_at_the_handoff_height() {
    let h0 = h(54_550);
    let x = x_t(&h0, &rb());
    close(&x, "5.603290723410571133", 17);
    close(&(x / h0.loglog_t()), "0.5137394308982995035839", 20);
}

#[test]
fn x_elsewhere() {
    close(&x_t(&h(30_000), &rb()), "5.60309723706", 10);
    close(&x_t(&h(1_000_000), &rb()), "5.58796157798", 10);
}

#[test]
fn m1_and_region_constants() {
    let h0 = h(54_550);
    close(&m1(&h0, &rb()).unwrap(), "0.04701945294607297350214", 20);
    close(&vk_constant(&h0, &rb()).unwrap(), "0.01737951147697322794", 19);
    close(&theorem1_constant(&Mp::from_decimal("4.45")), "0.02035518571716711171", 19);
}

#[test]
fn supremum_of_x() {
    let r = check_x_envelope(&rb(), &Mp::from_i64(30_000), &Mp::from_i64(1_000_000), 100).unwrap();
    let env = r.iter().find(|e| e.name == "thm2.x_envelope").unwrap();
    assert!(env.note.contains("5.6034024"), "{}", env.note);
    let at = Height::from_log(Mp::from_decimal("43348.9087")).unwrap();
    close(&x_t(&at, &rb()), "5.6034023998215", 12);
}

#[test]
fn zeta_near_one() {
    close(&zeta_real(&Mp::from_decimal("1.01"), 40).unwrap(), "100.5779433384968724903", 18);
}

#[test]
fn classical_region_at_the_verified_height() {
    let t0 = classical_t0::<Mp>();
    close(&j_eval(&t0).unwrap(), "6.88117408815688", 13);
    close(&classical_region(&Height::from_t(&t0).unwrap()).unwrap(), "0.00587437355394593340", 19);
}

#[test]
fn inverse_square_identity() {
    let ds = parse_zeros(concat!(env!("CARGO_MANIFEST_DIR"), "/tests/data/zeros.txt")).unwrap();
    let v = sum_inv_rho_sq::<Mp>(&ds).identity_value;
    close(&v, "0.02309570896612103381431", 20);
}
