use std::process::{Command, Output};

fn zfr(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zfr")).args(args).output().expect("zfr runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn constants_for_the_standard_pair() {
    let o = zfr(&["constants"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("0.04701945294607297350214"), "{s}");
    assert!(s.contains("= 1/57.5390166361"), "{s}");
    assert!(s.contains("with c = 57.54:"), "{s}");
    assert!(s.contains("= 1/8.46233891893"), "{s}");
}

#[test]
fn infinite_height_gives_the_asymptotic_constant() {
    let o = zfr(&["constants", "--T0", "inf"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("M1                         0.05507"), "{s}");
    assert!(s.contains("= 1/49.1275301486"), "{s}");
}

#[test]
fn constants_json_is_stable() {
    let a = zfr(&["constants", "--A", "175", "--B", "46", "--json", "-"]);
    let b = zfr(&["constants", "--A", "175", "--B", "46", "--json", "-"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["B"], "46");
    assert!(v["inverse_c_vk"].as_str().unwrap().starts_with("2.84004960"));
}

#[test]
fn verify_reports_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let (p, q) = (dir.path().join("a.json"), dir.path().join("b.json"));
    for path in [&p, &q] {
        let o = zfr(&["verify", "constants", "--json", path.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
        assert!(stdout(&o).contains("constants.theta"));
    }
    assert_eq!(std::fs::read(&p).unwrap(), std::fs::read(&q).unwrap());
}

#[test]
fn exit_codes() {
    assert_eq!(zfr(&["verify", "everything"]).status.code(), Some(2));
    assert_eq!(zfr(&["verify", "zeros"]).status.code(), Some(2));
    assert_eq!(zfr(&["verify", "zeros", "--zeros-file", "/nonexistent/zeros.txt"]).status.code(), Some(3));
    assert_eq!(zfr(&["constants", "--T0", "e100"]).status.code(), Some(2));
    assert_eq!(zfr(&["constants", "--B", "-1"]).status.code(), Some(2));
    assert_eq!(zfr(&["--digits", "3", "constants"]).status.code(), Some(2));
    assert_eq!(zfr(&["frobnicate"]).status.code(), Some(2));
    let e = zfr(&["constants", "--T0", "e100"]);
    assert!(String::from_utf8_lossy(&e.stderr).contains("T0 >= e^30000"));
}

#[test]
fn zeros_suite_with_the_fixture() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../core/tests/data/zeros.txt");
    let o = zfr(&["verify", "zeros", "--zeros-file", path]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("zeros.rosser_bracket"));
}

#[test]
fn config_file_sets_defaults_and_flags_win() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("zfr.toml");
    std::fs::write(&cfg, "digits = 30\nA = 175\nB = \"46\"\n").unwrap();
    let c = cfg.to_str().unwrap();
    let s = stdout(&zfr(&["--config", c, "constants"]));
    assert!(s.starts_with("A = 175, B = 46, T0 = e54550, 30 digits"), "{s}");
    let s = stdout(&zfr(&["--config", c, "constants", "--B", "4.45", "--A", "76.2"]));
    assert!(s.contains("= 1/57.5390166"), "{s}");
    std::fs::write(&cfg, "Bee = 1\n").unwrap();
    assert_eq!(zfr(&["--config", c, "constants"]).status.code(), Some(2));
    assert_eq!(zfr(&["--config", "/nonexistent/zfr.toml", "constants"]).status.code(), Some(3));
}

#[test]
fn curve_files() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("vk.csv");
    let o = zfr(&["curve", "--kind", "vk", "--c", "1/57.54", "--t-max", "1e100", "--steps", "11", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&out).unwrap();
    assert!(text.starts_with("# kind=vk\n# c=1/57.54\n"));
    assert!(text.contains("# digits=60\n"));
    let rows: Vec<&str> = text.lines().skip_while(|l| l.starts_with('#')).collect();
    assert_eq!(rows[0], "t,one_minus_beta");
    assert_eq!(rows.len(), 12);
    let first: f64 = rows[1].split(',').nth(1).unwrap().parse().unwrap();
    assert!((first - 0.035_893_646_771_250_71).abs() < 1e-15);

    let s = stdout(&zfr(&["curve", "--kind", "classical", "--t-max", "e200", "--steps", "50", "--compare", "linear", "--compare-c", "1/8.463"]));
    assert!(s.contains("# crossings=none\n"), "{s}");
    let s = stdout(&zfr(&["curve", "--kind", "linear", "--c", "1", "--t-min", "e800", "--t-max", "e800", "--steps", "1"]));
    assert!(s.ends_with("exp(8.0000000000000000e2),1.2500000000000000e-3\n"), "{s}");
    assert_eq!(zfr(&["curve", "--kind", "vk", "--t-max", "1e9"]).status.code(), Some(2));
}
