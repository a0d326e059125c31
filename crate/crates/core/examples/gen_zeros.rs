//! Writes the ordinates of the zeros of ζ(1/2+it) with 14 < t ≤ tmax, found
//! as sign changes of Hardy's function on a 0.02 grid.
//!
//! Usage: gen_zeros <tmax> <out>

use std::io::Write;
use zfr_core::zetatools::hardy_zeros;

fn main() -> std::io::Result<()> {
    let mut args = std::env::args().skip(1);
    let tmax: f64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(10500.0);
    let out = args.next().unwrap_or_else(|| "zeros.txt".into());
    let mut f = std::io::BufWriter::new(std::fs::File::create(&out)?);
    writeln!(f, "# tmax={tmax}")?;
    writeln!(f, "# source=sign changes of Hardy Z on a 0.02 grid, bisected to 1e-11")?;
    let mut count = 0;
    let chunk = 500.0;
    let mut a = 14.0;
    while a < tmax {
        let b = (a + chunk).min(tmax);
        for g in hardy_zeros(a, b, 0.02, 1e-11) {
            writeln!(f, "{g:.10}")?;
            count += 1;
        }
        eprintln!("{b:.0}: {count}");
        a = b;
    }
    eprintln!("{count} zeros written to {out}");
    Ok(())
}
