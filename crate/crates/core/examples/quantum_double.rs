// The Drinfel'd double of H₄: a 16-dimensional quasi-triangular Hopf
// algebra that is unimodular and symmetric although H₄ is neither.
//
// ```bash
// cargo run --example quantum_double
// ```

use fhalg::catalog::preset;
use fhalg::double::{all_double_checks, build_double};

pub fn run_example() -> fhalg::Result<()> {
    let dd = build_double(preset("sweedler4")?)?;
    let d = dd.double();
    println!("dim D(H4) = {}", d.dim());
    println!("u = {}", d.format_element(&dd.u));
    let profile = dd.profile()?;
    println!(
        "unimodular = {}, symmetric = {}",
        profile.flags.unimodular, profile.flags.symmetric
    );
    for c in all_double_checks(&dd)? {
        println!("  {c}");
        assert!(c.passed);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("quantum_double");
}
