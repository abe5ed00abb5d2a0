// The FH profile of a Hopf algebra: integrals, the distinguished
// group-likes, the Nakayama map, flags and orders, with the identity suite.
//
// ```bash
// cargo run --example fh_profile
// ```

use fhalg::catalog::preset;
use fhalg::fh::{all_checks, fh_profile};

pub fn run_example() -> fhalg::Result<()> {
    for name in ["sweedler4", "taft:3:13", "group:S3"] {
        let p = fh_profile(preset(name)?)?;
        let h = p.host();
        println!("{name}:");
        println!("  t = {}", h.format_element(&p.t));
        println!("  b = {}, m = {}", h.format_element(&p.b), p.m);
        println!(
            "  ord(S) = {}, ord(eta) = {}",
            p.orders.antipode, p.orders.eta
        );
        println!(
            "  unimodular = {}, involutive = {}",
            p.flags.unimodular, p.flags.involutive
        );
        let checks = all_checks(&p)?;
        let failed: Vec<_> = checks.iter().filter(|c| !c.passed).collect();
        println!("  {} checks, {} failed", checks.len(), failed.len());
        assert!(failed.is_empty());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("fh_profile");
}
