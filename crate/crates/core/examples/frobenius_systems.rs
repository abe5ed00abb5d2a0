// Frobenius systems: dual bases, the Nakayama automorphism, norms and the
// symmetry test, on a truncated polynomial algebra and on Sweedler's H₄.
//
// ```bash
// cargo run --example frobenius_systems
// ```

use fhalg::catalog::preset;
use fhalg::frobenius::{
    build_system, find_frobenius_functional, integrals_and_norms, symmetric_test,
};

pub fn run_example() -> fhalg::Result<()> {
    let a = preset("truncpoly:4")?;
    let sys = build_system(a.clone(), find_frobenius_functional(&a)?)?;
    for (x, y) in sys.xs().iter().zip(sys.ys()) {
        println!("  {} | {}", a.format_element(x), a.format_element(y));
    }
    let aug = integrals_and_norms(&sys)?;
    println!(
        "norm = {}, unimodular = {}",
        a.format_element(&aug.right_norm),
        aug.unimodular
    );
    println!("symmetric = {}", symmetric_test(&sys)?.symmetric);

    // On H₄ the right integral of the dual gives a non-symmetric system.
    let h = preset("sweedler4")?;
    let sys = build_system(h.clone(), h.basis(2))?;
    println!(
        "Nakayama of H4 on g: {}",
        h.format_element(&sys.nakayama().column(1))
    );
    println!("H4 symmetric = {}", symmetric_test(&sys)?.symmetric);
    for c in sys.structural_checks() {
        assert!(c.passed, "{c}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("frobenius_systems");
}
