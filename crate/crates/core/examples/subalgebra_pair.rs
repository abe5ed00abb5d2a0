// A Hopf subalgebra pair as a twisted Frobenius extension: the group-likes
// of H₄, with the twist, the relative Frobenius map and the derivative.
//
// ```bash
// cargo run --example subalgebra_pair
// ```

use fhalg::catalog::preset;
use fhalg::extension::{
    check_norm_identities, coordinate_embedding, relative_f_and_derivative, relative_system,
    verify_pair,
};

pub fn run_example() -> fhalg::Result<()> {
    let h = preset("sweedler4")?;
    let g = h.basis(1);
    let iota = coordinate_embedding(&h, &[h.one(), g]);
    let pair = verify_pair(h, preset("group:C2")?, iota)?;

    let rel = relative_system(&pair)?;
    let k = &*pair.k;
    println!("beta(g) = {}", k.format_element(&rel.beta().column(1)));
    println!("Lambda = {}", pair.h.format_element(&rel.lambda));
    for c in rel.system.checks() {
        println!("  {c}");
    }
    let der = relative_f_and_derivative(&pair, &rel, &pair.profile_k.system)?;
    println!("d = {}", der.scalar);
    println!("{}", check_norm_identities(&pair, &rel, &der.scalar)?);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("subalgebra_pair");
}
