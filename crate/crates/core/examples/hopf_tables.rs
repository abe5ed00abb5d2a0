// Structure constants in, axiom report out: a group algebra, its dual,
// and the four-dimensional Sweedler algebra.
//
// ```bash
// cargo run --example hopf_tables
// ```

use fhalg::catalog::{group_algebra, preset, Group};
use fhalg::hopf::{convolution_inverse, dual_hopf, verify_axioms};

pub fn run_example() -> fhalg::Result<()> {
    // S3 generated by a transposition and a 3-cycle
    let s3 = group_algebra(&Group::permutations(3, &[vec![1, 0, 2], vec![1, 2, 0]]))?;
    println!("Q[S3] has basis {:?}", s3.labels());
    let report = verify_axioms(&s3);
    assert!(report.passes());

    let dual = dual_hopf(&s3)?;
    println!("the dual is commutative: {}", dual.is_commutative());
    assert!(verify_axioms(&dual).passes());

    let h4 = preset("sweedler4")?;
    for c in &verify_axioms(&h4).checks {
        println!("  {c}");
    }
    // The antipode is the convolution inverse of the identity map.
    let s = convolution_inverse(&h4, &fhalg::exact::Matrix::identity(h4.field(), h4.dim()))?;
    assert_eq!(s.as_ref(), h4.antipode());
    let gx = h4.mul(&h4.basis(1), &h4.basis(2));
    println!("S(gx) = {}", h4.format_element(&h4.antipode_of(&gx)?));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("hopf_tables");
}
