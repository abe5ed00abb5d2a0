// Exact solving, kernels and inverses over ℚ and 𝔽_p.
//
// ```bash
// cargo run --example exact_linear_algebra
// ```

use fhalg::exact::{Field, Matrix, Vector};

pub fn run_example() -> fhalg::Result<()> {
    let q = Field::Rational;
    let a = Matrix::from_int_rows(q, &[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
    let b = Vector::from_ints(q, &[1, 2, 3]);
    let x = a.solve(&b)?.expect("nonsingular system");
    println!("x = {x}");
    assert_eq!(a.apply(&x), b);

    let inv = a.inverse()?.expect("nonsingular");
    assert!(a.mul(&inv)?.is_identity());

    // Over F_5 the same matrix picks up a kernel.
    let f5 = Field::prime(5)?;
    let c = Matrix::from_int_rows(f5, &[&[1, 2], &[3, 1]]);
    let kernel = c.kernel_basis();
    println!(
        "rank over F_5 = {}, kernel = {:?}",
        c.rank(),
        kernel.iter().map(ToString::to_string).collect::<Vec<_>>()
    );
    assert_eq!(kernel.len(), 1);

    let rotation = Matrix::from_int_rows(q, &[&[0, -1], &[1, 0]]);
    println!("order of a quarter turn = {:?}", rotation.order(8)?);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("exact_linear_algebra");
}
