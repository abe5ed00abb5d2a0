macro_rules! example {
    ($module:ident, $file:literal) => {
        #[allow(dead_code)]
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }
    };
}

example!(exact_linear_algebra, "exact_linear_algebra.rs");
example!(hopf_tables, "hopf_tables.rs");
example!(frobenius_systems, "frobenius_systems.rs");
example!(fh_profile, "fh_profile.rs");
example!(subalgebra_pair, "subalgebra_pair.rs");
example!(quantum_double, "quantum_double.rs");
example!(json_specs, "json_specs.rs");

#[test]
fn examples_run() {
    exact_linear_algebra::run_example().unwrap();
    hopf_tables::run_example().unwrap();
    frobenius_systems::run_example().unwrap();
    fh_profile::run_example().unwrap();
    subalgebra_pair::run_example().unwrap();
    quantum_double::run_example().unwrap();
    json_specs::run_example().unwrap();
}
