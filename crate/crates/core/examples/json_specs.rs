// The JSON interchange format and the report renderings.
//
// ```bash
// cargo run --example json_specs
// ```

use fhalg::catalog::{check_report, preset, AlgebraSpec};

pub fn run_example() -> fhalg::Result<()> {
    let spec = AlgebraSpec::from_hopf(&preset("taft:3:13")?);
    let text = spec.to_json();
    println!("{}", text.lines().take(12).collect::<Vec<_>>().join("\n"));
    let back = AlgebraSpec::from_json(&text)?.build()?;
    assert_eq!(AlgebraSpec::from_hopf(&back), spec);

    let report = check_report(&back, true)?;
    for line in report.to_human().lines().filter(|l| l.starts_with("ord(")) {
        println!("{line}");
    }
    println!(
        "{}",
        serde_json::to_string(&report.to_json()["b"]).expect("json")
    );
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("json_specs");
}
