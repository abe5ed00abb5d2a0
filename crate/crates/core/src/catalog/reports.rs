//! Report builders behind the command-line interface.

use rayon::prelude::*;

use super::Report;
use crate::check::CheckResult;
use crate::double::{
    check_double_integrals, check_double_symmetric, check_quasitriangular, double_order_check,
    double_symmetry_checks, quasitriangular_checks, DoubleData,
};
use crate::error::Result;
use crate::extension::{
    check_norm_identities, relative_f_and_derivative, relative_system, transitive_derivative,
    SubalgebraPair,
};
use crate::fh::{fh_profile, identity_checks, involutivity_report, FHProfile};
use crate::frobenius::{
    build_system, find_frobenius_functional, integrals_and_norms, separability_element,
    symmetric_test, AugmentedReport, FrobeniusSystem,
};
use crate::hopf::{verify_axioms, HopfData, Level};

type Task<'a> = Box<dyn Fn() -> Result<Vec<CheckResult>> + Send + Sync + 'a>;

/// Runs independent check groups, concurrently when asked; results keep the
/// order of `tasks` either way.
fn run_tasks(tasks: Vec<Task<'_>>, parallel: bool) -> Result<Vec<CheckResult>> {
    let groups: Vec<Result<Vec<CheckResult>>> = if parallel {
        tasks.par_iter().map(|t| t()).collect()
    } else {
        tasks.iter().map(|t| t()).collect()
    };
    let mut out = Vec::new();
    for g in groups {
        out.extend(g?);
    }
    Ok(out)
}

fn header(r: &mut Report, h: &HopfData) {
    r.text("field", h.field().to_string())
        .int("dim", h.dim() as i64)
        .text("level", h.level().as_str());
}

/// Axiom checks at the declared level.
pub fn verify_report(h: &HopfData) -> Report {
    let axioms = verify_axioms(h);
    let mut r = Report::new();
    header(&mut r, h);
    r.text("attained", axioms.attained.map_or("none", |l| l.as_str()));
    r.checks(axioms.checks);
    r
}

/// Integrals, distinguished group-likes, flags and orders of an FH-algebra.
pub fn hopf_report(p: &FHProfile) -> Report {
    let h = p.host();
    let mut r = Report::new();
    header(&mut r, h);
    r.functional("f", &p.f).element("t", h, &p.t);
    r.element("b", h, &p.b).element("b^-1", h, &p.b_inv);
    r.functional("m", &p.m);
    for (i, label) in h.labels().iter().enumerate() {
        r.text(format!("m({label})"), p.m.get(i).to_string());
    }
    r.functional("m^-1", &p.m_inv);
    r.matrix("eta", &p.eta);
    let fl = &p.flags;
    r.flag("unimodular", fl.unimodular)
        .flag("counimodular", fl.counimodular)
        .flag("separable", fl.separable)
        .flag("coseparable", fl.coseparable)
        .flag("involutive", fl.involutive)
        .flag("symmetric", fl.symmetric);
    let o = &p.orders;
    r.int("ord(S)", o.antipode as i64)
        .int("ord(eta)", o.eta as i64)
        .int("ord(b)", o.b as i64)
        .int("ord(m)", o.m as i64);
    r
}

struct AugmentedData {
    system: FrobeniusSystem,
    integrals: Option<AugmentedReport>,
    symmetric: bool,
    separable: bool,
}

fn augmented_data(h: &HopfData) -> Result<AugmentedData> {
    let phi = find_frobenius_functional(h)?;
    let system = build_system(h.clone(), phi)?;
    let integrals = if h.counit().is_some() {
        Some(integrals_and_norms(&system)?)
    } else {
        None
    };
    let symmetric = symmetric_test(&system)?.symmetric;
    let separable = separability_element(&system)?.is_some();
    Ok(AugmentedData {
        system,
        integrals,
        symmetric,
        separable,
    })
}

fn augmented_entries(r: &mut Report, h: &HopfData, a: &AugmentedData) {
    r.functional("phi", a.system.phi());
    r.matrix("nakayama", a.system.nakayama());
    r.flag("symmetric", a.symmetric)
        .flag("separable", a.separable);
    if let Some(aug) = &a.integrals {
        r.int("right integrals", aug.right_integrals.len() as i64)
            .int("left integrals", aug.left_integrals.len() as i64);
        r.element("norm", h, &aug.right_norm)
            .element("left norm", h, &aug.left_norm);
        r.functional("m", &aug.modular)
            .flag("unimodular", aug.unimodular);
    }
}

fn implication_checks(a: &AugmentedData) -> Vec<CheckResult> {
    let Some(aug) = &a.integrals else {
        return Vec::new();
    };
    vec![
        CheckResult::from_bool(
            "symmetric implies unimodular",
            !a.symmetric || aug.unimodular,
            || "symmetric but not unimodular".into(),
        ),
        CheckResult::from_bool(
            "separable implies unimodular",
            !a.separable || aug.unimodular,
            || "separable but not unimodular".into(),
        ),
    ]
}

/// The FH profile for Hopf algebras, otherwise the Frobenius and augmented data.
pub fn algebra_report(h: &HopfData) -> Result<Report> {
    if h.level() == Level::Hopf {
        return Ok(hopf_report(&fh_profile(h.clone())?));
    }
    let a = augmented_data(h)?;
    let mut r = Report::new();
    header(&mut r, h);
    augmented_entries(&mut r, h, &a);
    Ok(r)
}

/// Everything `algebra_report` shows plus every identity check.
pub fn check_report(h: &HopfData, parallel: bool) -> Result<Report> {
    let axioms = verify_axioms(h).checks;
    if h.level() == Level::Hopf {
        let p = fh_profile(h.clone())?;
        let mut r = hopf_report(&p);
        let tasks: Vec<Task> = vec![
            Box::new(|| Ok(axioms.clone())),
            Box::new(|| Ok(p.system.structural_checks())),
            Box::new(|| Ok(p.augmented.checks.clone())),
            Box::new(|| identity_checks(&p)),
            Box::new(|| Ok(p.orders.checks.clone())),
        ];
        r.checks(run_tasks(tasks, parallel)?);
        r.extend("involutivity", involutivity_report(&p)?);
        return Ok(r);
    }
    let a = augmented_data(h)?;
    let mut r = Report::new();
    header(&mut r, h);
    augmented_entries(&mut r, h, &a);
    r.checks(axioms);
    r.checks(a.system.structural_checks());
    if let Some(aug) = &a.integrals {
        r.checks(aug.checks.clone());
    }
    r.checks(implication_checks(&a));
    Ok(r)
}

pub fn double_report(dd: &DoubleData, parallel: bool) -> Result<Report> {
    let d = dd.double();
    let profile = dd.profile()?;
    let tasks: Vec<Task> = vec![
        Box::new(|| Ok(dd.construction.clone())),
        Box::new(|| quasitriangular_checks(d, &dd.r)),
        Box::new(|| crate::double::double_integral_checks(dd, &dd.host_profile)),
        Box::new(|| double_symmetry_checks(dd)),
        Box::new(|| Ok(vec![double_order_check(dd)?])),
    ];
    let checks = run_tasks(tasks, parallel)?;
    let quasi = check_quasitriangular(dd)?.passed;
    let symmetric = check_double_symmetric(dd)?.passed;
    let integrals = check_double_integrals(dd, &dd.host_profile)?.passed;

    let mut r = Report::new();
    header(&mut r, d);
    r.int("dim H", dd.host().dim() as i64);
    r.flag("quasitriangular", quasi)
        .flag("unimodular", profile.flags.unimodular)
        .flag("symmetric", symmetric && profile.flags.symmetric)
        .flag("integrals", integrals);
    r.element("u", d, &dd.u);
    r.element("T (x) t", d, &dd.integral);
    r.functional("S(t) (x) f", &dd.fh_functional);
    r.int("ord(S)", profile.orders.antipode as i64);
    r.checks(checks);
    Ok(r)
}

/// The relative Frobenius structure of a Hopf subalgebra pair.
pub fn subpair_report(pair: &SubalgebraPair) -> Result<Report> {
    let (h, k) = (&*pair.h, &*pair.k);
    let rel = relative_system(pair)?;
    let der = relative_f_and_derivative(pair, &rel, &pair.profile_k.system)?;
    let (composed, d_trans) = transitive_derivative(pair, &rel)?;

    let mut r = Report::new();
    r.text("field", h.field().to_string())
        .int("dim H", h.dim() as i64)
        .int("dim K", k.dim() as i64)
        .int("index", (h.dim() / k.dim()) as i64);
    r.matrix("beta", rel.beta());
    r.flag("beta = Id", rel.beta().is_identity());
    r.functional("chi", &rel.chi);
    r.matrix("E", rel.system.e_map());
    r.element("Lambda-hat", h, &rel.lambda_hat)
        .element("Lambda", h, &rel.lambda);
    r.text("d", der.scalar.to_string());
    r.element("transitive derivative", h, &d_trans);
    r.checks(rel.system.checks());
    r.checks(der.checks.clone());
    r.check(check_norm_identities(pair, &rel, &der.scalar)?);
    let composed_checks = composed.checks().into_iter().map(|c| CheckResult {
        name: format!("composed {}", c.name),
        ..c
    });
    r.checks(composed_checks);
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{preset, Value, PRESET_NAMES};
    use crate::double::build_double;

    fn human(r: &Report) -> String {
        r.to_human()
    }

    #[test]
    fn sweedler_check_report() {
        let r = check_report(&preset("sweedler4").unwrap(), false).unwrap();
        let text = human(&r);
        for line in ["ord(S)=4", "unimodular=false", "b=g", "m(g)=-1"] {
            assert!(text.lines().any(|l| l == line), "missing {line} in\n{text}");
        }
        assert!(r.all_passed(), "{text}");
    }

    #[test]
    fn truncpoly_report() {
        let r = algebra_report(&preset("truncpoly:4").unwrap()).unwrap();
        let text = human(&r);
        for line in ["symmetric=true", "unimodular=true", "norm=X^3"] {
            assert!(text.lines().any(|l| l == line), "missing {line} in\n{text}");
        }
    }

    #[test]
    fn parallel_matches_sequential() {
        let h = preset("taft:3:13").unwrap();
        let a = check_report(&h, false).unwrap();
        let b = check_report(&h, true).unwrap();
        assert_eq!(a, b);
    }

    fn assert_unique_keys(r: &Report) {
        let mut keys: Vec<&str> = r.entries().iter().map(|(k, _)| k.as_str()).collect();
        let total = keys.len();
        keys.sort_unstable();
        keys.dedup();
        assert_eq!(keys.len(), total, "duplicate report keys");
    }

    #[test]
    fn every_preset_checks_clean() {
        for name in PRESET_NAMES {
            let r = check_report(&preset(name).unwrap(), false).unwrap();
            assert!(
                r.all_passed(),
                "{name}: {:?}",
                r.failures().collect::<Vec<_>>()
            );
            assert_unique_keys(&r);
        }
    }

    #[test]
    fn double_summary() {
        let dd = build_double(preset("sweedler4").unwrap()).unwrap();
        let r = double_report(&dd, true).unwrap();
        let text = human(&r);
        for line in [
            "dim=16",
            "unimodular=true",
            "symmetric=true",
            "quasitriangular=true",
        ] {
            assert!(text.lines().any(|l| l == line), "missing {line} in\n{text}");
        }
        assert!(r.all_passed());
        assert_unique_keys(&r);
        assert_eq!(r.get("dim H"), Some(&Value::Int(4)));
    }
}
