mod common;

use fdbe_zeta::catalog::{
    evaluate_identity, find, register_catalog, run_checks, CheckReport, Form, IdentitySpec, Params,
    ReportFormat, SamplePlan, SampleRecord, Verdict,
};
use fdbe_zeta::numerics::{ComplexScalar, Tolerance};

fn params(pairs: &[(&str, f64)]) -> Params {
    pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

fn eval(catalog: &[IdentitySpec], id: &str, p: &[(&str, f64)]) -> SampleRecord {
    let spec = find(catalog, id).unwrap();
    let r = evaluate_identity(spec, &params(p), Form::Derived, &spec.budget);
    assert_eq!(r.verdict, Verdict::Pass, "{id} {p:?}: {r:?}");
    r
}

fn side(r: &SampleRecord, lhs: bool) -> ComplexScalar {
    let v = if lhs { r.lhs } else { r.rhs };
    ComplexScalar::new(v[0].0, v[1].0)
}

fn assert_scaled(a: &SampleRecord, b: &SampleRecord, factor: f64, tol: f64) {
    for lhs in [true, false] {
        let got = side(a, lhs);
        let want = side(b, lhs) * factor;
        assert!(
            common::rel_err(got, want) < tol,
            "{} side: {got} vs {want}",
            if lhs { "left" } else { "right" }
        );
    }
}

#[test]
fn lerch_product_collapses_to_bose_at_unit_order() {
    // Φ(e^{−x}, s, 1) = e^x 𝔅_{s−1}(−x)
    let c = register_catalog();
    let x: f64 = 0.5;
    let p03 = eval(&c, "P03", &[("sigma", 1.5), ("rho", 1.5), ("nu", 1.0), ("z", (-x).exp())]);
    let p07 = eval(&c, "P07", &[("sigma", 1.5), ("rho", 1.5), ("x", -x)]);
    assert_scaled(&p03, &p07, (2.0 * x).exp(), 1e-7);
    let p19 = eval(&c, "P19", &[("sigma", 1.5), ("rho", 1.5), ("nu", 1.0), ("x", x)]);
    assert_scaled(&p19, &p07, x.exp(), 1e-7);
}

#[test]
fn fermi_product_collapses_at_zero_order() {
    // Θ₀(s; x) = 𝔉_{s−1}(−x)
    let c = register_catalog();
    let x = 0.75;
    let p15 = eval(&c, "P15", &[("sigma", 1.0), ("rho", 0.75), ("x", -x)]);
    let p22 = eval(&c, "P22", &[("sigma", 1.0), ("rho", 0.75), ("nu", 0.0), ("x", x)]);
    assert_scaled(&p22, &p15, 1.0, 1e-7);
}

#[test]
fn hurwitz_product_collapses_to_zeta() {
    let c = register_catalog();
    let p21 = eval(&c, "P21", &[("sigma", 1.5), ("rho", 2.0), ("nu", 1.0)]);
    let p11 = eval(&c, "P11", &[("sigma", 1.5), ("rho", 2.0)]);
    assert_scaled(&p21, &p11, 1.0, 1e-8);
}

#[test]
fn corrected_domains_are_tight() {
    let c = register_catalog();
    let tol = Tolerance::new(1e-6, 1e-9);
    // Ψ_{2ν} at ν = −3/4 has order 2ν + 1 < 0 and no longer exists
    let p01 = find(&c, "P01").unwrap();
    let outside = params(&[("sigma", 1.5), ("rho", 1.5), ("nu", -0.75), ("x", 0.5)]);
    assert_eq!(
        evaluate_identity(p01, &outside, Form::Derived, &tol).verdict,
        Verdict::SkippedDomain
    );
    assert_ne!(
        evaluate_identity(p01, &outside, Form::Printed, &tol).verdict,
        Verdict::Pass
    );
    let inside = params(&[("sigma", 1.5), ("rho", 1.5), ("nu", -0.25), ("x", 0.5)]);
    assert_eq!(evaluate_identity(p01, &inside, Form::Derived, &tol).verdict, Verdict::Pass);

    // BE at a positive argument puts a pole on the integration path
    let f07 = find(&c, "F07").unwrap();
    let hot = params(&[("eta", 2.5), ("x", 0.5)]);
    assert_eq!(
        evaluate_identity(f07, &hot, Form::Printed, &tol).verdict,
        Verdict::NotConverged
    );
    let cold = params(&[("eta", 2.5), ("x", -0.5)]);
    assert_eq!(evaluate_identity(f07, &cold, Form::Derived, &tol).verdict, Verdict::Pass);
}

#[test]
fn erratum_constants_fail_where_printed() {
    let c = register_catalog();
    let tol = Tolerance::new(1e-6, 1e-9);
    let p = params(&[("sigma", 0.5)]);
    let d10 = find(&c, "D10").unwrap();
    let printed = evaluate_identity(d10, &p, Form::Printed, &tol);
    let derived = evaluate_identity(d10, &p, Form::Derived, &tol);
    assert_eq!(printed.verdict, Verdict::Fail);
    assert_eq!(derived.verdict, Verdict::Pass);
    // the printed constant is off by 2π(e − 1)
    let gap = printed.abs_resid.0;
    let expected = 2.0 * std::f64::consts::PI * (std::f64::consts::E - 1.0);
    assert!((gap - expected).abs() < 1e-6, "{gap}");
    assert_eq!(printed.form(), Some("printed"));
}

#[test]
fn report_round_trips_in_every_format() {
    let c = register_catalog();
    let plan = SamplePlan {
        seed: 9,
        random_samples: 2,
    };
    let ids = vec!["F03".to_string(), "F09".to_string(), "R02".to_string()];
    let report = run_checks(&c, &ids, &plan, &Tolerance::new(1e-6, 1e-9)).unwrap();
    let json = report.emit(ReportFormat::Json);
    assert_eq!(CheckReport::parse_json(&json).unwrap(), report);

    let csv = report.emit(ReportFormat::Csv);
    let rows: usize = report.identities.iter().map(|r| r.samples.len()).sum();
    assert_eq!(csv.lines().count(), rows + 1);
    assert!(csv.starts_with("id,equation,params,"));

    let md = report.emit(ReportFormat::Md);
    assert!(md.contains("| F03 | Eq.(2.9) |"));
    assert!(md.contains("printed fail, derived pass"));
}

#[test]
fn report_uses_the_documented_schema() {
    let c = register_catalog();
    let ids = vec!["F07".to_string()];
    let report = run_checks(&c, &ids, &SamplePlan::default(), &Tolerance::new(1e-6, 1e-9)).unwrap();
    let v: serde_json::Value = serde_json::from_str(&report.emit(ReportFormat::Json)).unwrap();
    let keys = |v: &serde_json::Value| {
        let mut k: Vec<_> = v.as_object().unwrap().keys().cloned().collect();
        k.sort();
        k
    };
    assert_eq!(keys(&v), ["identities", "seed", "tolerances", "version"]);
    let ident = &v["identities"][0];
    assert_eq!(keys(ident), ["equation", "erratum", "id", "samples", "verdict"]);
    assert_eq!(ident["erratum"]["printed_passes"], false);
    assert_eq!(ident["erratum"]["derived_passes"], true);
    let sample = &ident["samples"][0];
    assert_eq!(
        keys(sample),
        ["abs_resid", "lhs", "params", "rel_resid", "rhs", "verdict"]
    );
    // non-finite numbers are written as null
    let skipped = ident["samples"]
        .as_array()
        .unwrap()
        .iter()
        .find(|s| s["verdict"] == "not_converged")
        .expect("printed BE samples at x > 0 do not evaluate");
    assert!(skipped["lhs"][0].is_null());
}

#[test]
fn unknown_ids_are_rejected() {
    let c = register_catalog();
    let ids = vec!["F01".to_string(), "NOPE".to_string()];
    assert!(run_checks(&c, &ids, &SamplePlan::default(), &Tolerance::default()).is_err());
}
