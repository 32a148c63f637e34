mod common;

use std::f64::consts::{E, LN_2, PI};
use std::process::Command;
use std::time::{Duration, Instant};

use common::{c, rel_err};
use fdbe_zeta::catalog::{
    check_identity, evaluate_identity, find, register_catalog, Form, IdentitySpec, Params,
    SamplePlan, SampleRecord, Verdict,
};
use fdbe_zeta::numerics::ComplexScalar;
use fdbe_zeta::zeta_kernel::{FunctionId, Kernel};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const ZETA3: f64 = 1.202_056_903_159_594_3;
const ZETA_HALF: f64 = -1.460_354_508_809_586_8;

type Outcome = Result<String, String>;

fn params(pairs: &[(&str, f64)]) -> Params {
    pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

fn spec<'a>(catalog: &'a [IdentitySpec], id: &str) -> &'a IdentitySpec {
    find(catalog, id).unwrap_or_else(|| panic!("{id} missing from the catalog"))
}

fn lhs(r: &SampleRecord) -> ComplexScalar {
    c(r.lhs[0].0, r.lhs[1].0)
}

fn rhs(r: &SampleRecord) -> ComplexScalar {
    c(r.rhs[0].0, r.rhs[1].0)
}

/// Derived-form sample that must pass with relative residual at most `bound`.
fn point(cat: &[IdentitySpec], id: &str, p: &[(&str, f64)], bound: f64) -> Result<SampleRecord, String> {
    let s = spec(cat, id);
    let r = evaluate_identity(s, &params(p), Form::Derived, &s.budget);
    if r.verdict != Verdict::Pass || !(r.rel_resid.0 <= bound) {
        return Err(format!(
            "{id} at {p:?}: {} rel_resid {:.2e}",
            r.verdict.as_str(),
            r.rel_resid.0
        ));
    }
    Ok(r)
}

fn close(what: &str, got: ComplexScalar, want: ComplexScalar, bound: f64) -> Result<f64, String> {
    let e = rel_err(got, want);
    if e <= bound {
        Ok(e)
    } else {
        Err(format!("{what}: {got} vs {want}, rel {e:.2e} > {bound:.0e}"))
    }
}

fn erratum_flagged(cat: &[IdentitySpec], id: &str) -> Result<(), String> {
    let report = check_identity(spec(cat, id), &SamplePlan::default(), &spec(cat, id).budget);
    match report.erratum {
        Some(e) if !e.printed_passes && e.derived_passes => Ok(()),
        other => Err(format!("{id}: erratum outcome {other:?}")),
    }
}

fn golden() -> Outcome {
    let k = Kernel::default();
    let v = |r: fdbe_zeta::Result<fdbe_zeta::numerics::EvalResult>| r.map(|e| e.value).map_err(|e| e.to_string());
    let li2 = PI * PI / 12.0 - LN_2 * LN_2 / 2.0;
    let cases = [
        ("ζ(2)", v(k.riemann_zeta(c(2.0, 0.0)))?, PI * PI / 6.0),
        ("ζ(3)", v(k.riemann_zeta(c(3.0, 0.0)))?, ZETA3),
        ("ζ(1/2)", v(k.riemann_zeta(c(0.5, 0.0)))?, ZETA_HALF),
        ("Γ(1/2)", v(k.gamma(c(0.5, 0.0)))?, PI.sqrt()),
        ("Li₂(1/2)", v(k.polylog(c(0.5, 0.0), c(2.0, 0.0)))?, li2),
        ("Θ₀(1;0)", v(k.efd_theta(c(1.0, 0.0), 0.0, c(0.0, 0.0)))?, LN_2),
    ];
    let mut worst: f64 = 0.0;
    for (name, got, want) in cases {
        worst = worst.max(close(name, got, c(want, 0.0), 1e-9)?);
    }
    Ok(format!("6 values, worst rel {worst:.1e}"))
}

fn dual_path() -> Outcome {
    let k = Kernel::default();
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for f in FunctionId::ALL {
        for _ in 0..200 {
            let p = common::dual_path_point(f, &mut rng);
            common::dual_path_agrees(&k, f, &p)?;
        }
    }
    Ok("10 functions × 200 samples agree".into())
}

fn theorems(cat: &[IdentitySpec]) -> Outcome {
    let plan = SamplePlan::default();
    let mut worst: f64 = 0.0;
    let mut count = 0;
    for i in 1..=9 {
        let id = format!("F0{i}");
        let s = spec(cat, &id);
        let report = check_identity(s, &plan, &s.budget);
        for r in &report.samples {
            if r.params.get("form").and_then(|f| f.as_str()) == Some("printed") {
                continue;
            }
            if r.verdict == Verdict::SkippedDomain {
                continue;
            }
            if r.verdict != Verdict::Pass || !(r.rel_resid.0 <= 1e-8) {
                return Err(format!("{id} {:?}: {} {:.2e}", r.params, r.verdict.as_str(), r.rel_resid.0));
            }
            worst = worst.max(r.rel_resid.0);
            count += 1;
        }
    }
    erratum_flagged(cat, "F03")?;
    erratum_flagged(cat, "F07")?;
    Ok(format!("{count} derived samples, worst rel {worst:.1e}; F03 and F07 flagged"))
}

fn parseval(cat: &[IdentitySpec]) -> Outcome {
    let k = Kernel::default();
    let mut worst: f64 = 0.0;
    for sigma in [1.25, 1.5, 2.0] {
        let r = point(cat, "P12", &[("sigma", sigma)], 1e-6)?;
        let g = k.gamma(c(2.0 * sigma, 0.0)).map_err(|e| e.to_string())?.value;
        let z1 = k.riemann_zeta(c(2.0 * sigma - 1.0, 0.0)).map_err(|e| e.to_string())?.value;
        let z2 = k.riemann_zeta(c(2.0 * sigma, 0.0)).map_err(|e| e.to_string())?.value;
        let want = 2.0 * PI * g * (z1 - z2);
        worst = worst.max(close(&format!("P12 σ={sigma}"), lhs(&r), want, 1e-6)?);
    }
    let r = point(cat, "P14", &[("sigma", 1.0), ("nu", 1.0), ("x", 0.5)], 1e-6)?;
    worst = worst.max(r.rel_resid.0);
    erratum_flagged(cat, "P17")?;
    erratum_flagged(cat, "P18")?;
    Ok(format!("worst rel {worst:.1e}; P17 and P18 flagged"))
}

fn duality_line_values(cat: &[IdentitySpec]) -> Outcome {
    let points: [(&str, &[(&str, f64)]); 9] = [
        ("D01", &[("sigma", 1.5), ("nu", 0.5), ("x", 0.5)]),
        ("D02", &[("sigma", 1.5), ("nu", 0.5), ("x", 0.5)]),
        ("D03", &[("sigma", 1.5), ("nu", 1.0), ("z", 0.5)]),
        ("D04", &[("sigma", 1.5), ("z", 0.5)]),
        ("D05", &[("sigma", 1.5), ("x", -0.5)]),
        ("D06", &[("sigma", 1.5), ("x", 0.5)]),
        ("D07", &[("sigma", 1.5), ("nu", 1.0)]),
        ("D08", &[("sigma", 0.75)]),
        ("D09", &[("sigma", 1.5)]),
    ];
    let mut worst: f64 = 0.0;
    for (id, p) in points {
        worst = worst.max(point(cat, id, p, 1e-6)?.rel_resid.0);
    }
    let d09 = point(cat, "D09", &[("sigma", 1.5)], 1e-6)?;
    close("D09 closed form", lhs(&d09), c(2.0 * PI / (E - 1.0), 0.0), 1e-6)?;

    let d10 = spec(cat, "D10");
    let at = params(&[("sigma", 0.5)]);
    let printed = evaluate_identity(d10, &at, Form::Printed, &d10.budget);
    if printed.verdict != Verdict::Fail {
        return Err(format!("D10 printed form {}", printed.verdict.as_str()));
    }
    let derived = point(cat, "D10", &[("sigma", 0.5)], 1e-6)?;
    let want = 2.0 * PI / (E - 1.0) - 2.0 * PI;
    close("D10 line integral", lhs(&derived), c(want, 0.0), 1e-6)?;
    erratum_flagged(cat, "D10")?;
    Ok(format!("worst rel {worst:.1e}; D10 line integral {:.10}", lhs(&derived).re))
}

fn closing(cat: &[IdentitySpec]) -> Outcome {
    let mut worst2: f64 = 0.0;
    for nu in [1.0, 2.0, 3.0] {
        for s in [0.5, 2.0] {
            for x in [0.0, 0.5] {
                let r = point(cat, "X02", &[("s", s), ("nu", nu), ("x", x)], 1e-10)?;
                let want = nu.powf(-s) * (-nu * x).exp();
                worst2 = worst2.max(close("X02 collapse", lhs(&r), c(want, 0.0), 1e-10)?);
            }
        }
    }
    let mut worst3: f64 = 0.0;
    for nu in [1.0, 2.0, 3.0] {
        for sigma in [0.5, 1.0, 2.0] {
            let r = point(cat, "X03", &[("sigma", sigma), ("nu", nu)], 1e-7)?;
            let want = 2.0 * PI * (-nu).exp();
            worst3 = worst3.max(close("X03 closed form", lhs(&r), c(want, 0.0), 1e-7)?);
            worst3 = worst3.max(close("X03 sides", rhs(&r), c(want, 0.0), 1e-7)?);
        }
    }
    let x01 = point(cat, "X01", &[("sigma", 1.5), ("rho", 1.5)], 1e-6)?;
    let want = 4.0 * PI * (ZETA3 - 1.0);
    close("X01 line integral", lhs(&x01), c(want, 0.0), 1e-7)?;
    erratum_flagged(cat, "X01")?;
    Ok(format!("X02 worst {worst2:.1e}, X03 worst {worst3:.1e}; X01 flagged"))
}

fn transform_pairs(cat: &[IdentitySpec]) -> Outcome {
    let plan = SamplePlan {
        seed: 42,
        random_samples: 0,
    };
    let mut worst: f64 = 0.0;
    let mut count = 0;
    for i in 1..=10 {
        let id = format!("S{i:02}");
        let s = spec(cat, &id);
        for p in fdbe_zeta::catalog::sample_points(s, Form::Derived, &plan) {
            let r = evaluate_identity(s, &p, Form::Derived, &s.budget);
            if r.verdict == Verdict::SkippedDomain {
                continue;
            }
            if r.verdict != Verdict::Pass || !(r.rel_resid.0 <= 1e-7) {
                return Err(format!("{id} {p:?}: {} {:.2e}", r.verdict.as_str(), r.rel_resid.0));
            }
            worst = worst.max(r.rel_resid.0);
            count += 1;
        }
    }
    Ok(format!("{count} grid samples, worst rel {worst:.1e}"))
}

fn determinism() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut reports = Vec::new();
    for run in ["a", "b"] {
        let path = dir.path().join(format!("{run}.json"));
        let status = Command::new(env!("CARGO_BIN_EXE_fdbe-zeta"))
            .args(["check", "--all", "--seed", "42", "--out"])
            .arg(&path)
            .output()
            .map_err(|e| e.to_string())?
            .status;
        if !status.success() {
            return Err(format!("check --all exited with {status}"));
        }
        reports.push(std::fs::read(&path).map_err(|e| e.to_string())?);
    }
    if reports[0] == reports[1] {
        Ok(format!("{} bytes, identical", reports[0].len()))
    } else {
        Err("reports differ".into())
    }
}

fn main() {
    let cat = register_catalog();
    let criteria: Vec<(&str, Duration, Box<dyn Fn() -> Outcome + '_>)> = vec![
        ("kernel golden values", Duration::from_secs(1), Box::new(golden)),
        ("dual-path suite", Duration::from_secs(60), Box::new(dual_path)),
        ("theorem suite F01–F09", Duration::from_secs(30), Box::new(|| theorems(&cat))),
        ("Parseval suite", Duration::from_secs(180), Box::new(|| parseval(&cat))),
        ("duality suite D01–D10", Duration::from_secs(120), Box::new(|| duality_line_values(&cat))),
        ("closing identities X01–X03", Duration::from_secs(60), Box::new(|| closing(&cat))),
        ("transform pairs S01–S10", Duration::from_secs(120), Box::new(|| transform_pairs(&cat))),
        ("determinism of check --all", Duration::MAX, Box::new(determinism)),
    ];
    let mut failed = 0;
    for (n, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut outcome = run();
        let took = start.elapsed();
        if outcome.is_ok() && took > *limit {
            outcome = Err(format!("took {took:.1?}, limit {limit:?}"));
        }
        match outcome {
            Ok(detail) => println!("PASS {} {name}: {detail} ({took:.2?})", n + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name}: {why} ({took:.2?})", n + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
