use std::f64::consts::{E, PI};

use super::{
    re, Ctx, DomainFn, Erratum, ErratumKind, EvalFn, Form, Group, IdentitySpec, ParamSpec, Params,
    TWO_PI,
};
use crate::error::Result;
use crate::numerics::{ComplexScalar, EvalResult, Tolerance};
use crate::transform::{duality_line, duality_value, Representation, TransformPair};
use crate::zeta_kernel::{pow_neg, FunctionParams};

type DomRes = std::result::Result<(), String>;
type Sides = Result<(EvalResult, EvalResult)>;

const THEOREM_BUDGET: Tolerance = Tolerance::new(1e-8, 1e-12);
const LINE_BUDGET: Tolerance = Tolerance::new(1e-6, 1e-9);
const PAIR_BUDGET: Tolerance = Tolerance::new(1e-7, 1e-10);
const TIGHT_BUDGET: Tolerance = Tolerance::new(1e-10, 1e-13);
const TIGHT_KERNEL: Tolerance = Tolerance::new(1e-13, 1e-15);

fn need(ok: bool, msg: &str) -> DomRes {
    if ok {
        Ok(())
    } else {
        Err(msg.to_string())
    }
}

/// x ≥ 0, and every abscissa above 0 when x > 0, above 1 when x = 0.
fn shift_band(p: &Params, keys: &[&str]) -> DomRes {
    let x = p["x"];
    need(x >= 0.0, "x ≥ 0")?;
    for k in keys {
        if x == 0.0 {
            need(p[*k] > 1.0, "σ > 1 when x = 0")?;
        } else {
            need(p[*k] > 0.0, "σ > 0")?;
        }
    }
    Ok(())
}

/// 0 < z ≤ 1, abscissae above 0 when z < 1 and above 1 at z = 1.
fn z_band(p: &Params, keys: &[&str]) -> DomRes {
    let z = p["z"];
    need(z > 0.0 && z <= 1.0, "0 < z ≤ 1")?;
    for k in keys {
        if z == 1.0 {
            need(p[*k] > 1.0, "σ > 1 when z = 1")?;
        } else {
            need(p[*k] > 0.0, "σ > 0")?;
        }
    }
    Ok(())
}

/// BE argument x ≤ 0, abscissae above 0 when x < 0 and above 1 at x = 0.
fn bose_band(p: &Params, keys: &[&str]) -> DomRes {
    let x = p["x"];
    need(x <= 0.0, "x ≤ 0 (pole on the integration path otherwise)")?;
    for k in keys {
        if x == 0.0 {
            need(p[*k] > 1.0, "σ > 1 when x = 0")?;
        } else {
            need(p[*k] > 0.0, "σ > 0")?;
        }
    }
    Ok(())
}

fn above(p: &Params, keys: &[&str], lo: f64, msg: &str) -> DomRes {
    for k in keys {
        need(p[*k] > lo, msg)?;
    }
    Ok(())
}

fn sum_above(p: &Params, lo: f64) -> DomRes {
    need(p["sigma"] + p["rho"] > lo, "σ + ρ above its threshold")
}

fn near(v: f64, at: f64) -> bool {
    (v - at).abs() < 0.05
}

fn sigma_grid(lower: f64, interior: f64) -> ParamSpec {
    ParamSpec::lower("sigma", lower, true, interior)
}

fn rho_grid(lower: f64, interior: f64) -> ParamSpec {
    ParamSpec::lower("rho", lower, true, interior)
}

fn eta_grid(lower: f64, interior: f64) -> ParamSpec {
    ParamSpec::lower("eta", lower, true, interior)
}

fn nu_grid(lower: f64, interior: f64) -> ParamSpec {
    ParamSpec::lower("nu", lower, true, interior)
}

fn x_grid() -> ParamSpec {
    ParamSpec::lower("x", 0.0, false, 0.5).with_random(0.25, 1.0)
}

/// FD argument; positive values are the hard side.
fn fd_x_grid() -> ParamSpec {
    ParamSpec::lower("x", 0.0, false, 0.5).with_random(-1.0, 1.0)
}

fn bose_x_derived() -> ParamSpec {
    ParamSpec::choices("x", [0.0, -0.5, -1.0], (-1.0, -0.25))
}

fn bose_x_printed() -> ParamSpec {
    ParamSpec::choices("x", [0.0, 0.5, 1.0], (0.25, 1.0))
}

fn z_grid() -> ParamSpec {
    ParamSpec::choices("z", [0.25, 0.5, 1.0], (0.25, 0.95))
}

fn omega_grid() -> ParamSpec {
    ParamSpec::choices("omega", [-0.5, 0.5, 1.5], (-2.0, 2.0))
}

fn tau_grid() -> ParamSpec {
    ParamSpec::choices("tau", [0.0, 0.7, 2.3], (0.0, 5.0))
}

/// Growth rate of `𝔉_{s−1}(μ)` along vertical lines for μ > 0.
fn fd_growth(mu: f64) -> f64 {
    if mu > 0.0 {
        PI / 2.0 - (PI / mu).atan()
    } else {
        0.0
    }
}

fn spec(
    id: &'static str,
    equation: &'static str,
    group: Group,
    summary: &'static str,
    domain_text: &'static str,
    params: Vec<ParamSpec>,
    domain: DomainFn,
    eval: EvalFn,
) -> IdentitySpec {
    let (budget, kernel_tol) = match group {
        // the closed sides of these cancel by up to two digits
        Group::Relation | Group::Theorem => (THEOREM_BUDGET, TIGHT_KERNEL),
        Group::Pair => (PAIR_BUDGET, Tolerance::function_default()),
        _ => (LINE_BUDGET, Tolerance::function_default()),
    };
    IdentitySpec {
        id,
        equation,
        group,
        summary,
        domain_text,
        params,
        domain,
        avoid: None,
        erratum: None,
        budget,
        kernel_tol,
        eval,
    }
}

impl IdentitySpec {
    fn constant_erratum(mut self, printed: &'static str, derived: &'static str) -> Self {
        self.erratum = Some(Erratum {
            printed,
            derived,
            kind: ErratumKind::Constant,
        });
        self
    }

    fn domain_erratum(
        mut self,
        printed: &'static str,
        derived: &'static str,
        printed_params: Vec<ParamSpec>,
        printed_domain: DomainFn,
    ) -> Self {
        self.erratum = Some(Erratum {
            printed,
            derived,
            kind: ErratumKind::Domain {
                printed_params,
                printed_domain,
            },
        });
        self
    }

    fn avoiding(mut self, f: fn(&Params) -> bool) -> Self {
        self.avoid = Some(f);
        self
    }

    fn tight(mut self) -> Self {
        self.budget = TIGHT_BUDGET;
        self.kernel_tol = TIGHT_KERNEL;
        self
    }
}

pub(super) fn all() -> Vec<IdentitySpec> {
    let mut v = relations();
    v.extend(theorems());
    v.extend(products());
    v.extend(line_values());
    v.extend(dualities());
    v.extend(pairs());
    v.extend(examples());
    v
}

fn relations() -> Vec<IdentitySpec> {
    vec![
        spec(
            "R01",
            "Eq.(1.11)",
            Group::Relation,
            "eFD at x = 0, ν = 0 against ζ",
            "s > 0, s ≠ 1",
            vec![ParamSpec::lower("s", 0.0, true, 2.0)],
            |p| need(p["s"] > 0.0, "s > 0"),
            |c, p, form| {
                let s = re(p["s"]);
                let lhs = c.closed(|| c.zeta(s))?;
                let rhs = c.closed(|| {
                    let t = c.theta(s, 0.0, 0.0)?;
                    Ok(match form {
                        Form::Printed => c.eta_coeff(s) * t,
                        Form::Derived => t / c.eta_coeff(s),
                    })
                })?;
                Ok((lhs, rhs))
            },
        )
        .avoiding(|p| near(p["s"], 1.0))
        .constant_erratum("ζ(s) = (1 − 2^{1−s})Θ₀(s; 0)", "Θ₀(s; 0) = (1 − 2^{1−s})ζ(s)"),
        spec(
            "R02",
            "Eq.(1.5)",
            Group::Relation,
            "eFD as eBE at the shifted argument x + iπ, integer ν",
            "s > 1, x ≥ 0, integer ν > −1",
            vec![
                ParamSpec::lower("s", 1.0, true, 2.0),
                x_grid(),
                ParamSpec::choices("nu", [0.0, 1.0, 2.0], (0.0, 3.0)).integer(),
            ],
            |p| {
                need(p["s"] > 1.0, "s > 1")?;
                need(p["x"] >= 0.0, "x ≥ 0")?;
                need(p["nu"] > -1.0 && p["nu"].fract() == 0.0, "integer ν > −1")
            },
            |c, p, _| {
                let (s, x, nu) = (re(p["s"]), p["x"], p["nu"]);
                let lhs = c.closed(|| c.theta(s, x, nu))?;
                let rhs = c.closed(|| c.theta_bridge(s, x, nu))?;
                Ok((lhs, rhs))
            },
        )
        .tight(),
    ]
}

fn theorems() -> Vec<IdentitySpec> {
    vec![
        spec(
            "F01",
            "Eq.(2.1)",
            Group::Theorem,
            "eFD difference against ∫ t^{η−1}e^{−νt}/(e^t + e^{−x})²",
            "ν > −1, x ≥ 0, η > 1 (η > 2 at x = ν = 0)",
            vec![eta_grid(1.0, 2.5), nu_grid(-1.0, 0.5), x_grid()],
            |p| {
                need(p["nu"] > -1.0, "ν > −1")?;
                need(p["x"] >= 0.0, "x ≥ 0")?;
                need(p["eta"] > 1.0, "η > 1")?;
                if p["x"] == 0.0 && p["nu"] == 0.0 {
                    need(p["eta"] > 2.0, "η > 2 at x = ν = 0")?;
                }
                Ok(())
            },
            |c, p, _| {
                let (eta, nu, x) = (p["eta"], p["nu"], p["x"]);
                let lhs = c.closed(|| {
                    let d = (nu + 1.0) * c.theta(re(eta), x, nu)? - c.theta(re(eta - 1.0), x, nu)?;
                    Ok(((nu + 2.0) * x).exp() * c.gamma(re(eta))? * d)
                })?;
                let rhs = c.mellin(eta, |t| {
                    let d = 1.0 + (-x - t).exp();
                    (-(nu + 2.0) * t).exp() / (d * d)
                })?;
                Ok((lhs, rhs))
            },
        ),
        spec(
            "F02",
            "Eq.(2.8)",
            Group::Theorem,
            "FD difference against ∫ t^{η−1}/(e^t + e^x)²",
            "any real x, η > 1",
            vec![eta_grid(1.0, 2.5), fd_x_grid()],
            |p| {
                need(p["eta"] > 1.0, "η > 1")
            },
            |c, p, _| {
                let (eta, x) = (p["eta"], p["x"]);
                let lhs = c.closed(|| {
                    let d = c.fd(re(eta), x)? - c.fd(re(eta - 1.0), x)?;
                    Ok((-2.0 * x).exp() * c.gamma(re(eta))? * d)
                })?;
                let rhs = c.mellin(eta, |t| {
                    let d = 1.0 + (x - t).exp();
                    (-2.0 * t).exp() / (d * d)
                })?;
                Ok((lhs, rhs))
            },
        ),
        spec(
            "F03",
            "Eq.(2.9)",
            Group::Theorem,
            "ζ difference against ∫ t^{η−1}/(e^t + 1)²",
            "η > 1",
            vec![eta_grid(1.0, 2.5)],
            |p| need(p["eta"] > 1.0, "η > 1"),
            |c, p, form| {
                let eta = p["eta"];
                let e = re(eta);
                let lhs = c.closed(|| {
                    let shift = match form {
                        Form::Printed => 0.0,
                        Form::Derived => 2.0,
                    };
                    let coeff = re(1.0) - re(2f64.powf(shift - eta));
                    let d = c.eta_coeff(e) * c.zeta(e)? - coeff * c.zeta(re(eta - 1.0))?;
                    Ok(c.gamma(e)? * d)
                })?;
                let rhs = c.mellin(eta, |t| {
                    let d = 1.0 + (-t).exp();
                    (-2.0 * t).exp() / (d * d)
                })?;
                Ok((lhs, rhs))
            },
        )
        .avoiding(|p| near(p["eta"], 2.0))
        .constant_erratum("(1 − 2^{−η})ζ(η − 1)", "(1 − 2^{2−η})ζ(η − 1)"),
        spec(
            "F04",
            "Eq.(2.10)",
            Group::Theorem,
            "eBE difference against ∫ t^{η−1}e^{−νt}/(e^t − e^{−x})²",
            "ν > −1, x ≥ 0, η > 1 when x > 0, η > 2 when x = 0",
            vec![eta_grid(1.0, 2.5), nu_grid(-1.0, 0.5), x_grid()],
            |p| {
                need(p["nu"] > -1.0, "ν > −1")?;
                need(p["x"] >= 0.0, "x ≥ 0")?;
                let lo = if p["x"] == 0.0 { 2.0 } else { 1.0 };
                need(p["eta"] > lo, "η above its threshold")
            },
            |c, p, _| {
                let (eta, nu, x) = (p["eta"], p["nu"], p["x"]);
                let lhs = c.closed(|| {
                    let d = c.psi(re(eta - 1.0), x, nu)? - (nu + 1.0) * c.psi(re(eta), x, nu)?;
                    Ok(((nu + 2.0) * x).exp() * c.gamma(re(eta))? * d)
                })?;
                let rhs = c.mellin(eta, |t| {
                    let d = (-x - t).exp_m1();
                    (-(nu + 2.0) * t).exp() / (d * d)
                })?;
                Ok((lhs, rhs))
            },
        ),
        spec(
            "F05",
            "Eq.(2.12)",
            Group::Theorem,
            "Lerch difference against ∫ t^{η−1}e^{−(ν−1)t}/(e^t − z)²",
            "ν > 0, 0 < z ≤ 1, η > 1 when z < 1, η > 2 when z = 1",
            vec![eta_grid(1.0, 2.5), nu_grid(0.0, 1.0), z_grid()],
            |p| {
                need(p["nu"] > 0.0, "ν > 0")?;
                need(p["z"] > 0.0 && p["z"] <= 1.0, "0 < z ≤ 1")?;
                let lo = if p["z"] == 1.0 { 2.0 } else { 1.0 };
                need(p["eta"] > lo, "η above its threshold")
            },
            |c, p, _| {
                let (eta, nu, z) = (p["eta"], p["nu"], p["z"]);
                let lhs = c.closed(|| {
                    let d = c.lerch(z, re(eta - 1.0), nu)? - nu * c.lerch(z, re(eta), nu)?;
                    Ok(c.gamma(re(eta))? * d / z)
                })?;
                let lz = z.ln();
                let rhs = c.mellin(eta, |t| {
                    let d = (lz - t).exp_m1();
                    (-(nu + 1.0) * t).exp() / (d * d)
                })?;
                Ok((lhs, rhs))
            },
        ),
        spec(
            "F06",
            "Eq.(2.13)",
            Group::Theorem,
            "polylog difference against ∫ t^{η−1}/(e^t − z)²",
            "0 < z ≤ 1, η > 1 when z < 1, η > 2 when z = 1",
            vec![eta_grid(1.0, 2.5), z_grid()],
            |p| {
                need(p["z"] > 0.0 && p["z"] <= 1.0, "0 < z ≤ 1")?;
                let lo = if p["z"] == 1.0 { 2.0 } else { 1.0 };
                need(p["eta"] > lo, "η above its threshold")
            },
            |c, p, _| {
                let (eta, z) = (p["eta"], p["z"]);
                let lhs = c.closed(|| {
                    let d = c.polylog(z, re(eta - 1.0))? - c.polylog(z, re(eta))?;
                    Ok(c.gamma(re(eta))? * d / (z * z))
                })?;
                let lz = z.ln();
                let rhs = c.mellin(eta, |t| {
                    let d = (lz - t).exp_m1();
                    (-2.0 * t).exp() / (d * d)
                })?;
                Ok((lhs, rhs))
            },
        ),
        spec(
            "F07",
            "Eq.(2.14)",
            Group::Theorem,
            "BE difference against ∫ t^{η−1}/(e^t − e^x)²",
            "x ≤ 0; η > 1 when x < 0, η > 2 when x = 0",
            vec![eta_grid(1.0, 2.5), bose_x_derived()],
            |p| {
                need(p["x"] <= 0.0, "x ≤ 0")?;
                let lo = if p["x"] == 0.0 { 2.0 } else { 1.0 };
                need(p["eta"] > lo, "η above its threshold")
            },
            |c, p, _| {
                let (eta, x) = (p["eta"], p["x"]);
                let lhs = c.closed(|| {
                    let d = c.be(re(eta - 1.0), x)? - c.be(re(eta), x)?;
                    Ok((-2.0 * x).exp() * c.gamma(re(eta))? * d)
                })?;
                let rhs = c.mellin(eta, |t| {
                    let d = (x - t).exp_m1();
                    (-2.0 * t).exp() / (d * d)
                })?;
                Ok((lhs, rhs))
            },
        )
        .domain_erratum(
            "x ≥ 0, η > 1",
            "x ≤ 0 (η > 2 at x = 0)",
            vec![eta_grid(1.0, 2.5), bose_x_printed()],
            |p| {
                need(p["x"] >= 0.0, "x ≥ 0")?;
                need(p["eta"] > 1.0, "η > 1")
            },
        ),
        spec(
            "F08",
            "Eq.(2.15)",
            Group::Theorem,
            "Hurwitz difference against ∫ t^{η−1}e^{−(ν−1)t}/(e^t − 1)²",
            "ν > 0, η > 2",
            vec![eta_grid(2.0, 3.0), nu_grid(0.0, 1.0)],
            |p| {
                need(p["nu"] > 0.0, "ν > 0")?;
                need(p["eta"] > 2.0, "η > 2")
            },
            |c, p, _| {
                let (eta, nu) = (p["eta"], p["nu"]);
                let lhs = c.closed(|| {
                    let d = c.hurwitz(re(eta - 1.0), nu)? - nu * c.hurwitz(re(eta), nu)?;
                    Ok(c.gamma(re(eta))? * d)
                })?;
                let rhs = c.mellin(eta, |t| {
                    let d = (-t).exp_m1();
                    (-(nu + 1.0) * t).exp() / (d * d)
                })?;
                Ok((lhs, rhs))
            },
        ),
        spec(
            "F09",
            "Eq.(2.16)",
            Group::Theorem,
            "ζ difference against ∫ t^{η−1}/(e^t − 1)²",
            "η > 2",
            vec![eta_grid(2.0, 3.0)],
            |p| need(p["eta"] > 2.0, "η > 2"),
            |c, p, _| {
                let eta = p["eta"];
                let lhs = c.closed(|| {
                    let d = c.zeta(re(eta - 1.0))? - c.zeta(re(eta))?;
                    Ok(c.gamma(re(eta))? * d)
                })?;
                let rhs = c.mellin(eta, |t| {
                    let d = (-t).exp_m1();
                    (-2.0 * t).exp() / (d * d)
                })?;
                Ok((lhs, rhs))
            },
        ),
    ]
}

fn eta_of(p: &Params) -> f64 {
    p["sigma"] + p["rho"]
}

fn products() -> Vec<IdentitySpec> {
    vec![
        spec(
            "P01",
            "Eq.(4.3)",
            Group::Product,
            "∫ΓΓ Ψν(σ+iτ; x)Ψν(ρ−iτ; x) dτ",
            "ν > −1/2, x ≥ 0; σ, ρ > 0 and σ+ρ > 1 when x > 0; σ, ρ > 1 when x = 0",
            vec![sigma_grid(0.5, 1.5), rho_grid(0.5, 1.5), nu_grid(-0.5, 0.5), x_grid()],
            |p| {
                need(p["nu"] > -0.5, "ν > −1/2")?;
                shift_band(p, &["sigma", "rho"])?;
                sum_above(p, 1.0)
            },
            |c, p, _| {
                let (sigma, rho, nu, x) = (p["sigma"], p["rho"], p["nu"], p["x"]);
                let eta = eta_of(p);
                let rhs = c.closed(|| {
                    let d = c.psi(re(eta - 1.0), x, 2.0 * nu)?
                        - (2.0 * nu + 1.0) * c.psi(re(eta), x, 2.0 * nu)?;
                    Ok(TWO_PI * c.gamma(re(eta))? * d)
                })?;
                let lhs = c.line2(sigma, rho, 0.0, |a, b| Ok(c.psi(a, x, nu)? * c.psi(b, x, nu)?))?;
                Ok((lhs, rhs))
            },
        )
        .domain_erratum(
            "ν > −1",
            "ν > −1/2 (Ψ_{2ν} needs 2ν > −1)",
            vec![sigma_grid(0.5, 1.5), rho_grid(0.5, 1.5), nu_grid(-1.0, 0.5), x_grid()],
            |p| {
                need(p["nu"] > -1.0, "ν > −1")?;
                shift_band(p, &["sigma", "rho"])?;
                sum_above(p, 1.0)
            },
        ),
        spec(
            "P02",
            "Eq.(4.4)",
            Group::Product,
            "∫|Γ Ψν(σ+iτ; x)|² dτ",
            "ν > −1/2, x ≥ 0; σ > 1/2 when x > 0, σ > 1 when x = 0",
            vec![sigma_grid(0.5, 1.5), nu_grid(-0.5, 0.5), x_grid()],
            |p| {
                need(p["nu"] > -0.5, "ν > −1/2")?;
                shift_band(p, &["sigma"])?;
                need(p["sigma"] > 0.5, "σ > 1/2")
            },
            eval_p02,
        )
        .domain_erratum(
            "ν > −1",
            "ν > −1/2 (Ψ_{2ν} needs 2ν > −1)",
            vec![sigma_grid(0.5, 1.5), nu_grid(-1.0, 0.5), x_grid()],
            |p| {
                need(p["nu"] > -1.0, "ν > −1")?;
                shift_band(p, &["sigma"])?;
                need(p["sigma"] > 0.5, "σ > 1/2")
            },
        ),
        spec(
            "P03",
            "Eq.(4.5)",
            Group::Product,
            "∫ΓΓ Φ(z, σ+iτ, ν)Φ(z, ρ−iτ, ν) dτ",
            "ν > 1/2, 0 < z ≤ 1; σ, ρ > 0 and σ+ρ > 1 when z < 1; σ, ρ > 1 when z = 1",
            vec![sigma_grid(0.5, 1.5), rho_grid(0.5, 1.5), nu_grid(0.5, 1.0), z_grid()],
            |p| {
                need(p["nu"] > 0.5, "ν > 1/2")?;
                z_band(p, &["sigma", "rho"])?;
                sum_above(p, 1.0)
            },
            eval_p03,
        )
        .domain_erratum(
            "ν > 0",
            "ν > 1/2 (Φ(z, ·, 2ν−1) needs 2ν − 1 > 0)",
            vec![sigma_grid(0.5, 1.5), rho_grid(0.5, 1.5), nu_grid(0.0, 1.0), z_grid()],
            |p| {
                need(p["nu"] > 0.0, "ν > 0")?;
                z_band(p, &["sigma", "rho"])?;
                sum_above(p, 1.0)
            },
        ),
        spec(
            "P04",
            "Eq.(4.6)",
            Group::Product,
            "∫|Γ Φ(z, σ+iτ, ν)|² dτ",
            "ν > 1/2, 0 < z ≤ 1; σ > 1/2 when z < 1, σ > 1 when z = 1",
            vec![sigma_grid(0.5, 1.5), nu_grid(0.5, 1.0), z_grid()],
            |p| {
                need(p["nu"] > 0.5, "ν > 1/2")?;
                z_band(p, &["sigma"])?;
                need(p["sigma"] > 0.5, "σ > 1/2")
            },
            |c, p, _| {
                let (sigma, nu, z) = (p["sigma"], p["nu"], p["z"]);
                let eta = 2.0 * sigma;
                let rhs = c.closed(|| {
                    let a = 2.0 * nu - 1.0;
                    let d = c.lerch(z, re(eta - 1.0), a)? - a * c.lerch(z, re(eta), a)?;
                    Ok(TWO_PI * c.gamma(re(eta))? * d / z)
                })?;
                let lhs = c.line2(sigma, sigma, 0.0, |a, b| {
                    Ok(c.lerch(z, a, nu)? * c.lerch(z, b, nu)?)
                })?;
                Ok((lhs, rhs))
            },
        ),
        spec(
            "P05",
            "Eq.(4.7)",
            Group::Product,
            "∫ΓΓ φ(z, σ+iτ)φ(z, ρ−iτ) dτ",
            "0 < z ≤ 1; σ, ρ > 0 and σ+ρ > 1 when z < 1; σ, ρ > 1 when z = 1",
            vec![sigma_grid(0.5, 1.5), rho_grid(0.5, 1.5), z_grid()],
            |p| {
                z_band(p, &["sigma", "rho"])?;
                sum_above(p, 1.0)
            },
            |c, p, _| {
                let (sigma, rho, z) = (p["sigma"], p["rho"], p["z"]);
                let eta = eta_of(p);
                let rhs = c.closed(|| {
                    let d = c.polylog(z, re(eta - 1.0))? - c.polylog(z, re(eta))?;
                    Ok(TWO_PI * c.gamma(re(eta))? * d)
                })?;
                let lhs = c.line2(sigma, rho, 0.0, |a, b| {
                    Ok(c.polylog(z, a)? * c.polylog(z, b)?)
                })?;
                Ok((lhs, rhs))
            },
        ),
        spec(
            "P06",
            "Eq.(4.8)",
            Group::Product,
            "∫|Γ φ(z, σ+iτ)|² dτ",
            "0 < z ≤ 1; σ > 1/2 when z < 1, σ > 1 when z = 1",
            vec![sigma_grid(0.5, 1.5), z_grid()],
            |p| {
                z_band(p, &["sigma"])?;
                need(p["sigma"] > 0.5, "σ > 1/2")
            },
            |c, p, _| {
                let (sigma, z) = (p["sigma"], p["z"]);
                let eta = 2.0 * sigma;
                let rhs = c.closed(|| {
                    let d = c.polylog(z, re(eta - 1.0))? - c.polylog(z, re(eta))?;
                    Ok(TWO_PI * c.gamma(re(eta))? * d)
                })?;
                let lhs = c.line2(sigma, sigma, 0.0, |a, b| {
                    Ok(c.polylog(z, a)? * c.polylog(z, b)?)
                })?;
                Ok((lhs, rhs))
            },
        ),
        spec(
            "P07",
            "Eq.(4.9)",
            Group::Product,
            "∫ΓΓ 𝔅_{σ+iτ−1}(x)𝔅_{ρ−iτ−1}(x) dτ",
            "x ≤ 0; σ, ρ > 0 and σ+ρ > 1 when x < 0; σ, ρ > 1 when x = 0",
            vec![sigma_grid(0.5, 1.5), rho_grid(0.5, 1.5), bose_x_derived()],
            |p| {
                bose_band(p, &["sigma", "rho"])?;
                sum_above(p, 1.0)
            },
            eval_p07,
        )
        .domain_erratum(
            "x ≥ 0, σ+ρ > 2",
            "x ≤ 0",
            vec![sigma_grid(0.5, 1.5), rho_grid(0.5, 1.5), bose_x_printed()],
            |p| {
                need(p["x"] >= 0.0, "x ≥ 0")?;
                above(p, &["sigma", "rho"], 0.0, "σ > 0")?;
                sum_above(p, 2.0)
            },
        ),
        spec(
            "P08",
            "Eq.(4.10)",
            Group::Product,
            "∫|Γ 𝔅_{σ+iτ−1}(x)|² dτ",
            "x ≤ 0; σ > 1/2 when x < 0, σ > 1 when x = 0",
            vec![sigma_grid(0.5, 1.5), bose_x_derived()],
            |p| {
                bose_band(p, &["sigma"])?;
                need(p["sigma"] > 0.5, "σ > 1/2")
            },
            |c, p, _| {
                let (sigma, x) = (p["sigma"], p["x"]);
                let eta = 2.0 * sigma;
                let rhs = c.closed(|| {
                    let d = c.be(re(eta - 1.0), x)? - c.be(re(eta), x)?;
                    Ok(TWO_PI * c.gamma(re(eta))? * d)
                })?;
                let lhs = c.line2(sigma, sigma, 0.0, |a, b| Ok(c.be(a, x)? * c.be(b, x)?))?;
                Ok((lhs, rhs))
            },
        )
        .domain_erratum(
            "x ≥ 0, σ > 1",
            "x ≤ 0",
            vec![sigma_grid(1.0, 1.5), bose_x_printed()],
            |p| {
                need(p["x"] >= 0.0, "x ≥ 0")?;
                need(p["sigma"] > 1.0, "σ > 1")
            },
        ),
        spec(
            "P09",
            "Eq.(4.11)",
            Group::Product,
            "∫ΓΓ ζ(σ+iτ, ν)ζ(ρ−iτ, ν) dτ",
            "ν > 1/2, σ, ρ > 1",
            vec![sigma_grid(1.0, 1.5), rho_grid(1.0, 1.5), nu_grid(0.5, 1.0)],
            |p| {
                need(p["nu"] > 0.5, "ν > 1/2")?;
                above(p, &["sigma", "rho"], 1.0, "σ > 1")
            },
            |c, p, _| {
                let (sigma, rho, nu) = (p["sigma"], p["rho"], p["nu"]);
                let eta = eta_of(p);
                let rhs = c.closed(|| {
                    let a = 2.0 * nu - 1.0;
                    let d = c.hurwitz(re(eta - 1.0), a)? - a * c.hurwitz(re(eta), a)?;
                    Ok(TWO_PI * c.gamma(re(eta))? * d)
                })?;
                let lhs = c.line2(sigma, rho, 0.0, |a, b| {
                    Ok(c.hurwitz(a, nu)? * c.hurwitz(b, nu)?)
                })?;
                Ok((lhs, rhs))
            },
        ),
        spec(
            "P10",
            "Eq.(4.12)",
            Group::Product,
            "∫|Γ ζ(σ+iτ, ν)|² dτ",
            "ν > 1/2, σ > 1",
            vec![sigma_grid(1.0, 1.5), nu_grid(0.5, 1.0)],
            |p| {
                need(p["nu"] > 0.5, "ν > 1/2")?;
                need(p["sigma"] > 1.0, "σ > 1")
            },
            |c, p, _| {
                let (sigma, nu) = (p["sigma"], p["nu"]);
                let eta = 2.0 * sigma;
                let rhs = c.closed(|| {
                    let a = 2.0 * nu - 1.0;
                    let d = c.hurwitz(re(eta - 1.0), a)? - a * c.hurwitz(re(eta), a)?;
                    Ok(TWO_PI * c.gamma(re(eta))? * d)
                })?;
                let lhs = c.line2(sigma, sigma, 0.0, |a, b| {
                    Ok(c.hurwitz(a, nu)? * c.hurwitz(b, nu)?)
                })?;
                Ok((lhs, rhs))
            },
        ),
        spec(
            "P11",
            "Eq.(4.13)",
            Group::Product,
            "∫ΓΓ ζ(σ+iτ)ζ(ρ−iτ) dτ",
            "σ, ρ > 1",
            vec![sigma_grid(1.0, 1.5), rho_grid(1.0, 1.5)],
            |p| above(p, &["sigma", "rho"], 1.0, "σ > 1"),
            eval_p11,
        ),
        spec(
            "P12",
            "Eq.(4.14)",
            Group::Product,
            "∫|Γ ζ(σ+iτ)|² dτ",
            "σ > 1",
            vec![ParamSpec::choices("sigma", [1.25, 1.5, 2.0], (1.1, 3.0))],
            |p| need(p["sigma"] > 1.0, "σ > 1"),
            |c, p, _| {
                let sigma = p["sigma"];
                let eta = 2.0 * sigma;
                let rhs = c.closed(|| {
                    let d = c.zeta(re(eta - 1.0))? - c.zeta(re(eta))?;
                    Ok(TWO_PI * c.gamma(re(eta))? * d)
                })?;
                let lhs = c.line2(sigma, sigma, 0.0, |a, b| Ok(c.zeta(a)? * c.zeta(b)?))?;
                Ok((lhs, rhs))
            },
        ),
        spec(
            "P13",
            "Eq.(4.16)",
            Group::Product,
            "∫ΓΓ Θν(σ+iτ; x)Θν(ρ−iτ; x) dτ",
            "ν > 0, x ≥ 0, σ, ρ > 0, σ+ρ > 1",
            vec![sigma_grid(0.0, 1.0), rho_grid(0.0, 1.0), nu_grid(0.0, 1.0), x_grid()],
            |p| {
                need(p["nu"] > 0.0, "ν > 0")?;
                need(p["x"] >= 0.0, "x ≥ 0")?;
                above(p, &["sigma", "rho"], 0.0, "σ > 0")?;
                sum_above(p, 1.0)
            },
            eval_p13,
        ),
        spec(
            "P14",
            "Eq.(4.17)",
            Group::Product,
            "∫|Γ Θν(σ+iτ; x)|² dτ",
            "ν > 0, x ≥ 0, σ > 1/2",
            vec![sigma_grid(0.5, 1.0), nu_grid(0.0, 1.0), x_grid()],
            |p| {
                need(p["nu"] > 0.0, "ν > 0")?;
                need(p["x"] >= 0.0, "x ≥ 0")?;
                need(p["sigma"] > 0.5, "σ > 1/2")
            },
            |c, p, _| {
                let (sigma, nu, x) = (p["sigma"], p["nu"], p["x"]);
                let eta = 2.0 * sigma;
                let rhs = c.closed(|| {
                    let d = (2.0 * nu + 1.0) * c.theta(re(eta), x, 2.0 * nu)?
                        - c.theta(re(eta - 1.0), x, 2.0 * nu)?;
                    Ok(TWO_PI * c.gamma(re(eta))? * d)
                })?;
                let lhs =
                    c.line2(sigma, sigma, 0.0, |a, b| Ok(c.theta(a, x, nu)? * c.theta(b, x, nu)?))?;
                Ok((lhs, rhs))
            },
        ),
        spec(
            "P15",
            "Eq.(4.18)",
            Group::Product,
            "∫ΓΓ 𝔉_{σ+iτ−1}(x)𝔉_{ρ−iτ−1}(x) dτ",
            "any real x, σ, ρ > 0, σ+ρ > 1",
            vec![sigma_grid(0.0, 1.0), rho_grid(0.0, 1.0), fd_x_grid()],
            |p| {
                above(p, &["sigma", "rho"], 0.0, "σ > 0")?;
                sum_above(p, 1.0)
            },
            eval_p15,
        ),
        spec(
            "P16",
            "Eq.(4.19)",
            Group::Product,
            "∫|Γ 𝔉_{σ+iτ−1}(x)|² dτ",
            "any real x, σ > 1/2",
            vec![sigma_grid(0.5, 1.0), fd_x_grid()],
            |p| {
                need(p["sigma"] > 0.5, "σ > 1/2")
            },
            |c, p, _| {
                let (sigma, x) = (p["sigma"], p["x"]);
                let eta = 2.0 * sigma;
                let rhs = c.closed(|| {
                    let d = c.fd(re(eta), x)? - c.fd(re(eta - 1.0), x)?;
                    Ok(TWO_PI * c.gamma(re(eta))? * d)
                })?;
                let lhs = c.line2(sigma, sigma, 2.0 * fd_growth(x), |a, b| {
                    Ok(c.fd(a, x)? * c.fd(b, x)?)
                })?;
                Ok((lhs, rhs))
            },
        ),
        spec(
            "P17",
            "Eq.(4.20)",
            Group::Product,
            "∫ C(σ+iτ)C(ρ−iτ)ζ(σ+iτ)ζ(ρ−iτ) dτ",
            "σ, ρ > 0, σ+ρ > 1",
            vec![sigma_grid(0.0, 0.75), rho_grid(0.0, 0.75)],
            |p| {
                above(p, &["sigma", "rho"], 0.0, "σ > 0")?;
                sum_above(p, 1.0)
            },
            |c, p, form| {
                let (sigma, rho) = (p["sigma"], p["rho"]);
                let eta = eta_of(p);
                let rhs = c.closed(|| eta_zeta_rhs(c, eta, form))?;
                let lhs = c.line2(sigma, rho, 0.0, |a, b| {
                    Ok(c.eta_coeff(a) * c.eta_coeff(b) * c.zeta(a)? * c.zeta(b)?)
                })?;
                Ok((lhs, rhs))
            },
        )
        .avoiding(|p| near(p["sigma"], 1.0) || near(p["rho"], 1.0) || near(eta_of(p), 2.0))
        .constant_erratum(
            "(1 − 2^{−σ−ρ})ζ(σ+ρ−1)",
            "(1 − 2^{2−σ−ρ})ζ(σ+ρ−1)",
        ),
        spec(
            "P18",
            "Eq.(4.21)",
            Group::Product,
            "∫|C ζ(σ+iτ)|² dτ",
            "σ > 1/2",
            vec![sigma_grid(0.5, 1.25)],
            |p| need(p["sigma"] > 0.5, "σ > 1/2"),
            |c, p, form| {
                let sigma = p["sigma"];
                let rhs = c.closed(|| eta_zeta_rhs(c, 2.0 * sigma, form))?;
                let lhs = c.line2(sigma, sigma, 0.0, |a, b| {
                    Ok(c.eta_coeff(a) * c.eta_coeff(b) * c.zeta(a)? * c.zeta(b)?)
                })?;
                Ok((lhs, rhs))
            },
        )
        .avoiding(|p| near(p["sigma"], 1.0))
        .constant_erratum("(1 − 2^{−2σ})ζ(2σ−1)", "(1 − 2^{2−2σ})ζ(2σ−1)"),
        spec(
            "P19",
            "Eq.(4.22)",
            Group::Product,
            "∫ΓΓ Φ(e^{−x}, σ+iτ, ν)𝔅_{ρ−iτ−1}(−x) dτ",
            "ν > 0, x ≥ 0; σ, ρ > 0 and σ+ρ > 1 when x > 0; σ, ρ > 1 when x = 0",
            vec![sigma_grid(0.5, 1.5), rho_grid(0.5, 1.5), nu_grid(0.0, 1.0), x_grid()],
            |p| {
                need(p["nu"] > 0.0, "ν > 0")?;
                shift_band(p, &["sigma", "rho"])?;
                sum_above(p, 1.0)
            },
            eval_p19,
        ),
        spec(
            "P20",
            "Eq.(4.23)",
            Group::Product,
            "∫ΓΓ 𝔅_{σ+iτ−1}(−x)φ(e^{−x}, ρ−iτ) dτ",
            "x ≥ 0; σ, ρ > 0 and σ+ρ > 1 when x > 0; σ, ρ > 1 when x = 0",
            vec![sigma_grid(0.5, 1.5), rho_grid(0.5, 1.5), x_grid()],
            |p| {
                shift_band(p, &["sigma", "rho"])?;
                sum_above(p, 1.0)
            },
            |c, p, _| {
                let (sigma, rho, x) = (p["sigma"], p["rho"], p["x"]);
                let eta = eta_of(p);
                let z = (-x).exp();
                let rhs = c.closed(|| {
                    let d = c.be(re(eta - 1.0), -x)? - c.be(re(eta), -x)?;
                    Ok(TWO_PI * c.gamma(re(eta))? * d)
                })?;
                let lhs = c.line2(sigma, rho, 0.0, |a, b| Ok(c.be(a, -x)? * c.polylog(z, b)?))?;
                Ok((lhs, rhs))
            },
        ),
        spec(
            "P21",
            "Eq.(4.24)",
            Group::Product,
            "∫ΓΓ ζ(σ+iτ, ν)ζ(ρ−iτ) dτ",
            "ν > 0, σ, ρ > 1",
            vec![sigma_grid(1.0, 1.5), rho_grid(1.0, 1.5), nu_grid(0.0, 1.0)],
            |p| {
                need(p["nu"] > 0.0, "ν > 0")?;
                above(p, &["sigma", "rho"], 1.0, "σ > 1")
            },
            eval_p21,
        ),
        spec(
            "P22",
            "Eq.(4.25)",
            Group::Product,
            "∫ΓΓ Θν(σ+iτ; x)𝔉_{ρ−iτ−1}(−x) dτ",
            "ν > −1, x ≥ 0, σ, ρ > 0, σ+ρ > 1",
            vec![sigma_grid(0.0, 1.0), rho_grid(0.0, 1.0), nu_grid(-1.0, 0.5), x_grid()],
            |p| {
                need(p["nu"] > -1.0, "ν > −1")?;
                need(p["x"] >= 0.0, "x ≥ 0")?;
                above(p, &["sigma", "rho"], 0.0, "σ > 0")?;
                sum_above(p, 1.0)
            },
            |c, p, _| {
                let (sigma, rho, nu, x) = (p["sigma"], p["rho"], p["nu"], p["x"]);
                let eta = eta_of(p);
                let rhs = c.closed(|| {
                    let d = (nu + 1.0) * c.theta(re(eta), x, nu)? - c.theta(re(eta - 1.0), x, nu)?;
                    Ok(TWO_PI * c.gamma(re(eta))? * d)
                })?;
                let lhs =
                    c.line2(sigma, rho, 0.0, |a, b| Ok(c.theta(a, x, nu)? * c.fd(b, -x)?))?;
                Ok((lhs, rhs))
            },
        ),
        spec(
            "P23",
            "Eq.(4.2)",
            Group::Product,
            "∫ΓΓ Ψν Ψν dτ against 2π e^{−2(ν+1)x}∫ t^{σ+ρ−1}e^{−2νt}/(e^t − e^{−x})² dt",
            "ν > −1, x ≥ 0; σ, ρ > 0 when x > 0; σ, ρ > 1 when x = 0 \
             (printed: σ+ρ > 1 when x = 0, σ+ρ > 0 when x > 0)",
            vec![sigma_grid(0.5, 1.5), rho_grid(0.5, 1.5), nu_grid(-1.0, 0.5), x_grid()],
            |p| {
                need(p["nu"] > -1.0, "ν > −1")?;
                shift_band(p, &["sigma", "rho"])
            },
            |c, p, _| {
                let (sigma, rho, nu, x) = (p["sigma"], p["rho"], p["nu"], p["x"]);
                let eta = eta_of(p);
                let m = c.mellin(eta, |t| {
                    let d = (-x - t).exp_m1();
                    (-(2.0 * nu + 2.0) * t).exp() / (d * d)
                })?;
                let rhs = m.scale(re(TWO_PI * (-2.0 * (nu + 1.0) * x).exp()), 0.0);
                let lhs = c.line2(sigma, rho, 0.0, |a, b| Ok(c.psi(a, x, nu)? * c.psi(b, x, nu)?))?;
                Ok((lhs, rhs))
            },
        ),
        spec(
            "P24",
            "Eq.(4.15)",
            Group::Product,
            "∫ΓΓ Θν Θν dτ against 2π e^{−2(ν+1)x}∫ t^{σ+ρ−1}e^{−2νt}/(e^t + e^{−x})² dt",
            "ν > 0, x ≥ 0, σ, ρ > 0",
            vec![sigma_grid(0.0, 1.0), rho_grid(0.0, 1.0), nu_grid(0.0, 1.0), x_grid()],
            |p| {
                need(p["nu"] > 0.0, "ν > 0")?;
                need(p["x"] >= 0.0, "x ≥ 0")?;
                above(p, &["sigma", "rho"], 0.0, "σ > 0")
            },
            |c, p, _| {
                let (sigma, rho, nu, x) = (p["sigma"], p["rho"], p["nu"], p["x"]);
                let eta = eta_of(p);
                let m = c.mellin(eta, |t| {
                    let d = 1.0 + (-x - t).exp();
                    (-(2.0 * nu + 2.0) * t).exp() / (d * d)
                })?;
                let rhs = m.scale(re(TWO_PI * (-2.0 * (nu + 1.0) * x).exp()), 0.0);
                let lhs =
                    c.line2(sigma, rho, 0.0, |a, b| Ok(c.theta(a, x, nu)? * c.theta(b, x, nu)?))?;
                Ok((lhs, rhs))
            },
        ),
    ]
}

fn eval_p02(c: &Ctx, p: &Params, _: Form) -> Sides {
    let (sigma, nu, x) = (p["sigma"], p["nu"], p["x"]);
    let eta = 2.0 * sigma;
    let rhs = c.closed(|| {
        let d = c.psi(re(eta - 1.0), x, 2.0 * nu)? - (2.0 * nu + 1.0) * c.psi(re(eta), x, 2.0 * nu)?;
        Ok(TWO_PI * c.gamma(re(eta))? * d)
    })?;
    let lhs = c.line2(sigma, sigma, 0.0, |a, b| Ok(c.psi(a, x, nu)? * c.psi(b, x, nu)?))?;
    Ok((lhs, rhs))
}

pub(crate) fn eval_p03(c: &Ctx, p: &Params, _: Form) -> Sides {
    let (sigma, rho, nu, z) = (p["sigma"], p["rho"], p["nu"], p["z"]);
    let eta = eta_of(p);
    let rhs = c.closed(|| {
        let a = 2.0 * nu - 1.0;
        let d = c.lerch(z, re(eta - 1.0), a)? - a * c.lerch(z, re(eta), a)?;
        Ok(TWO_PI * c.gamma(re(eta))? * d / z)
    })?;
    let lhs = c.line2(sigma, rho, 0.0, |a, b| Ok(c.lerch(z, a, nu)? * c.lerch(z, b, nu)?))?;
    Ok((lhs, rhs))
}

pub(crate) fn eval_p07(c: &Ctx, p: &Params, _: Form) -> Sides {
    let (sigma, rho, x) = (p["sigma"], p["rho"], p["x"]);
    let eta = eta_of(p);
    let rhs = c.closed(|| {
        let d = c.be(re(eta - 1.0), x)? - c.be(re(eta), x)?;
        Ok(TWO_PI * c.gamma(re(eta))? * d)
    })?;
    let lhs = c.line2(sigma, rho, 0.0, |a, b| Ok(c.be(a, x)? * c.be(b, x)?))?;
    Ok((lhs, rhs))
}

pub(crate) fn eval_p11(c: &Ctx, p: &Params, _: Form) -> Sides {
    let (sigma, rho) = (p["sigma"], p["rho"]);
    let eta = eta_of(p);
    let rhs = c.closed(|| {
        let d = c.zeta(re(eta - 1.0))? - c.zeta(re(eta))?;
        Ok(TWO_PI * c.gamma(re(eta))? * d)
    })?;
    let lhs = c.line2(sigma, rho, 0.0, |a, b| Ok(c.zeta(a)? * c.zeta(b)?))?;
    Ok((lhs, rhs))
}

pub(crate) fn eval_p13(c: &Ctx, p: &Params, _: Form) -> Sides {
    let (sigma, rho, nu, x) = (p["sigma"], p["rho"], p["nu"], p["x"]);
    let eta = eta_of(p);
    let rhs = c.closed(|| {
        let d = (2.0 * nu + 1.0) * c.theta(re(eta), x, 2.0 * nu)?
            - c.theta(re(eta - 1.0), x, 2.0 * nu)?;
        Ok(TWO_PI * c.gamma(re(eta))? * d)
    })?;
    let lhs = c.line2(sigma, rho, 0.0, |a, b| Ok(c.theta(a, x, nu)? * c.theta(b, x, nu)?))?;
    Ok((lhs, rhs))
}

pub(crate) fn eval_p15(c: &Ctx, p: &Params, _: Form) -> Sides {
    let (sigma, rho, x) = (p["sigma"], p["rho"], p["x"]);
    let eta = eta_of(p);
    let rhs = c.closed(|| {
        let d = c.fd(re(eta), x)? - c.fd(re(eta - 1.0), x)?;
        Ok(TWO_PI * c.gamma(re(eta))? * d)
    })?;
    let lhs = c.line2(sigma, rho, 2.0 * fd_growth(x), |a, b| Ok(c.fd(a, x)? * c.fd(b, x)?))?;
    Ok((lhs, rhs))
}

pub(crate) fn eval_p19(c: &Ctx, p: &Params, _: Form) -> Sides {
    let (sigma, rho, nu, x) = (p["sigma"], p["rho"], p["nu"], p["x"]);
    let eta = eta_of(p);
    let z = (-x).exp();
    let rhs = c.closed(|| {
        let d = c.lerch(z, re(eta - 1.0), nu)? - nu * c.lerch(z, re(eta), nu)?;
        Ok(TWO_PI * c.gamma(re(eta))? * d)
    })?;
    let lhs = c.line2(sigma, rho, 0.0, |a, b| Ok(c.lerch(z, a, nu)? * c.be(b, -x)?))?;
    Ok((lhs, rhs))
}

pub(crate) fn eval_p21(c: &Ctx, p: &Params, _: Form) -> Sides {
    let (sigma, rho, nu) = (p["sigma"], p["rho"], p["nu"]);
    let eta = eta_of(p);
    let rhs = c.closed(|| {
        let d = c.hurwitz(re(eta - 1.0), nu)? - nu * c.hurwitz(re(eta), nu)?;
        Ok(TWO_PI * c.gamma(re(eta))? * d)
    })?;
    let lhs = c.line2(sigma, rho, 0.0, |a, b| Ok(c.hurwitz(a, nu)? * c.zeta(b)?))?;
    Ok((lhs, rhs))
}

/// `2πΓ(η)[(1 − 2^{1−η})ζ(η) − k·ζ(η−1)]` with the printed or derived `k`.
fn eta_zeta_rhs(c: &Ctx, eta: f64, form: Form) -> Result<ComplexScalar> {
    let shift = match form {
        Form::Printed => 0.0,
        Form::Derived => 2.0,
    };
    let e = re(eta);
    let k = re(1.0 - 2f64.powf(shift - eta));
    let d = c.eta_coeff(e) * c.zeta(e)? - k * c.zeta(re(eta - 1.0))?;
    Ok(TWO_PI * c.gamma(e)? * d)
}

fn constant(v: f64) -> Result<ComplexScalar> {
    Ok(re(v))
}

fn line_values() -> Vec<IdentitySpec> {
    vec![
        spec(
            "D01",
            "Eq.(5.14)",
            Group::LineValue,
            "∫Γ Ψν(σ+iτ; x) dτ = 2πe^{−ν(x+1)}/(e^{x+1} − 1)",
            "ν > −1, x ≥ 0; σ > 0 when x > 0, σ > 1 when x = 0",
            vec![sigma_grid(0.0, 1.5), nu_grid(-1.0, 0.5), x_grid()],
            |p| {
                need(p["nu"] > -1.0, "ν > −1")?;
                shift_band(p, &["sigma"])
            },
            |c, p, _| {
                let (sigma, nu, x) = (p["sigma"], p["nu"], p["x"]);
                let rhs = c.closed(|| {
                    constant(TWO_PI * (-nu * (x + 1.0)).exp() / (x + 1.0).exp_m1())
                })?;
                let lhs = c.line1(sigma, 0.0, 0.0, |s| c.psi(s, x, nu))?;
                Ok((lhs, rhs))
            },
        ),
        spec(
            "D02",
            "Eq.(5.15)",
            Group::LineValue,
            "∫Γ Θν(σ+iτ; x) dτ = 2πe^{−ν(x+1)}/(e^{x+1} + 1)",
            "ν > −1, x ≥ 0; σ > 0 when x > 0, σ > 1 when x = 0",
            vec![sigma_grid(0.0, 1.5), nu_grid(-1.0, 0.5), x_grid()],
            |p| {
                need(p["nu"] > -1.0, "ν > −1")?;
                shift_band(p, &["sigma"])
            },
            |c, p, _| {
                let (sigma, nu, x) = (p["sigma"], p["nu"], p["x"]);
                let rhs = c.closed(|| {
                    constant(TWO_PI * (-nu * (x + 1.0)).exp() / ((x + 1.0).exp() + 1.0))
                })?;
                let lhs = c.line1(sigma, 0.0, 0.0, |s| c.theta(s, x, nu))?;
                Ok((lhs, rhs))
            },
        ),
        spec(
            "D03",
            "Eq.(5.16)",
            Group::LineValue,
            "∫Γ Φ(z, σ+iτ, ν) dτ = 2πe^{1−ν}/(e − z)",
            "ν > 0, 0 < z ≤ 1; σ > 0 when z < 1, σ > 1 when z = 1",
            vec![sigma_grid(0.0, 1.5), nu_grid(0.0, 1.0), z_grid()],
            |p| {
                need(p["nu"] > 0.0, "ν > 0")?;
                z_band(p, &["sigma"])
            },
            |c, p, _| {
                let (sigma, nu, z) = (p["sigma"], p["nu"], p["z"]);
                let rhs = c.closed(|| constant(TWO_PI * (1.0 - nu).exp() / (E - z)))?;
                let lhs = c.line1(sigma, 0.0, 0.0, |s| c.lerch(z, s, nu))?;
                Ok((lhs, rhs))
            },
        ),
        spec(
            "D04",
            "Eq.(5.17)",
            Group::LineValue,
            "∫Γ φ(z, σ+iτ) dτ = 2πz/(e − z)",
            "0 < z ≤ 1; σ > 0 when z < 1, σ > 1 when z = 1",
            vec![sigma_grid(0.0, 1.5), z_grid()],
            |p| z_band(p, &["sigma"]),
            |c, p, _| {
                let (sigma, z) = (p["sigma"], p["z"]);
                let rhs = c.closed(|| constant(TWO_PI * z / (E - z)))?;
                let lhs = c.line1(sigma, 0.0, 0.0, |s| c.polylog(z, s))?;
                Ok((lhs, rhs))
            },
        ),
        spec(
            "D05",
            "Eq.(5.18)",
            Group::LineValue,
            "∫Γ 𝔅_{σ+iτ−1}(x) dτ = 2π/(e^{1−x} − 1)",
            "x ≤ 0; σ > 0 when x < 0, σ > 1 when x = 0",
            vec![sigma_grid(0.0, 1.5), bose_x_derived()],
            |p| bose_band(p, &["sigma"]),
            |c, p, _| {
                let (sigma, x) = (p["sigma"], p["x"]);
                let rhs = c.closed(|| constant(TWO_PI / (1.0 - x).exp_m1()))?;
                let lhs = c.line1(sigma, 0.0, 0.0, |s| c.be(s, x))?;
                Ok((lhs, rhs))
            },
        )
        .domain_erratum(
            "x ≥ 0, σ > 1",
            "x ≤ 0",
            vec![sigma_grid(1.0, 1.5), bose_x_printed()],
            |p| {
                need(p["x"] >= 0.0, "x ≥ 0")?;
                need(p["sigma"] > 1.0, "σ > 1")
            },
        ),
        spec(
            "D06",
            "Eq.(5.19)",
            Group::LineValue,
            "∫Γ 𝔉_{σ+iτ−1}(x) dτ = 2π/(e^{1−x} + 1)",
            "any real x, σ > 0",
            vec![sigma_grid(0.0, 1.5), fd_x_grid()],
            |p| {
                need(p["sigma"] > 0.0, "σ > 0")
            },
            |c, p, _| {
                let (sigma, x) = (p["sigma"], p["x"]);
                let rhs = c.closed(|| constant(TWO_PI / ((1.0 - x).exp() + 1.0)))?;
                let lhs = c.line1(sigma, 0.0, fd_growth(x), |s| c.fd(s, x))?;
                Ok((lhs, rhs))
            },
        ),
        spec(
            "D07",
            "Eq.(5.20)",
            Group::LineValue,
            "∫Γ ζ(σ+iτ, ν) dτ = 2πe^{1−ν}/(e − 1)",
            "ν > 0, σ > 1",
            vec![sigma_grid(1.0, 1.5), nu_grid(0.0, 1.0)],
            |p| {
                need(p["nu"] > 0.0, "ν > 0")?;
                need(p["sigma"] > 1.0, "σ > 1")
            },
            |c, p, _| {
                let (sigma, nu) = (p["sigma"], p["nu"]);
                let rhs = c.closed(|| constant(TWO_PI * (1.0 - nu).exp() / (E - 1.0)))?;
                let lhs = c.line1(sigma, 0.0, 0.0, |s| c.hurwitz(s, nu))?;
                Ok((lhs, rhs))
            },
        ),
        spec(
            "D08",
            "Eq.(5.21)",
            Group::LineValue,
            "∫ C(σ+iτ)ζ(σ+iτ) dτ = 2π/(e + 1)",
            "σ > 0",
            vec![sigma_grid(0.0, 0.75)],
            |p| need(p["sigma"] > 0.0, "σ > 0"),
            |c, p, _| {
                let sigma = p["sigma"];
                let rhs = c.closed(|| constant(TWO_PI / (E + 1.0)))?;
                let lhs = c.line1(sigma, 0.0, 0.0, |s| Ok(c.eta_coeff(s) * c.zeta(s)?))?;
                Ok((lhs, rhs))
            },
        )
        .avoiding(|p| near(p["sigma"], 1.0)),
        spec(
            "D09",
            "Eq.(5.22)",
            Group::LineValue,
            "∫Γ ζ(σ+iτ) dτ = 2π/(e − 1)",
            "σ > 1",
            vec![sigma_grid(1.0, 1.5)],
            |p| need(p["sigma"] > 1.0, "σ > 1"),
            |c, p, _| {
                let sigma = p["sigma"];
                let rhs = c.closed(|| constant(TWO_PI / (E - 1.0)))?;
                let lhs = c.line1(sigma, 0.0, 0.0, |s| c.zeta(s))?;
                Ok((lhs, rhs))
            },
        ),
        spec(
            "D10",
            "Eq.(5.23)",
            Group::LineValue,
            "∫Γ ζ(σ+iτ) dτ inside the critical strip",
            "0 < σ < 1",
            vec![ParamSpec::choices("sigma", [0.25, 0.5, 0.75], (0.1, 0.9))],
            |p| need(p["sigma"] > 0.0 && p["sigma"] < 1.0, "0 < σ < 1"),
            |c, p, form| {
                let sigma = p["sigma"];
                let rhs = c.closed(|| {
                    let last = match form {
                        Form::Printed => TWO_PI * E,
                        Form::Derived => TWO_PI,
                    };
                    constant(TWO_PI / (E - 1.0) - last)
                })?;
                let lhs = c.line1(sigma, 0.0, 0.0, |s| c.zeta(s))?;
                Ok((lhs, rhs))
            },
        )
        .constant_erratum("2π/(e − 1) − 2πe", "2π/(e − 1) − 2π"),
    ]
}

/// Function parameters for a representation; `x` is the FD/BE argument
/// for those two families and the shift otherwise.
pub(crate) fn pair_params(rep: Representation, p: &Params) -> FunctionParams {
    let mut f = FunctionParams::new(re(p["sigma"]));
    if let Some(nu) = p.get("nu") {
        f = f.with_nu(re(*nu));
    }
    if let Some(z) = p.get("z") {
        f = f.with_z(re(*z));
    }
    if let Some(x) = p.get("x") {
        f = match rep {
            Representation::BoseEinstein | Representation::FermiDirac => f.with_mu(*x),
            _ => f.with_x(*x),
        };
    }
    f
}

fn duality_sides(c: &Ctx, p: &Params, rep: Representation) -> Sides {
    let pair = TransformPair::new(rep, pair_params(rep, p));
    let omega = p["omega"];
    let rhs = duality_value(&pair, omega)?;
    let lhs = duality_line(&pair, omega, &c.k, &c.line)?;
    Ok((lhs, rhs))
}

fn pair_sides(c: &Ctx, p: &Params, rep: Representation) -> Sides {
    let pair = TransformPair::new(rep, pair_params(rep, p));
    let tau = p["tau"];
    let lhs = pair.function_side(tau, &c.k)?;
    let rhs = pair.fourier_side(tau, &c.line)?;
    Ok((lhs, rhs))
}

fn dualities() -> Vec<IdentitySpec> {
    vec![
        spec(
            "T01",
            "Eq.(5.2)",
            Group::Duality,
            "F[Γ Ψν(·; x)](ω) in closed form",
            "ν > −1, x ≥ 0; σ > 0 when x > 0, σ > 1 when x = 0",
            vec![sigma_grid(0.0, 1.5), nu_grid(-1.0, 0.5), x_grid(), omega_grid()],
            |p| {
                need(p["nu"] > -1.0, "ν > −1")?;
                shift_band(p, &["sigma"])
            },
            |c, p, _| duality_sides(c, p, Representation::Ebe),
        ),
        spec(
            "T02",
            "Eq.(5.3)",
            Group::Duality,
            "F[Γ Θν(·; x)](ω) in closed form",
            "ν > −1, x ≥ 0, σ > 0",
            vec![sigma_grid(0.0, 1.0), nu_grid(-1.0, 0.5), x_grid(), omega_grid()],
            |p| {
                need(p["nu"] > -1.0, "ν > −1")?;
                need(p["x"] >= 0.0, "x ≥ 0")?;
                need(p["sigma"] > 0.0, "σ > 0")
            },
            |c, p, _| duality_sides(c, p, Representation::Efd),
        ),
        spec(
            "T03",
            "Eq.(5.4)",
            Group::Duality,
            "F[Γ Φ(z, ·, ν)](ω) in closed form",
            "ν > 0, 0 < z ≤ 1; σ > 0 when z < 1, σ > 1 when z = 1",
            vec![sigma_grid(0.0, 1.5), nu_grid(0.0, 1.0), z_grid(), omega_grid()],
            |p| {
                need(p["nu"] > 0.0, "ν > 0")?;
                z_band(p, &["sigma"])
            },
            |c, p, _| duality_sides(c, p, Representation::Lerch),
        ),
        spec(
            "T04",
            "Eq.(5.5)",
            Group::Duality,
            "F[Γ φ(z, ·)](ω) in closed form",
            "0 < z ≤ 1; σ > 0 when z < 1, σ > 1 when z = 1",
            vec![sigma_grid(0.0, 1.5), z_grid(), omega_grid()],
            |p| z_band(p, &["sigma"]),
            |c, p, _| duality_sides(c, p, Representation::Polylog),
        ),
        spec(
            "T05",
            "Eq.(5.6)",
            Group::Duality,
            "F[Γ 𝔅_{·−1}(x)](ω) in closed form",
            "x ≤ 0; σ > 0 when x < 0, σ > 1 when x = 0",
            vec![sigma_grid(0.0, 1.5), bose_x_derived(), omega_grid()],
            |p| bose_band(p, &["sigma"]),
            |c, p, _| duality_sides(c, p, Representation::BoseEinstein),
        )
        .domain_erratum(
            "x ≥ 0, σ > 1",
            "x ≤ 0",
            vec![sigma_grid(1.0, 1.5), bose_x_printed(), omega_grid()],
            |p| {
                need(p["x"] >= 0.0, "x ≥ 0")?;
                need(p["sigma"] > 1.0, "σ > 1")
            },
        ),
        spec(
            "T06",
            "Eq.(5.7)",
            Group::Duality,
            "F[Γ 𝔉_{·−1}(x)](ω) in closed form",
            "any real x, σ > 0",
            vec![sigma_grid(0.0, 1.0), fd_x_grid(), omega_grid()],
            |p| {
                need(p["sigma"] > 0.0, "σ > 0")
            },
            |c, p, _| duality_sides(c, p, Representation::FermiDirac),
        ),
        spec(
            "T07",
            "Eq.(5.8)",
            Group::Duality,
            "F[Γ ζ(·, ν)](ω) in closed form",
            "ν > 0, σ > 1",
            vec![sigma_grid(1.0, 1.5), nu_grid(0.0, 1.0), omega_grid()],
            |p| {
                need(p["nu"] > 0.0, "ν > 0")?;
                need(p["sigma"] > 1.0, "σ > 1")
            },
            |c, p, _| duality_sides(c, p, Representation::Hurwitz),
        ),
        spec(
            "T08",
            "Eq.(5.9)",
            Group::Duality,
            "F[C ζ](ω) in closed form",
            "σ > 0",
            vec![sigma_grid(0.0, 0.75), omega_grid()],
            |p| need(p["sigma"] > 0.0, "σ > 0"),
            |c, p, _| duality_sides(c, p, Representation::EtaZeta),
        )
        .avoiding(|p| near(p["sigma"], 1.0)),
        spec(
            "T09",
            "Eq.(5.10)",
            Group::Duality,
            "F[Γ ζ](ω) in closed form",
            "σ > 1",
            vec![sigma_grid(1.0, 1.5), omega_grid()],
            |p| need(p["sigma"] > 1.0, "σ > 1"),
            |c, p, _| duality_sides(c, p, Representation::RiemannZeta),
        ),
        spec(
            "T10",
            "Eq.(5.13)",
            Group::Duality,
            "F[Γ ζ](ω) inside the critical strip",
            "0 < σ < 1",
            vec![
                ParamSpec::choices("sigma", [0.25, 0.5, 0.75], (0.1, 0.9)),
                omega_grid(),
            ],
            |p| need(p["sigma"] > 0.0 && p["sigma"] < 1.0, "0 < σ < 1"),
            |c, p, _| duality_sides(c, p, Representation::ZetaStrip),
        ),
    ]
}

fn pairs() -> Vec<IdentitySpec> {
    vec![
        spec(
            "S01",
            "Eq.(3.1)",
            Group::Pair,
            "Γ Ψν as a Fourier transform",
            "ν > −1, x ≥ 0; σ > 0 when x > 0, σ > 1 when x = 0",
            vec![sigma_grid(0.0, 1.5), nu_grid(-1.0, 0.5), x_grid(), tau_grid()],
            |p| {
                need(p["nu"] > -1.0, "ν > −1")?;
                shift_band(p, &["sigma"])
            },
            |c, p, _| pair_sides(c, p, Representation::Ebe),
        ),
        spec(
            "S02",
            "Eq.(3.2)",
            Group::Pair,
            "Γ Φ as a Fourier transform",
            "ν > 0, 0 < z ≤ 1; σ > 0 when z < 1, σ > 1 when z = 1",
            vec![sigma_grid(0.0, 1.5), nu_grid(0.0, 1.0), z_grid(), tau_grid()],
            |p| {
                need(p["nu"] > 0.0, "ν > 0")?;
                z_band(p, &["sigma"])
            },
            |c, p, _| pair_sides(c, p, Representation::Lerch),
        ),
        spec(
            "S03",
            "Eq.(3.3)",
            Group::Pair,
            "Γ φ as a Fourier transform",
            "0 < z ≤ 1; σ > 0 when z < 1, σ > 1 when z = 1",
            vec![sigma_grid(0.0, 1.5), z_grid(), tau_grid()],
            |p| z_band(p, &["sigma"]),
            |c, p, _| pair_sides(c, p, Representation::Polylog),
        ),
        spec(
            "S04",
            "Eq.(3.4)",
            Group::Pair,
            "Γ 𝔅 as a Fourier transform",
            "x ≤ 0; σ > 0 when x < 0, σ > 1 when x = 0",
            vec![sigma_grid(0.0, 1.5), bose_x_derived(), tau_grid()],
            |p| bose_band(p, &["sigma"]),
            |c, p, _| pair_sides(c, p, Representation::BoseEinstein),
        )
        .domain_erratum(
            "x ≥ 0, σ > 1",
            "x ≤ 0",
            vec![sigma_grid(1.0, 1.5), bose_x_printed(), tau_grid()],
            |p| {
                need(p["x"] >= 0.0, "x ≥ 0")?;
                need(p["sigma"] > 1.0, "σ > 1")
            },
        ),
        spec(
            "S05",
            "Eq.(3.5)",
            Group::Pair,
            "Γ ζ(·, ν) as a Fourier transform",
            "ν > 0, σ > 1",
            vec![sigma_grid(1.0, 1.5), nu_grid(0.0, 1.0), tau_grid()],
            |p| {
                need(p["nu"] > 0.0, "ν > 0")?;
                need(p["sigma"] > 1.0, "σ > 1")
            },
            |c, p, _| pair_sides(c, p, Representation::Hurwitz),
        ),
        spec(
            "S06",
            "Eq.(3.6)",
            Group::Pair,
            "Γ ζ as a Fourier transform",
            "σ > 1",
            vec![sigma_grid(1.0, 1.5), tau_grid()],
            |p| need(p["sigma"] > 1.0, "σ > 1"),
            |c, p, _| pair_sides(c, p, Representation::RiemannZeta),
        ),
        spec(
            "S07",
            "Eq.(3.7)",
            Group::Pair,
            "Γ Θν as a Fourier transform",
            "ν > −1, x ≥ 0, σ > 0",
            vec![sigma_grid(0.0, 1.0), nu_grid(-1.0, 0.5), x_grid(), tau_grid()],
            |p| {
                need(p["nu"] > -1.0, "ν > −1")?;
                need(p["x"] >= 0.0, "x ≥ 0")?;
                need(p["sigma"] > 0.0, "σ > 0")
            },
            |c, p, _| pair_sides(c, p, Representation::Efd),
        ),
        spec(
            "S08",
            "Eq.(3.8)",
            Group::Pair,
            "Γ 𝔉 as a Fourier transform",
            "any real x, σ > 1",
            vec![sigma_grid(1.0, 1.5), fd_x_grid(), tau_grid()],
            |p| {
                need(p["sigma"] > 1.0, "σ > 1")
            },
            |c, p, _| pair_sides(c, p, Representation::FermiDirac),
        ),
        spec(
            "S09",
            "Eq.(3.9)",
            Group::Pair,
            "C ζ as a Fourier transform",
            "σ > 0",
            vec![sigma_grid(0.0, 0.75), tau_grid()],
            |p| need(p["sigma"] > 0.0, "σ > 0"),
            |c, p, _| pair_sides(c, p, Representation::EtaZeta),
        )
        .avoiding(|p| near(p["sigma"], 1.0) && p["tau"].abs() < 0.05),
        spec(
            "S10",
            "Eq.(5.12)",
            Group::Pair,
            "Γ ζ inside the critical strip as a Fourier transform",
            "0 < σ < 1",
            vec![
                ParamSpec::choices("sigma", [0.25, 0.5, 0.75], (0.1, 0.9)),
                tau_grid(),
            ],
            |p| need(p["sigma"] > 0.0 && p["sigma"] < 1.0, "0 < σ < 1"),
            |c, p, _| pair_sides(c, p, Representation::ZetaStrip),
        ),
    ]
}

fn examples() -> Vec<IdentitySpec> {
    vec![
        spec(
            "X01",
            "Eq.(6.1)",
            Group::Example,
            "∫Γ(ρ−iτ)Γ(σ+iτ)ζ(σ+iτ) dτ",
            "σ, ρ > 1",
            vec![sigma_grid(1.0, 1.5), rho_grid(1.0, 1.5)],
            |p| above(p, &["sigma", "rho"], 1.0, "σ > 1"),
            |c, p, form| {
                let (sigma, rho) = (p["sigma"], p["rho"]);
                let eta = re(eta_of(p));
                let rhs = c.closed(|| {
                    let h = c.hurwitz(eta, 2.0)?;
                    Ok(match form {
                        Form::Printed => h,
                        Form::Derived => TWO_PI * c.gamma(eta)? * h,
                    })
                })?;
                let lhs = c.line2(sigma, rho, 0.0, |a, _| c.zeta(a))?;
                Ok((lhs, rhs))
            },
        )
        .constant_erratum("ζ(σ+ρ, 2)", "2πΓ(σ+ρ)ζ(σ+ρ, 2)"),
        spec(
            "X02",
            "Eq.(6.2)",
            Group::Example,
            "Θν(s; x) + Θ_{ν−1}(s; x) = ν^{−s}e^{−νx}",
            "s > 0, x ≥ 0, ν ≥ 1",
            vec![
                ParamSpec::lower("s", 0.0, true, 2.0),
                x_grid(),
                ParamSpec::choices("nu", [1.0, 2.0, 3.0], (1.0, 3.0)),
            ],
            |p| {
                need(p["s"] > 0.0, "s > 0")?;
                need(p["x"] >= 0.0, "x ≥ 0")?;
                need(p["nu"] >= 1.0, "ν ≥ 1")
            },
            |c, p, _| {
                let (s, x, nu) = (re(p["s"]), p["x"], p["nu"]);
                let lhs = c.closed(|| Ok(c.theta(s, x, nu)? + c.theta(s, x, nu - 1.0)?))?;
                let rhs = c.closed(|| Ok(pow_neg(re(nu), s) * (-nu * x).exp()))?;
                Ok((lhs, rhs))
            },
        )
        .tight(),
        spec(
            "X03",
            "Eq.(6.3)",
            Group::Example,
            "∫ν^{−σ−iτ}Γ(σ+iτ) dτ = 2πe^{−ν}",
            "σ > 0, ν ≥ 1",
            vec![
                sigma_grid(0.0, 1.0),
                ParamSpec::choices("nu", [1.0, 2.0, 3.0], (1.0, 3.0)),
            ],
            |p| {
                need(p["sigma"] > 0.0, "σ > 0")?;
                need(p["nu"] >= 1.0, "ν ≥ 1")
            },
            |c, p, _| {
                let (sigma, nu) = (p["sigma"], p["nu"]);
                let rhs = c.closed(|| constant(TWO_PI * (-nu).exp()))?;
                let lhs = c.line1(sigma, 0.0, 0.0, |s| Ok(pow_neg(re(nu), s)))?;
                Ok((lhs, rhs))
            },
        ),
    ]
}
