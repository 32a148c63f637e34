//! Registry of identities with their sampling plans and residual checks.

mod entries;
mod report;

use std::cell::Cell;
use std::collections::BTreeMap;
use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::numerics::{
    integrate_semi_infinite, ComplexScalar, EvalResult, Flags, Method, Tolerance,
};
use crate::transform::gamma_line_integral;
use crate::zeta_kernel::{BridgeMode, Kernel};

pub use report::{CheckReport, ErratumOutcome, IdentityReport, Real, ReportFormat, SampleRecord, Tolerances};

pub type Params = BTreeMap<String, f64>;
pub(crate) type DomainFn = fn(&Params) -> std::result::Result<(), String>;
pub(crate) type EvalFn = fn(&Ctx, &Params, Form) -> Result<(EvalResult, EvalResult)>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Form {
    Printed,
    Derived,
}

impl Form {
    pub fn as_str(&self) -> &'static str {
        match self {
            Form::Printed => "printed",
            Form::Derived => "derived",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    SkippedDomain,
    NotConverged,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::SkippedDomain => "skipped_domain",
            Verdict::NotConverged => "not_converged",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Group {
    /// Mellin-side relations between a function and its shifts
    Relation,
    /// Finite integrals against squared denominators
    Theorem,
    /// Integrals of products along vertical lines
    Product,
    /// Single line integrals at ω = 0
    LineValue,
    /// Transforms at general ω
    Duality,
    /// Transform pairs
    Pair,
    /// Worked examples
    Example,
}

/// One free parameter and how it is sampled.
#[derive(Debug, Clone, PartialEq)]
pub struct ParamSpec {
    pub name: &'static str,
    pub grid: [f64; 3],
    pub random: (f64, f64),
    pub integer: bool,
}

impl ParamSpec {
    /// Grid `{near-lower, interior, 2·interior}`; a strict bound is entered
    /// at `bound + 0.25`.
    pub fn lower(name: &'static str, bound: f64, strict: bool, interior: f64) -> Self {
        let first = if strict { bound + 0.25 } else { bound };
        ParamSpec {
            name,
            grid: [first, interior, 2.0 * interior],
            random: (first, 2.0 * interior),
            integer: false,
        }
    }

    pub fn choices(name: &'static str, grid: [f64; 3], random: (f64, f64)) -> Self {
        ParamSpec {
            name,
            grid,
            random,
            integer: false,
        }
    }

    pub fn with_random(mut self, lo: f64, hi: f64) -> Self {
        self.random = (lo, hi);
        self
    }

    pub fn integer(mut self) -> Self {
        self.integer = true;
        self
    }
}

#[derive(Debug, Clone)]
pub enum ErratumKind {
    /// Same samples, two right-hand sides.
    Constant,
    /// The printed domain differs; the identity is sampled on both.
    Domain {
        printed_params: Vec<ParamSpec>,
        printed_domain: DomainFn,
    },
}

#[derive(Debug, Clone)]
pub struct Erratum {
    pub printed: &'static str,
    pub derived: &'static str,
    pub kind: ErratumKind,
}

#[derive(Debug, Clone)]
pub struct IdentitySpec {
    pub id: &'static str,
    pub equation: &'static str,
    pub group: Group,
    pub summary: &'static str,
    pub domain_text: &'static str,
    pub params: Vec<ParamSpec>,
    pub domain: DomainFn,
    pub avoid: Option<fn(&Params) -> bool>,
    pub erratum: Option<Erratum>,
    /// Residual budget met by the derived form on every in-domain sample.
    pub budget: Tolerance,
    /// Target for the special-function evaluations.
    pub kernel_tol: Tolerance,
    pub(crate) eval: EvalFn,
}

impl IdentitySpec {
    /// Parameters and domain for `form`.
    pub fn plan_for(&self, form: Form) -> (&[ParamSpec], DomainFn) {
        match (&self.erratum, form) {
            (
                Some(Erratum {
                    kind:
                        ErratumKind::Domain {
                            printed_params,
                            printed_domain,
                        },
                    ..
                }),
                Form::Printed,
            ) => (printed_params, *printed_domain),
            _ => (&self.params, self.domain),
        }
    }

    pub fn forms(&self) -> &'static [Form] {
        if self.erratum.is_some() {
            &[Form::Printed, Form::Derived]
        } else {
            &[Form::Derived]
        }
    }
}

/// All registered identities in catalog order.
pub fn register_catalog() -> Vec<IdentitySpec> {
    entries::all()
}

pub fn find<'a>(catalog: &'a [IdentitySpec], id: &str) -> Option<&'a IdentitySpec> {
    catalog.iter().find(|s| s.id.eq_ignore_ascii_case(id))
}

/// Evaluation context for one sample.
pub struct Ctx {
    pub k: Kernel,
    pub line: Tolerance,
    pub mellin: Tolerance,
    ok: Cell<bool>,
}

impl Ctx {
    pub fn new(kernel_tol: Tolerance) -> Self {
        Ctx {
            k: Kernel::with_tolerance(kernel_tol),
            line: Tolerance::line_default(),
            mellin: Tolerance::new(1e-11, 1e-13),
            ok: Cell::new(true),
        }
    }

    fn take(&self, r: Result<EvalResult>) -> Result<ComplexScalar> {
        let r = r?;
        if !r.converged() {
            self.ok.set(false);
        }
        Ok(r.value)
    }

    /// Wraps a closed-form side, tracking whether its evaluations converged.
    pub fn closed<F>(&self, f: F) -> Result<EvalResult>
    where
        F: FnOnce() -> Result<ComplexScalar>,
    {
        self.ok.set(true);
        let v = f()?;
        Ok(EvalResult::new(v, 0.0, Method::ClosedForm, self.ok.get()))
    }

    pub fn gamma(&self, s: ComplexScalar) -> Result<ComplexScalar> {
        self.take(self.k.gamma(s))
    }

    pub fn zeta(&self, s: ComplexScalar) -> Result<ComplexScalar> {
        self.take(self.k.riemann_zeta(s))
    }

    pub fn hurwitz(&self, s: ComplexScalar, a: f64) -> Result<ComplexScalar> {
        self.take(self.k.hurwitz_zeta(s, re(a)))
    }

    pub fn lerch(&self, z: f64, s: ComplexScalar, a: f64) -> Result<ComplexScalar> {
        self.take(self.k.lerch_phi(re(z), s, re(a)))
    }

    pub fn polylog(&self, z: f64, s: ComplexScalar) -> Result<ComplexScalar> {
        self.take(self.k.polylog(re(z), s))
    }

    pub fn psi(&self, s: ComplexScalar, x: f64, nu: f64) -> Result<ComplexScalar> {
        self.take(self.k.ebe_psi(s, x, re(nu)))
    }

    pub fn theta(&self, s: ComplexScalar, x: f64, nu: f64) -> Result<ComplexScalar> {
        self.take(self.k.efd_theta(s, x, re(nu)))
    }

    pub fn theta_bridge(&self, s: ComplexScalar, x: f64, nu: f64) -> Result<ComplexScalar> {
        self.take(self.k.efd_via_bridge(s, x, re(nu), BridgeMode::Integer))
    }

    /// `𝔉_{s−1}(μ)`
    pub fn fd(&self, s: ComplexScalar, mu: f64) -> Result<ComplexScalar> {
        self.take(self.k.fermi_dirac(s, mu))
    }

    /// `𝔅_{s−1}(μ)`
    pub fn be(&self, s: ComplexScalar, mu: f64) -> Result<ComplexScalar> {
        self.take(self.k.bose_einstein(s, mu))
    }

    /// `1 − 2^{1−s}`
    pub fn eta_coeff(&self, s: ComplexScalar) -> ComplexScalar {
        re(1.0) - (re(1.0) - s).scale(std::f64::consts::LN_2).exp()
    }

    /// `∫_{−∞}^{∞} e^{iωτ} Γ(σ+iτ) f(σ+iτ) dτ`
    pub fn line1<F>(&self, sigma: f64, omega: f64, growth: f64, f: F) -> Result<EvalResult>
    where
        F: Fn(ComplexScalar) -> Result<ComplexScalar>,
    {
        gamma_line_integral(
            |tau| {
                let s = ComplexScalar::new(sigma, tau);
                let g = self.k.gamma(s)?.value;
                let phase = ComplexScalar::new(0.0, omega * tau).exp();
                Ok(g * f(s)? * phase)
            },
            &[sigma],
            growth,
            &self.line,
        )
    }

    /// `∫_{−∞}^{∞} Γ(σ+iτ)Γ(ρ−iτ) f(σ+iτ, ρ−iτ) dτ`
    pub fn line2<F>(&self, sigma: f64, rho: f64, growth: f64, f: F) -> Result<EvalResult>
    where
        F: Fn(ComplexScalar, ComplexScalar) -> Result<ComplexScalar>,
    {
        gamma_line_integral(
            |tau| {
                let s1 = ComplexScalar::new(sigma, tau);
                let s2 = ComplexScalar::new(rho, -tau);
                let g = self.k.gamma(s1)?.value * self.k.gamma(s2)?.value;
                Ok(g * f(s1, s2)?)
            },
            &[sigma, rho],
            growth,
            &self.line,
        )
    }

    /// `∫_0^∞ t^{η−1} h(t) dt`
    pub fn mellin<H>(&self, eta: f64, h: H) -> Result<EvalResult>
    where
        H: Fn(f64) -> f64,
    {
        integrate_semi_infinite(|t: f64| re(t.powf(eta - 1.0) * h(t)), &self.mellin)
    }
}

pub(crate) fn re(x: f64) -> ComplexScalar {
    ComplexScalar::new(x, 0.0)
}

pub(crate) const TWO_PI: f64 = 2.0 * PI;

/// Sampling settings shared by every identity in a run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SamplePlan {
    pub seed: u64,
    pub random_samples: usize,
}

impl Default for SamplePlan {
    fn default() -> Self {
        SamplePlan {
            seed: 42,
            random_samples: 10,
        }
    }
}

fn fnv1a(s: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in s.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    h
}

fn mix(seed: u64, tag: u64, i: u64) -> u64 {
    let mut z = seed ^ tag.rotate_left(17) ^ i.wrapping_mul(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Grid cross product followed by seeded random samples.
pub fn sample_points(spec: &IdentitySpec, form: Form, plan: &SamplePlan) -> Vec<Params> {
    let (params, domain) = spec.plan_for(form);
    let mut out: Vec<Params> = vec![Params::new()];
    for p in params {
        let mut next = Vec::with_capacity(out.len() * 3);
        for base in &out {
            for v in p.grid {
                let mut b = base.clone();
                b.insert(p.name.to_string(), v);
                next.push(b);
            }
        }
        out = next;
    }
    let tag = fnv1a(&format!("{}:{}", spec.id, form.as_str()));
    for i in 0..plan.random_samples {
        let mut rng = ChaCha8Rng::seed_from_u64(mix(plan.seed, tag, i as u64));
        for _ in 0..200 {
            let mut b = Params::new();
            for p in params {
                let (lo, hi) = p.random;
                let v = if p.integer {
                    rng.gen_range(lo as i64..=hi as i64) as f64
                } else if hi > lo {
                    rng.gen_range(lo..hi)
                } else {
                    lo
                };
                b.insert(p.name.to_string(), v);
            }
            let avoided = spec.avoid.map(|f| f(&b)).unwrap_or(false);
            if domain(&b).is_ok() && !avoided {
                out.push(b);
                break;
            }
        }
    }
    out
}

/// `abs ≤ tol.abs + tol.rel·max(1, |lhs|)`
pub fn passes(abs_resid: f64, lhs: f64, tol: &Tolerance) -> bool {
    abs_resid <= tol.abs + tol.rel * lhs.abs().max(1.0)
}

fn param_map(params: &Params, form: Option<Form>) -> Map<String, Value> {
    let mut m = Map::new();
    for (k, v) in params {
        m.insert(k.clone(), Value::from(*v));
    }
    if let Some(f) = form {
        m.insert("form".into(), Value::from(f.as_str()));
    }
    m
}

/// Evaluates `spec` at one sample.
pub fn evaluate_identity(
    spec: &IdentitySpec,
    params: &Params,
    form: Form,
    tol: &Tolerance,
) -> SampleRecord {
    let (_, domain) = spec.plan_for(form);
    let tagged = spec.erratum.as_ref().map(|_| form);
    let nan = [Real(f64::NAN), Real(f64::NAN)];
    if domain(params).is_err() {
        return SampleRecord {
            params: param_map(params, tagged),
            lhs: nan,
            rhs: nan,
            abs_resid: Real(f64::NAN),
            rel_resid: Real(f64::NAN),
            verdict: Verdict::SkippedDomain,
        };
    }
    let ctx = Ctx::new(spec.kernel_tol);
    let outcome = (spec.eval)(&ctx, params, form);
    let (lhs, rhs) = match outcome {
        Ok(v) => v,
        Err(_) => {
            return SampleRecord {
                params: param_map(params, tagged),
                lhs: nan,
                rhs: nan,
                abs_resid: Real(f64::NAN),
                rel_resid: Real(f64::NAN),
                verdict: Verdict::NotConverged,
            }
        }
    };
    let abs_resid = (lhs.value - rhs.value).norm();
    let scale = lhs.value.norm().max(1.0);
    let rel_resid = abs_resid / scale;
    let settled = lhs.converged()
        && rhs.converged()
        && !lhs.flags.contains(Flags::TRUNCATED)
        && !rhs.flags.contains(Flags::TRUNCATED)
        && abs_resid.is_finite();
    let verdict = if !settled {
        Verdict::NotConverged
    } else if passes(abs_resid, lhs.value.norm(), tol) {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    SampleRecord {
        params: param_map(params, tagged),
        lhs: [Real(lhs.value.re), Real(lhs.value.im)].map(Real::clean),
        rhs: [Real(rhs.value.re), Real(rhs.value.im)].map(Real::clean),
        abs_resid: Real(abs_resid).clean(),
        rel_resid: Real(rel_resid).clean(),
        verdict,
    }
}

/// A form passes when it has evaluated samples and all of them pass.
fn form_passes(samples: &[&SampleRecord]) -> bool {
    let evaluated: Vec<_> = samples
        .iter()
        .filter(|s| s.verdict != Verdict::SkippedDomain)
        .collect();
    !evaluated.is_empty() && evaluated.iter().all(|s| s.verdict == Verdict::Pass)
}

fn aggregate(samples: &[SampleRecord]) -> Verdict {
    let all: Vec<&SampleRecord> = samples.iter().collect();
    if form_passes(&all) {
        return Verdict::Pass;
    }
    if samples.iter().any(|s| s.verdict == Verdict::Fail) {
        Verdict::Fail
    } else if samples.iter().any(|s| s.verdict == Verdict::NotConverged) {
        Verdict::NotConverged
    } else {
        Verdict::SkippedDomain
    }
}

/// Runs every sample of one identity.
pub fn check_identity(spec: &IdentitySpec, plan: &SamplePlan, tol: &Tolerance) -> IdentityReport {
    let mut samples = Vec::new();
    let mut by_form = Vec::new();
    for &form in spec.forms() {
        let start = samples.len();
        for p in sample_points(spec, form, plan) {
            samples.push(evaluate_identity(spec, &p, form, tol));
        }
        by_form.push((form, start, samples.len()));
    }
    let (erratum, verdict) = match &spec.erratum {
        None => (None, aggregate(&samples)),
        Some(_) => {
            let passed = |f: Form| {
                let (_, a, b) = by_form.iter().find(|(g, _, _)| *g == f).copied().unwrap();
                let part: Vec<&SampleRecord> = samples[a..b].iter().collect();
                form_passes(&part)
            };
            let printed = passed(Form::Printed);
            let derived = passed(Form::Derived);
            let verdict = if printed != derived {
                Verdict::Pass
            } else {
                Verdict::Fail
            };
            (
                Some(report::ErratumOutcome {
                    printed_passes: printed,
                    derived_passes: derived,
                }),
                verdict,
            )
        }
    };
    IdentityReport {
        id: spec.id.to_string(),
        equation: spec.equation.to_string(),
        samples,
        erratum,
        verdict,
    }
}

/// Checks `ids` (all when empty) in catalog order.
pub fn run_checks(
    catalog: &[IdentitySpec],
    ids: &[String],
    plan: &SamplePlan,
    tol: &Tolerance,
) -> Result<CheckReport> {
    let mut chosen = Vec::new();
    if ids.is_empty() {
        chosen.extend(catalog.iter());
    } else {
        for id in ids {
            let spec = find(catalog, id).ok_or_else(|| Error::Domain {
                function: "catalog",
                condition: format!("unknown identity {id}"),
            })?;
            chosen.push(spec);
        }
    }
    let identities: Vec<IdentityReport> = chosen
        .par_iter()
        .map(|spec| check_identity(spec, plan, tol))
        .collect();
    Ok(CheckReport {
        version: env!("CARGO_PKG_VERSION").to_string(),
        seed: plan.seed,
        tolerances: Tolerances {
            rel: tol.rel,
            abs: tol.abs,
        },
        identities,
    })
}
