//! Fourier-side representations of the Γ-weighted zeta family.
//!
//! With `s = σ + iτ` every function `f` in the family satisfies
//! `Γ(s)f(s) = P·∫ e^{iτy} k(y) dy` where `k(y) = e^{σy}h(e^y)` is a real
//! kernel and `P` a prefactor. Applying the transform once more returns
//! `√(2π)·P·k(−ω)`.

use std::cell::RefCell;
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::numerics::{integrate_real_line, ComplexScalar, EvalResult, Method, Tolerance, EPS};
use crate::zeta_kernel::{strip_kernel_real, FunctionId, FunctionParams, Kernel};

pub(crate) const SQRT_2PI: f64 = 2.506_628_274_631_000_5;

/// Which Fourier pair is meant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Representation {
    /// `Γ(s)Ψν(s; x)`
    Ebe,
    /// `Γ(s)Φ(z, s, ν)`
    Lerch,
    /// `Γ(s)φ(z, s)`
    Polylog,
    /// `Γ(s)𝔅_{s−1}(μ)`, μ ≤ 0
    BoseEinstein,
    /// `Γ(s)ζ(s, ν)`
    Hurwitz,
    /// `Γ(s)ζ(s)`, σ > 1
    RiemannZeta,
    /// `Γ(s)Θν(s; x)`
    Efd,
    /// `Γ(s)𝔉_{s−1}(μ)`, any real μ
    FermiDirac,
    /// `C(s)ζ(s)`
    EtaZeta,
    /// `Γ(s)ζ(s)` inside the critical strip
    ZetaStrip,
    /// `Γ(s)`
    Gamma,
}

impl Representation {
    pub const ALL: [Representation; 11] = [
        Representation::Ebe,
        Representation::Lerch,
        Representation::Polylog,
        Representation::BoseEinstein,
        Representation::Hurwitz,
        Representation::RiemannZeta,
        Representation::Efd,
        Representation::FermiDirac,
        Representation::EtaZeta,
        Representation::ZetaStrip,
        Representation::Gamma,
    ];

    pub fn function(&self) -> FunctionId {
        match self {
            Representation::Ebe => FunctionId::EbePsi,
            Representation::Lerch => FunctionId::LerchPhi,
            Representation::Polylog => FunctionId::Polylog,
            Representation::BoseEinstein => FunctionId::BoseEinstein,
            Representation::Hurwitz => FunctionId::HurwitzZeta,
            Representation::RiemannZeta | Representation::ZetaStrip => FunctionId::RiemannZeta,
            Representation::Efd => FunctionId::EfdTheta,
            Representation::FermiDirac => FunctionId::FermiDirac,
            Representation::EtaZeta => FunctionId::DirichletEtaFactor,
            Representation::Gamma => FunctionId::Gamma,
        }
    }

    /// The pair used for `function` at abscissa `sigma`; ζ switches to its
    /// strip form below σ = 1.
    pub fn for_function(function: FunctionId, sigma: f64) -> Representation {
        match function {
            FunctionId::Gamma => Representation::Gamma,
            FunctionId::RiemannZeta if sigma < 1.0 => Representation::ZetaStrip,
            FunctionId::RiemannZeta => Representation::RiemannZeta,
            FunctionId::DirichletEtaFactor => Representation::EtaZeta,
            FunctionId::HurwitzZeta => Representation::Hurwitz,
            FunctionId::LerchPhi => Representation::Lerch,
            FunctionId::Polylog => Representation::Polylog,
            FunctionId::FermiDirac => Representation::FermiDirac,
            FunctionId::BoseEinstein => Representation::BoseEinstein,
            FunctionId::EfdTheta => Representation::Efd,
            FunctionId::EbePsi => Representation::Ebe,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Representation::Ebe => "ebe",
            Representation::Lerch => "lerch-phi",
            Representation::Polylog => "polylog",
            Representation::BoseEinstein => "be",
            Representation::Hurwitz => "hurwitz-zeta",
            Representation::RiemannZeta => "riemann-zeta",
            Representation::Efd => "efd",
            Representation::FermiDirac => "fd",
            Representation::EtaZeta => "eta-zeta",
            Representation::ZetaStrip => "riemann-zeta-strip",
            Representation::Gamma => "gamma",
        }
    }

    pub fn from_name(name: &str) -> Option<Representation> {
        Representation::ALL.into_iter().find(|r| r.name() == name)
    }

    /// `Γ(s)f(s)` (or `C(s)ζ(s)`) through the series path.
    pub fn weighted_value(&self, k: &Kernel, p: &FunctionParams) -> Result<EvalResult> {
        let s = p.s;
        match self {
            Representation::Gamma => k.gamma(s),
            Representation::EtaZeta => Ok(k.eta_factor(s)?.mul(k.riemann_zeta(s)?)),
            _ => Ok(k.gamma(s)?.mul(k.evaluate(self.function(), p)?)),
        }
    }

    /// Extra exponential growth of the companion in |τ|.
    fn companion_growth(&self, p: &FunctionParams) -> f64 {
        match self {
            Representation::FermiDirac if p.mu() > 0.0 => PI / 2.0 - (PI / p.mu()).atan(),
            _ => 0.0,
        }
    }
}

/// The shape `h(t)` of a pulled-back kernel `k(y) = e^{σy} h(e^y)`.
#[derive(Debug, Clone, Copy, PartialEq)]
enum Shape {
    /// `e^{−at}/(1 − z e^{−t})`
    Lerch { z: f64, a: f64 },
    /// `1/(e^t − 1) − 1/t`
    Strip,
}

/// A kernel on the real line together with its prefactor.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct YKernel {
    pub sigma: f64,
    pub prefactor: f64,
    shape: Shape,
}

impl YKernel {
    pub fn eval(&self, y: f64) -> f64 {
        let t = y.exp();
        match self.shape {
            Shape::Lerch { z, a } => {
                let num = (self.sigma * y - a * t).exp();
                if num == 0.0 {
                    return 0.0;
                }
                num / ((1.0 - z) - z * (-t).exp_m1())
            }
            Shape::Strip => (self.sigma * y).exp() * strip_kernel_real(t),
        }
    }

    /// Order of the pole of `h` at `t = 0`.
    fn pole_order(&self) -> f64 {
        match self.shape {
            Shape::Lerch { z, .. } if z == 1.0 => 1.0,
            _ => 0.0,
        }
    }

    /// Monotone bound on `∫_{|y| > T} |k(y)| dy`, calibrated on sampled
    /// values with a safety factor of 10.
    pub fn tail_bound(&self) -> impl Fn(f64) -> f64 {
        let sigma = self.sigma;
        let left_rate = sigma - self.pole_order();
        let left_scale = 10.0
            * (1..=12)
                .map(|j| {
                    let y = -(j as f64);
                    self.eval(y).abs() * (-left_rate * y).exp()
                })
                .fold(0.0, f64::max);
        let right: Box<dyn Fn(f64) -> f64> = match self.shape {
            Shape::Lerch { a, .. } => {
                let scale = 10.0
                    * (0..=3)
                        .map(|j| {
                            let y = j as f64;
                            self.eval(y).abs() / (sigma * y - a * y.exp()).exp()
                        })
                        .fold(0.0, f64::max);
                Box::new(move |t: f64| {
                    let x = t.exp();
                    let den = a - (sigma - 1.0).max(0.0) / x;
                    if den <= 0.0 {
                        return f64::INFINITY;
                    }
                    scale * ((sigma - 1.0) * t - a * x).exp() / den
                })
            }
            Shape::Strip => {
                let rate = 1.0 - sigma;
                let scale = 10.0
                    * (1..=12)
                        .map(|j| {
                            let y = j as f64;
                            self.eval(y).abs() * (rate * y).exp()
                        })
                        .fold(0.0, f64::max);
                Box::new(move |t: f64| scale * (-rate * t).exp() / rate)
            }
        };
        move |t: f64| left_scale * (-left_rate * t).exp() / left_rate + right(t)
    }
}

fn real_param(name: &'static str, v: ComplexScalar) -> Result<f64> {
    if v.im != 0.0 {
        return Err(Error::domain(name, "real parameters for the transform pair"));
    }
    Ok(v.re)
}

/// Checks the σ band of `rep` and the parameters, with `s = σ` real.
pub fn check_band(rep: Representation, p: &FunctionParams) -> Result<()> {
    let sigma = p.s.re;
    let at_sigma = FunctionParams {
        s: ComplexScalar::new(sigma, 0.0),
        ..*p
    };
    match rep {
        Representation::ZetaStrip => {
            if !(sigma > 0.0 && sigma < 1.0) {
                return Err(Error::domain("riemann_zeta", "0 < σ < 1 for the strip pair"));
            }
            Ok(())
        }
        Representation::RiemannZeta => {
            if !(sigma > 1.0) {
                return Err(Error::domain("riemann_zeta", "σ > 1"));
            }
            Ok(())
        }
        Representation::EtaZeta | Representation::Gamma | Representation::FermiDirac => {
            if !(sigma > 0.0) {
                return Err(Error::domain(rep.function_label(), "σ > 0"));
            }
            Ok(())
        }
        _ => at_sigma.validate(rep.function()),
    }
}

impl Representation {
    fn function_label(&self) -> &'static str {
        match self {
            Representation::EtaZeta => "eta_factor",
            Representation::Gamma => "gamma",
            Representation::FermiDirac => "fermi_dirac",
            _ => "transform",
        }
    }
}

/// The pulled-back kernel of `rep` at `σ = Re p.s`.
pub fn kernel_of(rep: Representation, p: &FunctionParams) -> Result<YKernel> {
    check_band(rep, p)?;
    let sigma = p.s.re;
    let nu = real_param("transform", p.nu)?;
    let z = real_param("transform", p.z)?;
    let x = p.x;
    let mu = p.mu();
    let (shape, prefactor) = match rep {
        Representation::Ebe => (
            Shape::Lerch {
                z: (-x).exp(),
                a: nu + 1.0,
            },
            (-(nu + 1.0) * x).exp(),
        ),
        Representation::Lerch => (Shape::Lerch { z, a: nu }, 1.0),
        Representation::Polylog => (Shape::Lerch { z, a: 1.0 }, z),
        Representation::BoseEinstein => (Shape::Lerch { z: mu.exp(), a: 1.0 }, mu.exp()),
        Representation::Hurwitz => (Shape::Lerch { z: 1.0, a: nu }, 1.0),
        Representation::RiemannZeta => (Shape::Lerch { z: 1.0, a: 1.0 }, 1.0),
        Representation::Efd => (
            Shape::Lerch {
                z: -(-x).exp(),
                a: nu + 1.0,
            },
            (-(nu + 1.0) * x).exp(),
        ),
        Representation::FermiDirac => (
            Shape::Lerch {
                z: -mu.exp(),
                a: 1.0,
            },
            mu.exp(),
        ),
        Representation::EtaZeta => (Shape::Lerch { z: -1.0, a: 1.0 }, 1.0),
        Representation::ZetaStrip => (Shape::Strip, 1.0),
        Representation::Gamma => (Shape::Lerch { z: 0.0, a: 1.0 }, 1.0),
    };
    Ok(YKernel {
        sigma,
        prefactor,
        shape,
    })
}

/// Both sides of a transform pair at one τ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairCheck {
    pub lhs: EvalResult,
    pub rhs: EvalResult,
    pub residual: f64,
}

/// A representation together with its parameters; `params.s.re` is σ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransformPair {
    pub rep: Representation,
    pub params: FunctionParams,
}

impl TransformPair {
    pub fn new(rep: Representation, params: FunctionParams) -> Self {
        TransformPair { rep, params }
    }

    /// The Fourier side `P·∫ e^{iτy} k(y) dy`.
    pub fn fourier_side(&self, tau: f64, tol: &Tolerance) -> Result<EvalResult> {
        let k = kernel_of(self.rep, &self.params)?;
        let r = integrate_real_line(
            |y| ComplexScalar::new(0.0, tau * y).exp() * k.eval(y),
            k.tail_bound(),
            tol,
        );
        Ok(r.scale(ComplexScalar::new(k.prefactor, 0.0), EPS))
    }

    /// The function side `Γ(s)f(s)` at `s = σ + iτ`.
    pub fn function_side(&self, tau: f64, kernel: &Kernel) -> Result<EvalResult> {
        let p = FunctionParams {
            s: ComplexScalar::new(self.params.s.re, tau),
            ..self.params
        };
        self.rep.weighted_value(kernel, &p)
    }
}

/// Residual `|LHS − RHS| / max(1, |LHS|)` of a pair at τ.
pub fn verify_transform_pair(pair: &TransformPair, tau: f64, tol: &Tolerance) -> Result<PairCheck> {
    let kernel = Kernel::with_tolerance(Tolerance::new(tol.rel * 1e-2, tol.abs * 1e-2));
    let lhs = pair.function_side(tau, &kernel)?;
    let rhs = pair.fourier_side(tau, tol)?;
    let residual = (lhs.value - rhs.value).norm() / lhs.value.norm().max(1.0);
    Ok(PairCheck { lhs, rhs, residual })
}

/// Closed form of `F[Γ f](ω) = √(2π)·P·k(−ω)`.
pub fn duality_value(pair: &TransformPair, omega: f64) -> Result<EvalResult> {
    let k = kernel_of(pair.rep, &pair.params)?;
    let y = -omega;
    // exp(e^{−ω}) is formed implicitly; refuse where it leaves f64 range
    let t = y.exp();
    if t > 700.0 || (k.sigma * y).abs() > 700.0 {
        return Err(Error::Overflow {
            context: format!("duality closed form at ω = {omega}"),
        });
    }
    let v = SQRT_2PI * k.prefactor * k.eval(y);
    Ok(EvalResult::new(
        ComplexScalar::new(v, 0.0),
        8.0 * EPS * v.abs(),
        Method::ClosedForm,
        true,
    ))
}

/// Tail bound `∫_{|τ| > T} G·Π C(σᵢ)(1+|τ|)^{p} e^{−r|τ|} dτ` for an
/// integrand carrying Γ factors.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TailBound {
    pub scale: f64,
    pub power: f64,
    pub rate: f64,
}

impl TailBound {
    pub fn eval(&self, t: f64) -> f64 {
        if !(self.rate > 0.0) {
            return f64::INFINITY;
        }
        let den = if self.power > 0.0 {
            self.rate - self.power / (1.0 + t)
        } else {
            self.rate
        };
        if den <= 0.0 {
            return f64::INFINITY;
        }
        2.0 * self.scale * (1.0 + t).powf(self.power) * (-self.rate * t).exp() / den
    }

    /// Bound for `Π Γ(σᵢ ± iτ)` times a companion bounded by `companion`
    /// that may grow like `e^{growth·|τ|}`.
    pub fn gamma_product(sigmas: &[f64], companion: f64, growth: f64) -> TailBound {
        let c: f64 = sigmas.iter().map(|&s| gamma_constant(s)).product();
        TailBound {
            scale: companion * c,
            power: sigmas.iter().map(|s| s - 0.5).sum(),
            rate: sigmas.len() as f64 * PI / 2.0 - growth,
        }
    }
}

const CALIBRATION_TAU: f64 = 20.0;

/// `C(σ)` with `|Γ(σ+iτ)| ≤ C(σ)(1+|τ|)^{σ−1/2}e^{−π|τ|/2}`, measured at
/// `|τ| = 20` and inflated tenfold.
pub fn gamma_constant(sigma: f64) -> f64 {
    let g = crate::zeta_kernel::ln_gamma(ComplexScalar::new(sigma, CALIBRATION_TAU))
        .map(|l| l.re)
        .unwrap_or(f64::INFINITY);
    let env = (sigma - 0.5) * (1.0 + CALIBRATION_TAU).ln() - PI * CALIBRATION_TAU / 2.0;
    10.0 * (g - env).exp()
}

/// `T ↦ ∫_{|τ|>T} |Γ(σ+iτ)|·G dτ` bound for a companion bounded by `g`.
pub fn gamma_decay_bound(sigma: f64, g: f64) -> impl Fn(f64) -> f64 {
    let b = TailBound::gamma_product(&[sigma], g, 0.0);
    move |t| b.eval(t)
}

const COMPANION_SPAN: i32 = 40;

/// `∫ f(τ) dτ` over the real line for an integrand carrying Γ factors at
/// real parts `gamma_sigmas`. The companion bound is the largest value of
/// `|f|/Π|Γ|` on integer τ in `[−40, 40]`, inflated tenfold.
pub fn gamma_line_integral<F>(
    f: F,
    gamma_sigmas: &[f64],
    growth: f64,
    tol: &Tolerance,
) -> Result<EvalResult>
where
    F: Fn(f64) -> Result<ComplexScalar>,
{
    let failure: RefCell<Option<Error>> = RefCell::new(None);
    let guarded = |tau: f64| match f(tau) {
        Ok(v) => v,
        Err(e) => {
            failure.borrow_mut().get_or_insert(e);
            ComplexScalar::new(f64::NAN, f64::NAN)
        }
    };
    let mut companion: f64 = 0.0;
    for j in -COMPANION_SPAN..=COMPANION_SPAN {
        let tau = j as f64;
        let v = guarded(tau).norm();
        let mut ln_g = 0.0;
        for &s in gamma_sigmas {
            ln_g += crate::zeta_kernel::ln_gamma(ComplexScalar::new(s, tau))?.re;
        }
        companion = companion.max(v * (-ln_g - growth * tau.abs()).exp());
    }
    if let Some(e) = failure.borrow_mut().take() {
        return Err(e);
    }
    let bound = TailBound::gamma_product(gamma_sigmas, 10.0 * companion, growth);
    let r = integrate_real_line(&guarded, |t| bound.eval(t), tol);
    if let Some(e) = failure.into_inner() {
        return Err(e);
    }
    if !(r.value.re.is_finite() && r.value.im.is_finite()) {
        return Err(Error::Overflow {
            context: "line integral".into(),
        });
    }
    Ok(r)
}

/// `(1/√(2π))∫ e^{iωτ}Γ(σ+iτ)f(σ+iτ) dτ` by quadrature.
pub fn duality_line(
    pair: &TransformPair,
    omega: f64,
    kernel: &Kernel,
    tol: &Tolerance,
) -> Result<EvalResult> {
    check_band(pair.rep, &pair.params)?;
    let sigma = pair.params.s.re;
    let growth = pair.rep.companion_growth(&pair.params);
    let r = gamma_line_integral(
        |tau| {
            let v = pair.function_side(tau, kernel)?.value;
            Ok(v * ComplexScalar::new(0.0, omega * tau).exp())
        },
        &[sigma],
        growth,
        tol,
    )?;
    Ok(r.scale(ComplexScalar::new(1.0 / SQRT_2PI, 0.0), EPS))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(sigma: f64) -> FunctionParams {
        FunctionParams::new(ComplexScalar::new(sigma, 0.0))
    }

    #[test]
    fn kernel_values_at_origin() {
        let k = kernel_of(Representation::RiemannZeta, &p(2.0)).unwrap();
        assert!((k.eval(0.0) - 1.0 / (1f64.exp() - 1.0)).abs() < 1e-15);
        assert!((k.eval(0.0) - 0.581_976_706_9).abs() < 1e-9);
        let k = kernel_of(Representation::Efd, &p(1.0)).unwrap();
        assert!((k.eval(0.0) - 0.268_941_421_4).abs() < 1e-9);
        let k = kernel_of(Representation::ZetaStrip, &p(0.5)).unwrap();
        assert!((k.eval(0.0) + 0.418_023_293_1).abs() < 1e-9);
    }

    #[test]
    fn bands_are_enforced() {
        assert!(kernel_of(Representation::RiemannZeta, &p(0.8)).is_err());
        assert!(kernel_of(Representation::ZetaStrip, &p(1.2)).is_err());
        assert!(kernel_of(Representation::Ebe, &p(0.5)).is_err());
        assert!(kernel_of(Representation::Ebe, &p(0.5).with_x(0.3)).is_ok());
        let be = p(2.0).with_mu(0.5);
        assert!(kernel_of(Representation::BoseEinstein, &be).is_err());
    }

    #[test]
    fn tail_bound_dominates_the_kernel_tail() {
        for (rep, params) in [
            (Representation::RiemannZeta, p(2.0)),
            (Representation::ZetaStrip, p(0.5)),
            (Representation::Efd, p(1.0).with_x(0.5).with_nu(ComplexScalar::new(1.0, 0.0))),
        ] {
            let k = kernel_of(rep, &params).unwrap();
            let bound = k.tail_bound();
            for t in [2.0, 5.0, 10.0] {
                let tail = crate::numerics::integrate_interval(
                    &|y: f64| ComplexScalar::new(k.eval(y).abs() + k.eval(-y).abs(), 0.0),
                    &[t, t + 60.0],
                    &Tolerance::function_default(),
                );
                assert!(tail.value.re <= bound(t), "{rep:?} at {t}");
            }
        }
    }

    #[test]
    fn zeta_pair_at_origin() {
        let pair = TransformPair::new(Representation::RiemannZeta, p(2.0));
        let c = verify_transform_pair(&pair, 0.0, &Tolerance::line_default()).unwrap();
        assert!(c.residual < 1e-8, "{}", c.residual);
        assert!((c.lhs.value.re - std::f64::consts::PI.powi(2) / 6.0).abs() < 1e-12);
    }

    #[test]
    fn gamma_bound_values() {
        let b = gamma_decay_bound(2.0, 2.0);
        assert!(b(40.0) < 1e-20);
        let mut prev = f64::INFINITY;
        for t in 1..60 {
            let v = b(t as f64);
            assert!(v < prev);
            prev = v;
        }
        // C(σ) really bounds |Γ| on the line away from the calibration point
        for sigma in [0.25, 1.0, 2.5] {
            let c = gamma_constant(sigma);
            for tau in [1.0, 5.0, 35.0] {
                let g = crate::zeta_kernel::gamma(ComplexScalar::new(sigma, tau)).unwrap();
                let env = (1.0 + tau).powf(sigma - 0.5) * (-PI * tau / 2.0).exp();
                assert!(g.value.norm() <= c * env);
            }
        }
    }

    #[test]
    fn duality_closed_form_and_overflow() {
        let pair = TransformPair::new(Representation::Gamma, p(1.0));
        let v = duality_value(&pair, 0.0).unwrap();
        assert!((v.value.re - SQRT_2PI / 1f64.exp()).abs() < 1e-15);
        assert!(matches!(duality_value(&pair, -8.0), Err(Error::Overflow { .. })));
    }

    #[test]
    fn names_round_trip() {
        for r in Representation::ALL {
            assert_eq!(Representation::from_name(r.name()), Some(r));
        }
    }
}
