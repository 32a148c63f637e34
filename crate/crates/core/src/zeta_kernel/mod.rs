//! The zeta family and the extended Fermi-Dirac / Bose-Einstein functions.
//!
//! Every function has a series path and a Mellin-quadrature path; the free
//! functions use the series path at [`Tolerance::function_default`].

mod fd;
mod gamma;
mod lerch;
mod zeta;

use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::{exp_m1, ComplexScalar, EvalResult, Method, Tolerance, EPS};

pub use gamma::ln_gamma;
pub(crate) use lerch::one;
pub(crate) use zeta::pow_neg;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FunctionId {
    Gamma,
    RiemannZeta,
    DirichletEtaFactor,
    HurwitzZeta,
    LerchPhi,
    Polylog,
    FermiDirac,
    BoseEinstein,
    EfdTheta,
    EbePsi,
}

impl FunctionId {
    pub const ALL: [FunctionId; 10] = [
        FunctionId::Gamma,
        FunctionId::RiemannZeta,
        FunctionId::DirichletEtaFactor,
        FunctionId::HurwitzZeta,
        FunctionId::LerchPhi,
        FunctionId::Polylog,
        FunctionId::FermiDirac,
        FunctionId::BoseEinstein,
        FunctionId::EfdTheta,
        FunctionId::EbePsi,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            FunctionId::Gamma => "gamma",
            FunctionId::RiemannZeta => "riemann-zeta",
            FunctionId::DirichletEtaFactor => "eta-factor",
            FunctionId::HurwitzZeta => "hurwitz-zeta",
            FunctionId::LerchPhi => "lerch-phi",
            FunctionId::Polylog => "polylog",
            FunctionId::FermiDirac => "fd",
            FunctionId::BoseEinstein => "be",
            FunctionId::EfdTheta => "efd",
            FunctionId::EbePsi => "ebe",
        }
    }

    pub fn from_name(name: &str) -> Option<FunctionId> {
        FunctionId::ALL.into_iter().find(|f| f.name() == name)
    }
}

impl fmt::Display for FunctionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Arguments shared by all kernel functions. `x` is the eFD/eBE shift; the
/// FD/BE argument is `μ = −x`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FunctionParams {
    pub s: ComplexScalar,
    pub x: f64,
    pub nu: ComplexScalar,
    pub z: ComplexScalar,
}

impl Default for FunctionParams {
    fn default() -> Self {
        FunctionParams {
            s: one(),
            x: 0.0,
            nu: ComplexScalar::default(),
            z: ComplexScalar::default(),
        }
    }
}

impl FunctionParams {
    pub fn new(s: ComplexScalar) -> Self {
        FunctionParams {
            s,
            ..Default::default()
        }
    }

    pub fn with_x(mut self, x: f64) -> Self {
        self.x = x;
        self
    }

    pub fn with_mu(mut self, mu: f64) -> Self {
        self.x = -mu;
        self
    }

    pub fn with_nu(mut self, nu: ComplexScalar) -> Self {
        self.nu = nu;
        self
    }

    pub fn with_z(mut self, z: ComplexScalar) -> Self {
        self.z = z;
        self
    }

    pub fn mu(&self) -> f64 {
        -self.x
    }

    /// Checks the defining-integral domain of `function`.
    pub fn validate(&self, function: FunctionId) -> Result<()> {
        let name = function_label(function);
        let s = self.s;
        if !(s.re.is_finite() && s.im.is_finite() && self.x.is_finite()) {
            return Err(Error::domain(name, "finite arguments"));
        }
        match function {
            FunctionId::Gamma | FunctionId::DirichletEtaFactor => {
                if s.im == 0.0 && s.re <= 0.0 && s.re == s.re.floor() {
                    return Err(Error::pole(name, format!("s = {}", s.re)));
                }
                Ok(())
            }
            FunctionId::RiemannZeta => zeta::check_zeta_domain(s),
            FunctionId::HurwitzZeta => {
                if !(self.nu.re > 0.0) {
                    return Err(Error::domain(name, "Re(ν) > 0"));
                }
                if !(s.re > 1.0) {
                    return Err(Error::domain(name, "Re(s) > 1"));
                }
                Ok(())
            }
            FunctionId::LerchPhi => lerch::check_lerch_domain(name, self.z, s, self.nu),
            FunctionId::Polylog => lerch::check_lerch_domain(name, self.z, s, one()),
            FunctionId::EfdTheta => {
                check_nu(name, self.nu)?;
                check_x(name, self.x)?;
                if !(s.re > 0.0) {
                    return Err(Error::domain(name, "Re(s) > 0"));
                }
                Ok(())
            }
            FunctionId::EbePsi => {
                check_nu(name, self.nu)?;
                check_x(name, self.x)?;
                check_bose_order(name, s, self.x)
            }
            FunctionId::FermiDirac => {
                if !(s.re > 0.0) {
                    return Err(Error::domain(name, "Re(s) > 0"));
                }
                Ok(())
            }
            FunctionId::BoseEinstein => {
                if self.mu() > 0.0 {
                    return Err(Error::domain(name, "μ ≤ 0 (pole on integration path)"));
                }
                check_bose_order(name, s, self.x)
            }
        }
    }
}

fn function_label(f: FunctionId) -> &'static str {
    match f {
        FunctionId::Gamma => "gamma",
        FunctionId::RiemannZeta => "riemann_zeta",
        FunctionId::DirichletEtaFactor => "eta_factor",
        FunctionId::HurwitzZeta => "hurwitz_zeta",
        FunctionId::LerchPhi => "lerch_phi",
        FunctionId::Polylog => "polylog",
        FunctionId::FermiDirac => "fermi_dirac",
        FunctionId::BoseEinstein => "bose_einstein",
        FunctionId::EfdTheta => "efd_theta",
        FunctionId::EbePsi => "ebe_psi",
    }
}

fn check_nu(name: &'static str, nu: ComplexScalar) -> Result<()> {
    if !(nu.re > -1.0) {
        return Err(Error::domain(name, "Re(ν) > −1"));
    }
    Ok(())
}

fn check_x(name: &'static str, x: f64) -> Result<()> {
    if !(x >= 0.0) {
        return Err(Error::domain(name, "x ≥ 0"));
    }
    Ok(())
}

fn check_bose_order(name: &'static str, s: ComplexScalar, x: f64) -> Result<()> {
    if x == 0.0 {
        if !(s.re > 1.0) {
            return Err(Error::domain(name, "Re(s) > 1 when x = 0"));
        }
    } else if !(s.re > 0.0) {
        return Err(Error::domain(name, "Re(s) > 0 when x > 0"));
    }
    Ok(())
}

/// How the `(−1)^{ν+1}` factor of the eFD/eBE bridge is read.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BridgeMode {
    /// Integer ν only, the factor is ±1.
    Integer,
    /// Any ν, the factor is `e^{iπ(ν+1)}`.
    Exponential,
}

/// Evaluation settings: the tolerance target and the distance `delta` from
/// the unit circle inside which Φ is summed directly.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Kernel {
    pub tol: Tolerance,
    pub delta: f64,
}

impl Default for Kernel {
    fn default() -> Self {
        Kernel {
            tol: Tolerance::function_default(),
            delta: 0.05,
        }
    }
}

impl Kernel {
    pub fn with_tolerance(tol: Tolerance) -> Self {
        Kernel {
            tol,
            ..Default::default()
        }
    }

    pub fn gamma(&self, s: ComplexScalar) -> Result<EvalResult> {
        gamma::gamma(s)
    }

    pub fn riemann_zeta(&self, s: ComplexScalar) -> Result<EvalResult> {
        zeta::riemann_zeta(s, &self.tol)
    }

    pub fn eta_factor(&self, s: ComplexScalar) -> Result<EvalResult> {
        zeta::eta_factor(s)
    }

    pub fn hurwitz_zeta(&self, s: ComplexScalar, nu: ComplexScalar) -> Result<EvalResult> {
        FunctionParams::new(s).with_nu(nu).validate(FunctionId::HurwitzZeta)?;
        Ok(zeta::hurwitz_em(s, nu))
    }

    pub fn lerch_phi(
        &self,
        z: ComplexScalar,
        s: ComplexScalar,
        a: ComplexScalar,
    ) -> Result<EvalResult> {
        lerch::check_lerch_domain("lerch_phi", z, s, a)?;
        lerch::lerch_series(z, s, a, self.delta, &self.tol)
    }

    pub fn polylog(&self, z: ComplexScalar, s: ComplexScalar) -> Result<EvalResult> {
        lerch::check_lerch_domain("polylog", z, s, one())?;
        if z == one() {
            return self.riemann_zeta(s);
        }
        let r = lerch::lerch_series(z, s, one(), self.delta, &self.tol)?;
        Ok(r.scale(z, EPS))
    }

    pub fn efd_theta(&self, s: ComplexScalar, x: f64, nu: ComplexScalar) -> Result<EvalResult> {
        FunctionParams::new(s)
            .with_x(x)
            .with_nu(nu)
            .validate(FunctionId::EfdTheta)?;
        let z = ComplexScalar::new(-(-x).exp(), 0.0);
        let r = lerch::lerch_series(z, s, nu + 1.0, self.delta, &self.tol)?;
        Ok(r.scale((-(nu + 1.0) * x).exp(), EPS))
    }

    pub fn ebe_psi(&self, s: ComplexScalar, x: f64, nu: ComplexScalar) -> Result<EvalResult> {
        FunctionParams::new(s)
            .with_x(x)
            .with_nu(nu)
            .validate(FunctionId::EbePsi)?;
        let z = ComplexScalar::new((-x).exp(), 0.0);
        let r = lerch::lerch_series(z, s, nu + 1.0, self.delta, &self.tol)?;
        Ok(r.scale((-(nu + 1.0) * x).exp(), EPS))
    }

    /// `𝔉_{s−1}(μ)`. Positive μ up to 2 goes through the Taylor series in μ,
    /// beyond that through the rotated integral.
    pub fn fermi_dirac(&self, s: ComplexScalar, mu: f64) -> Result<EvalResult> {
        FunctionParams::new(s)
            .with_mu(mu)
            .validate(FunctionId::FermiDirac)?;
        if mu <= 0.0 {
            self.efd_theta(s, -mu, ComplexScalar::default())
        } else if mu <= fd::FD_TAYLOR_LIMIT {
            fd::fermi_dirac_taylor(s, mu, &self.tol)
        } else {
            fermi_dirac_positive(s, mu, &self.tol)
        }
    }

    /// `𝔅_{s−1}(μ)` for `μ ≤ 0`.
    pub fn bose_einstein(&self, s: ComplexScalar, mu: f64) -> Result<EvalResult> {
        FunctionParams::new(s)
            .with_mu(mu)
            .validate(FunctionId::BoseEinstein)?;
        self.ebe_psi(s, -mu, ComplexScalar::default())
    }

    /// Θν(s; x) through the eBE function at the shifted argument `x + iπ`.
    pub fn efd_via_bridge(
        &self,
        s: ComplexScalar,
        x: f64,
        nu: ComplexScalar,
        mode: BridgeMode,
    ) -> Result<EvalResult> {
        FunctionParams::new(s)
            .with_x(x)
            .with_nu(nu)
            .validate(FunctionId::EfdTheta)?;
        let factor = match mode {
            BridgeMode::Integer => {
                if nu.im != 0.0 || nu.re != nu.re.round() {
                    return Err(Error::domain("efd_via_bridge", "integer ν"));
                }
                if (nu.re as i64 + 1) % 2 == 0 {
                    one()
                } else {
                    -one()
                }
            }
            BridgeMode::Exponential => (ComplexScalar::i() * PI * (nu + 1.0)).exp(),
        };
        // Ψν(s; w) = e^{−(ν+1)w}Φ(e^{−w}, s, ν+1), w = x + iπ
        let w = ComplexScalar::new(x, PI);
        let z = (-w).exp();
        let z = if z.norm() > 1.0 { z / z.norm() } else { z };
        let r = lerch::lerch_series(z, s, nu + 1.0, self.delta, &self.tol)?;
        Ok(r.scale((-(nu + 1.0) * w).exp() * factor, 2.0 * EPS))
    }

    /// Series (primary) path of `function`.
    pub fn evaluate(&self, function: FunctionId, p: &FunctionParams) -> Result<EvalResult> {
        match function {
            FunctionId::Gamma => self.gamma(p.s),
            FunctionId::RiemannZeta => self.riemann_zeta(p.s),
            FunctionId::DirichletEtaFactor => self.eta_factor(p.s),
            FunctionId::HurwitzZeta => self.hurwitz_zeta(p.s, p.nu),
            FunctionId::LerchPhi => self.lerch_phi(p.z, p.s, p.nu),
            FunctionId::Polylog => self.polylog(p.z, p.s),
            FunctionId::FermiDirac => self.fermi_dirac(p.s, p.mu()),
            FunctionId::BoseEinstein => self.bose_einstein(p.s, p.mu()),
            FunctionId::EfdTheta => self.efd_theta(p.s, p.x, p.nu),
            FunctionId::EbePsi => self.ebe_psi(p.s, p.x, p.nu),
        }
    }

    /// Integral-representation path of `function`. For Φ the parameter `a`
    /// is read from `p.nu`.
    pub fn evaluate_quadrature(
        &self,
        function: FunctionId,
        p: &FunctionParams,
    ) -> Result<EvalResult> {
        p.validate(function)?;
        let tol = &self.tol;
        let s = p.s;
        match function {
            FunctionId::Gamma => {
                if !(s.re > 0.0) {
                    return Err(Error::domain("gamma", "Re(s) > 0 for the integral"));
                }
                let inner = crate::numerics::mellin_ray(
                    s,
                    |t| (-t).exp(),
                    lerch::rotation_for(s, FRAC_PI_2 - 0.2),
                    tol,
                )?;
                Ok(inner)
            }
            FunctionId::RiemannZeta => riemann_zeta_quadrature(s, tol),
            FunctionId::DirichletEtaFactor => {
                let g = self.evaluate_quadrature(FunctionId::Gamma, p)?;
                let f = zeta::eta_coefficient(s);
                Ok(g.scale(f, 2.0 * EPS))
            }
            FunctionId::HurwitzZeta => lerch::lerch_quadrature(one(), s, p.nu, tol),
            FunctionId::LerchPhi => lerch::lerch_quadrature(p.z, s, p.nu, tol),
            FunctionId::Polylog => {
                Ok(lerch::lerch_quadrature(p.z, s, one(), tol)?.scale(p.z, EPS))
            }
            FunctionId::EfdTheta | FunctionId::EbePsi => {
                let sign = if function == FunctionId::EfdTheta {
                    -1.0
                } else {
                    1.0
                };
                let z = ComplexScalar::new(sign * (-p.x).exp(), 0.0);
                let r = lerch::lerch_quadrature(z, s, p.nu + 1.0, tol)?;
                Ok(r.scale((-(p.nu + 1.0) * p.x).exp(), EPS))
            }
            FunctionId::FermiDirac => {
                if p.mu() > 0.0 {
                    return fermi_dirac_positive(s, p.mu(), tol);
                }
                let z = ComplexScalar::new(-(p.mu()).exp(), 0.0);
                let r = lerch::lerch_quadrature(z, s, one(), tol)?;
                Ok(r.scale(ComplexScalar::new(p.mu().exp(), 0.0), EPS))
            }
            FunctionId::BoseEinstein => {
                let z = ComplexScalar::new(p.mu().exp(), 0.0);
                let r = lerch::lerch_quadrature(z, s, one(), tol)?;
                Ok(r.scale(z, EPS))
            }
        }
    }
}

/// `𝔉_{s−1}(μ)` for `μ > 0` by quadrature of its defining integral. The ray
/// is kept below the nearest poles `μ ± iπ` of the integrand.
fn fermi_dirac_positive(s: ComplexScalar, mu: f64, tol: &Tolerance) -> Result<EvalResult> {
    let limit = 0.5 * (PI / mu).atan();
    lerch::normalized_mellin(s, |t| fd_kernel(t, mu), limit, tol)
        .map(|r| EvalResult {
            method: Method::Quadrature,
            ..r
        })
}

pub(crate) fn fd_kernel(t: ComplexScalar, mu: f64) -> ComplexScalar {
    let u = t - mu;
    if u.re > 0.0 {
        let e = (-u).exp();
        e / (e + 1.0)
    } else {
        1.0 / (u.exp() + 1.0)
    }
}

// B_{2k}/(2k)!, k = 1..7
const STRIP_SERIES: [f64; 7] = [
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30240.0,
    -1.0 / 1209600.0,
    1.0 / 47900160.0,
    -691.0 / 1307674368000.0,
    1.0 / 74724249600.0,
];

/// `1/(e^t − 1) − 1/t`, analytic through `t = 0`.
pub(crate) fn strip_kernel(t: ComplexScalar) -> ComplexScalar {
    if t.norm() < 0.5 {
        let t2 = t * t;
        let mut acc = ComplexScalar::default();
        for c in STRIP_SERIES.iter().rev() {
            acc = acc * t2 + *c;
        }
        return acc * t - 0.5;
    }
    bose_kernel(t) - 1.0 / t
}

pub(crate) fn strip_kernel_real(t: f64) -> f64 {
    strip_kernel(ComplexScalar::new(t, 0.0)).re
}

/// `1/(e^t − 1)` written with `e^{−t}`.
pub(crate) fn bose_kernel(t: ComplexScalar) -> ComplexScalar {
    let e = (-t).exp();
    e / -exp_m1(-t)
}

/// `1/(e^t + 1)` written with `e^{−t}`.
pub(crate) fn fermi_kernel(t: ComplexScalar) -> ComplexScalar {
    let e = (-t).exp();
    e / (e + 1.0)
}

fn riemann_zeta_quadrature(s: ComplexScalar, tol: &Tolerance) -> Result<EvalResult> {
    zeta::check_zeta_domain(s)?;
    let limit = FRAC_PI_2 - 0.2;
    // near Re s = 1 both kernels decay like x^{σ−2} at one end
    let r = if s.re > 1.25 {
        lerch::normalized_mellin(s, bose_kernel, limit, tol)?
    } else if s.re < 0.75 {
        lerch::normalized_mellin(s, strip_kernel, limit, tol)?
    } else {
        let c = zeta::eta_factor(s)?;
        let inner = Tolerance {
            abs: tol.abs * c.value.norm(),
            ..*tol
        };
        let m = crate::numerics::mellin_ray(s, fermi_kernel, lerch::rotation_for(s, limit), &inner)?;
        m.div(c)
    };
    Ok(r)
}

pub fn gamma(s: ComplexScalar) -> Result<EvalResult> {
    gamma::gamma(s)
}

pub fn riemann_zeta(s: ComplexScalar) -> Result<EvalResult> {
    Kernel::default().riemann_zeta(s)
}

pub fn eta_factor(s: ComplexScalar) -> Result<EvalResult> {
    zeta::eta_factor(s)
}

pub fn hurwitz_zeta(s: ComplexScalar, nu: ComplexScalar) -> Result<EvalResult> {
    Kernel::default().hurwitz_zeta(s, nu)
}

pub fn lerch_phi(z: ComplexScalar, s: ComplexScalar, a: ComplexScalar) -> Result<EvalResult> {
    Kernel::default().lerch_phi(z, s, a)
}

pub fn polylog(z: ComplexScalar, s: ComplexScalar) -> Result<EvalResult> {
    Kernel::default().polylog(z, s)
}

pub fn efd_theta(s: ComplexScalar, x: f64, nu: ComplexScalar) -> Result<EvalResult> {
    Kernel::default().efd_theta(s, x, nu)
}

pub fn ebe_psi(s: ComplexScalar, x: f64, nu: ComplexScalar) -> Result<EvalResult> {
    Kernel::default().ebe_psi(s, x, nu)
}

pub fn fermi_dirac(s: ComplexScalar, mu: f64) -> Result<EvalResult> {
    Kernel::default().fermi_dirac(s, mu)
}

pub fn bose_einstein(s: ComplexScalar, mu: f64) -> Result<EvalResult> {
    Kernel::default().bose_einstein(s, mu)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::LN_2;

    fn c(re: f64) -> ComplexScalar {
        ComplexScalar::new(re, 0.0)
    }

    fn close(a: ComplexScalar, b: f64, rel: f64) -> bool {
        (a - c(b)).norm() <= rel * b.abs().max(1e-300)
    }

    /// Σ_{n≥1} w^n/n^s, truncated where the terms vanish.
    fn polylog_oracle(w: f64, s: f64, terms: usize) -> f64 {
        (1..=terms).rev().map(|n| w.powi(n as i32) / (n as f64).powf(s)).sum()
    }

    #[test]
    fn polylog_values() {
        let r = polylog(c(0.3), c(1.0)).unwrap();
        assert!(close(r.value, -(0.7f64).ln(), 1e-10));
        assert!(close(r.value, 0.356_674_943_9, 1e-9));
        let r = polylog(c(1.0), c(2.0)).unwrap();
        assert!(close(r.value, PI * PI / 6.0, 1e-13));
        let r = polylog(c(0.5), c(2.0)).unwrap();
        assert!(close(r.value, PI * PI / 12.0 - LN_2 * LN_2 / 2.0, 1e-10));
        assert!(close(r.value, 0.582_240_526_5, 1e-9));
    }

    #[test]
    fn hurwitz_values() {
        let z3 = riemann_zeta(c(3.0)).unwrap().value.re;
        assert!(close(hurwitz_zeta(c(3.0), c(1.0)).unwrap().value, z3, 1e-14));
        assert!(close(hurwitz_zeta(c(2.0), c(2.0)).unwrap().value, 0.644_934_066_8, 1e-9));
        assert!(close(hurwitz_zeta(c(3.0), c(0.5)).unwrap().value, 7.0 * z3, 1e-13));
        assert!(hurwitz_zeta(c(1.0), c(1.0)).is_err());
    }

    #[test]
    fn lerch_values() {
        let s = ComplexScalar::new(2.0, 1.0);
        let a = c(1.7);
        let r = lerch_phi(c(0.0), s, a).unwrap();
        assert!((r.value - pow_neg(a, s)).norm() < 1e-15);
        assert!(close(lerch_phi(c(1.0), c(2.0), c(1.0)).unwrap().value, PI * PI / 6.0, 1e-13));
        assert!(close(lerch_phi(c(0.5), c(2.0), c(1.0)).unwrap().value, 1.164_481_053_0, 1e-9));
        assert!(lerch_phi(c(1.5), c(2.0), c(1.0)).is_err());
    }

    #[test]
    fn efd_values() {
        let r = efd_theta(c(2.0), 0.0, c(0.0)).unwrap();
        assert!(close(r.value, PI * PI / 12.0, 1e-12));
        let r = efd_theta(c(1.0), 0.0, c(0.0)).unwrap();
        assert!(close(r.value, LN_2, 1e-12));
        let k = Kernel::default();
        let p = FunctionParams::new(c(2.0)).with_x(0.5).with_nu(c(1.0));
        let a = k.evaluate(FunctionId::EfdTheta, &p).unwrap();
        let b = k.evaluate_quadrature(FunctionId::EfdTheta, &p).unwrap();
        assert!((a.value - b.value).norm() <= 1e-9 * a.value.norm());
    }

    #[test]
    fn ebe_values() {
        let z2 = PI * PI / 6.0;
        assert!(close(ebe_psi(c(2.0), 0.0, c(0.0)).unwrap().value, z2, 1e-13));
        let z3 = riemann_zeta(c(3.0)).unwrap().value.re;
        assert!(close(ebe_psi(c(3.0), 0.0, c(1.0)).unwrap().value, z3 - 1.0, 1e-13));
        let oracle = polylog_oracle((-1.0f64).exp(), 2.0, 40);
        let r = ebe_psi(c(2.0), 1.0, c(0.0)).unwrap();
        assert!(close(r.value, oracle, 1e-10));
        assert!(close(r.value, 0.408_754_287_3, 1e-9));
        assert!(ebe_psi(c(1.0), 0.0, c(0.0)).is_err());
        assert!(ebe_psi(c(0.5), 0.3, c(0.0)).is_ok());
    }

    #[test]
    fn fermi_dirac_values() {
        assert!(close(fermi_dirac(c(1.0), 0.0).unwrap().value, LN_2, 1e-12));
        let z3 = riemann_zeta(c(3.0)).unwrap().value.re;
        assert!(close(fermi_dirac(c(3.0), 0.0).unwrap().value, 0.75 * z3, 1e-12));
        assert!(close(fermi_dirac(c(3.0), 0.0).unwrap().value, 0.901_542_677_4, 1e-9));
        let r = fermi_dirac(c(1.0), 1.0).unwrap();
        assert!(close(r.value, (1.0 + 1f64.exp()).ln(), 1e-10));
        assert!(close(r.value, 1.313_261_687_5, 1e-9));
        // complex order above the real axis exercises the rotated ray
        let s = ComplexScalar::new(1.5, 6.0);
        let q = fermi_dirac(s, 2.0).unwrap();
        let unrotated = crate::numerics::mellin_ray(
            s,
            |t| fd_kernel(t, 2.0),
            0.0,
            &Tolerance::new(1e-13, 1e-16),
        )
        .unwrap()
        .div(gamma(s).unwrap());
        assert!((q.value - unrotated.value).norm() < 1e-8 * q.value.norm());
        // series and quadrature agree at positive μ far up the line
        for (s, mu) in [
            (ComplexScalar::new(0.7, 25.0), 1.0),
            (ComplexScalar::new(2.5, -12.0), 1.9),
            (ComplexScalar::new(1.5, 0.0), 0.5),
        ] {
            let p = FunctionParams::new(s).with_mu(mu);
            let a = k_default().evaluate(FunctionId::FermiDirac, &p).unwrap();
            let b = k_default().evaluate_quadrature(FunctionId::FermiDirac, &p).unwrap();
            assert!(a.method == Method::Series);
            assert!((a.value - b.value).norm() <= 1e-9 * a.value.norm(), "{s} {mu}");
        }
    }

    fn k_default() -> Kernel {
        Kernel::default()
    }

    #[test]
    fn bose_einstein_values() {
        assert!(close(bose_einstein(c(2.0), 0.0).unwrap().value, PI * PI / 6.0, 1e-13));
        let r = bose_einstein(c(1.0), -1.0).unwrap();
        assert!(close(r.value, -(1.0 - (-1f64).exp()).ln(), 1e-10));
        assert!(close(r.value, 0.458_675_145_4, 1e-9));
        assert!(close(bose_einstein(c(2.0), -1.0).unwrap().value, 0.408_754_287_3, 1e-9));
        let e = bose_einstein(c(2.0), 0.5).unwrap_err();
        assert!(e.to_string().contains("pole on integration path"));
    }

    #[test]
    fn bridge_integer_and_exponential() {
        let k = Kernel::default();
        for nu in [0.0, 1.0, 2.0] {
            for x in [0.0, 0.7] {
                let s = ComplexScalar::new(1.5, 0.4);
                let direct = k.efd_theta(s, x, c(nu)).unwrap().value;
                let bridged = k.efd_via_bridge(s, x, c(nu), BridgeMode::Integer).unwrap().value;
                assert!((direct - bridged).norm() <= 1e-10 * direct.norm(), "nu {nu} x {x}");
            }
        }
        assert!(k.efd_via_bridge(c(2.0), 0.5, c(0.5), BridgeMode::Integer).is_err());
        let d = k.efd_theta(c(2.0), 0.5, c(0.5)).unwrap().value;
        let b = k
            .efd_via_bridge(c(2.0), 0.5, c(0.5), BridgeMode::Exponential)
            .unwrap()
            .value;
        assert!((d - b).norm() <= 1e-10 * d.norm());
    }

    #[test]
    fn zeta_quadrature_paths() {
        let k = Kernel::default();
        for s in [
            ComplexScalar::new(2.5, 0.0),
            ComplexScalar::new(0.5, 0.0),
            ComplexScalar::new(0.4, 9.0),
            ComplexScalar::new(1.0, 3.0),
            ComplexScalar::new(3.0, -20.0),
        ] {
            let p = FunctionParams::new(s);
            let a = k.evaluate(FunctionId::RiemannZeta, &p).unwrap();
            let b = k.evaluate_quadrature(FunctionId::RiemannZeta, &p).unwrap();
            assert!((a.value - b.value).norm() <= 1e-9 * a.value.norm().max(1.0), "{s}");
        }
    }

    #[test]
    fn function_names_round_trip() {
        for f in FunctionId::ALL {
            assert_eq!(FunctionId::from_name(f.name()), Some(f));
        }
    }
}
