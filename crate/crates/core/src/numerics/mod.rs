//! Floating-point substrate: compensated summation, alternating-series
//! acceleration, adaptive Gauss-Kronrod quadrature on log-mapped
//! semi-infinite ranges, and truncated whole-line integrals with explicit
//! tail bounds.

mod quadrature;
mod series;

use bitflags::bitflags;
use num_complex::Complex64;

pub use quadrature::{
    integrate_interval, integrate_log_domain, integrate_ray, integrate_real_line,
    integrate_semi_infinite, mellin_ray, QuadratureOutcome,
};
pub use series::{sum_series, NeumaierSum, SeriesMode};

/// A complex number `σ + iτ`, the argument type used throughout the crate.
pub type ComplexScalar = Complex64;

/// Unit roundoff of `f64`.
pub const EPS: f64 = f64::EPSILON;

/// Convergence targets for series and quadrature.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub rel: f64,
    pub abs: f64,
    pub max_subdivisions: usize,
    pub max_terms: usize,
}

impl Tolerance {
    pub const fn new(rel: f64, abs: f64) -> Self {
        Tolerance {
            rel,
            abs,
            max_subdivisions: 4000,
            max_terms: 200_000,
        }
    }

    /// Default target for point evaluations of special functions.
    pub const fn function_default() -> Self {
        Tolerance::new(1e-10, 1e-12)
    }

    /// Default target for integrals over a vertical line.
    pub const fn line_default() -> Self {
        Tolerance {
            rel: 1e-8,
            abs: 1e-12,
            max_subdivisions: 8000,
            max_terms: 200_000,
        }
    }

    pub fn with_subdivisions(mut self, n: usize) -> Self {
        self.max_subdivisions = n;
        self
    }

    pub fn with_max_terms(mut self, n: usize) -> Self {
        self.max_terms = n;
        self
    }

    /// `e ≤ abs + rel·|v|`
    pub fn accepts(&self, err: f64, value: f64) -> bool {
        err <= self.abs + self.rel * value.abs()
    }

    /// Target error for a quantity of magnitude `value`.
    pub fn target(&self, value: f64) -> f64 {
        self.abs.max(self.rel * value.abs())
    }

    /// Both targets scaled by `factor`.
    pub fn scaled(&self, factor: f64) -> Self {
        Tolerance {
            rel: self.rel * factor,
            abs: self.abs * factor,
            ..*self
        }
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance::function_default()
    }
}

/// How a value was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Series,
    Quadrature,
    ClosedForm,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Series => "series",
            Method::Quadrature => "quadrature",
            Method::ClosedForm => "closed_form",
        }
    }
}

bitflags! {
    #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
    pub struct Flags: u8 {
        const CONVERGED = 1;
        const TRUNCATED = 1 << 1;
        const NEAR_SINGULARITY = 1 << 2;
        const DOMAIN_BOUNDARY = 1 << 3;
    }
}

impl Flags {
    pub fn names(&self) -> Vec<&'static str> {
        self.iter_names()
            .map(|(name, _)| match name {
                "CONVERGED" => "converged",
                "TRUNCATED" => "truncated",
                "NEAR_SINGULARITY" => "near_singularity",
                _ => "domain_boundary",
            })
            .collect()
    }
}

/// A value with its estimated absolute error, provenance and status.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalResult {
    pub value: ComplexScalar,
    pub abs_err: f64,
    pub method: Method,
    pub flags: Flags,
}

impl EvalResult {
    pub fn new(value: ComplexScalar, abs_err: f64, method: Method, converged: bool) -> Self {
        let flags = if converged {
            Flags::CONVERGED
        } else {
            Flags::empty()
        };
        EvalResult {
            value,
            abs_err,
            method,
            flags,
        }
    }

    pub fn exact(value: ComplexScalar) -> Self {
        EvalResult::new(value, EPS * value.norm(), Method::ClosedForm, true)
    }

    pub fn converged(&self) -> bool {
        self.flags.contains(Flags::CONVERGED)
    }

    pub fn with_flag(mut self, flag: Flags) -> Self {
        self.flags |= flag;
        self
    }

    /// Multiply by an exactly-known factor with relative error `rel`.
    pub fn scale(self, factor: ComplexScalar, rel: f64) -> Self {
        let value = self.value * factor;
        EvalResult {
            value,
            abs_err: self.abs_err * factor.norm() + rel * value.norm(),
            ..self
        }
    }

    /// Product of two results with first-order error propagation.
    pub fn mul(self, other: EvalResult) -> Self {
        let value = self.value * other.value;
        EvalResult {
            value,
            abs_err: self.abs_err * other.value.norm()
                + other.abs_err * self.value.norm()
                + self.abs_err * other.abs_err
                + EPS * value.norm(),
            method: self.method,
            flags: combine_flags(self.flags, other.flags),
        }
    }

    pub fn div(self, other: EvalResult) -> Self {
        let value = self.value / other.value;
        let d = other.value.norm();
        EvalResult {
            value,
            abs_err: (self.abs_err + value.norm() * other.abs_err) / d + EPS * value.norm(),
            method: self.method,
            flags: combine_flags(self.flags, other.flags),
        }
    }

    pub fn add(self, other: EvalResult) -> Self {
        let value = self.value + other.value;
        EvalResult {
            value,
            abs_err: self.abs_err + other.abs_err + EPS * value.norm(),
            method: self.method,
            flags: combine_flags(self.flags, other.flags),
        }
    }

    pub fn sub(self, other: EvalResult) -> Self {
        self.add(other.neg())
    }

    pub fn neg(self) -> Self {
        EvalResult {
            value: -self.value,
            ..self
        }
    }

    pub fn conj(self) -> Self {
        EvalResult {
            value: self.value.conj(),
            ..self
        }
    }
}

/// Converged only if both are; every other flag is sticky.
fn combine_flags(a: Flags, b: Flags) -> Flags {
    let mut out = (a | b) - Flags::CONVERGED;
    if a.contains(Flags::CONVERGED) && b.contains(Flags::CONVERGED) {
        out |= Flags::CONVERGED;
    }
    out
}

/// `ln(1 + w)` without cancellation for small `w`.
pub fn ln_1p(w: ComplexScalar) -> ComplexScalar {
    if w.norm() > 0.5 {
        return (ComplexScalar::new(1.0, 0.0) + w).ln();
    }
    let re = 0.5 * (2.0 * w.re + w.re * w.re + w.im * w.im).ln_1p();
    let im = w.im.atan2(1.0 + w.re);
    ComplexScalar::new(re, im)
}

/// `e^t − 1` without cancellation near `t = 0`.
pub fn exp_m1(t: ComplexScalar) -> ComplexScalar {
    if t.im == 0.0 {
        return ComplexScalar::new(t.re.exp_m1(), 0.0);
    }
    let (s, c) = t.im.sin_cos();
    let half = (0.5 * t.im).sin();
    let em1 = t.re.exp_m1();
    ComplexScalar::new(em1 * c - 2.0 * half * half, t.re.exp() * s)
}
