use std::f64::consts::PI;

use super::gamma::gamma;
use super::lerch::{lerch_series, one};
use super::zeta::{eta_coefficient, hurwitz_em};
use crate::error::Result;
use crate::numerics::{ComplexScalar, EvalResult, Method, NeumaierSum, Tolerance, EPS};

/// Largest μ handled by the Taylor expansion; the series ratio is μ/π.
pub(crate) const FD_TAYLOR_LIMIT: f64 = 2.0;

/// Dirichlet eta `η(w) = (1 − 2^{1−w})ζ(w)` for any `w`, using the
/// functional equation of ζ when `Re w ≤ 0`.
pub(crate) fn dirichlet_eta(w: ComplexScalar, tol: &Tolerance) -> Result<EvalResult> {
    if w.re > 0.0 {
        return lerch_series(-one(), w, one(), 0.05, tol);
    }
    if w.norm() < 1e-12 {
        return Ok(EvalResult::exact(ComplexScalar::new(0.5, 0.0)));
    }
    // ζ(w) = 2^w π^{w−1} sin(πw/2) Γ(1−w) ζ(1−w)
    let g = gamma(one() - w)?;
    let z = hurwitz_em(one() - w, one());
    let pre = (w * (2.0 * PI).ln()).exp() / PI * (w * (PI / 2.0)).sin();
    let zeta = g.mul(z).scale(pre, 8.0 * EPS);
    Ok(zeta.scale(eta_coefficient(w), 4.0 * EPS))
}

/// `𝔉_{s−1}(μ) = Σ_n μ^n/n! · η(s − n)` for `0 < μ ≤ 2`.
pub(crate) fn fermi_dirac_taylor(
    s: ComplexScalar,
    mu: f64,
    tol: &Tolerance,
) -> Result<EvalResult> {
    let ratio = mu / PI;
    // the terms grow until n ≈ μ|τ|/π before the geometric decay sets in
    let min_terms = (2.0 * mu * s.im.abs() / PI) as usize + 8;
    let inner = tol.scaled(0.1);
    let mut acc = NeumaierSum::new();
    let mut coeff = 1.0;
    let mut prev = f64::INFINITY;
    let mut err_sum = 0.0;
    let mut mag: f64 = 0.0;
    let mut converged = false;
    let mut tail = f64::INFINITY;
    for n in 0..400 {
        let eta = dirichlet_eta(s - n as f64, &inner)?;
        let term = eta.value * coeff;
        acc.add(term);
        err_sum += eta.abs_err * coeff;
        let a = term.norm();
        mag = mag.max(a);
        let pair = a + prev;
        tail = pair * ratio / (1.0 - ratio);
        if n >= min_terms && pair.is_finite() && tail <= 0.5 * tol.target(acc.value().norm()) {
            converged = true;
            break;
        }
        prev = a;
        coeff *= mu / (n + 1) as f64;
    }
    let value = acc.value();
    let err = tail + err_sum + 8.0 * EPS * mag;
    Ok(EvalResult::new(value, err, Method::Series, converged))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> ComplexScalar {
        ComplexScalar::new(re, im)
    }

    #[test]
    fn eta_special_values() {
        let tol = Tolerance::function_default();
        let e0 = dirichlet_eta(c(0.0, 0.0), &tol).unwrap();
        assert!((e0.value.re - 0.5).abs() < 1e-15);
        // η(−1) = (1 − 4)ζ(−1) = 1/4, η(−2) = 0
        let e1 = dirichlet_eta(c(-1.0, 0.0), &tol).unwrap();
        assert!((e1.value.re - 0.25).abs() < 1e-13);
        let e2 = dirichlet_eta(c(-2.0, 0.0), &tol).unwrap();
        assert!(e2.value.norm() < 1e-13);
        let e = dirichlet_eta(c(1.0, 0.0), &tol).unwrap();
        assert!((e.value.re - std::f64::consts::LN_2).abs() < 1e-10);
    }

    #[test]
    fn eta_continuity_across_the_axis() {
        let tol = Tolerance::function_default();
        let a = dirichlet_eta(c(1e-9, 3.0), &tol).unwrap().value;
        let b = dirichlet_eta(c(-1e-9, 3.0), &tol).unwrap().value;
        assert!((a - b).norm() < 1e-8);
    }

    #[test]
    fn order_one_closed_form() {
        // 𝔉₀(μ) = ln(1 + e^μ)
        let tol = Tolerance::function_default();
        for mu in [0.3, 1.0, 2.0] {
            let r = fermi_dirac_taylor(c(1.0, 0.0), mu, &tol).unwrap();
            assert!(r.converged());
            let exact = (1.0 + f64::exp(mu)).ln();
            assert!((r.value.re - exact).abs() < 1e-10 * exact, "mu {mu}");
        }
    }

    #[test]
    fn integer_orders_hit_eta_zeros() {
        // 𝔉₁(μ) + 𝔉₁(−μ) = π²/6 + μ²/2
        let tol = Tolerance::function_default();
        let mu = 1.3;
        let plus = fermi_dirac_taylor(c(2.0, 0.0), mu, &tol).unwrap().value.re;
        let minus = super::super::efd_theta(c(2.0, 0.0), mu, ComplexScalar::default())
            .unwrap()
            .value
            .re;
        let expected = PI * PI / 6.0 + mu * mu / 2.0;
        assert!((plus + minus - expected).abs() < 1e-10);
    }
}
