use std::f64::consts::LN_2;

use super::gamma::gamma;
use crate::error::{Error, Result};
use crate::numerics::{
    sum_series, ComplexScalar, EvalResult, Flags, Method, NeumaierSum, SeriesMode, Tolerance, EPS,
};

// B_2, B_4, …, B_30
pub(crate) const BERNOULLI_EVEN: [f64; 15] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
];

/// `(n + a)^{−s}` on the principal branch.
#[inline]
pub(crate) fn pow_neg(base: ComplexScalar, s: ComplexScalar) -> ComplexScalar {
    (-s * base.ln()).exp()
}

/// Hurwitz `ζ(s, a) = Σ (n+a)^{−s}` by Euler–Maclaurin summation.
///
/// Valid for any `s ≠ 1` and `Re a > 0`; the caller enforces domains.
pub(crate) fn hurwitz_em(s: ComplexScalar, a: ComplexScalar) -> EvalResult {
    let n = (0.7 * (s.norm() + 24.0)).ceil().max(16.0) as usize;
    let mut acc = NeumaierSum::new();
    let mut mag = 0.0;
    for k in 0..n {
        let t = pow_neg(a + k as f64, s);
        mag += t.norm();
        acc.add(t);
    }
    let w = a + n as f64;
    let ws = pow_neg(w, s);
    let one = ComplexScalar::new(1.0, 0.0);
    acc.add(ws * w / (s - one));
    acc.add(ws * 0.5);
    // (s)_{2k−1}·w^{−s−2k+1}·B_{2k}/(2k)!
    let inv_w2 = 1.0 / (w * w);
    let mut poch = s;
    let mut wpow = ws / w;
    let mut fact = 2.0;
    let mut last = f64::INFINITY;
    for (k, b) in BERNOULLI_EVEN.iter().enumerate() {
        let k = k + 1;
        let term = poch * wpow * (*b / fact);
        acc.add(term);
        last = term.norm();
        if last <= EPS * 1e-2 * acc.value().norm() {
            break;
        }
        let m = 2.0 * k as f64;
        poch *= (s + (m - 1.0)) * (s + m);
        wpow *= inv_w2;
        fact *= (m + 1.0) * (m + 2.0);
    }
    let value = acc.value();
    let err = last + 4.0 * EPS * (mag + value.norm());
    let converged = value.re.is_finite() && value.im.is_finite();
    EvalResult::new(value, err, Method::Series, converged)
}

/// `1 − 2^{1−s}`, principal branch.
pub(crate) fn eta_coefficient(s: ComplexScalar) -> ComplexScalar {
    let e = (ComplexScalar::new(1.0, 0.0) - s) * LN_2;
    -crate::numerics::exp_m1(e)
}

pub(crate) fn check_zeta_domain(s: ComplexScalar) -> Result<()> {
    if !(s.re > 0.0) {
        return Err(Error::domain("riemann_zeta", "Re(s) > 0"));
    }
    if (s - 1.0).norm() < 1e-4 {
        return Err(Error::pole("riemann_zeta", "s = 1"));
    }
    Ok(())
}

const ETA_TAU_LIMIT: f64 = 12.0;

/// Riemann ζ(s) for `Re s > 0`, `s ≠ 1`.
pub(crate) fn riemann_zeta(s: ComplexScalar, tol: &Tolerance) -> Result<EvalResult> {
    check_zeta_domain(s)?;
    if s.re > 1.0 {
        return Ok(hurwitz_em(s, ComplexScalar::new(1.0, 0.0)));
    }
    let factor = eta_coefficient(s);
    if factor.norm() < 1e-6 {
        return Ok(hurwitz_em(s, ComplexScalar::new(1.0, 0.0)).with_flag(Flags::NEAR_SINGULARITY));
    }
    if s.im.abs() > ETA_TAU_LIMIT {
        return Ok(hurwitz_em(s, ComplexScalar::new(1.0, 0.0)));
    }
    let inner = tol.scaled(factor.norm().min(1.0));
    let eta = sum_series(
        |n| {
            let t = pow_neg(ComplexScalar::new((n + 1) as f64, 0.0), s);
            if n % 2 == 0 {
                t
            } else {
                -t
            }
        },
        &inner,
        SeriesMode::AlternatingAccelerated,
    );
    if !eta.converged() {
        return Ok(hurwitz_em(s, ComplexScalar::new(1.0, 0.0)));
    }
    Ok(eta.div(EvalResult::new(factor, EPS * factor.norm(), Method::Series, true)))
}

/// `C(s) = Γ(s)(1 − 2^{1−s})`.
pub(crate) fn eta_factor(s: ComplexScalar) -> Result<EvalResult> {
    let g = gamma(s)?;
    let f = eta_coefficient(s);
    Ok(g.mul(EvalResult::new(f, 2.0 * EPS * f.norm(), Method::ClosedForm, true)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn c(re: f64) -> ComplexScalar {
        ComplexScalar::new(re, 0.0)
    }

    /// Direct partial sum with the integral tail bracketed by its midpoint.
    fn zeta_direct(s: f64, n: usize) -> f64 {
        let head: f64 = (1..=n).rev().map(|k| (k as f64).powf(-s)).sum();
        let nn = n as f64;
        head + nn.powf(1.0 - s) / (s - 1.0) - 0.5 * nn.powf(-s) + s * nn.powf(-s - 1.0) / 12.0
    }

    #[test]
    fn euler_maclaurin_values() {
        let tol = Tolerance::function_default();
        let z2 = riemann_zeta(c(2.0), &tol).unwrap();
        assert!((z2.value.re - PI * PI / 6.0).abs() < 1e-15);
        let z3 = riemann_zeta(c(3.0), &tol).unwrap();
        assert!((z3.value.re - zeta_direct(3.0, 20_000)).abs() < 1e-13);
        assert!((z3.value.re - 1.202_056_903_2).abs() < 1e-10);
    }

    #[test]
    fn critical_strip() {
        let tol = Tolerance::function_default();
        let z = riemann_zeta(c(0.5), &tol).unwrap();
        assert!(z.converged());
        assert!((z.value.re + 1.460_354_508_8).abs() < 1e-10);
        // the eta route and Euler–Maclaurin continuation agree
        let s = ComplexScalar::new(0.3, 7.0);
        let a = riemann_zeta(s, &tol).unwrap();
        let b = hurwitz_em(s, c(1.0));
        assert!((a.value - b.value).norm() < 1e-10);
    }

    #[test]
    fn first_nontrivial_zero() {
        let s = ComplexScalar::new(0.5, 14.134_725_141_734_693);
        let z = riemann_zeta(s, &Tolerance::function_default()).unwrap();
        assert!(z.value.norm() < 1e-12);
    }

    #[test]
    fn pole_and_eta_zero() {
        let tol = Tolerance::function_default();
        assert!(matches!(riemann_zeta(c(1.0), &tol), Err(Error::Pole { .. })));
        assert!(matches!(riemann_zeta(c(-0.5), &tol), Err(Error::Domain { .. })));
        let s = ComplexScalar::new(1.0, 2.0 * PI / LN_2);
        let z = riemann_zeta(s, &tol).unwrap();
        assert!(z.flags.contains(Flags::NEAR_SINGULARITY));
    }

    #[test]
    fn hurwitz_shifts() {
        let a = hurwitz_em(c(2.0), c(2.0));
        assert!((a.value.re - (PI * PI / 6.0 - 1.0)).abs() < 1e-14);
        let h = hurwitz_em(c(3.0), c(0.5));
        let z3 = hurwitz_em(c(3.0), c(1.0));
        assert!((h.value.re - 7.0 * z3.value.re).abs() < 1e-13);
        assert!((h.value.re - 8.414_398_322_4).abs() < 1e-9);
    }

    #[test]
    fn eta_factor_values() {
        for (s, v) in [(2.0, 0.5), (1.0, 0.0), (3.0, 1.5)] {
            let r = eta_factor(c(s)).unwrap();
            assert!((r.value.re - v).abs() < 1e-14, "s = {s}");
        }
    }
}
