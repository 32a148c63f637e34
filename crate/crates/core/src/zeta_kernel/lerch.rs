use std::f64::consts::FRAC_PI_2;

use super::gamma::gamma;
use super::zeta::{hurwitz_em, pow_neg};
use crate::error::{Error, Result};
use crate::numerics::{
    exp_m1, mellin_ray, sum_series, ComplexScalar, EvalResult, Method, SeriesMode, Tolerance, EPS,
};

pub(crate) fn one() -> ComplexScalar {
    ComplexScalar::new(1.0, 0.0)
}

pub(crate) fn check_lerch_domain(
    function: &'static str,
    z: ComplexScalar,
    s: ComplexScalar,
    a: ComplexScalar,
) -> Result<()> {
    if !(a.re > 0.0) {
        return Err(Error::domain(function, "Re(a) > 0"));
    }
    if z.norm() > 1.0 + 4.0 * EPS {
        let cond = if z.im == 0.0 && z.re > 1.0 {
            "z off the cut [1, ∞)"
        } else {
            "|z| ≤ 1"
        };
        return Err(Error::domain(function, cond));
    }
    if z == one() {
        if !(s.re > 1.0) {
            return Err(Error::domain(function, "Re(s) > 1 when z = 1"));
        }
    } else if !(s.re > 0.0) {
        return Err(Error::domain(function, "Re(s) > 0"));
    }
    Ok(())
}

/// `Φ(z, s, a)` by series, domain already checked. `delta` is the distance
/// from the unit circle below which the plain power series is used.
pub(crate) fn lerch_series(
    z: ComplexScalar,
    s: ComplexScalar,
    a: ComplexScalar,
    delta: f64,
    tol: &Tolerance,
) -> Result<EvalResult> {
    if z == ComplexScalar::default() {
        return Ok(EvalResult::exact(pow_neg(a, s)));
    }
    if z == one() {
        return Ok(hurwitz_em(s, a));
    }
    if z.norm() <= 1.0 - delta {
        let mut zn = one();
        let r = sum_series(
            |n| {
                let t = zn * pow_neg(a + n as f64, s);
                zn *= z;
                t
            },
            tol,
            SeriesMode::Direct,
        );
        return Ok(r);
    }
    if z == -one() && (s - one()).norm() > 1e-2 {
        // Φ(−1, s, a) = 2^{−s}[ζ(s, a/2) − ζ(s, (a+1)/2)]
        let p = hurwitz_em(s, a * 0.5);
        let q = hurwitz_em(s, (a + 1.0) * 0.5);
        let two = pow_neg(ComplexScalar::new(2.0, 0.0), s);
        let r = p.sub(q).scale(two, 2.0 * EPS);
        let r = EvalResult {
            method: Method::Series,
            ..r
        };
        if r.converged() {
            return Ok(r);
        }
    }
    if z.re < 0.0 {
        let w = -z;
        let mut wn = one();
        let r = sum_series(
            |n| {
                let t = wn * pow_neg(a + n as f64, s);
                wn *= w;
                if n % 2 == 0 {
                    t
                } else {
                    -t
                }
            },
            tol,
            SeriesMode::AlternatingAccelerated,
        );
        if r.converged() {
            return Ok(r);
        }
    }
    lerch_quadrature(z, s, a, tol)
}

/// `e^{−a t}/(1 − z e^{−t})`, the Mellin kernel of Φ(z, ·, a).
pub(crate) fn lerch_kernel(z: ComplexScalar, a: ComplexScalar, t: ComplexScalar) -> ComplexScalar {
    let num = (-a * t).exp();
    if num == ComplexScalar::default() {
        return num;
    }
    let den = (one() - z) - z * exp_m1(-t);
    num / den
}

/// Largest safe rotation for a kernel decaying like `e^{−a t}`.
pub(crate) fn rotation_limit(a: ComplexScalar) -> f64 {
    (FRAC_PI_2 - 0.2 - a.arg().abs()).max(0.0)
}

/// Rotation angle for a Mellin integral at `s`: only once `|Im s|` is large
/// enough for the `t^{iτ}` oscillation to matter, and toward its sign.
pub(crate) fn rotation_for(s: ComplexScalar, limit: f64) -> f64 {
    if s.im.abs() > 1.0 {
        limit.copysign(s.im)
    } else {
        0.0
    }
}

/// `(1/Γ(s))·∫ t^{s−1} h(t) dt` with the absolute target scaled to `Γ(s)`.
pub(crate) fn normalized_mellin<H>(
    s: ComplexScalar,
    h: H,
    limit: f64,
    tol: &Tolerance,
) -> Result<EvalResult>
where
    H: Fn(ComplexScalar) -> ComplexScalar,
{
    let g = gamma(s)?;
    let inner = Tolerance {
        abs: tol.abs * g.value.norm(),
        ..*tol
    };
    let r = mellin_ray(s, h, rotation_for(s, limit), &inner)?;
    Ok(r.div(g))
}

/// `Φ(z, s, a)` by quadrature of its Mellin representation.
pub(crate) fn lerch_quadrature(
    z: ComplexScalar,
    s: ComplexScalar,
    a: ComplexScalar,
    tol: &Tolerance,
) -> Result<EvalResult> {
    normalized_mellin(s, |t| lerch_kernel(z, a, t), rotation_limit(a), tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{LN_2, PI};

    fn c(re: f64) -> ComplexScalar {
        ComplexScalar::new(re, 0.0)
    }

    #[test]
    fn zero_argument() {
        let s = ComplexScalar::new(1.5, 0.5);
        let a = c(2.5);
        let r = lerch_series(c(0.0), s, a, 0.05, &Tolerance::function_default()).unwrap();
        assert!((r.value - pow_neg(a, s)).norm() < 1e-15);
    }

    #[test]
    fn half_dilogarithm() {
        let tol = Tolerance::function_default();
        let r = lerch_series(c(0.5), c(2.0), c(1.0), 0.05, &tol).unwrap();
        let oracle: f64 = (0..60).map(|n| 0.5f64.powi(n) / ((n + 1) as f64).powi(2)).sum();
        assert!((r.value.re - oracle).abs() < 1e-10);
        let closed = PI * PI / 6.0 - LN_2 * LN_2;
        assert!((r.value.re - closed).abs() < 1e-10);
        assert!((r.value.re - 1.164_481_053_0).abs() < 1e-9);
        let q = lerch_quadrature(c(0.5), c(2.0), c(1.0), &tol).unwrap();
        assert!((q.value.re - closed).abs() < 1e-10);
    }

    #[test]
    fn minus_one_routes_agree() {
        let tol = Tolerance::function_default();
        let s = ComplexScalar::new(0.7, 3.0);
        let a = c(1.3);
        let h = lerch_series(-one(), s, a, 0.05, &tol).unwrap();
        let q = lerch_quadrature(-one(), s, a, &tol).unwrap();
        assert!((h.value - q.value).norm() < 1e-9);
        // near-circle alternating branch
        let z = c(-0.97);
        let h = lerch_series(z, s, a, 0.05, &tol).unwrap();
        let q = lerch_quadrature(z, s, a, &tol).unwrap();
        assert!(h.method == Method::Series);
        assert!((h.value - q.value).norm() < 1e-9);
    }

    #[test]
    fn rotated_quadrature_far_up() {
        let tol = Tolerance::function_default();
        let s = ComplexScalar::new(1.2, 30.0);
        let z = c(0.6);
        let a = c(1.5);
        let h = lerch_series(z, s, a, 0.05, &tol).unwrap();
        let q = lerch_quadrature(z, s, a, &tol).unwrap();
        assert!((h.value - q.value).norm() < 1e-9 * h.value.norm().max(1.0));
    }

    #[test]
    fn cut_rejected() {
        let e = check_lerch_domain("lerch_phi", c(2.0), c(2.0), c(1.0)).unwrap_err();
        assert!(e.to_string().contains("cut"));
        assert!(check_lerch_domain("lerch_phi", c(1.0), c(1.0), c(1.0)).is_err());
        assert!(check_lerch_domain("lerch_phi", c(0.5), c(2.0), c(-1.0)).is_err());
    }
}
