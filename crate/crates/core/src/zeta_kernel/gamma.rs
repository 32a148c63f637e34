use std::f64::consts::{LN_2, PI};

use super::zeta::BERNOULLI_EVEN;
use crate::error::{Error, Result};
use crate::numerics::{ComplexScalar, EvalResult, Method, EPS};

const GAMMA_R: f64 = 10.900511;
const GAMMA_DK: [f64; 11] = [
    2.485_740_891_387_535_655_46e-5,
    1.051_423_785_817_219_742_10,
    -3.456_870_972_220_162_354_69,
    4.512_277_094_668_948_237_00,
    -2.982_852_253_235_766_557_21,
    1.056_397_115_771_267_130_77,
    -1.954_287_731_916_458_695_83e-1,
    1.709_705_434_044_412_243_07e-2,
    -5.719_261_174_043_057_812_83e-4,
    4.633_994_733_599_056_367_08e-6,
    -2.719_949_084_886_077_039_10e-9,
];
// ln(2·√(e/π))
const LN_2_SQRT_E_OVER_PI: f64 = 0.620_782_237_635_245_2;

fn is_pole(s: ComplexScalar) -> bool {
    s.im == 0.0 && s.re <= 0.0 && s.re == s.re.floor()
}

/// Stirling series, accurate for `|s| ≥ 10` off the negative axis.
fn ln_gamma_stirling(s: ComplexScalar) -> ComplexScalar {
    let mut acc = (s - 0.5) * s.ln() - s + 0.5 * (2.0 * PI).ln();
    let inv = 1.0 / s;
    let inv2 = inv * inv;
    let mut p = inv;
    for (k, b) in BERNOULLI_EVEN.iter().enumerate() {
        let m = 2.0 * (k + 1) as f64;
        let term = p * (*b / (m * (m - 1.0)));
        acc += term;
        if term.norm() < 1e-18 * acc.norm() {
            break;
        }
        p *= inv2;
    }
    acc
}

/// `ln Γ(s)` for `Re s ≥ 1/2`: Lanczos near the origin, Stirling beyond
/// `|s| = 10` where the Lanczos sum starts to cancel.
fn ln_gamma_right(s: ComplexScalar) -> ComplexScalar {
    if s.norm() >= 10.0 {
        return ln_gamma_stirling(s);
    }
    let mut sum = ComplexScalar::new(GAMMA_DK[0], 0.0);
    for (k, &d) in GAMMA_DK.iter().enumerate().skip(1) {
        sum += d / (s + (k as f64 - 1.0));
    }
    let shifted = s - 0.5;
    sum.ln() + LN_2_SQRT_E_OVER_PI + shifted * ((shifted + GAMMA_R).ln() - 1.0)
}

/// `ln sin(πs)` without overflow for large `|Im s|`.
fn ln_sin_pi(s: ComplexScalar) -> ComplexScalar {
    let i = ComplexScalar::i();
    if s.im.abs() < 1.0 {
        return (s * PI).sin().ln();
    }
    // sin(πs) = e^{∓iπs}·(1 − e^{±2iπs})/(±2i), the upper sign for Im s > 0
    if s.im > 0.0 {
        let e = (i * s * (2.0 * PI)).exp();
        -i * PI * s + ComplexScalar::new(-LN_2, PI / 2.0) + crate::numerics::ln_1p(-e)
    } else {
        let e = (-i * s * (2.0 * PI)).exp();
        i * PI * s + ComplexScalar::new(-LN_2, -PI / 2.0) + crate::numerics::ln_1p(-e)
    }
}

/// `ln Γ(s)` on some branch; `exp` of it is `Γ(s)`.
pub fn ln_gamma(s: ComplexScalar) -> Result<ComplexScalar> {
    if is_pole(s) {
        return Err(Error::pole("gamma", format!("s = {}", s.re)));
    }
    if s.re >= 0.5 {
        Ok(ln_gamma_right(s))
    } else {
        Ok(ComplexScalar::new(PI.ln(), 0.0) - ln_sin_pi(s) - ln_gamma_right(1.0 - s))
    }
}

/// Γ(s) by a fixed Lanczos approximation, with reflection for `Re s < 1/2`.
pub fn gamma(s: ComplexScalar) -> Result<EvalResult> {
    let lg = ln_gamma(s)?;
    let value = lg.exp();
    if !value.re.is_finite() || !value.im.is_finite() {
        return Err(Error::Overflow {
            context: format!("gamma({s})"),
        });
    }
    let rel = 4.0 * EPS * (lg.norm() + 8.0);
    Ok(EvalResult::new(value, rel * value.norm(), Method::ClosedForm, true))
}
