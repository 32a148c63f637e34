use std::cmp::Ordering;
use std::collections::BinaryHeap;

use super::{ComplexScalar, EvalResult, Flags, Method, NeumaierSum, Tolerance, EPS};
use crate::error::{Error, Result};

// 15-point Kronrod abscissae (positive half) with the embedded 7-point
// Gauss rule on the odd-indexed nodes.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: ComplexScalar,
    err: f64,
    resabs: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.err
            .total_cmp(&other.err)
            .then_with(|| other.a.total_cmp(&self.a))
    }
}

fn gk15<F>(f: &F, a: f64, b: f64) -> Panel
where
    F: Fn(f64) -> ComplexScalar,
{
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut resk = fc * WGK[7];
    let mut resg = fc * WG[3];
    let mut resabs = fc.norm() * WGK[7];
    let mut fv1 = [ComplexScalar::default(); 7];
    let mut fv2 = [ComplexScalar::default(); 7];
    for j in 0..7 {
        let dx = half * XGK[j];
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        fv1[j] = f1;
        fv2[j] = f2;
        resk += (f1 + f2) * WGK[j];
        resabs += WGK[j] * (f1.norm() + f2.norm());
        if j % 2 == 1 {
            resg += (f1 + f2) * WG[j / 2];
        }
    }
    let mean = resk * 0.5;
    let mut resasc = WGK[7] * (fc - mean).norm();
    for j in 0..7 {
        resasc += WGK[j] * ((fv1[j] - mean).norm() + (fv2[j] - mean).norm());
    }
    let value = resk * half;
    let resabs = resabs * half.abs();
    let resasc = resasc * half.abs();
    let mut err = ((resk - resg) * half).norm();
    if resasc != 0.0 && err != 0.0 {
        err = resasc * (200.0 * err / resasc).powf(1.5).min(1.0);
    }
    if resabs > f64::MIN_POSITIVE / (50.0 * EPS) {
        err = err.max(50.0 * EPS * resabs);
    }
    if !value.re.is_finite() || !value.im.is_finite() {
        err = f64::INFINITY;
    }
    Panel {
        a,
        b,
        value,
        err,
        resabs,
    }
}

/// Raw outcome of an adaptive integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureOutcome {
    pub value: ComplexScalar,
    pub err: f64,
    pub resabs: f64,
    pub converged: bool,
}

/// Globally adaptive 15-point Gauss-Kronrod over the panels delimited by
/// the sorted `breakpoints`.
pub fn integrate_interval<F>(f: &F, breakpoints: &[f64], tol: &Tolerance) -> QuadratureOutcome
where
    F: Fn(f64) -> ComplexScalar,
{
    let mut heap: BinaryHeap<Panel> = breakpoints
        .windows(2)
        .filter(|w| w[1] > w[0])
        .map(|w| gk15(f, w[0], w[1]))
        .collect();
    if heap.is_empty() {
        return QuadratureOutcome {
            value: ComplexScalar::default(),
            err: 0.0,
            resabs: 0.0,
            converged: true,
        };
    }
    let totals = |heap: &BinaryHeap<Panel>| {
        let value: NeumaierSum = heap.iter().map(|p| p.value).collect();
        let err: f64 = heap.iter().map(|p| p.err).sum();
        (value.value(), err)
    };
    let (mut value, mut err) = totals(&heap);
    let mut converged = err <= tol.target(value.norm());
    let mut splits = 0;
    while !converged && splits < tol.max_subdivisions {
        let worst = heap.pop().expect("non-empty panel heap");
        let mid = 0.5 * (worst.a + worst.b);
        if !(mid > worst.a && mid < worst.b) || !worst.err.is_finite() {
            heap.push(worst);
            break;
        }
        let left = gk15(f, worst.a, mid);
        let right = gk15(f, mid, worst.b);
        value += left.value + right.value - worst.value;
        err += left.err + right.err - worst.err;
        heap.push(left);
        heap.push(right);
        splits += 1;
        if splits % 64 == 0 {
            (value, err) = totals(&heap);
        }
        converged = err <= tol.target(value.norm());
    }
    let mut panels = heap.into_vec();
    panels.sort_by(|p, q| p.a.total_cmp(&q.a));
    let value: NeumaierSum = panels.iter().map(|p| p.value).collect();
    let value = value.value();
    let err: f64 = panels.iter().map(|p| p.err).sum();
    let resabs: f64 = panels.iter().map(|p| p.resabs).sum();
    QuadratureOutcome {
        value,
        err,
        resabs,
        converged: converged || err <= tol.target(value.norm()),
    }
}

const SCAN_LIMIT: f64 = 4000.0;

struct Window {
    breakpoints: Vec<f64>,
    tail: f64,
    truncated: bool,
}

struct Scan {
    points: Vec<f64>,
    tail: f64,
    done: bool,
}

/// Walks from `y = 0` in direction `dir` until the integrand and its
/// extrapolated exponential tail both stay below `thr` on two consecutive
/// samples. Unit steps at first, then geometrically longer ones.
fn scan<G>(g: &G, g0: f64, dir: f64, thr: f64, endpoint: &'static str) -> Result<Scan>
where
    G: Fn(f64) -> ComplexScalar,
{
    let mut points = Vec::new();
    let mut prev = g0;
    let mut quiet = 0;
    let mut growing = 0;
    let mut y: f64 = 0.0;
    let mut step: f64 = 1.0;
    let mut last_rate = 0.0;
    while y.abs() < SCAN_LIMIT {
        y += dir * step;
        points.push(y);
        let a = g(y).norm();
        if a.is_nan() {
            return Err(Error::NonIntegrable { endpoint });
        }
        let rate = if a > 0.0 {
            (prev / a).ln() / step
        } else {
            f64::INFINITY
        };
        if y.abs() > 30.0 && a > 0.0 && !(rate > 1e-9) {
            growing += 1;
            if growing >= 3 || a.is_infinite() {
                return Err(Error::NonIntegrable { endpoint });
            }
        } else {
            growing = 0;
        }
        let tail = if a == 0.0 {
            0.0
        } else if rate > 0.0 {
            a / rate
        } else {
            f64::INFINITY
        };
        if a <= thr && tail <= thr {
            quiet += 1;
            if quiet >= 2 || a == 0.0 {
                return Ok(Scan {
                    points,
                    tail,
                    done: true,
                });
            }
        } else {
            quiet = 0;
        }
        prev = a;
        last_rate = rate;
        if points.len() >= 16 {
            step = (step * 1.25).min(32.0);
        }
    }
    let tail = if last_rate > 0.0 {
        prev / last_rate
    } else {
        f64::INFINITY
    };
    Ok(Scan {
        points,
        tail,
        done: false,
    })
}

fn find_window<G>(g: &G, thr: f64) -> Result<Window>
where
    G: Fn(f64) -> ComplexScalar,
{
    let g0 = g(0.0).norm();
    if g0.is_nan() {
        return Err(Error::NonIntegrable { endpoint: "t = 1" });
    }
    let right = scan(g, g0, 1.0, thr, "t = ∞")?;
    let left = scan(g, g0, -1.0, thr, "t = 0")?;
    let mut breakpoints: Vec<f64> = left.points.into_iter().rev().collect();
    breakpoints.push(0.0);
    breakpoints.extend(right.points);
    Ok(Window {
        breakpoints,
        tail: left.tail + right.tail,
        truncated: !(left.done && right.done),
    })
}

/// `∫_{−∞}^{∞} g(y) dy` for an integrand decaying exponentially (or faster)
/// in both directions; the truncation window is found by scanning.
pub fn integrate_log_domain<G>(g: G, tol: &Tolerance) -> Result<EvalResult>
where
    G: Fn(f64) -> ComplexScalar,
{
    let window = find_window(&g, tol.abs / 100.0)?;
    let outcome = integrate_interval(&g, &window.breakpoints, tol);
    let err = outcome.err + window.tail;
    let mut result = EvalResult::new(
        outcome.value,
        err,
        Method::Quadrature,
        outcome.converged && !window.truncated && tol.accepts(err, outcome.value.norm()),
    );
    if window.truncated {
        result = result.with_flag(Flags::TRUNCATED);
    }
    Ok(result)
}

/// `∫_0^∞ kernel(t) dt` via `t = e^y`.
///
/// An integrable power singularity at `t = 0` becomes exponential decay as
/// `y → −∞`; an integrand that keeps growing there is reported as
/// non-integrable at `t = 0`.
pub fn integrate_semi_infinite<K>(kernel: K, tol: &Tolerance) -> Result<EvalResult>
where
    K: Fn(f64) -> ComplexScalar,
{
    integrate_log_domain(
        |y| {
            let t = y.exp();
            if t == 0.0 {
                return ComplexScalar::default();
            }
            kernel(t) * t
        },
        tol,
    )
}

/// `∫ kernel(t) dt` along the ray `t = r·e^{iθ}`, `r ∈ (0, ∞)`.
pub fn integrate_ray<K>(kernel: K, theta: f64, tol: &Tolerance) -> Result<EvalResult>
where
    K: Fn(ComplexScalar) -> ComplexScalar,
{
    let dir = ComplexScalar::from_polar(1.0, theta);
    let r = integrate_log_domain(
        |y| {
            let radius = y.exp();
            if radius == 0.0 {
                return ComplexScalar::default();
            }
            kernel(dir * radius) * radius
        },
        tol,
    )?;
    Ok(r.scale(dir, 0.0))
}

/// Mellin transform `∫_0^∞ t^{s−1} h(t) dt` taken along the ray at angle
/// `theta`, valid when `h` is analytic in the sector between the real axis
/// and the ray and decays along it. Rotating with the sign of `Im s` damps
/// the oscillation of `t^{iτ}`.
pub fn mellin_ray<H>(s: ComplexScalar, h: H, theta: f64, tol: &Tolerance) -> Result<EvalResult>
where
    H: Fn(ComplexScalar) -> ComplexScalar,
{
    let phase = ComplexScalar::new(0.0, theta);
    let damp = (phase * s).exp();
    // Tolerances are for the final value; the rotated integral carries the
    // factor e^{iθs} separately.
    let inner_tol = tol.scaled(1.0 / damp.norm().max(f64::MIN_POSITIVE));
    let inner_tol = Tolerance {
        rel: tol.rel,
        ..inner_tol
    };
    let r = integrate_log_domain(
        |y| {
            let w = ComplexScalar::new(y, theta);
            let e = (s * y).exp();
            if e.norm() == 0.0 {
                return ComplexScalar::default();
            }
            e * h(w.exp())
        },
        &inner_tol,
    )?;
    Ok(r.scale(damp, 0.0))
}

const LINE_T_MAX: f64 = 400.0;

/// `∫_{−∞}^{∞} f(τ) dτ` truncated to `[−T, T]`, with `T` the first integer
/// where the caller's monotone tail bound drops below `tol.abs / 10`.
pub fn integrate_real_line<F, B>(f: F, decay_bound: B, tol: &Tolerance) -> EvalResult
where
    F: Fn(f64) -> ComplexScalar,
    B: Fn(f64) -> f64,
{
    let threshold = tol.abs / 10.0;
    let mut t_cut = 1.0;
    let mut tail = decay_bound(t_cut);
    while !(tail <= threshold) && t_cut < LINE_T_MAX {
        t_cut += 1.0;
        tail = decay_bound(t_cut);
    }
    let truncated = !(tail <= threshold);
    let n = t_cut as i64;
    let breakpoints: Vec<f64> = (-n..=n).map(|k| k as f64).collect();
    let outcome = integrate_interval(&f, &breakpoints, tol);
    let tail = if tail.is_finite() { tail } else { f64::INFINITY };
    let err = outcome.err + tail;
    let mut result = EvalResult::new(
        outcome.value,
        err,
        Method::Quadrature,
        outcome.converged && !truncated && tol.accepts(err, outcome.value.norm()),
    );
    if truncated {
        result = result.with_flag(Flags::TRUNCATED);
    }
    result
}
