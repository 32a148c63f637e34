use super::{ComplexScalar, EvalResult, Method, Tolerance, EPS};

/// Summation strategy for [`sum_series`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesMode {
    /// Plain summation with a geometric tail bound.
    Direct,
    /// Binomially averaged partial sums (Euler transform) at doubling depth.
    AlternatingAccelerated,
}

/// Neumaier-compensated complex accumulator.
#[derive(Debug, Clone, Copy, Default)]
pub struct NeumaierSum {
    re: (f64, f64),
    im: (f64, f64),
}

#[inline]
fn neumaier(acc: &mut (f64, f64), x: f64) {
    let (s, c) = *acc;
    let t = s + x;
    let c = if s.abs() >= x.abs() {
        c + ((s - t) + x)
    } else {
        c + ((x - t) + s)
    };
    *acc = (t, c);
}

impl NeumaierSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, z: ComplexScalar) {
        neumaier(&mut self.re, z.re);
        neumaier(&mut self.im, z.im);
    }

    pub fn value(&self) -> ComplexScalar {
        ComplexScalar::new(self.re.0 + self.re.1, self.im.0 + self.im.1)
    }
}

impl std::iter::FromIterator<ComplexScalar> for NeumaierSum {
    fn from_iter<I: IntoIterator<Item = ComplexScalar>>(iter: I) -> Self {
        let mut acc = NeumaierSum::new();
        for z in iter {
            acc.add(z);
        }
        acc
    }
}

/// Sums `Σ_{n≥0} term(n)`.
///
/// Direct mode stops once a term is below the target and the geometric
/// tail bound `|t_n|·r/(1−r)` (with `r` the larger of the last two term
/// ratios) is below it too. Alternating mode averages the partial sums
/// binomially at depths 16, 32, 64, … and reports the last increment as
/// the error. Hitting `tol.max_terms` returns the best estimate without the
/// converged flag.
pub fn sum_series<F>(term: F, tol: &Tolerance, mode: SeriesMode) -> EvalResult
where
    F: FnMut(usize) -> ComplexScalar,
{
    match mode {
        SeriesMode::Direct => sum_direct(term, tol),
        SeriesMode::AlternatingAccelerated => sum_alternating(term, tol),
    }
}

fn sum_direct<F>(mut term: F, tol: &Tolerance) -> EvalResult
where
    F: FnMut(usize) -> ComplexScalar,
{
    let mut acc = NeumaierSum::new();
    let mut prev = f64::INFINITY;
    let mut prev_ratio = f64::INFINITY;
    let mut tail = f64::INFINITY;
    let max_terms = tol.max_terms.max(3);
    for n in 0..max_terms {
        let t = term(n);
        acc.add(t);
        let a = t.norm();
        if !a.is_finite() {
            return EvalResult::new(acc.value(), f64::INFINITY, Method::Series, false);
        }
        let ratio = if prev > 0.0 && prev.is_finite() {
            a / prev
        } else if a == 0.0 {
            0.0
        } else {
            f64::INFINITY
        };
        let r = ratio.max(prev_ratio);
        tail = if r < 1.0 {
            a * r / (1.0 - r)
        } else {
            f64::INFINITY
        };
        let sum = acc.value();
        let thr = 0.5 * tol.target(sum.norm());
        if n >= 2 && a <= thr && tail <= thr {
            let err = tail + 2.0 * EPS * sum.norm();
            return EvalResult::new(sum, err, Method::Series, true);
        }
        prev_ratio = ratio;
        prev = a;
    }
    let sum = acc.value();
    let err = if tail.is_finite() { tail } else { prev * max_terms as f64 };
    EvalResult::new(sum, err + 2.0 * EPS * sum.norm(), Method::Series, false)
}

/// Binomial average `Σ C(N,j) S_j / 2^N` of `S_0..=S_N`.
fn euler_average(partial: &[ComplexScalar]) -> ComplexScalar {
    let n = partial.len() - 1;
    let mid = n / 2;
    let mut w = vec![0.0; n + 1];
    w[mid] = 1.0;
    for j in (mid + 1)..=n {
        w[j] = w[j - 1] * (n - j + 1) as f64 / j as f64;
    }
    for j in (0..mid).rev() {
        w[j] = w[j + 1] * (j + 1) as f64 / (n - j) as f64;
    }
    let norm: f64 = w.iter().sum();
    let acc: super::NeumaierSum = partial
        .iter()
        .zip(&w)
        .map(|(s, &wj)| *s * (wj / norm))
        .collect();
    acc.value()
}

fn sum_alternating<F>(mut term: F, tol: &Tolerance) -> EvalResult
where
    F: FnMut(usize) -> ComplexScalar,
{
    const START_DEPTH: usize = 16;
    let cap = tol.max_terms.clamp(2 * START_DEPTH, 1 << 14);
    let mut partial = Vec::with_capacity(2 * START_DEPTH + 1);
    let mut acc = NeumaierSum::new();
    let mut extend = |partial: &mut Vec<ComplexScalar>, upto: usize| {
        while partial.len() <= upto {
            acc.add(term(partial.len()));
            partial.push(acc.value());
        }
    };
    let mut depth = START_DEPTH;
    extend(&mut partial, depth);
    let mut current = euler_average(&partial[..=depth]);
    let mut increment = f64::INFINITY;
    while 2 * depth <= cap {
        extend(&mut partial, 2 * depth);
        let next = euler_average(&partial[..=2 * depth]);
        increment = (next - current).norm();
        depth *= 2;
        current = next;
        if !current.re.is_finite() || !current.im.is_finite() {
            break;
        }
        if increment <= 0.5 * tol.target(current.norm()) {
            let rounding = rounding_floor(&partial[..=depth], current);
            return EvalResult::new(current, increment + rounding, Method::Series, true);
        }
    }
    let rounding = rounding_floor(&partial[..=depth], current);
    EvalResult::new(current, increment + rounding, Method::Series, false)
}

fn rounding_floor(partial: &[ComplexScalar], value: ComplexScalar) -> f64 {
    let spread = partial
        .iter()
        .map(|s| (*s - value).norm())
        .fold(0.0_f64, f64::max);
    let scale = partial.iter().map(|s| s.norm()).fold(0.0_f64, f64::max);
    EPS * (4.0 * scale + partial.len() as f64 * spread)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{LN_2, PI};

    fn c(re: f64) -> ComplexScalar {
        ComplexScalar::new(re, 0.0)
    }

    #[test]
    fn geometric_series() {
        let tol = Tolerance::new(1e-14, 1e-15);
        let r = sum_series(|n| c(0.5_f64.powi(n as i32)), &tol, SeriesMode::Direct);
        assert!(r.converged());
        assert!((r.value.re - 2.0).abs() <= r.abs_err.max(1e-15));
        assert!((r.value.re - 2.0).abs() < 1e-14);
    }

    #[test]
    fn alternating_harmonic_series() {
        let tol = Tolerance::new(1e-13, 1e-15);
        let r = sum_series(
            |n| {
                let k = (n + 1) as f64;
                c(if n % 2 == 0 { 1.0 / k } else { -1.0 / k })
            },
            &tol,
            SeriesMode::AlternatingAccelerated,
        );
        assert!(r.converged());
        assert!((r.value.re - LN_2).abs() < 1e-13, "{}", r.value.re - LN_2);
        assert!((r.value.re - 0.693_147_180_6).abs() < 1e-10);
    }

    #[test]
    fn basel_series_slow_direct() {
        // Sub-geometric decay: the ratio-based tail is the weakest case.
        let tol = Tolerance::new(1e-6, 1e-9).with_max_terms(2_000_000);
        let r = sum_series(
            |n| c(1.0 / ((n + 1) as f64).powi(2)),
            &tol,
            SeriesMode::Direct,
        );
        let exact = PI * PI / 6.0;
        assert!(r.converged());
        let err = (r.value.re - exact).abs();
        assert!(err <= 10.0 * r.abs_err, "err {err} est {}", r.abs_err);
        assert!(err < 1e-5);
    }

    #[test]
    fn non_convergence_is_flagged() {
        let tol = Tolerance::new(1e-12, 1e-14).with_max_terms(100);
        let r = sum_series(|n| c(1.0 / (n + 1) as f64), &tol, SeriesMode::Direct);
        assert!(!r.converged());
    }

    #[test]
    fn complex_alternating_terms() {
        // Σ (-1)^n (n+1)^{-s} at s = 1/2 + 3i, cross-checked against a deeper run.
        let s = ComplexScalar::new(0.5, 3.0);
        let term = |n: usize| {
            let t = (-s * ((n + 1) as f64).ln()).exp();
            if n % 2 == 0 {
                t
            } else {
                -t
            }
        };
        let loose = sum_series(term, &Tolerance::new(1e-8, 1e-10), SeriesMode::AlternatingAccelerated);
        let tight = sum_series(term, &Tolerance::new(1e-14, 1e-15), SeriesMode::AlternatingAccelerated);
        assert!(tight.converged());
        assert!((loose.value - tight.value).norm() <= 10.0 * loose.abs_err);
    }
}
