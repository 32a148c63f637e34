#![allow(dead_code)]

use fdbe_zeta::numerics::ComplexScalar;
use fdbe_zeta::zeta_kernel::{FunctionId, FunctionParams, Kernel};
use rand::Rng;

pub fn c(re: f64, im: f64) -> ComplexScalar {
    ComplexScalar::new(re, im)
}

pub fn rel_err(got: ComplexScalar, want: ComplexScalar) -> f64 {
    (got - want).norm() / want.norm().max(1e-300)
}

/// An in-domain point of `f` where both evaluation paths are defined.
pub fn dual_path_point<R: Rng>(f: FunctionId, rng: &mut R) -> FunctionParams {
    let im = rng.gen_range(-25.0..25.0);
    let order = |rng: &mut R, lo: f64| c(rng.gen_range(lo..6.0), im);
    match f {
        FunctionId::Gamma | FunctionId::DirichletEtaFactor => FunctionParams::new(order(rng, 0.2)),
        FunctionId::RiemannZeta => loop {
            let s = order(rng, 0.1);
            if (s - 1.0).norm() > 0.2 {
                break FunctionParams::new(s);
            }
        },
        FunctionId::HurwitzZeta => {
            FunctionParams::new(order(rng, 1.1)).with_nu(c(rng.gen_range(0.1..5.0), 0.0))
        }
        FunctionId::LerchPhi | FunctionId::Polylog => {
            let r: f64 = rng.gen_range(0.05..0.98);
            let theta: f64 = rng.gen_range(-3.1..3.1);
            let p = FunctionParams::new(order(rng, 0.2))
                .with_z(c(r * theta.cos(), r * theta.sin()));
            if f == FunctionId::LerchPhi {
                p.with_nu(c(rng.gen_range(0.1..5.0), 0.0))
            } else {
                p
            }
        }
        FunctionId::FermiDirac => {
            FunctionParams::new(order(rng, 0.2)).with_mu(rng.gen_range(-5.0..5.0))
        }
        FunctionId::BoseEinstein => {
            FunctionParams::new(order(rng, 0.2)).with_mu(rng.gen_range(-5.0..-0.05))
        }
        FunctionId::EfdTheta => FunctionParams::new(order(rng, 0.2))
            .with_x(rng.gen_range(0.0..3.0))
            .with_nu(c(rng.gen_range(-0.9..4.0), 0.0)),
        FunctionId::EbePsi => FunctionParams::new(order(rng, 0.2))
            .with_x(rng.gen_range(0.05..3.0))
            .with_nu(c(rng.gen_range(-0.9..4.0), 0.0)),
    }
}

/// `|series − quadrature| ≤ 3·(err_series + err_quadrature)`, or the reason it fails.
pub fn dual_path_agrees(k: &Kernel, f: FunctionId, p: &FunctionParams) -> Result<(), String> {
    let a = k.evaluate(f, p).map_err(|e| format!("series: {e}"))?;
    let b = k.evaluate_quadrature(f, p).map_err(|e| format!("quadrature: {e}"))?;
    let diff = (a.value - b.value).norm();
    let budget = 3.0 * (a.abs_err + b.abs_err);
    if diff <= budget {
        Ok(())
    } else {
        Err(format!(
            "{f} at {p:?}: series {} quadrature {} diff {diff:.3e} > {budget:.3e}",
            a.value, b.value
        ))
    }
}
