//! Outer angular integration of an inner radial family over [0, 2 pi):
//! the iterated double integral, inner first, then the angular variable.
//!
//! The inner value blows up like |phi - phi*|^{-1/2} at the angular points
//! where the radial oscillation frequency crosses zero, and oscillates there
//! with phase ~ 1/|phi - phi*|. Each segment between singular points is
//! mapped by phi = phi* + L t^2, which turns the amplitude bounded; the
//! unresolvable chirp below t_cut is not integrated but bounded by the
//! smaller of its measure and a numerically estimated van-der-Corput bound.

use super::adaptive::{integrate_mesh, QuadResult};
use crate::error::{Error, Result};
use crate::types::ComplexScalar;
use num_complex::Complex64;
use std::sync::Mutex;

pub(crate) struct AngularSpec<'a> {
    /// phi -> (inner regularized value, inner error estimate)
    pub inner: &'a (dyn Fn(f64) -> Result<(ComplexScalar, f64)> + Sync),
    /// singular angles in [0, 2 pi), in any order.
    pub singular: Vec<f64>,
    /// relative target for the outer integral.
    pub tol: f64,
    /// chirp cutoff in the t chart.
    pub t_cut: f64,
}

const TWO_PI: f64 = 2.0 * std::f64::consts::PI;

pub(crate) fn angular_outer(spec: &AngularSpec) -> Result<QuadResult> {
    let failure: Mutex<Option<(f64, Error)>> = Mutex::new(None);
    let record = |phi: f64, e: Error| {
        let mut slot = failure.lock().unwrap();
        if slot.is_none() {
            *slot = Some((phi, e));
        }
    };
    let eval = |phi: f64| -> (Complex64, f64) {
        match (spec.inner)(phi.rem_euclid(TWO_PI)) {
            Ok((v, e)) => (v, e),
            Err(e) => {
                record(phi, e);
                (Complex64::new(f64::NAN, f64::NAN), f64::INFINITY)
            }
        }
    };

    let mut singular: Vec<f64> = spec.singular.iter().map(|p| p.rem_euclid(TWO_PI)).collect();
    singular.sort_by(|a, b| a.partial_cmp(b).unwrap());
    singular.dedup_by(|a, b| (*a - *b).abs() < 1e-12);

    let mut value = Complex64::new(0.0, 0.0);
    let mut err = 0.0;
    let mut evals = 0u64;
    let mut max_inner = 0.0f64;

    if singular.is_empty() {
        let mesh: Vec<f64> = (0..=32).map(|k| TWO_PI * k as f64 / 32.0).collect();
        let out = integrate_mesh(&eval, &mesh, spec.tol, 1e-13, 20_000);
        check_failure(&failure)?;
        if !out.converged {
            return Err(Error::SubdivisionLimit { err: out.err, tol: spec.tol });
        }
        return Ok(QuadResult {
            value: out.value,
            err_estimate: out.err + out.aux * TWO_PI,
            evaluations: out.evaluations,
        });
    }

    // segments between consecutive singular angles (wrapping)
    let n = singular.len();
    for i in 0..n {
        let l = singular[i];
        let r = if i + 1 < n { singular[i + 1] } else { singular[0] + TWO_PI };
        let m = 0.5 * (l + r);
        for (anchor, far) in [(l, m), (r, m)] {
            let (v, e, ne, mi) = singular_half(&eval, anchor, far, spec)?;
            check_failure(&failure)?;
            value += v;
            err += e;
            evals += ne;
            max_inner = max_inner.max(mi);
        }
    }
    check_failure(&failure)?;
    Ok(QuadResult { value, err_estimate: err + max_inner * TWO_PI, evaluations: evals })
}

fn check_failure(failure: &Mutex<Option<(f64, Error)>>) -> Result<()> {
    if let Some((phi, e)) = failure.lock().unwrap().take() {
        return Err(Error::InnerFailure { phi, source: Box::new(e) });
    }
    Ok(())
}

/// Integrate from the singular anchor towards `far` in the t^2 chart.
fn singular_half(
    eval: &(dyn Fn(f64) -> (Complex64, f64) + Sync),
    anchor: f64,
    far: f64,
    spec: &AngularSpec,
) -> Result<(Complex64, f64, u64, f64)> {
    let len = far - anchor; // signed
    let tc = spec.t_cut;
    // |len| keeps the sub-segment in increasing-phi orientation whichever
    // end the anchor is
    let g = |t: f64| {
        let (v, e) = eval(anchor + len * t * t);
        (v * 2.0 * len.abs() * t, e)
    };

    // estimate the chirp rate at the cutoff to size the mesh and the cut bound
    let (f0, _) = eval(anchor + len * tc * tc);
    let (f1, _) = eval(anchor + len * (tc * 1.06) * (tc * 1.06));
    let mut evals = 2u64;
    let dphase = {
        let d = (f1 / f0).arg().abs();
        (d / (0.06 * tc)).max(1.0)
    };
    // phase model Phi ~ P / t^2 => |Phi'(t)| = 2P/t^3
    let p_scale = dphase * tc * tc * tc / 2.0;

    // mesh with ~pi phase per panel under the model, uniform floor
    let mut mesh = vec![tc];
    let mut t = tc;
    while t < 1.0 {
        let local = (2.0 * p_scale / (t * t * t)).max(1e-9);
        let dt = (5.0 * std::f64::consts::PI / local).min(0.06);
        t += dt;
        if t < 1.0 {
            mesh.push(t);
        }
    }
    mesh.push(1.0);

    // the mesh already resolves the chirp; a small refinement budget guards
    // against model misestimates without chasing inner-integral noise
    let budget = mesh.len() + 24;
    let t0 = std::time::Instant::now();
    let out = integrate_mesh(&g, &mesh, spec.tol * 0.5, 1e-13, budget);
    if std::env::var_os("BESSELCX_TRACE").is_some() {
        eprintln!(
            "[angular] anchor {anchor:.3} mesh {} panels, {} inner calls, {:?}, dphase {dphase:.1}",
            mesh.len(),
            out.evaluations,
            t0.elapsed()
        );
    }
    evals += out.evaluations;
    let mut err = out.err;
    if !out.converged {
        err += out.err;
    }

    // unintegrated chirp below t_cut: measure bound vs van-der-Corput bound
    let amp = f0.norm() * 2.0 * len.abs() * tc;
    let measure_bound = 2.0 * len.abs() * tc * tc * f0.norm();
    let vdc_bound = 4.0 * amp / dphase.max(1e-9);
    err += measure_bound.min(vdc_bound);

    Ok((out.value, err, evals, out.aux))
}

/// Iterated double integral: regularized inner radial at each outer node,
/// adaptive outer over [0, 2 pi) with square-root treatment of the listed
/// singular angles. `inner` returns the inner value and its error estimate.
pub fn iterated_double(
    inner: &(dyn Fn(f64) -> Result<(ComplexScalar, f64)> + Sync),
    singular: &[f64],
    outer_tol: f64,
) -> Result<QuadResult> {
    let spec = AngularSpec { inner, singular: singular.to_vec(), tol: outer_tol, t_cut: 0.2 };
    angular_outer(&spec)
}
