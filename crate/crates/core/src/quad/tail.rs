//! Tails of oscillatory integrals with power-law envelopes, and the
//! cosh-substituted evaluation of inverse-square-root-singular integrals on
//! (1, inf).
//!
//! A "wave" is `amp(x) e^{i omega x}` with `|amp| ~ C x^{-p}` and slowly
//! varying phase; its tail is integrated up to a cutoff chosen from the
//! smaller of the envelope bound and the van-der-Corput bound
//! `4 |amp(X)| / |omega|`, so the panel count stays bounded uniformly in
//! omega -- including omega = 0, where the envelope alone decides.

use super::adaptive::{integrate_mesh, QuadResult};
use super::regularized::{build_mesh, regularized_radial, RadialSpec, RegularizationSchedule};
use crate::error::{Error, Result};
use crate::types::ComplexScalar;
use num_complex::Complex64;

pub(crate) struct WaveSpec<'a> {
    /// slowly varying complex amplitude, envelope included.
    pub amp: Box<dyn Fn(f64) -> Complex64 + Sync + 'a>,
    /// linear phase rate (radians per x).
    pub omega: f64,
    /// envelope power p in |amp| ~ C x^{-p}; must exceed 1.
    pub envelope_power: f64,
}

/// integral over [x1, inf) of amp(x) e^{i omega x} dx.
pub(crate) fn wave_tail(w: &WaveSpec, x1: f64, abs_tol: f64) -> Result<QuadResult> {
    let p = w.envelope_power;
    if !(p > 1.05) {
        return Err(Error::InvalidConfig(format!("wave envelope power {p} too shallow")));
    }
    let a1 = (w.amp)(x1).norm();
    let a2 = (w.amp)(1.6 * x1).norm();
    let c_env = (a1 * x1.powf(p)).max(a2 * (1.6 * x1).powf(p)).max(1e-300);
    let budget = (abs_tol * 0.5).max(1e-15);
    let x_env = (2.0 * c_env / ((p - 1.0) * budget)).powf(1.0 / (p - 1.0));
    let x_cut = if w.omega != 0.0 {
        let x_vdc = (8.0 * c_env / (w.omega.abs() * budget)).powf(1.0 / p);
        x_env.min(x_vdc)
    } else {
        x_env
    };
    let x_cut = x_cut.clamp(x1 * 1.0001, 1e18);

    let f = |x: f64| ((w.amp)(x) * Complex64::new(0.0, w.omega * x).exp(), 0.0);
    let mesh = build_mesh(x1, x_cut, |x| {
        let rate = w.omega.abs() + 1e-9;
        (std::f64::consts::PI / rate).min(0.5 * x)
    });
    let out = integrate_mesh(&f, &mesh, 1e-10, budget * 0.1, 400_000);

    let at_cut = (w.amp)(x_cut).norm();
    let tail_env = at_cut * x_cut / (p - 1.0);
    let tail_bound = if w.omega != 0.0 { tail_env.min(4.0 * at_cut / w.omega.abs()) } else { tail_env };
    let mut err = out.err + tail_bound;
    if !out.converged {
        err += out.err;
    }
    Ok(QuadResult { value: out.value, err_estimate: err, evaluations: out.evaluations + 3 })
}

/// integral over (1, inf) of g(x) cos(c sqrt(x^2-1)) / sqrt(x^2-1) dx.
///
/// The x = cosh u substitution removes the endpoint singularity exactly; the
/// head [0, u1] is integrated adaptively in u and the remaining x-tail by the
/// damping/extrapolation engine (the integrand oscillation puts the relevant
/// branch points at +-(a-c) and +-(a+c), passed along for mesh and schedule
/// control). `a` is the linear phase rate of g; `u_max` caps the head.
pub fn cosh_substituted_tail(
    g: &(dyn Fn(f64) -> ComplexScalar + Sync),
    c: f64,
    a: f64,
    u_max: f64,
    tol: f64,
) -> Result<QuadResult> {
    if !(u_max > 0.1) {
        return Err(Error::TailBoundExceeded { bound: f64::INFINITY, tol });
    }
    // head length: keep the resolved oscillation count ~ a few hundred panels
    let rate = a.abs() + c.abs() + 0.5;
    let u1 = u_max.min((600.0 * std::f64::consts::PI / rate).asinh());
    let head = |u: f64| {
        let x = u.cosh();
        (g(x) * (c * u.sinh()).cos() / 1.0, 0.0)
    };
    let mesh = build_mesh(0.0, u1, |u| {
        let dphase = rate * u.cosh() + 1e-9;
        (std::f64::consts::PI / dphase).min(0.25)
    });
    let out = integrate_mesh(&head, &mesh, (tol / 10.0).clamp(1e-12, 1e-7), 1e-14, 200_000);
    let mut value = out.value;
    let mut err = out.err;
    let mut evals = out.evaluations;

    // x-space tail from x1 = cosh u1
    let x1 = u1.cosh();
    let tail_g = move |x: f64| {
        if x * x <= 1.0 {
            return Complex64::new(0.0, 0.0);
        }
        let r = (x * x - 1.0).sqrt();
        g(x) * (c * r).cos() / r
    };
    let freqs = [a - c, a + c];
    let radius = freqs
        .iter()
        .map(|f| f.abs())
        .filter(|f| *f > 1e-9)
        .fold(f64::INFINITY, f64::min);
    let tail = if radius.is_finite() {
        // oscillatory tail: damped members are analytic in eps with the
        // branch points at the wave frequencies
        let spec = RadialSpec {
            g: &tail_g,
            freq: 0.0,
            sqrt_osc: 0.0,
            extra_freq: a.abs() + c.abs(),
            analyticity_radius: radius,
            phase_step: std::f64::consts::PI,
            support_start: x1,
            tol: (tol * 0.3).max(1e-10),
        };
        regularized_radial(&spec, &RegularizationSchedule::default())?
    } else {
        // nothing oscillates: plain power-envelope tail
        let p_est = {
            let g1 = tail_g(x1).norm().max(1e-300);
            let g2 = tail_g(2.0 * x1).norm().max(1e-300);
            ((g1 / g2).ln() / std::f64::consts::LN_2).clamp(1.2, 6.0)
        };
        let w = WaveSpec { amp: Box::new(tail_g), omega: 0.0, envelope_power: p_est };
        wave_tail(&w, x1, (tol * 0.3).max(1e-12))?
    };
    value += tail.value;
    err += tail.err_estimate;
    evals += tail.evaluations;
    Ok(QuadResult { value, err_estimate: err, evaluations: evals })
}

/// Head-plus-waves form used by the identity layer: adaptive head in the
/// u chart up to u1, then explicit wave tails from x1 = cosh u1.
pub(crate) fn cosh_tail_with_waves(
    head: &(dyn Fn(f64) -> ComplexScalar + Sync),
    u1: f64,
    head_phase_rate: f64,
    waves: &[WaveSpec<'_>],
    abs_tol: f64,
) -> Result<QuadResult> {
    let mesh = build_mesh(0.0, u1, |u| {
        let dphase = head_phase_rate * u.cosh() + 1e-9;
        (std::f64::consts::PI / dphase).min(0.25)
    });
    let wrapped = |u: f64| (head(u), 0.0);
    let out = integrate_mesh(&wrapped, &mesh, 1e-10, abs_tol * 0.2, 400_000);
    let mut value = out.value;
    let mut err = out.err;
    let mut evals = out.evaluations;
    if !out.converged {
        err += out.err;
    }
    let x1 = u1.cosh();
    let per_wave = abs_tol * 0.8 / waves.len().max(1) as f64;
    for w in waves {
        let t = wave_tail(w, x1, per_wave)?;
        value += t.value;
        err += t.err_estimate;
        evals += t.evaluations;
    }
    Ok(QuadResult { value, err_estimate: err, evaluations: evals })
}
