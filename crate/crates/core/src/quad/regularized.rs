//! Regularized evaluation of conditionally convergent Fourier-type radial
//! integrals on [0, inf):
//!
//!   lim_{eps -> 0+} int_0^inf g(x) e^{-eps x} e(freq * x) dx,
//!
//! by damping with a geometric eps schedule, truncating each absolutely
//! convergent damped integral at T(eps) = max(50, 20/eps), and extrapolating
//! the sequence to eps = 0 with a Neville table (the damped value is analytic
//! in eps at 0 whenever freq != 0, with radius ~ 2 pi |freq|, so the schedule
//! start is capped accordingly).

use super::adaptive::{integrate_mesh, QuadResult};
use crate::error::{Error, Result};
use crate::par;
use crate::types::ComplexScalar;
use num_complex::Complex64;

/// Damping/truncation/extrapolation parameters.
#[derive(Clone, Copy, Debug)]
pub struct RegularizationSchedule {
    pub eps_start: f64,
    pub eps_ratio: f64,
    pub eps_steps: u32,
    pub richardson_depth: u32,
}

impl Default for RegularizationSchedule {
    fn default() -> Self {
        RegularizationSchedule { eps_start: 0.5, eps_ratio: 0.5, eps_steps: 12, richardson_depth: 4 }
    }
}

impl RegularizationSchedule {
    pub fn truncation(&self, eps: f64) -> f64 {
        (20.0 / eps).max(50.0)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.eps_start > 0.0 && self.eps_ratio > 0.0 && self.eps_ratio < 1.0) {
            return Err(Error::InvalidConfig("eps_start > 0 and eps_ratio in (0,1) required".into()));
        }
        if self.eps_steps < 3 {
            return Err(Error::InvalidConfig("eps_steps must be at least 3".into()));
        }
        // floor guarding catastrophic cancellation in the damped integrals
        if self.eps_start * self.eps_ratio.powi(self.eps_steps as i32) <= 1e-6 {
            return Err(Error::InvalidConfig(
                "schedule floor too small: eps_start * ratio^steps must exceed 1e-6".into(),
            ));
        }
        Ok(())
    }

    fn members(&self) -> Vec<f64> {
        (0..self.eps_steps).map(|k| self.eps_start * self.eps_ratio.powi(k as i32)).collect()
    }
}

/// Rich description of the radial integrand for the engine.
pub(crate) struct RadialSpec<'a> {
    pub g: &'a (dyn Fn(f64) -> Complex64 + Sync),
    /// e(freq x) factor, signed.
    pub freq: f64,
    /// bound on the |e^{i beta sqrt x}| phase content of g itself.
    pub sqrt_osc: f64,
    /// linear-phase content of g itself (radians per x), mesh control only.
    pub extra_freq: f64,
    /// override for the eps-analyticity radius (0: derive from freq).
    pub analyticity_radius: f64,
    /// phase advance per mesh panel, radians (pi = half period of e(cx)).
    pub phase_step: f64,
    /// integral starts here (0 for the full half-line).
    pub support_start: f64,
    /// relative tolerance for the extrapolated value.
    pub tol: f64,
}

/// The regularized Fourier-radial integral of the spec'd form
/// `lim int_0^inf g(x) e^{-eps x} e(sign c x) dx`, c > 0.
pub fn regularized_fourier_radial(
    g: &(dyn Fn(f64) -> ComplexScalar + Sync),
    c: f64,
    sign: i32,
    sched: &RegularizationSchedule,
) -> Result<QuadResult> {
    if !(c > 0.0) {
        return Err(Error::Precondition(format!("oscillation frequency must be positive (got {c})")));
    }
    let spec = RadialSpec {
        g,
        freq: if sign >= 0 { c } else { -c },
        sqrt_osc: 0.0,
        extra_freq: 0.0,
        analyticity_radius: 0.0,
        phase_step: std::f64::consts::PI,
        support_start: 0.0,
        tol: 1e-9,
    };
    regularized_radial(&spec, sched)
}

pub(crate) fn regularized_radial(spec: &RadialSpec, sched: &RegularizationSchedule) -> Result<QuadResult> {
    sched.validate()?;
    // keep the whole schedule inside the analyticity disk |eps| < 2 pi |freq|
    let mut s = *sched;
    let radius = if spec.analyticity_radius > 0.0 {
        spec.analyticity_radius
    } else {
        2.0 * std::f64::consts::PI * spec.freq.abs()
    };
    if radius > 0.0 && s.eps_start > radius / 6.0 {
        s.eps_start = radius / 6.0;
        while s.eps_start * s.eps_ratio.powi(s.eps_steps as i32) < 1e-9 && s.eps_steps > 5 {
            s.eps_steps -= 1;
        }
    }
    // A sqrt-phase beta sqrt(x) against e(f x) has a stationary point at
    // x* = (beta / 4 pi f)^2; the damped members only see that mass once
    // eps x* << 1, so the ladder must reach below the wall at eps ~ 1/x*.
    if spec.sqrt_osc > 0.0 && spec.freq != 0.0 {
        let xstar = (spec.sqrt_osc / (4.0 * std::f64::consts::PI * spec.freq.abs())).powi(2);
        if xstar > 2.0 {
            let target = (1.0 / (50.0 * xstar)).max(2e-6);
            while s.eps_start * s.eps_ratio.powi(s.eps_steps as i32 - 1) > target && s.eps_steps < 22
            {
                s.eps_steps += 1;
            }
        }
    }
    let eps = s.members();
    let per: Vec<Result<(Complex64, f64, u64)>> =
        par::map_collect(eps.clone(), |e| damped_radial(spec, e, &s));
    let mut values = Vec::with_capacity(per.len());
    let mut errs = Vec::with_capacity(per.len());
    let mut evals = 0u64;
    for r in per {
        let (v, e, n) = r?;
        values.push(v);
        errs.push(e);
        evals += n;
    }
    let (value, err) = neville_to_zero(&eps, &values, &errs, s.richardson_depth as usize)?;
    if std::env::var_os("BESSELCX_TRACE").is_some() {
        eprintln!("[radial] freq {:.4} -> {} evals, err {:.2e}", spec.freq, evals, err);
        if std::env::var_os("BESSELCX_TRACE_MEMBERS").is_some() {
            for (k, (e, v)) in eps.iter().zip(values.iter()).enumerate() {
                eprintln!("  member {k}: eps {e:.6e} F {} err {:.2e}", v, errs[k]);
            }
            eprintln!("  extrapolated: {} err {err:.2e}", value);
        }
    }
    Ok(QuadResult { value, err_estimate: err, evaluations: evals })
}

/// One damped, truncated, absolutely convergent member integral. The
/// damping origin sits at the support start so the schedule keeps its
/// meaning for tail integrals that begin far out on the axis.
fn damped_radial(spec: &RadialSpec, eps: f64, sched: &RegularizationSchedule) -> Result<(Complex64, f64, u64)> {
    let two_pi = 2.0 * std::f64::consts::PI;
    let omega = two_pi * spec.freq;
    let x_lo = spec.support_start;
    // damping budget counts from the support start
    let t_end = x_lo + sched.truncation(eps);
    let quad_tol = (spec.tol / 30.0).clamp(5e-13, 1e-4);

    let mut value = Complex64::new(0.0, 0.0);
    let mut err = 0.0;
    let mut evals = 0u64;

    // [x_lo, min(1, T)] in the u = sqrt(x) chart: kills the integrable
    // endpoint power of g and makes the sqrt-phase linear
    let x_mid = 1.0_f64.min(t_end);
    if x_lo < x_mid {
        let h = |u: f64| {
            let x = u * u;
            let e = Complex64::new(-eps * (x - x_lo), omega * x).exp();
            (2.0 * u * (spec.g)(x) * e, 0.0)
        };
        let (ua, ub) = (x_lo.sqrt(), x_mid.sqrt());
        let step =
            spec.phase_step / (4.0 * std::f64::consts::PI * spec.freq.abs() + 2.0 * spec.extra_freq + spec.sqrt_osc + 4.0);
        let mesh = build_mesh(ua, ub, |_| step);
        let out = integrate_mesh(&h, &mesh, quad_tol, 1e-14, 40_000);
        value += out.value;
        err += out.err;
        evals += out.evaluations;
    }

    // [max(1, x_lo), T] in x with phase-budgeted panels
    let x_b = x_lo.max(x_mid);
    if t_end > x_b {
        let f = |x: f64| {
            let e = Complex64::new(-eps * (x - x_lo), omega * x).exp();
            ((spec.g)(x) * e, 0.0)
        };
        let beta = spec.sqrt_osc;
        let mesh = build_mesh(x_b, t_end, |x| {
            let dphase = omega.abs() + spec.extra_freq + 0.5 * beta / x.sqrt().max(1.0) + 1e-12;
            (spec.phase_step / dphase).min(0.5 * x + 0.5)
        });
        let out = integrate_mesh(&f, &mesh, quad_tol, 1e-14, 600_000);
        value += out.value;
        err += out.err;
        evals += out.evaluations;
        if !out.converged {
            err += out.err;
        }
    }

    // analytic bound for the truncated tail
    let g_t = (spec.g)(t_end).norm();
    evals += 1;
    let rate = eps.max(omega.abs()).max(spec.analyticity_radius);
    err += 2.0 * g_t * (-eps * (t_end - x_lo)).exp() / rate.max(1e-12);

    Ok((value, err, evals))
}

/// Breakpoints from `a` to `b` with local step `step(x)`.
pub(crate) fn build_mesh(a: f64, b: f64, step: impl Fn(f64) -> f64) -> Vec<f64> {
    let mut mesh = vec![a];
    let mut x = a;
    let min_step = (b - a) * 1e-9;
    while x < b {
        let dx = step(x).max(min_step);
        x += dx;
        if x >= b {
            break;
        }
        mesh.push(x);
    }
    mesh.push(b);
    mesh
}

/// Neville polynomial extrapolation of (eps_i, f_i) to eps = 0 with error
/// propagation; picks the best column up to `depth`.
pub(crate) fn neville_to_zero(
    eps: &[f64],
    f: &[Complex64],
    errs: &[f64],
    depth: usize,
) -> Result<(Complex64, f64)> {
    let n = eps.len();
    debug_assert!(n >= 2 && f.len() == n && errs.len() == n);
    let jmax = depth.min(n - 1);
    let mut t = vec![f.to_vec()];
    let mut e = vec![errs.to_vec()];
    let mut best: Option<(Complex64, f64, f64)> = None; // (value, residual, prop)
    let mut residuals = Vec::with_capacity(jmax);
    for j in 1..=jmax {
        let prev_t = &t[j - 1];
        let prev_e = &e[j - 1];
        let mut tj = Vec::with_capacity(n - j);
        let mut ej = Vec::with_capacity(n - j);
        for i in 0..(n - j) {
            let den = eps[i] - eps[i + j];
            let v = (eps[i] * prev_t[i + 1] - eps[i + j] * prev_t[i]) / den;
            let w = (eps[i] * prev_e[i + 1] + eps[i + j] * prev_e[i]) / den.abs();
            tj.push(v);
            ej.push(w);
        }
        let last = tj[n - j - 1];
        let residual = (last - prev_t[n - j]).norm();
        residuals.push(residual);
        let prop = ej[n - j - 1];
        let score = residual + prop;
        if best.map_or(true, |(_, r, p)| score < r + p) {
            best = Some((last, residual, prop));
        }
        t.push(tj);
        e.push(ej);
    }
    let (value, residual, prop) = best.expect("at least one column");
    // growing residuals from the start signal a series the table cannot model
    if residuals.len() >= 3 {
        let grow = residuals.windows(2).all(|w| w[1] > w[0]);
        if grow && residuals[residuals.len() - 1] > 1e3 * residuals[0].max(1e-300) {
            return Err(Error::ExtrapolationDivergence(format!(
                "residuals grew from {:e} to {:e}",
                residuals[0],
                residuals[residuals.len() - 1]
            )));
        }
    }
    Ok((value, residual + prop))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sched() -> RegularizationSchedule {
        RegularizationSchedule::default()
    }

    #[test]
    fn schedule_validation() {
        assert!(sched().validate().is_ok());
        let bad = RegularizationSchedule { eps_steps: 40, ..sched() };
        assert!(bad.validate().is_err());
    }

    // lim int_0^inf e^{-eps x} e(x) dx = i/(2 pi)
    #[test]
    fn damped_exponential_constant() {
        let g = |_: f64| Complex64::new(1.0, 0.0);
        let r = regularized_fourier_radial(&g, 1.0, 1, &sched()).unwrap();
        let want = Complex64::new(0.0, 1.0 / (2.0 * std::f64::consts::PI));
        assert!(
            (r.value - want).norm() < 1e-9 + r.err_estimate,
            "got {} want {want} (err {:e})",
            r.value,
            r.err_estimate
        );
    }

    // int_0^inf x^{-1/2} e(x) dx = (1+i)/2 (Fresnel)
    #[test]
    fn fresnel_half_power() {
        let g = |x: f64| Complex64::new(x.powf(-0.5), 0.0);
        let r = regularized_fourier_radial(&g, 1.0, 1, &sched()).unwrap();
        let want = Complex64::new(0.5, 0.5);
        assert!(
            (r.value - want).norm() < 1e-7 + r.err_estimate,
            "got {} want {want} err {:e}",
            r.value,
            r.err_estimate
        );
    }

    // absolutely convergent: int_0^inf e^{-x} e(x) dx = 1/(1 - 2 pi i)
    #[test]
    fn absolutely_convergent_matches_direct() {
        let g = |x: f64| Complex64::new((-x).exp(), 0.0);
        let r = regularized_fourier_radial(&g, 1.0, 1, &sched()).unwrap();
        let want = 1.0 / Complex64::new(1.0, -2.0 * std::f64::consts::PI);
        assert!((r.value - want).norm() < 1e-9, "got {} want {want}", r.value);
    }

    #[test]
    fn linearity() {
        let g1 = |x: f64| Complex64::new((-0.3 * x).exp(), 0.0);
        let g2 = |x: f64| Complex64::new(x.powf(-0.5), 0.0);
        let alpha = Complex64::new(1.7, -0.4);
        let combo = move |x: f64| alpha * g1(x) + g2(x);
        let s = sched();
        let r1 = regularized_fourier_radial(&g1, 1.0, 1, &s).unwrap();
        let r2 = regularized_fourier_radial(&g2, 1.0, 1, &s).unwrap();
        let rc = regularized_fourier_radial(&combo, 1.0, 1, &s).unwrap();
        let lhs = rc.value;
        let rhs = alpha * r1.value + r2.value;
        let budget = rc.err_estimate + alpha.norm() * r1.err_estimate + r2.err_estimate;
        assert!((lhs - rhs).norm() <= budget.max(1e-9), "{} vs {}", lhs, rhs);
    }

    #[test]
    fn negative_sign_conjugates_real_integrand() {
        let g = |x: f64| Complex64::new((1.0 + x).recip(), 0.0);
        let s = sched();
        let p = regularized_fourier_radial(&g, 2.0, 1, &s).unwrap();
        let m = regularized_fourier_radial(&g, 2.0, -1, &s).unwrap();
        assert!((p.value - m.value.conj()).norm() < 2.0 * (p.err_estimate + m.err_estimate).max(1e-9));
    }
}
