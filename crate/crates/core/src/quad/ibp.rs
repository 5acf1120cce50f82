//! Partial-integration evaluation of the model tail integrals
//!
//!   int_{x0}^inf x^{-sigma} exp(i beta sqrt x + i gamma x - p^2 x) dx,
//!
//! valid on the closed sector |arg p| <= pi/4 including its boundary.
//! Each step uses the exact decomposition (q = p^2 - i gamma):
//!
//!   I_sigma = x0^{-sigma} E(x0)/q - (sigma/q) I_{sigma+1} + (i beta/2q) I_{sigma+1/2},
//!
//! so `depth` steps leave remainder integrals with exponent <= -(sigma+depth/2),
//! which are absolutely convergent on the sector boundary and are evaluated
//! by bounded-cutoff oscillatory quadrature.

use super::adaptive::{integrate_mesh, QuadResult};
use super::regularized::build_mesh;
use super::tail::{wave_tail, WaveSpec};
use crate::error::{Error, Result};
use crate::types::ComplexScalar;
use num_complex::Complex64;

/// Parameters of the model integrand family.
#[derive(Clone, Copy, Debug)]
pub struct IbpTailSpec {
    /// endpoint power: 1/2 or 1 in the model family (any sigma in (0, 3/2] works).
    pub sigma: f64,
    /// coefficient of i sqrt(x) in the exponent.
    pub beta: ComplexScalar,
    /// coefficient of i x in the exponent (folds into the effective p^2).
    pub gamma_coeff: ComplexScalar,
    /// number of partial integrations.
    pub depth: u32,
}

impl Default for IbpTailSpec {
    fn default() -> Self {
        IbpTailSpec {
            sigma: 0.5,
            beta: Complex64::new(0.0, 0.0),
            gamma_coeff: Complex64::new(0.0, 0.0),
            depth: 3,
        }
    }
}

pub fn ibp_tail(spec: &IbpTailSpec, p_sq: ComplexScalar, x0: f64) -> Result<QuadResult> {
    if p_sq.norm() < 1e-300 {
        return Err(Error::Domain("p^2 = 0".into()));
    }
    if p_sq.re < -1e-12 {
        return Err(Error::Domain(format!("Re p^2 = {} < 0", p_sq.re)));
    }
    if !(x0 >= 1.0) {
        return Err(Error::Precondition(format!("x0 = {x0} < 1")));
    }
    let q = p_sq - Complex64::new(0.0, 1.0) * spec.gamma_coeff;
    if q.norm() < 1e-300 {
        return Err(Error::Domain("effective exponent rate vanishes".into()));
    }
    let mut evals = 0u64;
    let (value, err) = expand(spec, q, x0, spec.sigma, spec.depth, &mut evals)?;
    Ok(QuadResult { value, err_estimate: err, evaluations: evals })
}

fn envelope(spec: &IbpTailSpec, q: Complex64, x: f64) -> Complex64 {
    // exp(i beta sqrt x - q x)
    (Complex64::new(0.0, 1.0) * spec.beta * x.sqrt() - q * x).exp()
}

fn expand(
    spec: &IbpTailSpec,
    q: Complex64,
    x0: f64,
    sigma: f64,
    depth: u32,
    evals: &mut u64,
) -> Result<(Complex64, f64)> {
    if depth == 0 {
        return remainder(spec, q, x0, sigma, evals);
    }
    let boundary = x0.powf(-sigma) * envelope(spec, q, x0) / q;
    let (i_up, e_up) = expand(spec, q, x0, sigma + 1.0, depth - 1, evals)?;
    let mut value = boundary - sigma / q * i_up;
    let mut err = boundary.norm() * 1e-15 + (sigma / q).norm() * e_up;
    if spec.beta.norm() > 0.0 {
        let (i_half, e_half) = expand(spec, q, x0, sigma + 0.5, depth - 1, evals)?;
        let c = Complex64::new(0.0, 0.5) * spec.beta / q;
        value += c * i_half;
        err += c.norm() * e_half;
    }
    Ok((value, err))
}

/// Absolutely convergent remainder int_{x0}^inf x^{-sigma} E(x) dx.
fn remainder(
    spec: &IbpTailSpec,
    q: Complex64,
    x0: f64,
    sigma: f64,
    evals: &mut u64,
) -> Result<(Complex64, f64)> {
    let decay = q.re;
    if decay > 1e-8 {
        // exponentially decaying: truncate at 45 e-foldings
        let x_end = x0 + 45.0 / decay;
        let rate = q.im.abs() + spec.beta.norm();
        let f = |x: f64| (x.powf(-sigma) * envelope(spec, q, x), 0.0);
        let mesh = build_mesh(x0, x_end, |x| (std::f64::consts::PI / (rate + 1e-9)).min(0.5 * x + 0.1));
        let out = integrate_mesh(&f, &mesh, 1e-12, 1e-15, 200_000);
        *evals += out.evaluations;
        let tail = x_end.powf(-sigma) * (-decay * (x_end - x0)).exp() / decay;
        return Ok((out.value, out.err + tail));
    }
    // sector boundary: oscillatory remainder with envelope x^{-sigma}
    // (any residual Re q damping rides along in the amplitude)
    let omega = -q.im;
    let sb = spec.beta;
    let w = WaveSpec {
        amp: Box::new(move |x: f64| {
            x.powf(-sigma)
                * (Complex64::new(0.0, 1.0) * sb * x.sqrt() - Complex64::new(decay * x, 0.0)).exp()
        }),
        omega,
        envelope_power: sigma,
    };
    if sigma <= 1.05 && omega.abs() < 1e-9 {
        return Err(Error::Accuracy(format!(
            "remainder with exponent {sigma} is not absolutely integrable without oscillation"
        )));
    }
    let r = if sigma > 1.05 {
        wave_tail(&w, x0, 1e-9)?
    } else {
        // shallow envelope: rely on the van-der-Corput cutoff only
        wave_tail(&WaveSpec { envelope_power: 1.06, ..w }, x0, 1e-8)?
    };
    *evals += r.evaluations;
    Ok((r.value, r.err_estimate))
}

#[cfg(test)]
mod tests {
    use super::*;

    // int_1^inf x^{-1/2} e^{-x} dx = Gamma(1/2, 1) = 0.27880558528066196
    #[test]
    fn incomplete_gamma_spot() {
        let spec = IbpTailSpec::default();
        let r = ibp_tail(&spec, Complex64::new(1.0, 0.0), 1.0).unwrap();
        assert!(
            (r.value.re - 0.27880558528066196).abs() < 1e-10,
            "got {} err {:e}",
            r.value,
            r.err_estimate
        );
        assert!(r.value.im.abs() < 1e-12);
    }

    // int_1^inf x^{-1} e^{-x} dx = E_1(1) = 0.21938393439552029
    #[test]
    fn exponential_integral_spot() {
        let spec = IbpTailSpec { sigma: 1.0, ..Default::default() };
        let r = ibp_tail(&spec, Complex64::new(1.0, 0.0), 1.0).unwrap();
        assert!((r.value.re - 0.21938393439552029).abs() < 1e-10, "got {}", r.value);
    }

    #[test]
    fn depth_self_consistency() {
        let spec3 = IbpTailSpec { beta: Complex64::new(2.0, 0.0), ..Default::default() };
        let spec4 = IbpTailSpec { depth: 4, ..spec3 };
        let p2 = Complex64::new(0.6, 0.6); // interior of the sector
        let a = ibp_tail(&spec3, p2, 1.0).unwrap();
        let b = ibp_tail(&spec4, p2, 1.0).unwrap();
        assert!(
            (a.value - b.value).norm() <= a.err_estimate + b.err_estimate,
            "depth 3 {} vs depth 4 {} (errs {:e}, {:e})",
            a.value,
            b.value,
            a.err_estimate,
            b.err_estimate
        );
    }

    #[test]
    fn rejects_bad_sector() {
        let spec = IbpTailSpec::default();
        assert!(ibp_tail(&spec, Complex64::new(-0.1, 1.0), 1.0).is_err());
        assert!(ibp_tail(&spec, Complex64::new(0.0, 0.0), 1.0).is_err());
    }
}
