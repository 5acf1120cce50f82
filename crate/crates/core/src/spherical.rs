//! The spherical Bessel function over the complex field:
//!
//!   Jc_mu(z) = (2 pi^2 / sin(2 pi mu)) ( J_{-2mu}(4 pi sqrt z) J_{-2mu}(4 pi sqrt zbar)
//!                                      - J_{2mu}(4 pi sqrt z) J_{2mu}(4 pi sqrt zbar) ),
//!
//! with sqrt z = |z|^{1/2} e^{i arg z / 2} and the conjugate factor always on
//! the paired branch arg(zbar) = -arg z, so the two square roots are exact
//! complex conjugates. The value does not depend on the choice of arg z.
//!
//! At half-integer mu the quotient is 0/0 and is realized numerically by
//! index-offset Richardson extrapolation, cross-checked against the
//! mu-regular Hankel-product rearrangement
//!
//!   Jc_mu(z) = i pi^2 ( e^{2 pi i mu} H1_{2mu}(s) H1_{2mu}(sbar)
//!                     - e^{-2 pi i mu} H2_{2mu}(s) H2_{2mu}(sbar) ).

use crate::bessel::{bessel_pair_diff, hankel, pair_asym_cutoff, richardson_offset};
use crate::error::{Error, Result};
use crate::types::{
    BesselOrder, BranchedArgument, ComplexScalar, EvalOptions, EvalResult, Method, SphericalIndex,
};
use num_complex::Complex64;

const I: Complex64 = Complex64::new(0.0, 1.0);
const FOUR_PI: f64 = 4.0 * std::f64::consts::PI;

fn sqrt_pair(z: BranchedArgument) -> (f64, f64) {
    (FOUR_PI * z.modulus().sqrt(), z.arg() / 2.0)
}

/// Jc_mu(z) by the defining bilinear form (limit form near half-integers).
pub fn spherical_j(mu: SphericalIndex, z: BranchedArgument) -> Result<EvalResult> {
    spherical_j_opts(mu, z, &EvalOptions::default())
}

pub fn spherical_j_opts(mu: SphericalIndex, z: BranchedArgument, opts: &EvalOptions) -> Result<EvalResult> {
    if z.is_zero() {
        return Err(Error::Domain("spherical J at z = 0".into()));
    }
    let (s_mod, s_arg) = sqrt_pair(z);
    if !mu.near_half_integer {
        let (v, e, asym) = direct(mu.mu, s_mod, s_arg, opts)?;
        let method = if asym { Method::Asymptotic } else { Method::Series };
        return Ok(EvalResult::new(v, e, method));
    }
    // limit form: extrapolate in the index across the half-integer
    let (v, mut err) = richardson_offset(
        &|m| {
            let (v, e, _) = direct(m, s_mod, s_arg, opts)?;
            Ok((v, e))
        },
        mu.mu,
    )?;
    if s_mod >= 5.0 {
        let hp = spherical_j_hankel_product_opts(mu, z, opts)?;
        let gap = (v - hp.value).norm();
        if gap > err + hp.err_estimate {
            err = gap;
        }
    }
    Ok(EvalResult::new(v, err, Method::Limit))
}

fn direct(mu: Complex64, s_mod: f64, s_arg: f64, opts: &EvalOptions) -> Result<(Complex64, f64, bool)> {
    let two_pi2 = 2.0 * std::f64::consts::PI * std::f64::consts::PI;
    let d = bessel_pair_diff(2.0 * mu, s_mod, s_arg, opts)?;
    let s = (2.0 * std::f64::consts::PI * mu).sin();
    let v = two_pi2 * d.value / s;
    let e = two_pi2 * d.err / s.norm() + v.norm() * 1e-15;
    Ok((v, e, d.asymptotic))
}

/// The mu-regular Hankel-product rearrangement; no sin(2 pi mu) denominator.
pub fn spherical_j_hankel_product(mu: SphericalIndex, z: BranchedArgument) -> Result<EvalResult> {
    spherical_j_hankel_product_opts(mu, z, &EvalOptions::default())
}

pub fn spherical_j_hankel_product_opts(
    mu: SphericalIndex,
    z: BranchedArgument,
    opts: &EvalOptions,
) -> Result<EvalResult> {
    if z.is_zero() {
        return Err(Error::Domain("spherical J at z = 0".into()));
    }
    let (s_mod, s_arg) = sqrt_pair(z);
    // fold by whole pi's exactly as in the pair kernel (products cancel the
    // rotation factors), keeping the Hankel evaluations inside their sectors
    let pi = std::f64::consts::PI;
    let mut phi = s_arg.rem_euclid(pi);
    if phi > pi / 2.0 {
        phi = pi - phi;
    }
    let nu = BesselOrder::new(2.0 * mu.mu);
    let pi2 = pi * pi;

    if s_mod >= pair_asym_cutoff(nu.nu) && s_mod * phi.sin().abs() > 600.0 {
        // individually overflowing H factors; combined-phase asymptotic form
        let d = bessel_pair_diff(nu.nu, s_mod, phi, opts)?;
        let s = (2.0 * pi * mu.mu).sin();
        let v = 2.0 * pi2 * d.value / s;
        return Ok(EvalResult::new(v, 2.0 * pi2 * d.err / s.norm(), Method::Asymptotic));
    }

    let sp = BranchedArgument::from_polar(s_mod, phi)?;
    let sm = BranchedArgument::from_polar(s_mod, -phi)?;
    let h1p = hankel(1, nu, sp, opts)?;
    let h1m = hankel(1, nu, sm, opts)?;
    let h2p = hankel(2, nu, sp, opts)?;
    let h2m = hankel(2, nu, sm, opts)?;
    let rot = (2.0 * pi * I * mu.mu).exp();
    let t1 = rot * h1p.value * h1m.value;
    let t2 = h2p.value * h2m.value / rot;
    let v = I * pi2 * (t1 - t2);
    let err = pi2
        * (rot.norm() * (h1p.err_estimate * h1m.value.norm() + h1m.err_estimate * h1p.value.norm())
            + (h2p.err_estimate * h2m.value.norm() + h2m.err_estimate * h2p.value.norm()) / rot.norm()
            + (t1.norm() + t2.norm()) * 2e-16);
    let method = if s_mod >= opts.asym_cutoff(nu.nu) { Method::Asymptotic } else { h1p.method };
    Ok(EvalResult::new(v, err, method))
}

/// Elementary closed forms at mu = 1/4 and mu = 3/4 (test oracle).
///
/// Inserting the half-integer-order trigonometric forms into the bilinear
/// definition collapses it to, with r = Re sqrt z (on the carried branch):
///   mu = 1/4:  cos(8 pi r) / sqrt|z|
///   mu = 3/4:  [ (1 - 1/(16 pi^2 |z|)) cos(8 pi r) - r sin(8 pi r)/(2 pi |z|) ] / sqrt|z|
pub fn closed_form_reference(mu: SphericalIndex, z: BranchedArgument) -> Result<ComplexScalar> {
    if z.is_zero() {
        return Err(Error::Domain("spherical J at z = 0".into()));
    }
    let q = mu.mu;
    if q.im != 0.0 || !(q.re == 0.25 || q.re == 0.75) {
        return Err(Error::UnsupportedIndex(format!("closed form only at mu = 1/4, 3/4 (got {q})")));
    }
    let az = z.modulus();
    let r = az.sqrt() * (z.arg() / 2.0).cos();
    let c8 = (8.0 * std::f64::consts::PI * r).cos();
    let v = if q.re == 0.25 {
        c8 / az.sqrt()
    } else {
        let pi = std::f64::consts::PI;
        let s8 = (8.0 * pi * r).sin();
        ((1.0 - 1.0 / (16.0 * pi * pi * az)) * c8 - r / (2.0 * pi * az) * s8) / az.sqrt()
    };
    Ok(Complex64::new(v, 0.0))
}
