//! One verification operation per integral identity. Each verifier computes
//! the integral side with the quadrature engines and the closed-form side
//! from the Bessel layer, sharing no computational path beyond the gamma and
//! Bessel primitives evaluated at different arguments, and emits a
//! [`VerificationReport`].

mod report;

pub use report::{format_complex, format_f64, parse_complex, VerificationReport};

use crate::bessel::{
    bessel_i, bessel_j, bessel_pair_diff, dist_to_int, hankel_mod_amp, k_pos_real, DELTA_INT,
};
use crate::error::{Error, Result};
use crate::par;
use crate::quad::{
    adaptive_quad, cosh_tail_with_waves, integrate_mesh, iterated_double, regularized_radial,
    build_mesh, QuadResult, RadialSpec, RegularizationSchedule, WaveSpec,
};
use crate::spherical::spherical_j_opts;
use crate::types::{BesselOrder, BranchedArgument, ComplexScalar, EvalOptions, SphericalIndex};
use num_complex::Complex64;

const PI: f64 = std::f64::consts::PI;
const I: Complex64 = Complex64::new(0.0, 1.0);

/// e(x) = exp(2 pi i x), the exponential convention of the identities.
fn e2pi(x: Complex64) -> Complex64 {
    (2.0 * PI * I * x).exp()
}

fn c64(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// A verifier invocation with typed parameters.
#[derive(Clone, Debug, PartialEq)]
pub enum IdentityCall {
    Weber { nu: Complex64, y: f64, sign: i8 },
    Hardy { nu: Complex64, y: f64, sign: i8 },
    Weber2 { nu: Complex64, a: Complex64, p: Complex64 },
    Lemma1 { nu: Complex64, a: Complex64, c: f64, sign: i8 },
    Emot { nu: Complex64, a: f64, b: Complex64 },
    Lemma2 { nu: Complex64, a: f64, c: f64 },
    Main { mu: Complex64, y: f64, theta: f64 },
    Pipeline { mu: Complex64, y: f64, theta: f64, sign: i8 },
    Consistency { mu: Complex64, y: f64, theta: f64 },
}

impl IdentityCall {
    pub fn identity_tag(&self) -> &'static str {
        match self {
            IdentityCall::Weber { .. } => "weber",
            IdentityCall::Hardy { .. } => "hardy",
            IdentityCall::Weber2 { .. } => "weber2",
            IdentityCall::Lemma1 { .. } => "lemma1",
            IdentityCall::Emot { .. } => "emot",
            IdentityCall::Lemma2 { .. } => "lemma2",
            IdentityCall::Main { .. } => "main",
            IdentityCall::Pipeline { .. } => "pipeline",
            IdentityCall::Consistency { .. } => "consistency",
        }
    }

    /// Default tolerance tier: absolutely convergent 1e-6, singly
    /// regularized 1e-4, full 2D 1e-2, pure algebra 1e-10.
    pub fn default_tol(&self) -> f64 {
        match self {
            IdentityCall::Weber { .. } | IdentityCall::Hardy { .. } | IdentityCall::Lemma1 { .. } => 1e-4,
            IdentityCall::Weber2 { p, .. } => {
                if (p * p).re.abs() <= 1e-9 * (p * p).norm() {
                    1e-4
                } else {
                    1e-8
                }
            }
            IdentityCall::Emot { .. } | IdentityCall::Lemma2 { .. } | IdentityCall::Pipeline { .. } => 1e-6,
            IdentityCall::Main { .. } => 1e-2,
            IdentityCall::Consistency { .. } => 1e-10,
        }
    }
}

/// Shared verification configuration.
#[derive(Clone, Copy, Debug)]
pub struct VerifyConfig {
    /// overrides the per-identity default tolerance.
    pub tol: Option<f64>,
    pub sched: RegularizationSchedule,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { tol: None, sched: RegularizationSchedule::default() }
    }
}

/// Run a single verification.
pub fn verify(call: &IdentityCall, cfg: &VerifyConfig) -> Result<VerificationReport> {
    let tol = cfg.tol.unwrap_or_else(|| call.default_tol());
    match *call {
        IdentityCall::Weber { nu, y, sign } => verify_weber(nu, y, sign, tol, &cfg.sched),
        IdentityCall::Hardy { nu, y, sign } => verify_hardy(nu, y, sign, tol, &cfg.sched),
        IdentityCall::Weber2 { nu, a, p } => verify_weber2(nu, a, p, tol, &cfg.sched),
        IdentityCall::Lemma1 { nu, a, c, sign } => verify_lemma1(nu, a, c, sign, tol, &cfg.sched),
        IdentityCall::Emot { nu, a, b } => verify_emot(nu, a, b, tol),
        IdentityCall::Lemma2 { nu, a, c } => verify_lemma2(nu, a, c, tol),
        IdentityCall::Main { mu, y, theta } => verify_main(mu, y, theta, tol, &cfg.sched),
        IdentityCall::Pipeline { mu, y, theta, sign } => verify_pipeline(mu, y, theta, sign, tol),
        IdentityCall::Consistency { mu, y, theta } => verify_consistency(mu, y, theta, tol),
    }
}

fn pre(cond: bool, msg: impl Fn() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Precondition(msg()))
    }
}

fn sign_str(sign: i8) -> String {
    if sign >= 0 { "+".into() } else { "-".into() }
}

fn opts() -> EvalOptions {
    EvalOptions::default()
}

fn quad_diag(tag: &str, q: &QuadResult) -> String {
    format!("{tag}: err_estimate {:.3e}, evaluations {}", q.err_estimate, q.evaluations)
}

// ---------------------------------------------------------------------------
// Fourier transform of x^{-1/2} J_nu(4 pi sqrt x): regularized LHS against
// the (2y)^{-1/2} e(-+(1/2y - nu/8 - 1/8)) J_{nu/2}(pi/y) closed form.
// ---------------------------------------------------------------------------
pub fn verify_weber(
    nu: Complex64,
    y: f64,
    sign: i8,
    tol: f64,
    sched: &RegularizationSchedule,
) -> Result<VerificationReport> {
    pre(nu.re > -1.0, || format!("Re nu = {} must exceed -1", nu.re))?;
    pre(y > 0.0, || format!("y = {y} must be positive"))?;
    let o = opts();
    let g = move |x: f64| {
        let z = BranchedArgument::from_polar(4.0 * PI * x.sqrt(), 0.0).unwrap();
        match bessel_j(BesselOrder::new(nu), z, &o) {
            Ok(v) => v.value / x.sqrt(),
            Err(_) => Complex64::new(f64::NAN, f64::NAN),
        }
    };
    let spec = RadialSpec {
        g: &g,
        freq: if sign >= 0 { y } else { -y },
        sqrt_osc: 4.0 * PI,
        extra_freq: 0.0,
        analyticity_radius: 0.0,
        phase_step: PI,
        support_start: 0.0,
        tol: (tol / 10.0).max(1e-10),
    };
    let lhs = regularized_radial(&spec, sched)?;

    let s = if sign >= 0 { 1.0 } else { -1.0 };
    let phase = e2pi(-s * (c64(1.0 / (2.0 * y)) - nu / 8.0 - c64(0.125)));
    let arg = BranchedArgument::from_polar(PI / y, 0.0)?;
    let j = bessel_j(BesselOrder::new(nu / 2.0), arg, &o)?;
    let rhs = (2.0 * y).sqrt().recip() * phase * j.value;

    Ok(VerificationReport::new(
        "weber",
        vec![
            ("nu".into(), format_complex(nu)),
            ("y".into(), format_f64(y)),
            ("sign".into(), sign_str(sign)),
        ],
        lhs.value,
        rhs,
        tol,
        vec![quad_diag("lhs", &lhs), format!("rhs: J via {:?}, err {:.3e}", j.method, j.err_estimate)],
    ))
}

// ---------------------------------------------------------------------------
// Same transform for the decaying kernel K_nu: absolutely convergent LHS.
// ---------------------------------------------------------------------------
pub fn verify_hardy(
    nu: Complex64,
    y: f64,
    sign: i8,
    tol: f64,
    sched: &RegularizationSchedule,
) -> Result<VerificationReport> {
    pre(nu.re.abs() < 1.0, || format!("|Re nu| = {} must be below 1", nu.re.abs()))?;
    pre(dist_to_int(nu) >= DELTA_INT, || format!("nu = {nu} too close to an integer"))?;
    pre(y > 0.0, || format!("y = {y} must be positive"))?;
    let g = move |x: f64| match k_pos_real(nu, 4.0 * PI * x.sqrt()) {
        Ok((v, _)) => v / x.sqrt(),
        Err(_) => Complex64::new(f64::NAN, f64::NAN),
    };
    let spec = RadialSpec {
        g: &g,
        freq: if sign >= 0 { y } else { -y },
        sqrt_osc: 4.0 * PI,
        extra_freq: 0.0,
        analyticity_radius: 0.0,
        phase_step: PI,
        support_start: 0.0,
        tol: (tol / 10.0).max(1e-10),
    };
    let lhs = regularized_radial(&spec, sched)?;

    let s = if sign >= 0 { 1.0 } else { -1.0 };
    let o = opts();
    let arg = BranchedArgument::from_polar(PI / y, 0.0)?;
    let jp = bessel_j(BesselOrder::new(nu / 2.0), arg, &o)?;
    let jm = bessel_j(BesselOrder::new(-nu / 2.0), arg, &o)?;
    let outer = -PI / (2.0 * (PI * nu).sin()) / (2.0 * y).sqrt() * e2pi(s * c64(1.0 / (2.0 * y) + 0.125));
    let rhs = outer * (e2pi(s * nu / 8.0) * jp.value - e2pi(-s * nu / 8.0) * jm.value);

    Ok(VerificationReport::new(
        "hardy",
        vec![
            ("nu".into(), format_complex(nu)),
            ("y".into(), format_f64(y)),
            ("sign".into(), sign_str(sign)),
        ],
        lhs.value,
        rhs,
        tol,
        vec![quad_diag("lhs", &lhs)],
    ))
}

// ---------------------------------------------------------------------------
// The paired-product exponential integral: J_{-nu}J_{-nu} - J_nu J_nu against
// p^{-2} exp(-(a^2+abar^2)/4p^2) (I_{-nu} - I_nu)(|a|^2/2p^2), valid on the
// closed sector |arg p| <= pi/4 (regularized on the boundary).
// ---------------------------------------------------------------------------
pub fn verify_weber2(
    nu: Complex64,
    a: Complex64,
    p: Complex64,
    tol: f64,
    sched: &RegularizationSchedule,
) -> Result<VerificationReport> {
    pre(nu.re.abs() < 1.0, || format!("|Re nu| = {} must be below 1", nu.re.abs()))?;
    pre(a.norm() > 0.0, || "a must be nonzero".into())?;
    pre(p.norm() > 0.0, || "p must be nonzero".into())?;
    let p2 = p * p;
    if p2.re < -1e-9 * p2.norm() {
        return Err(Error::Sector(format!("|arg p| = {} exceeds pi/4", p.arg().abs())));
    }
    let boundary = p2.re.abs() <= 1e-9 * p2.norm();

    let o = opts();
    let am = a.norm();
    let aarg = a.arg();
    let decay = if boundary { 0.0 } else { p2.re };
    let g = move |x: f64| {
        let m = am * x.sqrt();
        match bessel_pair_diff(nu, m, aarg, &o) {
            Ok(d) => d.value * (-decay * x).exp(),
            Err(_) => Complex64::new(f64::NAN, f64::NAN),
        }
    };
    let freq = -p2.im / (2.0 * PI);
    let spec = RadialSpec {
        g: &g,
        freq,
        sqrt_osc: 2.0 * am,
        extra_freq: 0.0,
        analyticity_radius: if boundary { 0.0 } else { p2.re.max(2.0 * PI * freq.abs()) },
        phase_step: PI,
        support_start: 0.0,
        tol: (tol / 10.0).max(1e-11),
    };
    let lhs = if boundary {
        regularized_radial(&spec, sched)?
    } else {
        // absolutely convergent: the damping is already in the integrand;
        // the schedule degrades to consistency checking
        regularized_radial(&spec, sched)?
    };

    let w = am * am / (2.0 * p2);
    let wa = BranchedArgument::principal(w);
    let im_ = bessel_i(BesselOrder::new(-nu), wa, &o)?;
    let ip_ = bessel_i(BesselOrder::new(nu), wa, &o)?;
    let a2sum = c64(2.0 * (a * a).re);
    let rhs = (-a2sum / (4.0 * p2)).exp() / p2 * (im_.value - ip_.value);

    Ok(VerificationReport::new(
        "weber2",
        vec![
            ("nu".into(), format_complex(nu)),
            ("a".into(), format_complex(a)),
            ("p".into(), format_complex(p)),
        ],
        lhs.value,
        rhs,
        tol,
        vec![
            quad_diag("lhs", &lhs),
            format!("boundary regularization: {boundary}"),
        ],
    ))
}

// ---------------------------------------------------------------------------
// Fourier transform of the paired product at scale 4 pi: the e(+-cx) form.
// ---------------------------------------------------------------------------
pub fn verify_lemma1(
    nu: Complex64,
    a: Complex64,
    c: f64,
    sign: i8,
    tol: f64,
    sched: &RegularizationSchedule,
) -> Result<VerificationReport> {
    pre(nu.re.abs() < 1.0, || format!("|Re nu| = {} must be below 1", nu.re.abs()))?;
    pre(a.norm() > 0.0, || "a must be nonzero".into())?;
    pre(c > 0.0, || format!("c = {c} must be positive"))?;
    let o = opts();
    let am = a.norm();
    let aarg = a.arg();
    let g = move |x: f64| {
        let m = 4.0 * PI * am * x.sqrt();
        match bessel_pair_diff(nu, m, aarg, &o) {
            Ok(d) => d.value,
            Err(_) => Complex64::new(f64::NAN, f64::NAN),
        }
    };
    let spec = RadialSpec {
        g: &g,
        freq: if sign >= 0 { c } else { -c },
        sqrt_osc: 8.0 * PI * am,
        extra_freq: 0.0,
        analyticity_radius: 0.0,
        phase_step: PI,
        support_start: 0.0,
        tol: (tol / 10.0).max(1e-10),
    };
    let lhs = regularized_radial(&spec, sched)?;

    let s = if sign >= 0 { 1.0 } else { -1.0 };
    let w = BranchedArgument::from_polar(4.0 * PI * am * am / c, 0.0)?;
    let jm = bessel_j(BesselOrder::new(-nu), w, &o)?;
    let jp = bessel_j(BesselOrder::new(nu), w, &o)?;
    let a2sum = c64(2.0 * (a * a).re);
    let rot = (-s * I * PI / 2.0 * nu).exp();
    let rhs = -s / (2.0 * PI * I * c)
        * e2pi(-s * a2sum / c)
        * (rot * jm.value - jp.value / rot);

    Ok(VerificationReport::new(
        "lemma1",
        vec![
            ("nu".into(), format_complex(nu)),
            ("a".into(), format_complex(a)),
            ("c".into(), format_f64(c)),
            ("sign".into(), sign_str(sign)),
        ],
        lhs.value,
        rhs,
        tol,
        vec![quad_diag("lhs", &lhs)],
    ))
}

// ---------------------------------------------------------------------------
// The sine/exponential split integral against (pi/2) J_{nu/2} Y_{nu/2},
// extended to Re b >= 0.
// ---------------------------------------------------------------------------
pub fn verify_emot(nu: Complex64, a: f64, b: Complex64, tol: f64) -> Result<VerificationReport> {
    pre(nu.re > -1.0, || format!("Re nu = {} must exceed -1", nu.re))?;
    pre(a > 0.0, || format!("a = {a} must be positive"))?;
    pre(b.re >= -1e-12, || format!("Re b = {} must be nonnegative", b.re))?;
    let o = opts();
    let ju = move |w: f64, order: Complex64| -> Complex64 {
        let arg = BranchedArgument::from_polar(w.abs().max(1e-300), 0.0).unwrap();
        match bessel_j(BesselOrder::new(order), arg, &o) {
            Ok(v) => v.value,
            Err(_) => Complex64::new(f64::NAN, f64::NAN),
        }
    };

    // first piece: x = sin t turns it into a smooth integral over [0, pi/2]
    let f1 = {
        let f = move |t: f64| ju(a * t.sin(), nu) * (b * t.cos()).sin();
        adaptive_quad(f, 0.0, std::f64::consts::FRAC_PI_2, (tol / 10.0).max(1e-12))?
    };

    // second piece over (1, inf)
    let f2 = emot_second_integral(nu, a, b, tol)?;
    let lhs = f1.value - f2.value;

    let root = (c64(a * a) + b * b).sqrt();
    let w_minus = BranchedArgument::principal((root - b) / 2.0);
    let w_plus = BranchedArgument::principal((root + b) / 2.0);
    let j = bessel_j(BesselOrder::new(nu / 2.0), w_minus, &o)?;
    let yv = crate::bessel::bessel_y(BesselOrder::new(nu / 2.0), w_plus, &o)?;
    let rhs = PI / 2.0 * j.value * yv.value;

    Ok(VerificationReport::new(
        "emot",
        vec![
            ("nu".into(), format_complex(nu)),
            ("a".into(), format_f64(a)),
            ("b".into(), format_complex(b)),
        ],
        lhs,
        rhs,
        tol,
        vec![quad_diag("first", &f1), quad_diag("second", &f2)],
    ))
}

/// integral over (1, inf) of J_nu(a x) exp(-b sqrt(x^2-1)) / sqrt(x^2-1) dx
fn emot_second_integral(nu: Complex64, a: f64, b: Complex64, tol: f64) -> Result<QuadResult> {
    let o = opts();
    let ju = move |w: f64, order: Complex64| -> Complex64 {
        let arg = BranchedArgument::from_polar(w.max(1e-300), 0.0).unwrap();
        match bessel_j(BesselOrder::new(order), arg, &o) {
            Ok(v) => v.value,
            Err(_) => Complex64::new(f64::NAN, f64::NAN),
        }
    };
    if b.re > 1e-9 {
        // decaying in the cosh chart: truncate at ~40 e-foldings
        let u_end = (40.0 / b.re).asinh();
        let head = move |u: f64| (ju(a * u.cosh(), nu) * (-b * u.sinh()).exp(), 0.0);
        let mesh = build_mesh(0.0, u_end, |u| {
            (PI / (a * u.cosh() + b.norm() * u.cosh() + 1e-9)).min(0.25)
        });
        let out = integrate_mesh(&head, &mesh, (tol / 10.0).max(1e-12), 1e-14, 400_000);
        return Ok(QuadResult {
            value: out.value,
            err_estimate: out.err + (-40.0f64).exp(),
            evaluations: out.evaluations,
        });
    }
    // purely imaginary b = i beta: oscillatory tail, |beta| < a
    let beta = b.im;
    pre(beta.abs() < a, || format!("|Im b| = {} must stay below a = {a}", beta.abs()))?;
    let x1 = (2.0f64).max((30.0 + nu.norm_sqr()) / a);
    let u1 = x1.acosh();
    let head = move |u: f64| ju(a * u.cosh(), nu) * (-b * u.sinh()).exp();
    let mut waves: Vec<WaveSpec> = Vec::new();
    for kind in [1u8, 2u8] {
        let omega = if kind == 1 { a - beta } else { -a - beta };
        let amp = move |x: f64| {
            let (h, _) = hankel_mod_amp(kind, nu, a * x);
            let r = (x * x - 1.0).sqrt();
            // exp(-i beta (sqrt(x^2-1) - x)) with sqrt(x^2-1)-x = -1/(x+sqrt(x^2-1))
            let slow = (Complex64::new(0.0, beta) / (x + r)).exp();
            0.5 * h * slow / r
        };
        waves.push(WaveSpec { amp: Box::new(amp), omega, envelope_power: 1.5 });
    }
    cosh_tail_with_waves(&head, u1, a + beta.abs(), &waves, (tol / 5.0).max(1e-11))
}

// ---------------------------------------------------------------------------
// The cosine-kernel product identity on (1, inf) with w = (sqrt(a^2-c^2)+ic)/2.
// ---------------------------------------------------------------------------
pub fn verify_lemma2(nu: Complex64, a: f64, c: f64, tol: f64) -> Result<VerificationReport> {
    pre(nu.re.abs() < 1.0, || format!("|Re nu| = {} must be below 1", nu.re.abs()))?;
    pre(dist_to_int(nu / 2.0) >= DELTA_INT, || format!("nu/2 = {} too close to an integer", nu / 2.0))?;
    pre(a > 0.0, || format!("a = {a} must be positive"))?;
    pre(c.abs() <= a * (1.0 + 1e-12), || format!("|c| = {} must not exceed a = {a}", c.abs()))?;
    let lhs = lemma2_lhs(nu, a, c, tol)?;
    let (rhs, rhs_err) = lemma2_rhs(nu, a, c)?;
    let _ = rhs_err;
    Ok(VerificationReport::new(
        "lemma2",
        vec![
            ("nu".into(), format_complex(nu)),
            ("a".into(), format_f64(a)),
            ("c".into(), format_f64(c)),
        ],
        lhs.value,
        rhs,
        tol,
        vec![quad_diag("lhs", &lhs)],
    ))
}

/// integral over (1, inf) of (J_{-nu} + J_nu)(a x) cos(c sqrt(x^2-1)) / sqrt(x^2-1) dx
pub(crate) fn lemma2_lhs(nu: Complex64, a: f64, c: f64, tol: f64) -> Result<QuadResult> {
    let o = opts();
    let jsum = move |w: f64| -> Complex64 {
        let arg = BranchedArgument::from_polar(w.max(1e-300), 0.0).unwrap();
        let jp = bessel_j(BesselOrder::new(nu), arg, &o);
        let jm = bessel_j(BesselOrder::new(-nu), arg, &o);
        match (jp, jm) {
            (Ok(p), Ok(m)) => p.value + m.value,
            _ => Complex64::new(f64::NAN, f64::NAN),
        }
    };
    let x1 = (2.0f64).max((30.0 + nu.norm_sqr()) / a);
    let u1 = x1.acosh();
    let head = move |u: f64| jsum(a * u.cosh()) * (c * u.sinh()).cos();
    let mut waves: Vec<WaveSpec> = Vec::new();
    for kind in [1u8, 2u8] {
        for pm in [1.0f64, -1.0] {
            let omega = if kind == 1 { a + pm * c } else { -a + pm * c };
            let amp = move |x: f64| {
                let (hp, _) = hankel_mod_amp(kind, nu, a * x);
                let (hm, _) = hankel_mod_amp(kind, -nu, a * x);
                let r = (x * x - 1.0).sqrt();
                // half of cos, with e^{i pm c (sqrt(x^2-1)-x)} kept in the
                // amplitude: sqrt(x^2-1)-x = -1/(x+sqrt(x^2-1))
                let slow = (Complex64::new(0.0, -pm * c) / (x + r)).exp();
                0.25 * (hp + hm) * slow / r
            };
            waves.push(WaveSpec { amp: Box::new(amp), omega, envelope_power: 1.5 });
        }
    }
    cosh_tail_with_waves(&head, u1, a + c.abs(), &waves, (tol / 5.0).max(1e-11))
}

pub(crate) fn lemma2_rhs(nu: Complex64, a: f64, c: f64) -> Result<(Complex64, f64)> {
    let o = opts();
    let wm = (a * a - c * c).max(0.0).sqrt() / 2.0;
    let w = Complex64::new(wm, c / 2.0);
    let d = bessel_pair_diff(nu / 2.0, w.norm(), w.arg(), &o)?;
    let half_nu_pi = PI / 2.0 * nu;
    let cot = half_nu_pi.cos() / half_nu_pi.sin();
    let rhs = PI / 2.0 * cot * d.value;
    Ok((rhs, PI / 2.0 * cot.norm() * d.err))
}

// ---------------------------------------------------------------------------
// The full iterated 2D transform of the spherical Bessel function.
// ---------------------------------------------------------------------------
pub fn verify_main(
    mu: Complex64,
    y: f64,
    theta: f64,
    tol: f64,
    sched: &RegularizationSchedule,
) -> Result<VerificationReport> {
    pre(mu.re.abs() < 0.5, || format!("|Re mu| = {} must be below 1/2", mu.re.abs()))?;
    pre(y > 0.0, || format!("y = {y} must be positive"))?;
    pre((0.0..2.0 * PI + 1e-12).contains(&theta), || format!("theta = {theta} outside [0, 2 pi)"))?;
    pre(dist_to_int(2.0 * mu) >= DELTA_INT, || {
        format!("2 mu = {} too close to an integer (limit form not verified here)", 2.0 * mu)
    })?;
    let o = opts();
    let two_pi2 = 2.0 * PI * PI;
    let sin2pimu = (2.0 * PI * mu).sin();

    let inner = move |phi: f64| -> Result<(Complex64, f64)> {
        let g = move |x: f64| {
            let m = 4.0 * PI * x.sqrt();
            match bessel_pair_diff(2.0 * mu, m, phi / 2.0, &o) {
                Ok(d) => two_pi2 * d.value / sin2pimu,
                Err(_) => Complex64::new(f64::NAN, f64::NAN),
            }
        };
        let freq = -2.0 * y * (phi + theta).cos();
        // the pair phases ride on e^{+-i 8 pi cos(phi/2) sqrt x} after folding
        let half = (phi / 2.0).rem_euclid(PI);
        let beta = 8.0 * PI * half.cos().abs();
        let spec = RadialSpec {
            g: &g,
            freq,
            sqrt_osc: beta,
            extra_freq: 0.0,
            analyticity_radius: 0.0,
            // half-tolerance panels: GK15 still resolves ~1.5 periods cleanly
            phase_step: 3.0 * PI,
            support_start: 0.0,
            tol: (tol / 8.0).max(1e-6),
        };
        let sub = RegularizationSchedule { eps_steps: sched.eps_steps.min(7), ..*sched };
        let r = regularized_radial(&spec, &sub)?;
        Ok((r.value, r.err_estimate))
    };
    let singular = [
        (PI / 2.0 - theta).rem_euclid(2.0 * PI),
        (3.0 * PI / 2.0 - theta).rem_euclid(2.0 * PI),
    ];
    let lhs = iterated_double(&inner, &singular, tol * 0.5)?;

    let w = BranchedArgument::from_polar(1.0 / (16.0 * y * y), -2.0 * theta)?;
    let sph = spherical_j_opts(SphericalIndex::new(mu / 2.0), w, &o)?;
    let rhs = e2pi(c64(theta.cos() / y)) / (4.0 * y) * sph.value;

    // sign-variant right-hand sides of the product reformulation
    let dprime = bessel_pair_diff(mu, PI / y, theta, &o)?;
    let mut diags = vec![quad_diag("lhs", &lhs)];
    for s in [1.0f64, -1.0] {
        let prop = (PI * mu).cos() / (2.0 * y) * e2pi(c64(-s * theta.cos() / y)) * dprime.value;
        diags.push(format!("product-form rhs (sign {}{}): {}", if s > 0.0 { "+" } else { "-" }, "", format_complex(prop)));
        if s < 0.0 {
            let reassembled = two_pi2 / sin2pimu * prop;
            diags.push(format!(
                "closed-form consistency residual: {:.3e}",
                (reassembled - rhs).norm() / rhs.norm().max(1e-300)
            ));
        }
    }

    Ok(VerificationReport::new(
        "main",
        vec![
            ("mu".into(), format_complex(mu)),
            ("y".into(), format_f64(y)),
            ("theta".into(), format_f64(theta)),
        ],
        lhs.value,
        rhs,
        tol,
        diags,
    ))
}

// ---------------------------------------------------------------------------
// The three internal links of the product-reformulation proof route.
// ---------------------------------------------------------------------------
pub fn verify_pipeline(
    mu: Complex64,
    y: f64,
    theta: f64,
    sign: i8,
    tol: f64,
) -> Result<VerificationReport> {
    pre(mu.re.abs() < 0.5, || format!("|Re mu| = {} must be below 1/2", mu.re.abs()))?;
    pre(y > 0.0, || format!("y = {y} must be positive"))?;
    pre(dist_to_int(2.0 * mu) >= DELTA_INT, || format!("2 mu = {} too close to an integer", 2.0 * mu))?;
    let o = opts();
    let nu = 2.0 * mu;
    let a = 2.0 * PI / y;
    let c = 2.0 * PI * theta.sin() / y;

    let jsum = move |w: f64| -> Complex64 {
        let arg = BranchedArgument::from_polar(w.max(1e-300), 0.0).unwrap();
        let jp = bessel_j(BesselOrder::new(nu), arg, &o);
        let jm = bessel_j(BesselOrder::new(-nu), arg, &o);
        match (jp, jm) {
            (Ok(p), Ok(m)) => p.value + m.value,
            _ => Complex64::new(f64::NAN, f64::NAN),
        }
    };

    // (i) angular form vs t = 1/cos(phi) form on a truncated common range
    let t_c = 12.0f64;
    let phi_c = (1.0 / t_c).acos();
    let ang = {
        let f = move |phi: f64| {
            let ct = phi.cos();
            jsum(a / ct) * (c * phi.tan()).cos() / ct
        };
        adaptive_quad(f, 0.0, phi_c, 1e-10)?
    };
    let tform = {
        // u-chart of the t-integral keeps the endpoint regular
        let f = move |u: f64| (jsum(a * u.cosh()) * (c * u.sinh()).cos(), 0.0);
        let u_c = t_c.acosh();
        let mesh = build_mesh(0.0, u_c, |u| ((PI / ((a + c.abs()) * u.cosh())).min(0.25)).max(1e-6));
        let out = integrate_mesh(&f, &mesh, 1e-10, 1e-13, 200_000);
        QuadResult { value: out.value, err_estimate: out.err, evaluations: out.evaluations }
    };
    let rel_i = (ang.value - tform.value).norm() / tform.value.norm().max(1e-300);

    // (ii) full t-integral vs the product closed form
    let lhs_ii = lemma2_lhs(nu, a, c, tol)?;
    let (rhs_ii, _) = lemma2_rhs(nu, a, c)?;
    let rel_ii = (lhs_ii.value - rhs_ii).norm() / rhs_ii.norm().max(1e-300);

    // (iii) assembled outer factors reproduce the product-form right side
    let s = if sign >= 0 { 1.0 } else { -1.0 };
    let outer = (PI * mu).sin() / (PI * y) * e2pi(c64(-s * theta.cos() / y));
    let assembled = outer * lhs_ii.value;
    let dprime = bessel_pair_diff(mu, PI / y, theta, &o)?;
    let prop_rhs = (PI * mu).cos() / (2.0 * y) * e2pi(c64(-s * theta.cos() / y)) * dprime.value;
    let rel_iii = (assembled - prop_rhs).norm() / prop_rhs.norm().max(1e-300);

    let max_rel = rel_i.max(rel_ii).max(rel_iii);
    let mut rep = VerificationReport::new(
        "pipeline",
        vec![
            ("mu".into(), format_complex(mu)),
            ("y".into(), format_f64(y)),
            ("theta".into(), format_f64(theta)),
            ("sign".into(), sign_str(sign)),
        ],
        lhs_ii.value,
        rhs_ii,
        tol,
        vec![
            format!("link i (change of variables): rel {rel_i:.3e}"),
            format!("link ii (tail integral vs product form): rel {rel_ii:.3e}"),
            format!("link iii (factor assembly): rel {rel_iii:.3e}"),
        ],
    );
    rep.rel_err = max_rel;
    rep.pass = max_rel <= tol;
    Ok(rep)
}

// ---------------------------------------------------------------------------
// Pure special-function algebra: the two closed forms of the transform's
// right-hand side agree.
// ---------------------------------------------------------------------------
pub fn verify_consistency(mu: Complex64, y: f64, theta: f64, tol: f64) -> Result<VerificationReport> {
    pre(mu.re.abs() < 0.5, || format!("|Re mu| = {} must be below 1/2", mu.re.abs()))?;
    pre(dist_to_int(2.0 * mu) >= DELTA_INT, || format!("2 mu = {} too close to an integer", 2.0 * mu))?;
    pre(y > 0.0, || format!("y = {y} must be positive"))?;
    let o = opts();
    let w = BranchedArgument::from_polar(1.0 / (16.0 * y * y), -2.0 * theta)?;
    let sph = spherical_j_opts(SphericalIndex::new(mu / 2.0), w, &o)?;
    let lhs = sph.value / (4.0 * y);

    let dprime = bessel_pair_diff(mu, PI / y, theta, &o)?;
    let rhs = 2.0 * PI * PI / (2.0 * PI * mu).sin() * (PI * mu).cos() / (2.0 * y) * dprime.value;

    Ok(VerificationReport::new(
        "consistency",
        vec![
            ("mu".into(), format_complex(mu)),
            ("y".into(), format_f64(y)),
            ("theta".into(), format_f64(theta)),
        ],
        lhs,
        rhs,
        tol,
        vec![format!("spherical method {:?}", sph.method)],
    ))
}

// ---------------------------------------------------------------------------
// Parameter sweeps
// ---------------------------------------------------------------------------

/// Sweep outcome: per-point reports in grid order plus summary statistics.
#[derive(Debug)]
pub struct SweepResult {
    pub reports: Vec<Result<VerificationReport>>,
    pub pass_count: usize,
    pub total: usize,
    pub max_rel_err: f64,
}

/// Runs every call (possibly in parallel); report order follows input order.
pub fn sweep(calls: &[IdentityCall], cfg: &VerifyConfig) -> SweepResult {
    let reports: Vec<Result<VerificationReport>> =
        par::map_collect(calls.to_vec(), |c| verify(&c, cfg));
    let total = reports.len();
    let pass_count = reports.iter().filter(|r| r.as_ref().map(|x| x.pass).unwrap_or(false)).count();
    let max_rel_err = reports
        .iter()
        .filter_map(|r| r.as_ref().ok())
        .map(|r| if r.rel_err.is_finite() { r.rel_err } else { 0.0 })
        .fold(0.0f64, f64::max);
    SweepResult { reports, pass_count, total, max_rel_err }
}

#[cfg(test)]
mod tests;
