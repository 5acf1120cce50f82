use crate::error::{Error, Result};
use num_complex::Complex64;

/// The complex scalar all evaluations traffic in.
pub type ComplexScalar = Complex64;

/// A complex argument together with an explicit choice of argument (branch).
///
/// The stored `arg` is not restricted to the principal range: callers may
/// hand in `arg + 2*pi` to probe branch behaviour, and powers `z^nu` always
/// honour the stored value.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BranchedArgument {
    modulus: f64,
    arg: f64,
}

impl BranchedArgument {
    /// Principal branch: arg in (-pi, pi].
    pub fn principal(z: ComplexScalar) -> Self {
        BranchedArgument { modulus: z.norm(), arg: z.im.atan2(z.re) }
    }

    /// Explicit modulus/argument form.
    pub fn from_polar(modulus: f64, arg: f64) -> Result<Self> {
        if !(modulus >= 0.0) || !modulus.is_finite() || !arg.is_finite() {
            return Err(Error::Domain(format!("invalid polar pair ({modulus}, {arg})")));
        }
        Ok(BranchedArgument { modulus, arg })
    }

    /// Same point with the argument shifted by `2*pi*k`.
    pub fn with_arg_shift(self, k: i32) -> Self {
        BranchedArgument { modulus: self.modulus, arg: self.arg + 2.0 * std::f64::consts::PI * k as f64 }
    }

    /// Conjugate point on the paired branch: arg -> -arg.
    pub fn conj(self) -> Self {
        BranchedArgument { modulus: self.modulus, arg: -self.arg }
    }

    pub fn modulus(self) -> f64 {
        self.modulus
    }

    pub fn arg(self) -> f64 {
        self.arg
    }

    pub fn is_zero(self) -> bool {
        self.modulus == 0.0
    }

    pub fn to_complex(self) -> ComplexScalar {
        Complex64::from_polar(self.modulus, self.arg)
    }
}

/// Complex order for the classical Bessel functions.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BesselOrder {
    pub nu: ComplexScalar,
}

impl BesselOrder {
    pub fn new(nu: ComplexScalar) -> Self {
        BesselOrder { nu }
    }

    /// Distance to the nearest integer (in the complex plane).
    pub fn dist_to_integers(self) -> f64 {
        let r = self.nu.re.round();
        Complex64::new(self.nu.re - r, self.nu.im).norm()
    }
}

/// Complex index of the spherical Bessel function over C.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SphericalIndex {
    pub mu: ComplexScalar,
    pub near_half_integer: bool,
}

impl SphericalIndex {
    pub fn new(mu: ComplexScalar) -> Self {
        let two_mu = 2.0 * mu;
        let d = Complex64::new(two_mu.re - two_mu.re.round(), two_mu.im).norm();
        SphericalIndex { mu, near_half_integer: d < crate::bessel::DELTA_INT }
    }
}

/// How a value was produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Series,
    Asymptotic,
    Connection,
    Limit,
}

/// Evaluation result: value plus an a-posteriori error estimate.
#[derive(Clone, Copy, Debug)]
pub struct EvalResult {
    pub value: ComplexScalar,
    pub err_estimate: f64,
    pub method: Method,
}

impl EvalResult {
    pub fn new(value: ComplexScalar, err_estimate: f64, method: Method) -> Self {
        EvalResult { value, err_estimate, method }
    }
}

/// Tuning knobs for the Bessel kernels.
#[derive(Clone, Copy, Debug)]
pub struct EvalOptions {
    /// Relative tolerance target.
    pub tol: f64,
    /// Series term budget.
    pub max_terms: usize,
    /// Margin delta (radians) enforced on the asymptotic validity sectors.
    pub sector_margin_delta: f64,
    /// |z| <= series_base + |nu|^2 uses the power series.
    pub series_cutoff_base: f64,
    /// |z| >= asym_base + |nu|^2 uses the asymptotic expansions.
    pub asym_cutoff_base: f64,
}

impl Default for EvalOptions {
    fn default() -> Self {
        EvalOptions {
            tol: 1e-12,
            max_terms: 200,
            sector_margin_delta: 0.05,
            series_cutoff_base: 12.0,
            asym_cutoff_base: 25.0,
        }
    }
}

impl EvalOptions {
    pub fn validate(&self) -> Result<()> {
        if !(self.sector_margin_delta > 0.0 && self.sector_margin_delta < std::f64::consts::FRAC_PI_2) {
            return Err(Error::InvalidConfig("sector_margin_delta must lie in (0, pi/2)".into()));
        }
        if !(self.tol > 0.0) {
            return Err(Error::InvalidConfig("tol must be positive".into()));
        }
        Ok(())
    }

    pub fn series_cutoff(&self, nu: ComplexScalar) -> f64 {
        self.series_cutoff_base + nu.norm_sqr()
    }

    pub fn asym_cutoff(&self, nu: ComplexScalar) -> f64 {
        self.asym_cutoff_base + nu.norm_sqr()
    }
}
