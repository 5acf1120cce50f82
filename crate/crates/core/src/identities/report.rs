//! Verification reports and deterministic value formatting.

use crate::types::ComplexScalar;

/// Outcome of one identity verification: both sides, residuals, pass flag.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub identity: &'static str,
    /// parameter bindings in canonical order, already formatted.
    pub params: Vec<(String, String)>,
    pub lhs: ComplexScalar,
    pub rhs: ComplexScalar,
    pub abs_err: f64,
    pub rel_err: f64,
    pub tol: f64,
    pub pass: bool,
    pub diagnostics: Vec<String>,
}

/// Near-zero right-hand sides switch the pass criterion to absolute error.
pub const ZERO_RHS_FLOOR: f64 = 1e-12;

impl VerificationReport {
    pub fn new(
        identity: &'static str,
        params: Vec<(String, String)>,
        lhs: ComplexScalar,
        rhs: ComplexScalar,
        tol: f64,
        diagnostics: Vec<String>,
    ) -> Self {
        let abs_err = (lhs - rhs).norm();
        let rhs_norm = rhs.norm();
        let rel_err = if rhs_norm > 0.0 { abs_err / rhs_norm } else { f64::INFINITY };
        let pass = (rel_err <= tol) || (rhs_norm < ZERO_RHS_FLOOR && abs_err <= tol);
        VerificationReport { identity, params, lhs, rhs, abs_err, rel_err, tol, pass, diagnostics }
    }
}

/// 17 significant digits, lowercase exponent: the wire format every emitter
/// uses so repeated runs are byte-identical.
pub fn format_f64(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    format!("{:.16e}", x)
}

/// Complex literals as `a+bi` / `a-bi`.
pub fn format_complex(z: ComplexScalar) -> String {
    if z.im == 0.0 {
        format_f64(z.re)
    } else if z.im < 0.0 {
        format!("{}-{}i", format_f64(z.re), format_f64(-z.im))
    } else {
        format!("{}+{}i", format_f64(z.re), format_f64(z.im))
    }
}

/// Parses the `a+bi` literal format (also plain reals and `bi`).
pub fn parse_complex(s: &str) -> Option<ComplexScalar> {
    let t = s.trim();
    if t.is_empty() {
        return None;
    }
    if let Some(stripped) = t.strip_suffix('i') {
        // find the split between real and imaginary parts: a sign that is not
        // part of an exponent and not leading
        let bytes = stripped.as_bytes();
        let mut split = None;
        for i in (1..bytes.len()).rev() {
            let b = bytes[i];
            if (b == b'+' || b == b'-') && !matches!(bytes[i - 1], b'e' | b'E') {
                split = Some(i);
                break;
            }
        }
        match split {
            Some(i) => {
                let re: f64 = stripped[..i].parse().ok()?;
                let im_str = &stripped[i..];
                let im: f64 = if im_str == "+" {
                    1.0
                } else if im_str == "-" {
                    -1.0
                } else {
                    im_str.parse().ok()?
                };
                Some(ComplexScalar::new(re, im))
            }
            None => {
                let im: f64 = if stripped.is_empty() { 1.0 } else { stripped.parse().ok()? };
                Some(ComplexScalar::new(0.0, im))
            }
        }
    } else {
        t.parse().ok().map(|re| ComplexScalar::new(re, 0.0))
    }
}
