//! Large-argument asymptotic expansions: the Hankel sums with optimal
//! truncation, and the decaying expansion of K, both with the standard
//! coefficient sequence a_k(nu) = prod_j (4 nu^2 - (2j-1)^2) / (k! 8^k).

use num_complex::Complex64;

pub(crate) struct AsymSum {
    pub sum: Complex64,
    /// magnitude of the first omitted term relative to |sum| (envelope bound).
    pub rel_err: f64,
}

/// sum_k (sign i)^k a_k(nu) / z^k, truncated at the smallest term.
pub(crate) fn hankel_sum(nu: Complex64, z: Complex64, plus: bool, max_k: usize) -> AsymSum {
    let rot = if plus { Complex64::new(0.0, 1.0) } else { Complex64::new(0.0, -1.0) };
    let four_nu2 = 4.0 * nu * nu;
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    let mut best = f64::INFINITY;
    for k in 1..=max_k {
        let j = (2 * k - 1) as f64;
        term *= (four_nu2 - j * j) / (8.0 * k as f64) * rot / z;
        let mag = term.norm();
        if mag >= best {
            // divergent regime reached; previous term bounds the error
            return AsymSum { sum, rel_err: best / sum.norm().max(1e-300) };
        }
        sum += term;
        best = mag;
        if mag < 1e-17 * sum.norm() {
            break;
        }
    }
    AsymSum { sum, rel_err: best / sum.norm().max(1e-300) }
}

/// Same coefficients, all-plus signs: the K_nu tail sum_k a_k(nu) / z^k.
pub(crate) fn k_sum(nu: Complex64, z: Complex64, max_k: usize) -> AsymSum {
    let four_nu2 = 4.0 * nu * nu;
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    let mut best = f64::INFINITY;
    for k in 1..=max_k {
        let j = (2 * k - 1) as f64;
        term *= (four_nu2 - j * j) / (8.0 * k as f64) / z;
        let mag = term.norm();
        if mag >= best {
            return AsymSum { sum, rel_err: best / sum.norm().max(1e-300) };
        }
        sum += term;
        best = mag;
        if mag < 1e-17 * sum.norm() {
            break;
        }
    }
    AsymSum { sum, rel_err: best / sum.norm().max(1e-300) }
}

/// H^(kind)_nu(w) with the carrier e^{+-iw} stripped:
/// sqrt(2/(pi w)) e^{-+i(pi nu/2 + pi/4)} S_kind(w), for real w > 0.
/// Slowly varying, safe at any w in the asymptotic regime.
pub(crate) fn hankel_mod_amp(kind: u8, nu: Complex64, w: f64) -> (Complex64, f64) {
    let pi = std::f64::consts::PI;
    let s = hankel_sum(nu, Complex64::new(w, 0.0), kind == 1, 60);
    let rot = Complex64::new(0.0, if kind == 1 { -1.0 } else { 1.0 });
    let phase = (rot * (pi / 2.0 * nu + pi / 4.0)).exp();
    ((2.0 / (pi * w)).sqrt() * phase * s.sum, s.rel_err)
}
