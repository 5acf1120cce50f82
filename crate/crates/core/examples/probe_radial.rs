use besselcx::quad::{regularized_fourier_radial, RegularizationSchedule};
use besselcx::types::{BranchedArgument, EvalOptions, SphericalIndex};
use num_complex::Complex64;

fn main() {
    let mu = Complex64::new(0.1, 0.0);
    let o = EvalOptions::default();
    let phi = 1.01f64; // a node with small |cos(phi+theta)|
    let theta = std::f64::consts::PI / 6.0;
    let c = 2.0 * (phi + theta).cos().abs();
    println!("c = {c}");
    let g = move |x: f64| {
        let z = BranchedArgument::from_polar(x, phi).unwrap();
        besselcx::spherical::spherical_j_opts(SphericalIndex::new(mu), z, &o)
            .map(|v| v.value)
            .unwrap_or(Complex64::new(f64::NAN, f64::NAN))
    };
    let t0 = std::time::Instant::now();
    let r = regularized_fourier_radial(&g, c, -1, &RegularizationSchedule::default()).unwrap();
    println!("value {} err {:.3e} evals {} in {:.1?}", r.value, r.err_estimate, r.evaluations, t0.elapsed());
}
