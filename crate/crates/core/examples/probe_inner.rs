use besselcx::quad::RegularizationSchedule;
use num_complex::Complex64;

fn main() {
    // emulate the inner radial integrand of the 2D transform at a few phis
    use besselcx::types::{BranchedArgument, EvalOptions, SphericalIndex};
    let mu = Complex64::new(0.1, 0.0);
    let y = 1.0f64;
    let theta = std::f64::consts::PI / 6.0;
    let o = EvalOptions::default();
    for phi in [0.3f64, 1.0, 2.8, 4.0] {
        let t0 = std::time::Instant::now();
        // call through the public spherical function at a few x to estimate eval cost
        let mut acc = Complex64::default();
        let n = 20000;
        for i in 1..=n {
            let x = 0.01 + (i as f64) * 0.25;
            let z = BranchedArgument::from_polar(x, phi).unwrap();
            let v = besselcx::spherical::spherical_j_opts(SphericalIndex::new(mu), z, &o).unwrap();
            acc += v.value;
        }
        println!("phi={phi}: {n} evals in {:.1?} ({:.2} us/eval) acc {acc}", t0.elapsed(), t0.elapsed().as_secs_f64() * 1e6 / n as f64);
    }
    let _ = RegularizationSchedule::default();
}
