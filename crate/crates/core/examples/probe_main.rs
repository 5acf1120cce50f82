use besselcx::identities::{verify, IdentityCall, VerifyConfig};
use num_complex::Complex64;

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let which = args.get(1).map(|s| s.as_str()).unwrap_or("1");
    let call = match which {
        "1" => IdentityCall::Main { mu: Complex64::new(0.1, 0.0), y: 1.0, theta: std::f64::consts::PI / 6.0 },
        "2" => IdentityCall::Main { mu: Complex64::new(0.0, 0.25), y: 0.5, theta: 0.0 },
        _ => IdentityCall::Main { mu: Complex64::new(0.2, 0.0), y: 1.0, theta: std::f64::consts::PI / 2.0 },
    };
    let t0 = std::time::Instant::now();
    match verify(&call, &VerifyConfig::default()) {
        Ok(r) => println!(
            "pass {} rel {:.3e} lhs {} rhs {} in {:.1?}\n{:#?}",
            r.pass, r.rel_err, r.lhs, r.rhs, t0.elapsed(), r.diagnostics
        ),
        Err(e) => println!("error after {:.1?}: {e}", t0.elapsed()),
    }
}
