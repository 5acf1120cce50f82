use super::*;

fn cfg() -> VerifyConfig {
    VerifyConfig::default()
}

fn cc(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

#[test]
fn weber_spot() {
    let r = verify_weber(cc(1.0, 0.0), 1.0, 1, 1e-4, &cfg().sched).unwrap();
    assert!(r.pass, "rel {:e}, lhs {}, rhs {}", r.rel_err, format_complex(r.lhs), format_complex(r.rhs));
    let r = verify_weber(cc(0.5, 0.0), 2.0, -1, 1e-4, &cfg().sched).unwrap();
    assert!(r.pass, "rel {:e} lhs {} rhs {}", r.rel_err, r.lhs, r.rhs);
    // boundary-interior precondition check
    assert!(verify_weber(cc(-0.5, 0.0), 1.0, 1, 1e-3, &cfg().sched).is_ok());
    assert!(matches!(
        verify_weber(cc(-1.1, 0.0), 1.0, 1, 1e-4, &cfg().sched),
        Err(Error::Precondition(_))
    ));
}

#[test]
fn hardy_spot() {
    let r = verify_hardy(cc(0.4, 0.0), 1.0, 1, 1e-5, &cfg().sched).unwrap();
    assert!(r.pass, "rel {:e} lhs {} rhs {}", r.rel_err, r.lhs, r.rhs);
    let r = verify_hardy(cc(0.0, 0.6), 0.5, -1, 1e-5, &cfg().sched).unwrap();
    assert!(r.pass, "rel {:e}", r.rel_err);
    assert!(matches!(
        verify_hardy(cc(1.2, 0.0), 1.0, 1, 1e-5, &cfg().sched),
        Err(Error::Precondition(_))
    ));
}

#[test]
fn weber2_interior_and_degenerate() {
    let r = verify_weber2(cc(0.3, 0.0), cc(1.0, 0.0), cc(1.0, 0.0), 1e-8, &cfg().sched).unwrap();
    assert!(r.pass, "rel {:e} lhs {} rhs {}", r.rel_err, r.lhs, r.rhs);
    // nu = 0: both sides vanish identically
    let r = verify_weber2(cc(0.0, 0.0), cc(1.0, 0.0), cc(1.0, 0.0), 1e-8, &cfg().sched).unwrap();
    assert!(r.pass && r.lhs.norm() < 1e-10 && r.rhs.norm() < 1e-10);
}

#[test]
fn weber2_boundary() {
    let p = Complex64::from_polar(1.0, PI / 4.0);
    let r = verify_weber2(cc(0.3, 0.0), cc(1.0, 0.5), p, 1e-4, &cfg().sched).unwrap();
    assert!(r.pass, "rel {:e} lhs {} rhs {}", r.rel_err, r.lhs, r.rhs);
    // outside the sector
    let p_bad = Complex64::from_polar(1.0, 0.9);
    assert!(matches!(
        verify_weber2(cc(0.3, 0.0), cc(1.0, 0.0), p_bad, 1e-4, &cfg().sched),
        Err(Error::Sector(_))
    ));
}

#[test]
fn lemma1_spot() {
    let r = verify_lemma1(cc(0.4, 0.0), cc(1.0, 0.0), 2.0, 1, 1e-4, &cfg().sched).unwrap();
    assert!(r.pass, "rel {:e} lhs {} rhs {}", r.rel_err, r.lhs, r.rhs);
    let a = Complex64::from_polar(1.0, PI / 8.0);
    let r = verify_lemma1(cc(0.5, 0.0), a, 1.0, -1, 1e-4, &cfg().sched).unwrap();
    assert!(r.pass, "rel {:e} lhs {} rhs {}", r.rel_err, r.lhs, r.rhs);
}

#[test]
fn lemma1_argument_mod_pi() {
    // a and a e^{i pi} agree up to the ulp drift of the argument fold
    let a = Complex64::from_polar(1.0, PI / 8.0);
    let r1 = verify_lemma1(cc(0.4, 0.0), a, 1.0, 1, 1e-4, &cfg().sched).unwrap();
    let r2 = verify_lemma1(cc(0.4, 0.0), -a, 1.0, 1, 1e-4, &cfg().sched).unwrap();
    assert!((r1.lhs - r2.lhs).norm() <= 1e-10 * r1.lhs.norm().max(1e-6));
    assert!((r1.rhs - r2.rhs).norm() <= 1e-13 * r1.rhs.norm());
}

#[test]
fn emot_real_b() {
    let r = verify_emot(cc(0.5, 0.0), 3.0, cc(1.0, 0.0), 1e-6).unwrap();
    assert!(r.pass, "rel {:e} lhs {} rhs {}", r.rel_err, r.lhs, r.rhs);
}

#[test]
fn emot_imaginary_b() {
    let r = verify_emot(cc(0.5, 0.0), 3.0, cc(0.0, 2.0), 1e-6).unwrap();
    assert!(r.pass, "rel {:e} lhs {} rhs {}", r.rel_err, r.lhs, r.rhs);
}

#[test]
fn emot_zero_b() {
    // sin(0) = 0 kills the first integral; the second alone matches -rhs
    let r = verify_emot(cc(0.5, 0.0), 3.0, cc(0.0, 0.0), 1e-6).unwrap();
    assert!(r.pass, "rel {:e} lhs {} rhs {}", r.rel_err, r.lhs, r.rhs);
}

#[test]
fn lemma2_interior_and_endpoint() {
    // c = 0: w = a/2 real
    let r = verify_lemma2(cc(0.5, 0.0), 2.0, 0.0, 1e-6).unwrap();
    assert!(r.pass, "rel {:e} lhs {} rhs {}", r.rel_err, r.lhs, r.rhs);
    // c = a: w = i a/2, endpoint of the admissible range
    let r = verify_lemma2(cc(0.5, 0.0), 2.0, 2.0, 1e-5).unwrap();
    assert!(r.pass, "rel {:e} lhs {} rhs {}", r.rel_err, r.lhs, r.rhs);
}

#[test]
fn lemma2_conjugate_symmetry() {
    // c and -c give conjugate w; for real nu both sides are real and equal
    let r1 = verify_lemma2(cc(0.5, 0.0), 2.0, 1.0, 1e-6).unwrap();
    let r2 = verify_lemma2(cc(0.5, 0.0), 2.0, -1.0, 1e-6).unwrap();
    assert!((r1.lhs - r2.lhs).norm() < 1e-9 * r1.lhs.norm());
    assert!((r1.rhs - r2.rhs).norm() < 1e-12 * r1.rhs.norm());
    assert!(r1.lhs.im.abs() < 1e-9 * r1.lhs.norm());
}

#[test]
fn lemma2_elementary_value() {
    // nu = 1/2, a = 1, c = 0, w = 1/2: rhs from elementary quarter orders;
    // mpmath: 0.8995900777894126
    let (rhs, _) = lemma2_rhs(cc(0.5, 0.0), 1.0, 0.0).unwrap();
    assert!((rhs.re - 0.8995900777894126).abs() < 1e-12, "{rhs}");
    let lhs = lemma2_lhs(cc(0.5, 0.0), 1.0, 0.0, 1e-7).unwrap();
    assert!((lhs.value.re - 0.8995900777894126).abs() < 1e-6, "{} err {:e}", lhs.value, lhs.err_estimate);
}

#[test]
fn pipeline_spot() {
    let r = verify_pipeline(cc(0.2, 0.0), 1.0, PI / 4.0, 1, 1e-6).unwrap();
    assert!(r.pass, "rel {:e}; {:?}", r.rel_err, r.diagnostics);
    // theta = 0: the cosine factor in the tail integral is 1
    let r = verify_pipeline(cc(0.2, 0.0), 1.0, 0.0, 1, 1e-6).unwrap();
    assert!(r.pass, "rel {:e}; {:?}", r.rel_err, r.diagnostics);
}

#[test]
fn consistency_spot() {
    let r = verify_consistency(cc(0.3, 0.0), 1.0, 0.7, 1e-10).unwrap();
    assert!(r.pass, "rel {:e} lhs {} rhs {}", r.rel_err, r.lhs, r.rhs);
    let r = verify_consistency(cc(0.0, 0.1), 2.0, 0.0, 1e-10).unwrap();
    assert!(r.pass, "rel {:e}", r.rel_err);
    // mu -> -mu leaves both sides unchanged
    let r1 = verify_consistency(cc(0.3, 0.0), 1.0, 0.7, 1e-10).unwrap();
    let r2 = verify_consistency(cc(-0.3, 0.0), 1.0, 0.7, 1e-10).unwrap();
    assert!((r1.lhs - r2.lhs).norm() < 1e-10 * r1.lhs.norm());
}

#[test]
fn sweep_ordering_and_summary() {
    let calls: Vec<IdentityCall> = vec![];
    let s = sweep(&calls, &cfg());
    assert_eq!(s.total, 0);
    assert_eq!(s.pass_count, 0);

    let calls = vec![IdentityCall::Consistency { mu: cc(0.3, 0.0), y: 1.0, theta: 0.7 }];
    let s = sweep(&calls, &cfg());
    assert_eq!(s.total, 1);
    assert_eq!(s.pass_count, 1);
    let direct = verify(&calls[0], &cfg()).unwrap();
    assert_eq!(s.reports[0].as_ref().unwrap().lhs, direct.lhs);

    // 3 x 2 grid in row-major order
    let mut grid = Vec::new();
    for nu in [0.3, 0.4, 0.5] {
        for y in [1.0, 2.0] {
            grid.push(IdentityCall::Consistency { mu: cc(nu / 2.0, 0.0), y, theta: 0.3 });
        }
    }
    let s = sweep(&grid, &cfg());
    assert_eq!(s.total, 6);
    for (k, r) in s.reports.iter().enumerate() {
        let r = r.as_ref().unwrap();
        let want_y = [1.0, 2.0][k % 2];
        assert_eq!(r.params[1].1, format_f64(want_y));
    }
}
