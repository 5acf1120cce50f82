//! Double-double arithmetic: unevaluated sums of two `f64`s giving ~31
//! significant digits. Used internally wherever the Bessel machinery has to
//! survive catastrophic cancellation (power-series summation at large |z|,
//! products of exponentially large conjugate factors, reciprocal Gamma).
//!
//! The basic error-free transforms are the classical Dekker/Knuth ones;
//! products use FMA. Transcendentals target ~1e-30 relative accuracy, which
//! is all the callers need; they are not faithfully rounded.

/// Two-float number `hi + lo` with |lo| <= 0.5 ulp(hi).
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, f64::mul_add(a, b, -p))
}

pub const PI: Dd = Dd { hi: 3.141592653589793, lo: 1.2246467991473532e-16 };
pub const PI_2: Dd = Dd { hi: 1.5707963267948966, lo: 6.123233995736766e-17 };
pub const TWO_PI: Dd = Dd { hi: 6.283185307179586, lo: 2.4492935982947064e-16 };
pub const LN2: Dd = Dd { hi: 0.6931471805599453, lo: 2.3190468138462996e-17 };
pub const HALF_LN_2PI: Dd = Dd { hi: 0.9189385332046728, lo: -3.8782941580672414e-17 };

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    #[inline]
    pub fn from_f64(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub fn add(self, o: Dd) -> Dd {
        let (s1, s2) = two_sum(self.hi, o.hi);
        let (t1, t2) = two_sum(self.lo, o.lo);
        let (s1, s2) = quick_two_sum(s1, s2 + t1);
        let (hi, lo) = quick_two_sum(s1, s2 + t2);
        Dd { hi, lo }
    }

    #[inline]
    pub fn add_f64(self, o: f64) -> Dd {
        let (s1, s2) = two_sum(self.hi, o);
        let (hi, lo) = quick_two_sum(s1, s2 + self.lo);
        Dd { hi, lo }
    }

    #[inline]
    pub fn sub(self, o: Dd) -> Dd {
        self.add(o.neg())
    }

    #[inline]
    pub fn neg(self) -> Dd {
        Dd { hi: -self.hi, lo: -self.lo }
    }

    #[inline]
    pub fn mul(self, o: Dd) -> Dd {
        let (p1, p2) = two_prod(self.hi, o.hi);
        let p2 = p2 + self.hi * o.lo + self.lo * o.hi;
        let (hi, lo) = quick_two_sum(p1, p2);
        Dd { hi, lo }
    }

    #[inline]
    pub fn mul_f64(self, o: f64) -> Dd {
        let (p1, p2) = two_prod(self.hi, o);
        let (hi, lo) = quick_two_sum(p1, p2 + self.lo * o);
        Dd { hi, lo }
    }

    #[inline]
    pub fn div(self, o: Dd) -> Dd {
        let q1 = self.hi / o.hi;
        let r = self.sub(o.mul_f64(q1));
        let q2 = r.hi / o.hi;
        let r = r.sub(o.mul_f64(q2));
        let q3 = r.hi / o.hi;
        let (s, e) = quick_two_sum(q1, q2);
        Dd { hi: s, lo: e }.add_f64(q3)
    }

    #[inline]
    pub fn div_f64(self, o: f64) -> Dd {
        self.div(Dd::from_f64(o))
    }

    #[inline]
    pub fn recip(self) -> Dd {
        Dd::ONE.div(self)
    }

    /// Exact scaling by a power of two.
    #[inline]
    pub fn ldexp(self, e: i32) -> Dd {
        let s = f64::powi(2.0, e);
        Dd { hi: self.hi * s, lo: self.lo * s }
    }

    #[inline]
    pub fn abs(self) -> Dd {
        if self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0) { self.neg() } else { self }
    }

    pub fn sqrt(self) -> Dd {
        if self.hi == 0.0 && self.lo == 0.0 {
            return Dd::ZERO;
        }
        debug_assert!(self.hi > 0.0);
        let y = self.hi.sqrt();
        // one Newton step in dd: y + (a - y^2) / (2y)
        let y_dd = Dd::from_f64(y);
        let r = self.sub(y_dd.mul(y_dd)).div_f64(2.0 * y);
        y_dd.add(r)
    }

    /// exp with ~1e-30 relative accuracy for |x| <= ~700.
    pub fn exp(self) -> Dd {
        if self.hi < -745.0 {
            return Dd::ZERO;
        }
        debug_assert!(self.hi < 709.8, "dd exp overflow: {}", self.hi);
        let m = (self.hi / LN2.hi).round();
        let r = self.sub(LN2.mul_f64(m));
        // |r| <= ln2/2; Taylor series
        let mut term = Dd::ONE;
        let mut sum = Dd::ONE;
        for k in 1..=26 {
            term = term.mul(r).div_f64(k as f64);
            sum = sum.add(term);
            if term.hi.abs() < 1.0e-33 * sum.hi.abs() {
                break;
            }
        }
        sum.ldexp(m as i32)
    }

    /// Natural log for positive values; Newton refinement of the f64 seed.
    pub fn ln(self) -> Dd {
        debug_assert!(self.hi > 0.0);
        let y0 = self.hi.ln();
        // y1 = y0 + a*exp(-y0) - 1
        let r = self.mul(Dd::from_f64(-y0).exp()).add_f64(-1.0);
        r.add_f64(y0)
    }

    /// Simultaneous sin and cos, argument reduced modulo pi/2 in dd.
    /// Intended for |x| up to ~1e4 (absolute reduction error ~1e-28 there).
    pub fn sin_cos(self) -> (Dd, Dd) {
        let k = (self.hi / PI_2.hi).round();
        let r = self.sub(PI_2.mul_f64(k));
        let (s, c) = sin_cos_taylor(r);
        match (k as i64).rem_euclid(4) {
            0 => (s, c),
            1 => (c, s.neg()),
            2 => (s.neg(), c.neg()),
            _ => (c.neg(), s),
        }
    }

    pub fn sin(self) -> Dd {
        self.sin_cos().0
    }

    pub fn cos(self) -> Dd {
        self.sin_cos().1
    }

    /// sinh/cosh; Taylor for small arguments to preserve relative accuracy.
    pub fn sinh_cosh(self) -> (Dd, Dd) {
        if self.hi.abs() < 0.1 {
            let x2 = self.mul(self);
            let mut term = self;
            let mut sh = self;
            for k in 1..=10 {
                let d = ((2 * k) * (2 * k + 1)) as f64;
                term = term.mul(x2).div_f64(d);
                sh = sh.add(term);
            }
            let ch = Dd::ONE.add(sh.mul(sh)).sqrt();
            (sh, ch)
        } else {
            let e = self.exp();
            let ei = e.recip();
            (e.sub(ei).ldexp(-1), e.add(ei).ldexp(-1))
        }
    }

    /// atan2 via one trigonometric correction of the f64 seed.
    pub fn atan2(y: Dd, x: Dd) -> Dd {
        if y.hi == 0.0 && y.lo == 0.0 {
            return if x.hi >= 0.0 { Dd::ZERO } else { PI };
        }
        let t0 = y.hi.atan2(x.hi);
        let (s, c) = Dd::from_f64(t0).sin_cos();
        // e = (y cos - x sin) / (x cos + y sin), |e| ~ 1e-16 so atan(e) ~ e
        let num = y.mul(c).sub(x.mul(s));
        let den = x.mul(c).add(y.mul(s));
        Dd::from_f64(t0).add(num.div(den))
    }
}

fn sin_cos_taylor(r: Dd) -> (Dd, Dd) {
    // |r| <= pi/4 + eps
    let r2 = r.mul(r);
    let mut s = r;
    let mut term = r;
    let mut k = 1.0;
    loop {
        term = term.mul(r2).div_f64(-(2.0 * k) * (2.0 * k + 1.0));
        s = s.add(term);
        if term.hi.abs() < 1.0e-34 * (s.hi.abs() + 1.0e-300) || k > 16.0 {
            break;
        }
        k += 1.0;
    }
    let mut c = Dd::ONE;
    let mut term = Dd::ONE;
    let mut k = 1.0;
    loop {
        term = term.mul(r2).div_f64(-(2.0 * k - 1.0) * (2.0 * k));
        c = c.add(term);
        if term.hi.abs() < 1.0e-34 * (c.hi.abs() + 1.0e-300) || k > 16.0 {
            break;
        }
        k += 1.0;
    }
    (s, c)
}

/// Complex double-double.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Cdd {
    pub re: Dd,
    pub im: Dd,
}

impl Cdd {
    pub const ZERO: Cdd = Cdd { re: Dd::ZERO, im: Dd::ZERO };
    pub const ONE: Cdd = Cdd { re: Dd::ONE, im: Dd::ZERO };

    #[inline]
    pub fn new(re: Dd, im: Dd) -> Cdd {
        Cdd { re, im }
    }

    #[inline]
    pub fn from_f64(re: f64, im: f64) -> Cdd {
        Cdd { re: Dd::from_f64(re), im: Dd::from_f64(im) }
    }

    #[inline]
    pub fn to_c64(self) -> num_complex::Complex64 {
        num_complex::Complex64::new(self.re.to_f64(), self.im.to_f64())
    }

    #[inline]
    pub fn add(self, o: Cdd) -> Cdd {
        Cdd::new(self.re.add(o.re), self.im.add(o.im))
    }

    #[inline]
    pub fn sub(self, o: Cdd) -> Cdd {
        Cdd::new(self.re.sub(o.re), self.im.sub(o.im))
    }

    #[inline]
    pub fn neg(self) -> Cdd {
        Cdd::new(self.re.neg(), self.im.neg())
    }

    #[inline]
    pub fn conj(self) -> Cdd {
        Cdd::new(self.re, self.im.neg())
    }

    #[inline]
    pub fn mul(self, o: Cdd) -> Cdd {
        Cdd::new(
            self.re.mul(o.re).sub(self.im.mul(o.im)),
            self.re.mul(o.im).add(self.im.mul(o.re)),
        )
    }

    #[inline]
    pub fn mul_dd(self, o: Dd) -> Cdd {
        Cdd::new(self.re.mul(o), self.im.mul(o))
    }

    #[inline]
    pub fn mul_f64(self, o: f64) -> Cdd {
        Cdd::new(self.re.mul_f64(o), self.im.mul_f64(o))
    }

    pub fn div(self, o: Cdd) -> Cdd {
        let d = o.re.mul(o.re).add(o.im.mul(o.im));
        let num = self.mul(o.conj());
        Cdd::new(num.re.div(d), num.im.div(d))
    }

    #[inline]
    pub fn div_f64(self, o: f64) -> Cdd {
        Cdd::new(self.re.div_f64(o), self.im.div_f64(o))
    }

    #[inline]
    pub fn norm_sqr(self) -> Dd {
        self.re.mul(self.re).add(self.im.mul(self.im))
    }

    #[inline]
    pub fn abs(self) -> f64 {
        self.to_c64().norm()
    }

    pub fn exp(self) -> Cdd {
        let m = self.re.exp();
        let (s, c) = self.im.sin_cos();
        Cdd::new(m.mul(c), m.mul(s))
    }

    pub fn sin(self) -> Cdd {
        let (s, c) = self.re.sin_cos();
        let (sh, ch) = self.im.sinh_cosh();
        Cdd::new(s.mul(ch), c.mul(sh))
    }

    pub fn cos(self) -> Cdd {
        let (s, c) = self.re.sin_cos();
        let (sh, ch) = self.im.sinh_cosh();
        Cdd::new(c.mul(ch), s.mul(sh).neg())
    }

    /// Principal-branch log.
    pub fn ln(self) -> Cdd {
        let r = self.norm_sqr().ln().ldexp(-1);
        Cdd::new(r, Dd::atan2(self.im, self.re))
    }

    /// z^w via exp(w ln z), principal branch of ln.
    pub fn powc(self, w: Cdd) -> Cdd {
        w.mul(self.ln()).exp()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_dd_close(v: Dd, reference: (f64, f64), tol: f64) {
        let err = (v.sub(Dd { hi: reference.0, lo: reference.1 })).to_f64().abs();
        let scale = reference.0.abs().max(1e-300);
        assert!(err / scale < tol, "err {:e} vs {:?} (got {:?})", err, reference, v);
    }

    // References from scripts/reference_values.py (mpmath, 60 digits).
    #[test]
    fn transcendental_spot_values() {
        assert_dd_close(Dd::from_f64(0.5).exp(), (1.6487212707001282, -4.731568479435833e-17), 1e-30);
        assert_dd_close(
            Dd::from_f64(-12.3).exp(),
            (4.551744463083231e-06, 3.675954027968001e-22),
            1e-29,
        );
        assert_dd_close(Dd::from_f64(3.0).ln(), (1.0986122886681098, -9.07129723500153e-17), 1e-30);
        assert_dd_close(Dd::from_f64(1.7).sin(), (0.9916648104524686, 5.077812604198573e-17), 1e-29);
        assert_dd_close(Dd::from_f64(25.1).cos(), (0.9994640538508954, 3.393277173136127e-17), 1e-28);
        assert_dd_close(Dd::from_f64(2.0).sqrt(), (1.4142135623730951, -9.667293313452913e-17), 1e-31);
        assert_dd_close(
            Dd::atan2(Dd::from_f64(3.0), Dd::from_f64(-2.0)),
            (2.158798930342464, 2.1958367134601997e-16),
            1e-29,
        );
    }

    #[test]
    fn arithmetic_identities() {
        let a = Dd::from_f64(1.0).div_f64(3.0);
        let b = a.mul_f64(3.0).add_f64(-1.0);
        assert!(b.to_f64().abs() < 1e-32);

        let x = Dd::from_f64(7.1);
        let r = x.ln().exp().sub(x);
        assert!(r.to_f64().abs() < 1e-29);

        let (s, c) = Dd::from_f64(0.37).sin_cos();
        let one = s.mul(s).add(c.mul(c)).add_f64(-1.0);
        assert!(one.to_f64().abs() < 1e-31);
    }

    #[test]
    fn complex_roundtrips() {
        let z = Cdd::from_f64(0.6, -1.9);
        let w = z.ln().exp().sub(z);
        assert!(w.abs() < 1e-29);

        // exp(i pi) = -1 with dd pi
        let e = Cdd::new(Dd::ZERO, PI).exp();
        assert!(e.re.add_f64(1.0).to_f64().abs() < 1e-31);
        assert!(e.im.to_f64().abs() < 1e-31);

        // sin^2 + cos^2 = 1
        let s = z.sin();
        let c = z.cos();
        let one = s.mul(s).add(c.mul(c)).sub(Cdd::ONE);
        assert!(one.abs() < 1e-28);
    }
}
