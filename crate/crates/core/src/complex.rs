//! Extended-precision complex arithmetic on top of `rug::Float`.
//!
//! MPFR gives us correctly rounded real arithmetic; this module layers a
//! complex type over pairs of floats. Logs and powers are principal-branch
//! throughout, with the argument normalized to (-pi, pi].

use rug::ops::Pow;
use rug::Float;
use std::fmt;

/// Extended-precision real value (alias for the MPFR-backed float).
pub type PrecReal = Float;

/// Extended-precision complex value, stored as a rectangular float pair.
#[derive(Clone, PartialEq)]
pub struct PrecComplex {
    pub re: Float,
    pub im: Float,
}

impl fmt::Debug for PrecComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} + {}i)", self.re, self.im)
    }
}

impl fmt::Display for PrecComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.im.is_sign_positive() {
            write!(f, "{}+{}i", self.re, self.im)
        } else {
            write!(f, "{}{}i", self.re, self.im)
        }
    }
}

impl PrecComplex {
    pub fn new(re: Float, im: Float) -> Self {
        Self { re, im }
    }

    pub fn from_real(re: Float) -> Self {
        let prec = re.prec();
        Self {
            im: Float::new(prec),
            re,
        }
    }

    pub fn zero(prec: u32) -> Self {
        Self {
            re: Float::new(prec),
            im: Float::new(prec),
        }
    }

    pub fn one(prec: u32) -> Self {
        Self {
            re: Float::with_val(prec, 1),
            im: Float::new(prec),
        }
    }

    pub fn i(prec: u32) -> Self {
        Self {
            re: Float::new(prec),
            im: Float::with_val(prec, 1),
        }
    }

    pub fn with_f64(prec: u32, re: f64, im: f64) -> Self {
        Self {
            re: Float::with_val(prec, re),
            im: Float::with_val(prec, im),
        }
    }

    pub fn prec(&self) -> u32 {
        self.re.prec()
    }

    pub fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn set_prec(&mut self, prec: u32) {
        self.re.set_prec(prec);
        self.im.set_prec(prec);
    }

    pub fn conj(&self) -> Self {
        Self {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// |z| via hypot (no intermediate overflow).
    pub fn abs(&self) -> Float {
        self.re.clone().hypot(&self.im)
    }

    /// |z|^2.
    pub fn norm_sqr(&self) -> Float {
        let p = self.prec();
        Float::with_val(p, &self.re * &self.re) + Float::with_val(p, &self.im * &self.im)
    }

    /// Principal argument in (-pi, pi]. arg(0) = 0.
    pub fn arg(&self) -> Float {
        if self.is_zero() {
            return Float::new(self.prec());
        }
        self.im.clone().atan2(&self.re)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let p = self.prec();
        Self {
            re: Float::with_val(p, &self.re + &rhs.re),
            im: Float::with_val(p, &self.im + &rhs.im),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let p = self.prec();
        Self {
            re: Float::with_val(p, &self.re - &rhs.re),
            im: Float::with_val(p, &self.im - &rhs.im),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let p = self.prec();
        let re = Float::with_val(p, &self.re * &rhs.re) - Float::with_val(p, &self.im * &rhs.im);
        let im = Float::with_val(p, &self.re * &rhs.im) + Float::with_val(p, &self.im * &rhs.re);
        Self { re, im }
    }

    pub fn div(&self, rhs: &Self) -> Self {
        let d = rhs.norm_sqr();
        let num = self.mul(&rhs.conj());
        Self {
            re: num.re / &d,
            im: num.im / &d,
        }
    }

    pub fn recip(&self) -> Self {
        let d = self.norm_sqr();
        Self {
            re: self.re.clone() / &d,
            im: -(self.im.clone() / &d),
        }
    }

    pub fn add_real(&self, rhs: &Float) -> Self {
        let p = self.prec();
        Self {
            re: Float::with_val(p, &self.re + rhs),
            im: self.im.clone(),
        }
    }

    pub fn sub_real(&self, rhs: &Float) -> Self {
        let p = self.prec();
        Self {
            re: Float::with_val(p, &self.re - rhs),
            im: self.im.clone(),
        }
    }

    pub fn mul_real(&self, rhs: &Float) -> Self {
        let p = self.prec();
        Self {
            re: Float::with_val(p, &self.re * rhs),
            im: Float::with_val(p, &self.im * rhs),
        }
    }

    pub fn div_real(&self, rhs: &Float) -> Self {
        let p = self.prec();
        Self {
            re: Float::with_val(p, &self.re / rhs),
            im: Float::with_val(p, &self.im / rhs),
        }
    }

    pub fn add_i64(&self, rhs: i64) -> Self {
        let p = self.prec();
        Self {
            re: Float::with_val(p, &self.re + rhs),
            im: self.im.clone(),
        }
    }

    pub fn mul_i64(&self, rhs: i64) -> Self {
        let p = self.prec();
        Self {
            re: Float::with_val(p, &self.re * rhs),
            im: Float::with_val(p, &self.im * rhs),
        }
    }

    /// Multiply by i.
    pub fn mul_i(&self) -> Self {
        Self {
            re: -self.im.clone(),
            im: self.re.clone(),
        }
    }

    /// z^2, slightly cheaper than mul(self, self).
    pub fn square(&self) -> Self {
        let p = self.prec();
        let re = Float::with_val(p, &self.re * &self.re) - Float::with_val(p, &self.im * &self.im);
        let im = Float::with_val(p, 2) * Float::with_val(p, &self.re * &self.im);
        Self { re, im }
    }

    /// Principal logarithm: log|z| + i arg(z).
    pub fn ln(&self) -> Self {
        Self {
            re: self.abs().ln(),
            im: self.arg(),
        }
    }

    pub fn exp(&self) -> Self {
        let r = self.re.clone().exp();
        let (s, c) = self.im.clone().sin_cos(Float::new(self.prec()));
        Self {
            re: Float::with_val(self.prec(), &r * &c),
            im: Float::with_val(self.prec(), &r * &s),
        }
    }

    /// exp(z) - 1, stable for small |z|.
    pub fn exp_m1(&self) -> Self {
        let p = self.prec();
        // e^a cos b - 1 = expm1(a) cos b - 2 sin^2(b/2),  e^a sin b
        let em1 = self.re.clone().exp_m1();
        let (s, c) = self.im.clone().sin_cos(Float::new(p));
        let half_b = Float::with_val(p, &self.im / 2u32);
        let sh = half_b.sin();
        let re = Float::with_val(p, &em1 * &c)
            - Float::with_val(p, 2) * Float::with_val(p, &sh * &sh);
        let ea = em1 + 1u32;
        Self {
            re,
            im: Float::with_val(p, &ea * &s),
        }
    }

    pub fn sqrt(&self) -> Self {
        let p = self.prec();
        if self.im.is_zero() && self.re.is_sign_positive() {
            return Self::from_real(self.re.clone().sqrt());
        }
        // principal square root from polar form
        let r = self.abs().sqrt();
        let half_arg = self.arg() / 2u32;
        let (s, c) = half_arg.sin_cos(Float::new(p));
        Self {
            re: Float::with_val(p, &r * &c),
            im: Float::with_val(p, &r * &s),
        }
    }

    /// Principal power z^w = exp(w log z).
    pub fn pow(&self, w: &Self) -> Self {
        if w.is_real() {
            return self.pow_real(&w.re);
        }
        w.mul(&self.ln()).exp()
    }

    /// z^t for real t, via the principal branch.
    pub fn pow_real(&self, t: &Float) -> Self {
        let p = self.prec();
        if self.im.is_zero() && self.re.is_sign_positive() && !self.re.is_zero() {
            return Self::from_real(Float::with_val(p, (&self.re).pow(t)));
        }
        self.ln().mul_real(t).exp()
    }

    pub fn pow_i64(&self, n: i64) -> Self {
        let p = self.prec();
        if n == 0 {
            return Self::one(p);
        }
        let mut base = if n > 0 { self.clone() } else { self.recip() };
        let mut e = n.unsigned_abs();
        let mut acc = Self::one(p);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.square();
            e >>= 1;
        }
        acc
    }

    pub fn sin(&self) -> Self {
        let p = self.prec();
        let (sa, ca) = self.re.clone().sin_cos(Float::new(p));
        let (shb, chb) = self.im.clone().sinh_cosh(Float::new(p));
        Self {
            re: Float::with_val(p, &sa * &chb),
            im: Float::with_val(p, &ca * &shb),
        }
    }

    pub fn cos(&self) -> Self {
        let p = self.prec();
        let (sa, ca) = self.re.clone().sin_cos(Float::new(p));
        let (shb, chb) = self.im.clone().sinh_cosh(Float::new(p));
        Self {
            re: Float::with_val(p, &ca * &chb),
            im: -Float::with_val(p, &sa * &shb),
        }
    }

    pub fn cot(&self) -> Self {
        self.cos().div(&self.sin())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rug::Float;

    const P: u32 = 200;

    fn close(a: &Float, b: f64, tol: f64) -> bool {
        (a.to_f64() - b).abs() < tol
    }

    #[test]
    fn principal_branch_log() {
        // log(-1 + 0i) must land on the +pi side of the cut convention
        let z = PrecComplex::with_f64(P, -1.0, 0.0);
        let l = z.ln();
        assert!(close(&l.re, 0.0, 1e-50));
        assert!(close(&l.im, std::f64::consts::PI, 1e-15));
    }

    #[test]
    fn exp_log_roundtrip() {
        let z = PrecComplex::with_f64(P, 0.7, -2.3);
        let w = z.ln().exp();
        assert!(close(&w.re, 0.7, 1e-40));
        assert!(close(&w.im, -2.3, 1e-40));
    }

    #[test]
    fn expm1_small_argument_is_stable() {
        let z = PrecComplex::with_f64(P, 1e-30, 1e-30);
        let e = z.exp_m1();
        // e^z - 1 = z + z^2/2 + ..., so both parts are ~1e-30
        assert!(close(&(e.re * Float::with_val(P, 1e30)), 1.0, 1e-10));
        assert!(close(&(e.im * Float::with_val(P, 1e30)), 1.0, 1e-10));
    }

    #[test]
    fn powers_match_repeated_multiplication() {
        let z = PrecComplex::with_f64(P, 1.2, -0.4);
        let a = z.pow_i64(5);
        let b = z.mul(&z).mul(&z).mul(&z).mul(&z);
        assert!((a.sub(&b)).abs().to_f64() < 1e-50);
        // real-exponent path agrees on positive reals
        let x = PrecComplex::with_f64(P, 3.0, 0.0);
        let t = Float::with_val(P, 0.5);
        assert!(close(&x.pow_real(&t).re, 3f64.sqrt(), 1e-15));
    }

    #[test]
    fn trig_identity() {
        let z = PrecComplex::with_f64(P, 0.3, 1.1);
        let s2 = z.sin().square();
        let c2 = z.cos().square();
        let one = s2.add(&c2);
        assert!(close(&one.re, 1.0, 1e-45));
        assert!(close(&one.im, 0.0, 1e-45));
    }
}
