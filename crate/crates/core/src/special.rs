//! Classical special functions at working precision: digamma, polygamma,
//! gamma, Riemann and Hurwitz zeta.
//!
//! Real arguments go to MPFR where it has the function (digamma, gamma,
//! zeta); complex arguments use recurrence shifts into the asymptotic
//! region followed by Bernoulli (Euler-Maclaurin / Stirling) series. The
//! shift radius comes from the context threshold so the series reach full
//! working precision before their divergent tails kick in.

use crate::bernoulli::bernoulli;
use crate::complex::{PrecComplex, PrecReal};
use crate::context::EvalContext;
use crate::error::{Error, Result};
use rug::ops::Pow;
use rug::{Float, Integer, Rational};

/// B_{2j} / (2j)! as an exact rational.
fn bern_over_fact(j: u32) -> Rational {
    bernoulli(2 * j) / Rational::from(Integer::from(Integer::factorial(2 * j)))
}

/// Steps needed so that z + K has |.| >= radius and Re >= 0.
fn shift_steps(re: f64, im: f64, radius: f64) -> u64 {
    let target_re = (radius * radius - im * im).max(0.0).sqrt();
    if re >= target_re {
        0
    } else {
        (target_re - re).ceil() as u64 + 1
    }
}

fn is_nonpositive_integer(z: &PrecComplex) -> bool {
    z.im.is_zero() && z.re.is_integer() && (z.re.is_zero() || z.re.is_sign_negative())
}

/// Digamma of a complex argument by upward recurrence plus the Bernoulli
/// asymptotic series. No reflection is used, so the reflection identity
/// stays an honest cross-check.
pub fn digamma(ctx: &EvalContext, z: &PrecComplex) -> Result<PrecComplex> {
    if is_nonpositive_integer(z) {
        return Err(Error::Pole(format!("digamma pole at {z}")));
    }
    if z.is_real() && z.re.is_sign_positive() {
        return Ok(PrecComplex::from_real(ctx.real(&z.re).digamma()));
    }
    let wb = ctx.working_bits();
    let mut w = PrecComplex {
        re: ctx.real(&z.re),
        im: ctx.real(&z.im),
    };
    let k = shift_steps(
        w.re.to_f64(),
        w.im.to_f64(),
        ctx.shift_threshold(),
    );
    // psi(z) = psi(z + K) - sum_{j=0}^{K-1} 1/(z+j)
    let mut shift = PrecComplex::zero(wb);
    for _ in 0..k {
        shift = shift.add(&w.recip());
        w = w.add_i64(1);
    }
    let asym = digamma_asymptotic(ctx, &w)?;
    Ok(asym.sub(&shift))
}

fn digamma_asymptotic(ctx: &EvalContext, w: &PrecComplex) -> Result<PrecComplex> {
    let wb = ctx.working_bits();
    let eps = ctx.eps_working();
    let mut acc = w.ln();
    acc = acc.sub(&w.recip().div_real(&ctx.real(2)));
    let u = w.square().recip();
    let mut v = u.clone();
    let mut prev = Float::with_val(wb, f64::INFINITY);
    for j in 1..=u32::MAX {
        let coeff = bernoulli(2 * j) / Rational::from(2 * j);
        let term = v.mul_real(&Float::with_val(wb, &coeff));
        let mag = term.abs();
        acc = acc.sub(&term);
        if mag < eps {
            return Ok(acc);
        }
        if mag > prev {
            return Err(Error::Convergence(
                "digamma asymptotic series stalled before target accuracy".into(),
            ));
        }
        prev = mag;
        v = v.mul(&u);
    }
    unreachable!()
}

/// Polygamma psi^(m), m >= 1, via m! zeta(m+1, z) on the principal branch.
pub fn polygamma(ctx: &EvalContext, m: u32, z: &PrecComplex) -> Result<PrecComplex> {
    if m == 0 {
        return digamma(ctx, z);
    }
    if is_nonpositive_integer(z) {
        return Err(Error::Pole(format!("polygamma pole at {z}")));
    }
    // psi^(m)(z) = (-1)^(m+1) m! zeta(m+1, z)
    let s = PrecComplex::from_real(ctx.real(m + 1));
    let hz = hurwitz_zeta_core(ctx, &s, z)?;
    let fact = ctx.real(Integer::from(Integer::factorial(m)));
    let sign = if m % 2 == 1 { 1i64 } else { -1i64 };
    Ok(hz.mul_real(&fact).mul_i64(sign))
}

/// Exact zeta(1-n) for n >= 1: (-1)^{n+1} B_n / n.
pub fn zeta_neg_int(n: u32) -> Rational {
    assert!(n >= 1);
    let b = bernoulli(n);
    let v = b / Rational::from(n);
    if n % 2 == 0 {
        -v
    } else {
        v
    }
}

/// Riemann zeta for complex s (pole at s = 1). Uses Euler-Maclaurin for
/// Re(s) >= -0.5 and the functional equation below that.
pub fn riemann_zeta(ctx: &EvalContext, s: &PrecComplex) -> Result<PrecComplex> {
    if s.is_real() {
        return Ok(PrecComplex::from_real(riemann_zeta_real(ctx, &s.re)?));
    }
    if s.re.to_f64() >= -0.5 {
        let one = PrecComplex::one(ctx.working_bits());
        return hurwitz_zeta_core(ctx, s, &one);
    }
    // zeta(s) = 2^s pi^(s-1) sin(pi s / 2) Gamma(1-s) zeta(1-s)
    let wb = ctx.working_bits();
    let pi = ctx.real(rug::float::Constant::Pi);
    let one = PrecComplex::one(wb);
    let s1 = one.sub(s);
    let two_pow = PrecComplex::from_real(ctx.real(2)).pow(s);
    let pi_pow = PrecComplex::from_real(pi.clone()).pow(&s.sub(&one));
    let sin_term = s.mul_real(&pi).div_real(&ctx.real(2)).sin();
    let g = gamma(ctx, &s1)?;
    let z = riemann_zeta(ctx, &s1)?;
    Ok(two_pow.mul(&pi_pow).mul(&sin_term).mul(&g).mul(&z))
}

/// Riemann zeta for real s != 1 (MPFR-native).
pub fn riemann_zeta_real(ctx: &EvalContext, s: &Float) -> Result<Float> {
    if *s == 1u32 {
        return Err(Error::Pole("zeta pole at s = 1".into()));
    }
    Ok(ctx.real(s).zeta())
}

/// Hurwitz zeta with the spec's domain restriction Re(a) > 0.
pub fn hurwitz_zeta(ctx: &EvalContext, s: &PrecComplex, a: &PrecComplex) -> Result<PrecComplex> {
    if !a.re.is_sign_positive() || a.re.is_zero() {
        return Err(Error::Domain(format!(
            "hurwitz_zeta requires Re(a) > 0, got a = {a}"
        )));
    }
    hurwitz_zeta_core(ctx, s, a)
}

/// Euler-Maclaurin Hurwitz zeta; accepts any a off the non-positive real
/// integers (the shift handles Re(a) <= 0 internally).
pub(crate) fn hurwitz_zeta_core(
    ctx: &EvalContext,
    s: &PrecComplex,
    a: &PrecComplex,
) -> Result<PrecComplex> {
    if s.is_real() && s.re == 1u32 {
        return Err(Error::Pole("hurwitz_zeta pole at s = 1".into()));
    }
    if is_nonpositive_integer(a) {
        return Err(Error::Pole(format!("hurwitz_zeta pole at a = {a}")));
    }
    let wb = ctx.working_bits();
    let eps = ctx.eps_working();
    let radius = ctx.shift_threshold() + 0.6 * s.abs().to_f64();
    let n = shift_steps(a.re.to_f64(), a.im.to_f64(), radius);

    let minus_s = s.neg();
    let mut head = PrecComplex::zero(wb);
    let mut ak = PrecComplex {
        re: ctx.real(&a.re),
        im: ctx.real(&a.im),
    };
    for _ in 0..n {
        head = head.add(&ak.pow(&minus_s));
        ak = ak.add_i64(1);
    }
    let w = ak; // a + N, |w| >= radius
    let one = PrecComplex::one(wb);
    let w_pow_1ms = w.pow(&one.sub(s));
    let sm1 = s.sub(&one);
    let t1 = w_pow_1ms.div(&sm1);
    let w_pow_ms = w.pow(&minus_s);
    let t2 = w_pow_ms.div_real(&ctx.real(2));

    let mut acc = head.add(&t1).add(&t2);
    let scale = {
        let mut m = acc.abs();
        let h = head.abs();
        if h > m {
            m = h;
        }
        m + Float::with_val(wb, 1)
    };
    let eps_abs = Float::with_val(wb, &eps * &scale);

    // term_j = B_{2j}/(2j)! (s)_{2j-1} w^{1-s-2j}
    let w2inv = w.square().recip();
    // c_j = (s)_{2j-1} w^{1-s-2j}; start at j = 1
    let mut c = s.mul(&w_pow_1ms).mul(&w2inv);
    let mut prev = Float::with_val(wb, f64::INFINITY);
    for j in 1..=2000u32 {
        let term = c.mul_real(&Float::with_val(wb, &bern_over_fact(j)));
        let mag = term.abs();
        acc = acc.add(&term);
        if mag < eps_abs {
            return Ok(acc);
        }
        if mag > prev {
            return Err(Error::Convergence(
                "hurwitz_zeta Euler-Maclaurin tail stalled".into(),
            ));
        }
        prev = mag;
        let f1 = s.add_i64(2 * j as i64 - 1);
        let f2 = s.add_i64(2 * j as i64);
        c = c.mul(&f1).mul(&f2).mul(&w2inv);
    }
    Err(Error::Convergence("hurwitz_zeta: term cap exceeded".into()))
}

/// Real-argument Hurwitz zeta fast path (s != 1, a > 0).
pub(crate) fn hurwitz_zeta_real(ctx: &EvalContext, s: &Float, a: &Float) -> Result<Float> {
    if *s == 1u32 {
        return Err(Error::Pole("hurwitz_zeta pole at s = 1".into()));
    }
    if !(a.is_sign_positive() && !a.is_zero()) {
        return Err(Error::Domain("hurwitz_zeta_real requires a > 0".into()));
    }
    let wb = ctx.working_bits();
    let eps = ctx.eps_working();
    let radius = ctx.shift_threshold() + 0.6 * s.to_f64().abs();
    let n = shift_steps(a.to_f64(), 0.0, radius);

    let minus_s = -ctx.real(s);
    let mut head = Float::new(wb);
    let mut ak = ctx.real(a);
    for _ in 0..n {
        head += Float::with_val(wb, (&ak).pow(&minus_s));
        ak += 1;
    }
    let w = ak;
    let one_minus_s = ctx.real(1) - s;
    let w_pow_1ms = Float::with_val(wb, (&w).pow(&one_minus_s));
    let sm1 = Float::with_val(wb, s - 1u32);
    let t1 = Float::with_val(wb, &w_pow_1ms / &sm1);
    let t2 = Float::with_val(wb, (&w).pow(&minus_s)) / 2u32;

    let mut acc = Float::with_val(wb, &head + &t1) + t2;
    let scale = Float::with_val(wb, head.clone().abs() + acc.clone().abs()) + 1u32;
    let eps_abs = eps * scale;

    let w2inv = Float::with_val(wb, (&w).pow(-2i32));
    let mut c = Float::with_val(wb, s * &w_pow_1ms) * &w2inv;
    let mut prev = Float::with_val(wb, f64::INFINITY);
    for j in 1..=2000u32 {
        let term = Float::with_val(wb, &c * &Float::with_val(wb, &bern_over_fact(j)));
        let mag = term.clone().abs();
        acc += term;
        if mag < eps_abs {
            return Ok(acc);
        }
        if mag > prev {
            return Err(Error::Convergence(
                "hurwitz_zeta_real Euler-Maclaurin tail stalled".into(),
            ));
        }
        prev = mag;
        let f1 = Float::with_val(wb, s + (2 * j - 1));
        let f2 = Float::with_val(wb, s + 2 * j);
        c = c * f1 * f2 * &w2inv;
    }
    Err(Error::Convergence(
        "hurwitz_zeta_real: term cap exceeded".into(),
    ))
}

/// d/ds zeta(s, a) for real s (away from 1) and real a > 0, by the
/// term-by-term derivative of the Euler-Maclaurin formula.
pub(crate) fn hurwitz_zeta_s_deriv(ctx: &EvalContext, s: &Float, a: &Float) -> Result<Float> {
    if *s == 1u32 {
        return Err(Error::Pole("hurwitz zeta derivative pole at s = 1".into()));
    }
    if !(a.is_sign_positive() && !a.is_zero()) {
        return Err(Error::Domain("requires a > 0".into()));
    }
    let wb = ctx.working_bits();
    let eps = ctx.eps_working();
    let radius = ctx.shift_threshold() + 0.6 * s.to_f64().abs();
    let n = shift_steps(a.to_f64(), 0.0, radius);

    let minus_s = -ctx.real(s);
    // d/ds (a+k)^{-s} = -log(a+k) (a+k)^{-s}
    let mut head = Float::new(wb);
    let mut ak = ctx.real(a);
    for _ in 0..n {
        let lg = ak.clone().ln();
        head -= lg * Float::with_val(wb, (&ak).pow(&minus_s));
        ak += 1;
    }
    let w = ak;
    let lw = w.clone().ln();
    let one_minus_s = ctx.real(1) - s;
    let w_pow_1ms = Float::with_val(wb, (&w).pow(&one_minus_s));
    let sm1 = ctx.real(s) - 1u32;
    // d/ds [w^{1-s}/(s-1)] = w^{1-s} (-log w (s-1) - 1)/(s-1)^2
    let t1 = Float::with_val(wb, &w_pow_1ms)
        * (Float::with_val(wb, -&lw) * &sm1 - 1u32)
        / Float::with_val(wb, (&sm1).pow(2i32));
    // d/ds [w^{-s}/2] = -log w w^{-s}/2
    let t2 = Float::with_val(wb, -&lw) * Float::with_val(wb, (&w).pow(&minus_s)) / 2u32;

    let mut acc = head + t1 + t2;
    let scale = acc.clone().abs() + 1u32;
    let eps_abs = eps * scale;

    // term_j = B_{2j}/(2j)! [ (s)'_{2j-1} - (s)_{2j-1} log w ] w^{1-s-2j}
    // with (s)'_{2j-1} = (s)_{2j-1} sum_{i=0}^{2j-2} 1/(s+i)
    let w2inv = Float::with_val(wb, (&w).pow(-2i32));
    let mut poch = ctx.real(s); // (s)_{2j-1}
    let mut poch_dsum = ctx.real(s).recip(); // sum 1/(s+i), i = 0..2j-2
    let mut wpow = Float::with_val(wb, &w_pow_1ms * &w2inv); // w^{1-s-2j}
    let mut prev = Float::with_val(wb, f64::INFINITY);
    for j in 1..=2000u32 {
        let bf = Float::with_val(wb, &bern_over_fact(j));
        let term = Float::with_val(
            wb,
            &poch * &Float::with_val(wb, &poch_dsum - &lw),
        ) * &wpow
            * bf;
        let mag = term.clone().abs();
        acc += term;
        if mag < eps_abs {
            return Ok(acc);
        }
        if mag > prev {
            return Err(Error::Convergence(
                "hurwitz_zeta_s_deriv tail stalled".into(),
            ));
        }
        prev = mag;
        let i1 = Float::with_val(wb, s + (2 * j - 1));
        let i2 = Float::with_val(wb, s + 2 * j);
        poch_dsum += i1.clone().recip() + i2.clone().recip();
        poch = poch * i1 * i2;
        wpow *= &w2inv;
    }
    Err(Error::Convergence(
        "hurwitz_zeta_s_deriv: term cap exceeded".into(),
    ))
}

/// Gamma for complex arguments: recurrence shift plus the Stirling series.
pub fn gamma(ctx: &EvalContext, z: &PrecComplex) -> Result<PrecComplex> {
    if is_nonpositive_integer(z) {
        return Err(Error::Pole(format!("gamma pole at {z}")));
    }
    if z.is_real() && z.re.is_sign_positive() {
        return Ok(PrecComplex::from_real(ctx.real(&z.re).gamma()));
    }
    let wb = ctx.working_bits();
    let mut w = PrecComplex {
        re: ctx.real(&z.re),
        im: ctx.real(&z.im),
    };
    let k = shift_steps(w.re.to_f64(), w.im.to_f64(), ctx.shift_threshold());
    // Gamma(z) = Gamma(z+K) / (z (z+1) ... (z+K-1))
    let mut denom = PrecComplex::one(wb);
    for _ in 0..k {
        denom = denom.mul(&w);
        w = w.add_i64(1);
    }
    let lg = ln_gamma_stirling(ctx, &w)?;
    Ok(lg.exp().div(&denom))
}

fn ln_gamma_stirling(ctx: &EvalContext, w: &PrecComplex) -> Result<PrecComplex> {
    let wb = ctx.working_bits();
    let eps = ctx.eps_working();
    let half = ctx.real(0.5);
    let ln2pi = ctx.real(rug::float::Constant::Pi).ln() + ctx.real(2u32).ln();
    let lw = w.ln();
    // (w - 1/2) log w - w + log(2 pi)/2
    let mut acc = w.sub_real(&half).mul(&lw).sub(w);
    acc = acc.add_real(&Float::with_val(wb, &ln2pi / 2u32));
    // + sum_j B_{2j} / (2j (2j-1) w^{2j-1})
    let w2inv = w.square().recip();
    let mut v = w.recip();
    let mut prev = Float::with_val(wb, f64::INFINITY);
    for j in 1..=2000u32 {
        let coeff = bernoulli(2 * j)
            / Rational::from((2 * j) * (2 * j - 1));
        let term = v.mul_real(&Float::with_val(wb, &coeff));
        let mag = term.abs();
        acc = acc.add(&term);
        if mag < eps {
            return Ok(acc);
        }
        if mag > prev {
            return Err(Error::Convergence("Stirling series stalled".into()));
        }
        prev = mag;
        v = v.mul(&w2inv);
    }
    Err(Error::Convergence("Stirling series: term cap".into()))
}

/// 1 / (e^z - 1), stable across the whole half-plane Re(z) > 0: switches to
/// e^-z once e^z dominates (the relative error e^-z is below working
/// precision there), and to expm1 near 0.
pub(crate) fn inv_expm1(ctx: &EvalContext, z: &PrecComplex) -> PrecComplex {
    let cutoff = (ctx.working_digits() as f64 + 8.0) * std::f64::consts::LN_10;
    if z.re.to_f64() > cutoff {
        return z.neg().exp();
    }
    z.exp_m1().recip()
}

/// Real version of [`inv_expm1`].
pub(crate) fn inv_expm1_real(ctx: &EvalContext, t: &Float) -> Float {
    let cutoff = (ctx.working_digits() as f64 + 8.0) * std::f64::consts::LN_10;
    if t.to_f64() > cutoff {
        return (-ctx.real(t)).exp();
    }
    ctx.real(t).exp_m1().recip()
}

/// All divisors of n in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1);
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Number-of-divisors function d(n).
pub fn divisor_count(n: u64) -> u64 {
    divisors(n).len() as u64
}

/// Generalized divisor sum sigma_s(n) = sum_{d | n} d^s for real s.
pub fn divisor_sigma(ctx: &EvalContext, s: &PrecReal, n: u64) -> PrecReal {
    let wb = ctx.working_bits();
    let mut acc = Float::new(wb);
    for d in divisors(n) {
        acc += Float::with_val(wb, ctx.real(d).pow(s));
    }
    acc
}

/// sigma_s(n) for complex s (used by the E_{2s} q-series).
pub fn divisor_sigma_complex(ctx: &EvalContext, s: &PrecComplex, n: u64) -> PrecComplex {
    let wb = ctx.working_bits();
    let mut acc = PrecComplex::zero(wb);
    for d in divisors(n) {
        let ln_d = ctx.real(d).ln();
        acc = acc.add(&s.mul_real(&ln_d).exp());
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> EvalContext {
        EvalContext::new(40).unwrap()
    }

    fn tol(c: &EvalContext) -> Float {
        use rug::ops::Pow;
        Float::with_val(c.working_bits(), 10f64).pow(-(c.precision_digits() as i32))
    }

    #[test]
    fn digamma_known_values() {
        let c = ctx();
        let euler = c.real(rug::float::Constant::Euler);
        let one = PrecComplex::from_real(c.real(1));
        let d1 = digamma(&c, &one).unwrap();
        assert!((d1.re + &euler).abs() < tol(&c));

        // psi(1/2) = -gamma - 2 log 2
        let half = PrecComplex::from_real(c.real(0.5));
        let dh = digamma(&c, &half).unwrap();
        let expect = -euler.clone() - 2u32 * c.real(2).ln();
        assert!((dh.re - expect).abs() < tol(&c));

        // psi(2) = 1 - gamma
        let two = PrecComplex::from_real(c.real(2));
        let d2 = digamma(&c, &two).unwrap();
        let expect = c.real(1) - euler;
        assert!((d2.re - expect).abs() < tol(&c));
    }

    #[test]
    fn digamma_pole() {
        let c = ctx();
        for v in [0.0, -1.0, -7.0] {
            let z = PrecComplex::from_real(c.real(v));
            assert!(matches!(digamma(&c, &z), Err(Error::Pole(_))));
        }
    }

    #[test]
    fn digamma_recurrence_complex() {
        // psi(z+1) = psi(z) + 1/z at a complex point evaluated two ways
        let c = ctx();
        let z = PrecComplex::with_f64(c.working_bits(), -3.3, 1.7);
        let lhs = digamma(&c, &z.add_i64(1)).unwrap();
        let rhs = digamma(&c, &z).unwrap().add(&z.recip());
        assert!(lhs.sub(&rhs).abs() < tol(&c));
    }

    #[test]
    fn polygamma_known_values() {
        let c = ctx();
        let pi = c.real(rug::float::Constant::Pi);
        let one = PrecComplex::from_real(c.real(1));
        let p11 = polygamma(&c, 1, &one).unwrap();
        let expect = Float::with_val(c.working_bits(), (&pi).pow(2i32)) / 6u32;
        assert!((p11.re - expect).abs() < tol(&c));

        let p21 = polygamma(&c, 2, &one).unwrap();
        let z3 = c.real(3).zeta();
        let expect = -2i32 * z3;
        assert!((p21.re - expect).abs() < tol(&c));

        let half = PrecComplex::from_real(c.real(0.5));
        let p1h = polygamma(&c, 1, &half).unwrap();
        let expect = Float::with_val(c.working_bits(), (&pi).pow(2i32)) / 2u32;
        assert!((p1h.re - expect).abs() < tol(&c));
    }

    #[test]
    fn zeta_special_points() {
        let c = ctx();
        let z2 = riemann_zeta(&c, &PrecComplex::from_real(c.real(2))).unwrap();
        let pi = c.real(rug::float::Constant::Pi);
        let expect = Float::with_val(c.working_bits(), (&pi).pow(2i32)) / 6u32;
        assert!((z2.re - expect).abs() < tol(&c));

        let z0 = riemann_zeta(&c, &PrecComplex::from_real(c.real(0))).unwrap();
        assert!((z0.re + c.real(0.5)).abs() < tol(&c));

        let zm1 = riemann_zeta(&c, &PrecComplex::from_real(c.real(-1))).unwrap();
        let expect = c.real(-1) / c.real(12);
        assert!((zm1.re - expect).abs() < tol(&c));

        // exact values off the Bernoulli route
        assert_eq!(zeta_neg_int(1), Rational::from((-1, 2)));
        assert_eq!(zeta_neg_int(2), Rational::from((-1, 12)));
        assert_eq!(zeta_neg_int(3), Rational::new());
        assert_eq!(zeta_neg_int(4), Rational::from((1, 120)));
    }

    #[test]
    fn zeta_pole_at_one() {
        let c = ctx();
        assert!(matches!(
            riemann_zeta(&c, &PrecComplex::from_real(c.real(1))),
            Err(Error::Pole(_))
        ));
    }

    #[test]
    fn hurwitz_matches_known() {
        let c = ctx();
        let two = PrecComplex::from_real(c.real(2));
        let one = PrecComplex::from_real(c.real(1));
        let h = hurwitz_zeta(&c, &two, &one).unwrap();
        let pi = c.real(rug::float::Constant::Pi);
        let expect = Float::with_val(c.working_bits(), (&pi).pow(2i32)) / 6u32;
        assert!((h.re.clone() - expect).abs() < tol(&c));

        let half = PrecComplex::from_real(c.real(0.5));
        let h2 = hurwitz_zeta(&c, &two, &half).unwrap();
        let expect = Float::with_val(c.working_bits(), (&pi).pow(2i32)) / 2u32;
        assert!((h2.re.clone() - expect).abs() < tol(&c));

        // zeta(3, 2) = zeta(3) - 1
        let three = PrecComplex::from_real(c.real(3));
        let a2 = PrecComplex::from_real(c.real(2));
        let h3 = hurwitz_zeta(&c, &three, &a2).unwrap();
        let expect = c.real(3).zeta() - 1u32;
        assert!((h3.re.clone() - expect).abs() < tol(&c));
    }

    #[test]
    fn hurwitz_domain_checks() {
        let c = ctx();
        let s = PrecComplex::from_real(c.real(2));
        let bad_a = PrecComplex::from_real(c.real(-1.5));
        assert!(matches!(
            hurwitz_zeta(&c, &s, &bad_a),
            Err(Error::Domain(_))
        ));
        let one = PrecComplex::from_real(c.real(1));
        let s1 = PrecComplex::from_real(c.real(1));
        assert!(matches!(hurwitz_zeta(&c, &s1, &one), Err(Error::Pole(_))));
    }

    #[test]
    fn hurwitz_real_and_complex_paths_agree() {
        let c = ctx();
        for (s, a) in [(2.5, 0.3), (4.0, 7.7), (1.25, 1.0), (-0.5, 2.2)] {
            let r = hurwitz_zeta_real(&c, &c.real(s), &c.real(a)).unwrap();
            let z = hurwitz_zeta_core(
                &c,
                &PrecComplex::from_real(c.real(s)),
                &PrecComplex::from_real(c.real(a)),
            )
            .unwrap();
            assert!((r - z.re).abs() < tol(&c), "mismatch at s={s}, a={a}");
        }
    }

    #[test]
    fn sderivative_matches_finite_difference() {
        let c = EvalContext::new(60).unwrap();
        let s = c.real(3);
        let a = c.real(11.5);
        let d = hurwitz_zeta_s_deriv(&c, &s, &a).unwrap();
        let h = c.real(1e-20);
        let up = hurwitz_zeta_real(&c, &(s.clone() + h.clone()), &a).unwrap();
        let dn = hurwitz_zeta_real(&c, &(s.clone() - h.clone()), &a).unwrap();
        let fd = (up - dn) / (2u32 * h);
        assert!(
            (d - fd).abs() < Float::with_val(c.working_bits(), 1e-35),
            "derivative vs finite difference"
        );
    }

    #[test]
    fn gamma_matches_known() {
        let c = ctx();
        // Gamma(1/2) = sqrt(pi) through the complex path
        let z = PrecComplex::with_f64(c.working_bits(), 0.5, 1e-77);
        let g = gamma(&c, &z).unwrap();
        let pi = c.real(rug::float::Constant::Pi);
        assert!((g.re - pi.sqrt()).abs() < Float::with_val(c.working_bits(), 1e-35));

        // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
        let z = PrecComplex::with_f64(c.working_bits(), 0.3, 0.9);
        let one = PrecComplex::one(c.working_bits());
        let lhs = gamma(&c, &z).unwrap().mul(&gamma(&c, &one.sub(&z)).unwrap());
        let pi = c.real(rug::float::Constant::Pi);
        let rhs = PrecComplex::from_real(pi.clone()).div(&z.mul_real(&pi).sin());
        assert!(lhs.sub(&rhs).abs() < tol(&c));
    }

    #[test]
    fn divisor_functions() {
        let c = ctx();
        assert_eq!(divisor_count(6), 4);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        let s0 = divisor_sigma(&c, &c.real(0), 6);
        assert!((s0 - 4u32).abs() < tol(&c));
        let sm1 = divisor_sigma(&c, &c.real(-1), 2);
        assert!((sm1 - c.real(1.5)).abs() < tol(&c));
        let s1 = divisor_sigma(&c, &c.real(1), 4);
        assert!((s1 - 7u32).abs() < tol(&c));
    }
}
