//! The Ramanujan period function F1 and the family frak_F_k.
//!
//! Series definitions:
//!   frak_F1(x) = sum_{n>=1} { psi(nx) + 1/(2nx) - log(nx) }
//!   frak_F2(x) = sum_{n>=1} ( psi(nx) - log(nx) ) / n
//!   frak_Fk(x) = sum_{n>=1} psi(nx) / n^{k-1}            (k >= 3)
//!   F1(x)      = frak_F1(x) - (gamma - log(2 pi / x)) / 2
//!
//! Raw decay is far too slow for 40+ digits, so every series is truncated at
//! N with the tail replaced by Bernoulli corrections (exact Hurwitz-zeta
//! sums of the summand's asymptotic expansion). Near the cut the asymptotic
//! remainder grows like csc(pi - |arg x|)^{2M}; the truncation radius and
//! the term monitor both carry that factor.

use crate::bernoulli::bernoulli;
use crate::complex::{PrecComplex, PrecReal};
use crate::context::EvalContext;
use crate::error::{Error, Result};
use crate::special::{digamma, hurwitz_zeta_real, hurwitz_zeta_s_deriv, riemann_zeta_real, zeta_neg_int};
use rug::ops::Pow;
use rug::{Float, Integer, Rational};

/// Evaluation route for F1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EvalMethod {
    Series,
    Integral,
    Asymptotic,
}

fn check_off_cut(x: &PrecComplex) -> Result<()> {
    if !x.is_finite() {
        return Err(Error::Domain("non-finite argument".into()));
    }
    if x.is_real() && (x.re.is_zero() || x.re.is_sign_negative()) {
        return Err(Error::Domain(format!(
            "argument {x} lies on the cut (-inf, 0]"
        )));
    }
    Ok(())
}

/// csc(pi - |arg x|) penalty for asymptotic tails near the cut (1 in the
/// right half plane).
fn cut_penalty(x: &PrecComplex) -> f64 {
    let theta = x.arg().to_f64().abs();
    if theta <= std::f64::consts::FRAC_PI_2 {
        1.0
    } else {
        1.0 / (std::f64::consts::PI - theta).sin()
    }
}

/// Truncation index for a series in n x: smallest N with N |x| >= radius.
fn tail_cut(ctx: &EvalContext, abs_x: f64, penalty: f64) -> Result<u64> {
    let radius = ctx.shift_threshold() * penalty;
    let n = (radius / abs_x).ceil() as u64 + 1;
    if n as usize > ctx.max_terms() {
        return Err(Error::Convergence(format!(
            "series needs {n} terms, max_terms is {}",
            ctx.max_terms()
        )));
    }
    Ok(n.max(1))
}

/// psi(z) - log z + 1/(2z); O(z^-2) as z -> infinity.
fn psi_reg(ctx: &EvalContext, z: &PrecComplex) -> Result<PrecComplex> {
    let wb = ctx.working_bits();
    let penalty = cut_penalty(z);
    if z.abs().to_f64() >= ctx.shift_threshold() * penalty {
        // direct asymptotic: -sum_k B_{2k} / (2k z^{2k}); avoids the
        // log-cancellation of assembling it from psi
        let eps = ctx.eps_working().to_f64();
        let u = z.square().recip();
        let mut v = u.clone();
        let mut acc = PrecComplex::zero(wb);
        let mut monitor = penalty * penalty;
        let mut prev = f64::INFINITY;
        for k in 1..=2000u32 {
            let coeff = bernoulli(2 * k) / Rational::from(2 * k);
            let term = v.mul_real(&Float::with_val(wb, &coeff));
            acc = acc.sub(&term);
            let m = term.abs().to_f64() * monitor;
            if m < eps {
                return Ok(acc);
            }
            if m > prev {
                return Err(Error::Convergence("psi_reg asymptotic stalled".into()));
            }
            prev = m;
            monitor *= penalty * penalty;
            v = v.mul(&u);
        }
        return Err(Error::Convergence("psi_reg: term cap".into()));
    }
    let d = digamma(ctx, z)?;
    let half_inv = z.recip().div_real(&ctx.real(2));
    Ok(d.sub(&z.ln()).add(&half_inv))
}

fn psi_reg_real(ctx: &EvalContext, z: &Float) -> Result<Float> {
    let wb = ctx.working_bits();
    if z.to_f64() >= ctx.shift_threshold() {
        let eps = ctx.eps_working();
        let u = Float::with_val(wb, z.pow(-2i32));
        let mut v = u.clone();
        let mut acc = Float::new(wb);
        let mut prev = Float::with_val(wb, f64::INFINITY);
        for k in 1..=2000u32 {
            let coeff = bernoulli(2 * k) / Rational::from(2 * k);
            let term = Float::with_val(wb, &v * &Float::with_val(wb, &coeff));
            let mag = term.clone().abs();
            acc -= term;
            if mag < eps {
                return Ok(acc);
            }
            if mag > prev {
                return Err(Error::Convergence("psi_reg asymptotic stalled".into()));
            }
            prev = mag;
            v *= &u;
        }
        return Err(Error::Convergence("psi_reg: term cap".into()));
    }
    let d = ctx.real(z).digamma();
    Ok(d - z.clone().ln() + ctx.real(0.5) / z)
}

/// frak_F1 for real x > 0 (fast path through MPFR's real digamma).
pub fn frak_f1_real(ctx: &EvalContext, x: &PrecReal) -> Result<PrecReal> {
    if !(x.is_sign_positive() && !x.is_zero()) {
        return Err(Error::Domain("frak_F1 real path requires x > 0".into()));
    }
    let wb = ctx.working_bits();
    let eps = ctx.eps_working();
    let n_cut = tail_cut(ctx, x.to_f64(), 1.0)?;
    let mut head = Float::new(wb);
    let mut nx = ctx.real(x);
    for _ in 1..=n_cut {
        head += psi_reg_real(ctx, &nx)?;
        nx += x;
    }
    // tail: -sum_k B_{2k}/(2k) x^{-2k} zeta(2k, N+1)
    let a = ctx.real(n_cut + 1);
    let x2inv = Float::with_val(wb, x.pow(-2i32));
    let mut xpow = x2inv.clone();
    let mut acc = head;
    let mut prev = Float::with_val(wb, f64::INFINITY);
    for k in 1..=2000u32 {
        let coeff = bernoulli(2 * k) / Rational::from(2 * k);
        let hz = hurwitz_zeta_real(ctx, &ctx.real(2 * k), &a)?;
        let term = Float::with_val(wb, &xpow * &hz) * Float::with_val(wb, &coeff);
        let mag = term.clone().abs();
        acc -= term;
        if mag < eps {
            return Ok(acc);
        }
        if mag > prev {
            return Err(Error::Convergence("frak_F1 tail stalled".into()));
        }
        prev = mag;
        xpow *= &x2inv;
    }
    Err(Error::Convergence("frak_F1 tail: term cap".into()))
}

/// frak_F1(x) on C \ (-inf, 0].
pub fn frak_f1(ctx: &EvalContext, x: &PrecComplex) -> Result<PrecComplex> {
    check_off_cut(x)?;
    if x.is_real() {
        return Ok(PrecComplex::from_real(frak_f1_real(ctx, &x.re)?));
    }
    let wb = ctx.working_bits();
    let eps = ctx.eps_working().to_f64();
    let penalty = cut_penalty(x);
    let n_cut = tail_cut(ctx, x.abs().to_f64(), penalty)?;
    let mut head = PrecComplex::zero(wb);
    let mut nx = x.clone();
    for _ in 1..=n_cut {
        head = head.add(&psi_reg(ctx, &nx)?);
        nx = nx.add(x);
    }
    // tail with the cut penalty folded into the stopping monitor
    let a = ctx.real(n_cut + 1);
    let x2inv = x.square().recip();
    let mut xpow = x2inv.clone();
    let mut acc = head;
    let mut monitor = penalty * penalty;
    let mut prev = f64::INFINITY;
    for k in 1..=2000u32 {
        let coeff = bernoulli(2 * k) / Rational::from(2 * k);
        let hz = hurwitz_zeta_real(ctx, &ctx.real(2 * k), &a)?;
        let term = xpow.mul_real(&hz).mul_real(&Float::with_val(wb, &coeff));
        acc = acc.sub(&term);
        let m = term.abs().to_f64() * monitor;
        if m < eps {
            return Ok(acc);
        }
        if m > prev {
            return Err(Error::Convergence("frak_F1 tail stalled".into()));
        }
        prev = m;
        monitor *= penalty * penalty;
        xpow = xpow.mul(&x2inv);
    }
    Err(Error::Convergence("frak_F1 tail: term cap".into()))
}

/// gamma - log(2 pi / x) = gamma - log(2 pi) + log(x).
fn euler_shift(ctx: &EvalContext, x: &PrecComplex) -> PrecComplex {
    let wb = ctx.working_bits();
    let euler = ctx.real(rug::float::Constant::Euler);
    let ln2pi = ctx.real(rug::float::Constant::Pi).ln() + ctx.real(2).ln();
    let c = Float::with_val(wb, &euler - &ln2pi);
    x.ln().add_real(&c)
}

/// The Ramanujan period function F1(x) = frak_F1(x) - (gamma - log(2pi/x))/2.
pub fn f1(ctx: &EvalContext, x: &PrecComplex) -> Result<PrecComplex> {
    if x.is_real() {
        check_off_cut(x)?;
        return Ok(PrecComplex::from_real(f1_real(ctx, &x.re)?));
    }
    let f = frak_f1(ctx, x)?;
    let shift = euler_shift(ctx, x).div_real(&ctx.real(2));
    Ok(f.sub(&shift))
}

/// F1 for real x > 0.
pub fn f1_real(ctx: &EvalContext, x: &PrecReal) -> Result<PrecReal> {
    let wb = ctx.working_bits();
    let f = frak_f1_real(ctx, x)?;
    let euler = ctx.real(rug::float::Constant::Euler);
    let ln2pi = ctx.real(rug::float::Constant::Pi).ln() + ctx.real(2).ln();
    let shift = (euler - ln2pi + ctx.real(x).ln()) / 2u32;
    Ok(Float::with_val(wb, f - shift))
}

/// F1 via the integral representation of frak_F1 (Re x > 0):
/// frak_F1(x) = -int_0^inf (1/(e^t-1) - 1/t + 1/2) / (e^{xt} - 1) dt.
pub fn f1_integral(ctx: &EvalContext, x: &PrecComplex) -> Result<PrecComplex> {
    if !(x.re.is_sign_positive() && !x.re.is_zero()) {
        return Err(Error::Domain("integral route requires Re(x) > 0".into()));
    }
    let wb = ctx.working_bits();
    let small = Float::with_val(wb, 1e-3);
    let r = crate::quadrature::exp_sinh(ctx, |t: &Float| {
        let g = bose_reg(ctx, t, &small);
        let xt = x.mul_real(t);
        Ok(crate::special::inv_expm1(ctx, &xt).mul_real(&g))
    })?;
    let frak = crate::quadrature::require_converged(r, "F1 integral route")?.neg();
    let shift = euler_shift(ctx, x).div_real(&ctx.real(2));
    Ok(frak.sub(&shift))
}

/// g(t) = 1/(e^t - 1) - 1/t + 1/2, with the removable singularity at t = 0
/// patched by its Bernoulli series below `small`.
pub(crate) fn bose_reg(ctx: &EvalContext, t: &Float, small: &Float) -> Float {
    let wb = ctx.working_bits();
    if t < small {
        // g(t) = sum_{k>=1} B_{2k} t^{2k-1} / (2k)!
        let mut acc = Float::new(wb);
        let t2 = Float::with_val(wb, t.pow(2i32));
        let mut tp = ctx.real(t);
        for k in 1..=64u32 {
            let c = bernoulli(2 * k) / Rational::from(Integer::from(Integer::factorial(2 * k)));
            let term = Float::with_val(wb, &tp * &Float::with_val(wb, &c));
            let done = term.clone().abs() < ctx.eps_working();
            acc += term;
            if done {
                break;
            }
            tp *= &t2;
        }
        acc
    } else {
        ctx.real(t).exp_m1().recip() - ctx.real(t).recip() + ctx.real(0.5)
    }
}

/// Truncated asymptotic expansion of F1: the large-|x| form for |x| >= 2,
/// the mirrored form through the two-term relation for |x| <= 1/2.
/// Returns the partial sum and the magnitude of the first omitted term.
pub fn f1_asymptotic(
    ctx: &EvalContext,
    x: &PrecComplex,
    terms: u32,
) -> Result<(PrecComplex, PrecReal)> {
    check_off_cut(x)?;
    if terms < 1 {
        return Err(Error::Domain("terms must be >= 1".into()));
    }
    let ax = x.abs().to_f64();
    if ax >= 2.0 {
        f1_asymptotic_large(ctx, x, terms)
    } else if ax <= 0.5 {
        // single source of truth: F1(x) = (1/x) F1(1/x) expanded at 1/x
        let inv = x.recip();
        let (v, b) = f1_asymptotic_large(ctx, &inv, terms)?;
        let scale = inv.abs();
        Ok((v.div(x), b * scale))
    } else {
        Err(Error::Domain(format!(
            "asymptotic route unreliable for 1/2 < |x| = {ax} < 2"
        )))
    }
}

fn f1_asymptotic_large(
    ctx: &EvalContext,
    x: &PrecComplex,
    terms: u32,
) -> Result<(PrecComplex, PrecReal)> {
    let wb = ctx.working_bits();
    let shift = euler_shift(ctx, x).div_real(&ctx.real(2));
    let mut acc = shift.neg();
    let xinv = x.recip();
    let mut xpow = xinv.square(); // x^{-n} from n = 2
    for n in 2..=terms + 1 {
        let zneg = Float::with_val(wb, &zeta_neg_int(n));
        if !zneg.is_zero() {
            let zn = riemann_zeta_real(ctx, &ctx.real(n))?;
            let c = Float::with_val(wb, &zneg * &zn);
            acc = acc.add(&xpow.mul_real(&c));
        }
        xpow = xpow.mul(&xinv);
    }
    // first omitted nonzero term: next even index >= terms + 2
    let mut n_star = terms + 2;
    if n_star % 2 == 1 {
        n_star += 1;
    }
    let zneg = Float::with_val(wb, &zeta_neg_int(n_star));
    let zn = riemann_zeta_real(ctx, &ctx.real(n_star))?;
    let bound = Float::with_val(wb, &zneg * &zn).abs()
        * Float::with_val(wb, x.abs().pow(-(n_star as i32)));
    Ok((acc, bound))
}

/// F1 through a caller-selected route.
pub fn f1_with_method(
    ctx: &EvalContext,
    x: &PrecComplex,
    method: EvalMethod,
) -> Result<PrecComplex> {
    match method {
        EvalMethod::Series => f1(ctx, x),
        EvalMethod::Integral => f1_integral(ctx, x),
        EvalMethod::Asymptotic => f1_asymptotic(ctx, x, 12).map(|(v, _)| v),
    }
}

/// frak_F_k per the three-branch definition (k = 1 Ramanujan, k = 2
/// Herglotz, k >= 3 plain psi series).
pub fn frak_fk(ctx: &EvalContext, k: u32, x: &PrecComplex) -> Result<PrecComplex> {
    if k == 0 {
        return Err(Error::Domain("k must be >= 1".into()));
    }
    check_off_cut(x)?;
    if k == 1 {
        return frak_f1(ctx, x);
    }
    if x.is_real() {
        return Ok(PrecComplex::from_real(frak_fk_real(ctx, k, &x.re)?));
    }
    let wb = ctx.working_bits();
    let eps = ctx.eps_working().to_f64();
    let penalty = cut_penalty(x);
    let n_cut = tail_cut(ctx, x.abs().to_f64(), penalty)?;
    let a = ctx.real(n_cut + 1);

    let mut head = PrecComplex::zero(wb);
    let mut nx = x.clone();
    for n in 1..=n_cut {
        let weight = Float::with_val(wb, ctx.real(n).pow(-(k as i32) + 1));
        let summand = if k == 2 {
            // (psi(nx) - log(nx)) / n = (psi_reg(nx) - 1/(2nx)) / n
            let pr = psi_reg(ctx, &nx)?;
            pr.sub(&nx.recip().div_real(&ctx.real(2)))
        } else {
            digamma(ctx, &nx)?
        };
        head = head.add(&summand.mul_real(&weight));
        nx = nx.add(x);
    }

    let mut acc = head;
    if k == 2 {
        let z2 = hurwitz_zeta_real(ctx, &ctx.real(2), &a)?;
        acc = acc.sub(&x.recip().mul_real(&z2).div_real(&ctx.real(2)));
    } else {
        // sum_{n>N} n^{1-k} log(nx) = log(x) zeta(k-1, N+1) - zeta_s'(k-1, N+1)
        let zk1 = hurwitz_zeta_real(ctx, &ctx.real(k - 1), &a)?;
        let zd = hurwitz_zeta_s_deriv(ctx, &ctx.real(k - 1), &a)?;
        let zk = hurwitz_zeta_real(ctx, &ctx.real(k), &a)?;
        acc = acc.add(&x.ln().mul_real(&zk1));
        acc = acc.sub_real(&zd);
        acc = acc.sub(&x.recip().mul_real(&zk).div_real(&ctx.real(2)));
    }
    let x2inv = x.square().recip();
    let mut xpow = x2inv.clone();
    let mut monitor = penalty * penalty;
    let mut prev = f64::INFINITY;
    for j in 1..=2000u32 {
        let coeff = bernoulli(2 * j) / Rational::from(2 * j);
        let hz = hurwitz_zeta_real(ctx, &ctx.real(k - 1 + 2 * j), &a)?;
        let term = xpow.mul_real(&hz).mul_real(&Float::with_val(wb, &coeff));
        acc = acc.sub(&term);
        let m = term.abs().to_f64() * monitor;
        if m < eps {
            return Ok(acc);
        }
        if m > prev {
            return Err(Error::Convergence("frak_Fk tail stalled".into()));
        }
        prev = m;
        monitor *= penalty * penalty;
        xpow = xpow.mul(&x2inv);
    }
    Err(Error::Convergence("frak_Fk tail: term cap".into()))
}

/// frak_F_k for real x > 0.
pub fn frak_fk_real(ctx: &EvalContext, k: u32, x: &PrecReal) -> Result<PrecReal> {
    if k == 1 {
        return frak_f1_real(ctx, x);
    }
    if !(x.is_sign_positive() && !x.is_zero()) {
        return Err(Error::Domain("real path requires x > 0".into()));
    }
    let wb = ctx.working_bits();
    let eps = ctx.eps_working();
    let n_cut = tail_cut(ctx, x.to_f64(), 1.0)?;
    let a = ctx.real(n_cut + 1);

    let mut head = Float::new(wb);
    let mut nx = ctx.real(x);
    for n in 1..=n_cut {
        let weight = Float::with_val(wb, ctx.real(n).pow(-(k as i32) + 1));
        let summand = if k == 2 {
            psi_reg_real(ctx, &nx)? - ctx.real(0.5) / &nx
        } else {
            ctx.real(&nx).digamma()
        };
        head += summand * weight;
        nx += x;
    }

    let mut acc = head;
    if k == 2 {
        let z2 = hurwitz_zeta_real(ctx, &ctx.real(2), &a)?;
        acc -= z2 / (2u32 * ctx.real(x));
    } else {
        let zk1 = hurwitz_zeta_real(ctx, &ctx.real(k - 1), &a)?;
        let zd = hurwitz_zeta_s_deriv(ctx, &ctx.real(k - 1), &a)?;
        let zk = hurwitz_zeta_real(ctx, &ctx.real(k), &a)?;
        acc += ctx.real(x).ln() * zk1 - zd - zk / (2u32 * ctx.real(x));
    }
    let x2inv = Float::with_val(wb, x.pow(-2i32));
    let mut xpow = x2inv.clone();
    let mut prev = Float::with_val(wb, f64::INFINITY);
    for j in 1..=2000u32 {
        let coeff = bernoulli(2 * j) / Rational::from(2 * j);
        let hz = hurwitz_zeta_real(ctx, &ctx.real(k - 1 + 2 * j), &a)?;
        let term = Float::with_val(wb, &xpow * &hz) * Float::with_val(wb, &coeff);
        let mag = term.clone().abs();
        acc -= term;
        if mag < eps {
            return Ok(acc);
        }
        if mag > prev {
            return Err(Error::Convergence("frak_Fk tail stalled".into()));
        }
        prev = mag;
        xpow *= &x2inv;
    }
    Err(Error::Convergence("frak_Fk tail: term cap".into()))
}

/// i-th derivative of frak_F_k for k >= 3, 0 <= i <= k-1, x > 0:
/// sum_n n^{1-k+i} psi^{(i)}(n x), tail-accelerated.
pub fn fk_derivative(ctx: &EvalContext, k: u32, i: u32, x: &PrecReal) -> Result<PrecReal> {
    if k < 3 {
        return Err(Error::Domain("fk_derivative requires k >= 3".into()));
    }
    if i >= k {
        return Err(Error::Domain(format!(
            "termwise series for i = {i} >= k = {k} diverges"
        )));
    }
    if !(x.is_sign_positive() && !x.is_zero()) {
        return Err(Error::Domain("fk_derivative requires x > 0".into()));
    }
    if i == 0 {
        return frak_fk_real(ctx, k, x);
    }
    let wb = ctx.working_bits();
    let eps = ctx.eps_working();
    let n_cut = tail_cut(ctx, x.to_f64(), 1.0)?;
    let a = ctx.real(n_cut + 1);
    let sign = if i % 2 == 1 { 1i32 } else { -1i32 };
    let i_fact = Float::with_val(wb, Integer::from(Integer::factorial(i)));

    // head: psi^(i)(nx) = sign * i! zeta(i+1, nx)
    let mut head = Float::new(wb);
    let mut nx = ctx.real(x);
    let w_exp = 1 - k as i32 + i as i32;
    for n in 1..=n_cut {
        let hz = hurwitz_zeta_real(ctx, &ctx.real(i + 1), &nx)?;
        let weight = Float::with_val(wb, ctx.real(n).pow(w_exp));
        head += hz * weight;
        nx += x;
    }
    head *= &i_fact;
    head *= sign;

    // tail from the differentiated psi asymptotics:
    // sign * [ (i-1)! x^-i zeta(k-1, N+1) + i!/(2 x^{i+1}) zeta(k, N+1)
    //          + sum_j B_{2j} (2j+i-1)!/(2j)! x^{-2j-i} zeta(k-1+2j, N+1) ]
    let im1_fact = Float::with_val(wb, Integer::from(Integer::factorial(i - 1)));
    let zk1 = hurwitz_zeta_real(ctx, &ctx.real(k - 1), &a)?;
    let zk = hurwitz_zeta_real(ctx, &ctx.real(k), &a)?;
    let xi = Float::with_val(wb, ctx.real(x).pow(i));
    let mut tail = Float::with_val(wb, &im1_fact * &zk1) / &xi;
    tail += Float::with_val(wb, &i_fact * &zk) / (2u32 * Float::with_val(wb, &xi * x));

    let x2inv = Float::with_val(wb, ctx.real(x).pow(-2i32));
    let mut xpow = Float::with_val(wb, &x2inv / &xi);
    let mut prev = Float::with_val(wb, f64::INFINITY);
    for j in 1..=2000u32 {
        let num = Integer::from(Integer::factorial(2 * j + i - 1));
        let den = Integer::from(Integer::factorial(2 * j));
        let coeff = bernoulli(2 * j) * Rational::from((num, den));
        let hz = hurwitz_zeta_real(ctx, &ctx.real(k - 1 + 2 * j), &a)?;
        let term = Float::with_val(wb, &xpow * &hz) * Float::with_val(wb, &coeff);
        let mag = term.clone().abs();
        tail += term;
        if mag < eps {
            break;
        }
        if mag > prev {
            return Err(Error::Convergence("fk_derivative tail stalled".into()));
        }
        prev = mag;
        xpow *= &x2inv;
    }
    tail *= sign;
    Ok(head + tail)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> EvalContext {
        EvalContext::new(40).unwrap()
    }

    fn tol(c: &EvalContext, digits: i32) -> Float {
        Float::with_val(c.working_bits(), 10f64).pow(-digits)
    }

    fn euler(c: &EvalContext) -> Float {
        c.real(rug::float::Constant::Euler)
    }

    fn ln2pi(c: &EvalContext) -> Float {
        c.real(rug::float::Constant::Pi).ln() + c.real(2).ln()
    }

    #[test]
    fn f1_closed_values() {
        // F1(1) = 1/2, F1(2) = 1/4, F1(1/2) = 1/2 (Kurokawa closed forms and
        // the two-term relation)
        let c = ctx();
        let t = tol(&c, c.precision_digits() as i32);
        let v1 = f1_real(&c, &c.real(1)).unwrap();
        assert!((v1 - c.real(0.5)).abs() < t);
        let v2 = f1_real(&c, &c.real(2)).unwrap();
        assert!((v2 - c.real(0.25)).abs() < t);
        let vh = f1_real(&c, &c.real(0.5)).unwrap();
        assert!((vh - c.real(0.5)).abs() < t);
    }

    #[test]
    fn frak_f1_matches_raw_series_oracle() {
        // independent oracle: raw summation of 20000 terms; the dropped tail
        // is below 1/(12 * 19000) since the summand is ~ -1/(12 n^2)
        let c = EvalContext::new(15).unwrap();
        let wb = c.working_bits();
        let x = c.real(1);
        let mut raw = Float::new(wb);
        for n in 1..=20000u32 {
            let nx = c.real(n);
            raw += nx.clone().digamma() - nx.clone().ln() + c.real(0.5) / &nx;
        }
        let v = frak_f1_real(&c, &x).unwrap();
        assert!(
            (v - raw).abs().to_f64() < 1.0 / (12.0 * 19000.0),
            "frak_F1(1) disagrees with the raw-series oracle"
        );
    }

    #[test]
    fn frak_f1_value_at_one() {
        // frak_F1(1) = 1/2 + (gamma - log 2pi)/2
        let c = ctx();
        let v = frak_f1_real(&c, &c.real(1)).unwrap();
        let expect = c.real(0.5) + (euler(&c) - ln2pi(&c)) / 2u32;
        assert!((v - expect).abs() < tol(&c, c.precision_digits() as i32));
    }

    #[test]
    fn complex_path_matches_real_axis_and_conjugation() {
        let c = ctx();
        let wb = c.working_bits();
        let z = PrecComplex::with_f64(wb, 1.5, 0.0);
        let vr = f1(&c, &z).unwrap();
        let vv = f1_real(&c, &c.real(1.5)).unwrap();
        assert!((vr.re - vv).abs() < tol(&c, c.precision_digits() as i32));

        // Schwarz reflection: F1(conj x) = conj F1(x)
        let z = PrecComplex::with_f64(wb, 0.0, 1.0);
        let v = f1(&c, &z).unwrap();
        let vc = f1(&c, &z.conj()).unwrap();
        assert!(v.conj().sub(&vc).abs() < tol(&c, c.precision_digits() as i32));
    }

    #[test]
    fn integral_route_agrees_with_series() {
        let c = EvalContext::new(30).unwrap();
        for x in [1.0, 2.0, 10.0] {
            let z = PrecComplex::with_f64(c.working_bits(), x, 0.0);
            let vi = f1_integral(&c, &z).unwrap();
            let vs = f1_real(&c, &c.real(x)).unwrap();
            assert!(
                (vi.re - vs).abs() < tol(&c, c.precision_digits() as i32),
                "route disagreement at x = {x}"
            );
            assert!(vi.im.clone().abs() < tol(&c, c.precision_digits() as i32));
        }
    }

    #[test]
    fn integral_route_domain() {
        let c = EvalContext::new(30).unwrap();
        let z = PrecComplex::with_f64(c.working_bits(), -1.0, 0.5);
        assert!(matches!(f1_integral(&c, &z), Err(Error::Domain(_))));
    }

    #[test]
    fn asymptotic_coefficients_and_envelope() {
        let c = ctx();
        let wb = c.working_bits();
        // n = 2 coefficient is zeta(-1) zeta(2) = -pi^2/72
        let zneg = Float::with_val(wb, &zeta_neg_int(2));
        let z2 = riemann_zeta_real(&c, &c.real(2)).unwrap();
        let pi = c.real(rug::float::Constant::Pi);
        let expect = -Float::with_val(wb, (&pi).pow(2i32)) / 72u32;
        assert!((Float::with_val(wb, &zneg * &z2) - expect).abs() < tol(&c, 40));

        // envelope at x = 25, 12 terms
        let x = PrecComplex::with_f64(wb, 25.0, 0.0);
        let (v, bound) = f1_asymptotic(&c, &x, 12).unwrap();
        let exact = f1_real(&c, &c.real(25)).unwrap();
        let err = (v.re - exact).abs();
        assert!(err <= Float::with_val(wb, 2u32 * &bound));

        // odd terms vanish: adding the (zero) n = 5 term changes nothing
        let (v4, _) = f1_asymptotic(&c, &x, 3).unwrap();
        let (v5, _) = f1_asymptotic(&c, &x, 4).unwrap();
        assert!(v4.sub(&v5).abs().is_zero());

        // gap is rejected
        let bad = PrecComplex::with_f64(wb, 1.0, 0.0);
        assert!(matches!(f1_asymptotic(&c, &bad, 4), Err(Error::Domain(_))));
    }

    #[test]
    fn small_argument_asymptotic_via_two_term() {
        let c = ctx();
        let wb = c.working_bits();
        let x = PrecComplex::with_f64(wb, 0.04, 0.0);
        let (v, bound) = f1_asymptotic(&c, &x, 12).unwrap();
        let exact = f1_real(&c, &c.real(0.04)).unwrap();
        assert!((v.re - exact).abs() <= Float::with_val(wb, 2u32 * &bound));
    }

    #[test]
    fn frak_fk_k1_is_frak_f1_and_k3_matches_oracle() {
        let c = ctx();
        let wb = c.working_bits();
        let z = PrecComplex::with_f64(wb, 1.7, 0.4);
        let a = frak_fk(&c, 1, &z).unwrap();
        let b = frak_f1(&c, &z).unwrap();
        assert!(a.sub(&b).abs().is_zero(), "k = 1 must be the same route");

        // frak_F3(1) = sum n^-2 psi(n): raw oracle; dropped tail is below
        // (log N + 1)/N
        let c15 = EvalContext::new(15).unwrap();
        let mut raw = Float::new(c15.working_bits());
        for n in 1..=20000u32 {
            let nn = c15.real(n);
            raw += nn.clone().digamma() / Float::with_val(c15.working_bits(), (&nn).pow(2i32));
        }
        let v = frak_fk_real(&c15, 3, &c15.real(1)).unwrap();
        assert!((v - raw).abs().to_f64() < (20000f64.ln() + 1.0) / 20000.0);
    }

    #[test]
    fn fk_derivative_consistency() {
        let c = ctx();
        let a = fk_derivative(&c, 3, 0, &c.real(1.5)).unwrap();
        let b = frak_fk_real(&c, 3, &c.real(1.5)).unwrap();
        assert!((a - b).abs().is_zero());

        // (3, 1, 1): sum n^-1 psi'(n), raw oracle with ~1/N tail
        let c15 = EvalContext::new(15).unwrap();
        let wb = c15.working_bits();
        let mut raw = Float::new(wb);
        for n in 1..=4000u32 {
            let hz = hurwitz_zeta_real(&c15, &c15.real(2), &c15.real(n)).unwrap();
            raw += hz / c15.real(n);
        }
        let v = fk_derivative(&c15, 3, 1, &c15.real(1)).unwrap();
        assert!((v - raw).abs().to_f64() < 2.0 / 4000.0);

        // (4, 2, 2) vs central difference of (4, 1, .)
        let c30 = EvalContext::new(30).unwrap();
        let h = c30.real(1e-10);
        let up = fk_derivative(&c30, 4, 1, &(c30.real(2) + h.clone())).unwrap();
        let dn = fk_derivative(&c30, 4, 1, &(c30.real(2) - h.clone())).unwrap();
        let fd = (up - dn) / (2u32 * h);
        let v = fk_derivative(&c30, 4, 2, &c30.real(2)).unwrap();
        assert!(
            (v - fd).abs().to_f64() < 1e-9,
            "second derivative vs finite difference"
        );

        assert!(matches!(
            fk_derivative(&c, 3, 3, &c.real(1)),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn cut_is_rejected() {
        let c = ctx();
        let wb = c.working_bits();
        for x in [0.0, -1.0, -2.5] {
            let z = PrecComplex::with_f64(wb, x, 0.0);
            assert!(matches!(f1(&c, &z), Err(Error::Domain(_))));
        }
    }
}
