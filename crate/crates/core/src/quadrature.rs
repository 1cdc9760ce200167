//! Double-exponential (tanh-sinh / exp-sinh) quadrature at working precision.
//!
//! Both rules refine by level halving with node reuse and truncate the node
//! range adaptively once weighted samples fall below the target scale. The
//! integrand returns a `Result` so domain errors propagate out of the rule.

use crate::complex::PrecComplex;
use crate::context::EvalContext;
use crate::error::{Error, Result};
use rug::Float;

/// Values a quadrature rule can accumulate.
pub trait QuadValue: Clone {
    fn zero(prec: u32) -> Self;
    fn add_assign(&mut self, other: &Self);
    fn scale(&self, w: &Float) -> Self;
    fn magnitude(&self) -> Float;
}

impl QuadValue for Float {
    fn zero(prec: u32) -> Self {
        Float::new(prec)
    }
    fn add_assign(&mut self, other: &Self) {
        *self += other;
    }
    fn scale(&self, w: &Float) -> Self {
        Float::with_val(self.prec(), self * w)
    }
    fn magnitude(&self) -> Float {
        self.clone().abs()
    }
}

impl QuadValue for PrecComplex {
    fn zero(prec: u32) -> Self {
        PrecComplex::zero(prec)
    }
    fn add_assign(&mut self, other: &Self) {
        *self = self.add(other);
    }
    fn scale(&self, w: &Float) -> Self {
        self.mul_real(w)
    }
    fn magnitude(&self) -> Float {
        self.abs()
    }
}

/// Outcome of a quadrature run: value plus the last refinement delta.
pub struct QuadResult<V> {
    pub value: V,
    pub error_estimate: Float,
    pub levels_used: u32,
}

const CUTOFF_RUN: u32 = 3;

/// Integrate f over (a, b) with the tanh-sinh substitution
/// x = (a+b)/2 + (b-a)/2 tanh((pi/2) sinh u). Handles algebraic endpoint
/// singularities.
pub fn tanh_sinh<V, F>(ctx: &EvalContext, a: &Float, b: &Float, mut f: F) -> Result<QuadResult<V>>
where
    V: QuadValue,
    F: FnMut(&Float) -> Result<V>,
{
    let wb = ctx.working_bits();
    let eps = ctx.eps_working();
    let pi_half = ctx.real(rug::float::Constant::Pi) / 2u32;
    let hw = Float::with_val(wb, b - a) / 2u32;

    // u beyond which 1 - |tanh((pi/2) sinh u)| underflows the working digits
    let digits = ctx.working_digits() as f64;
    let u_max = ((2.0 / std::f64::consts::PI) * (digits * std::f64::consts::LN_10 + 5.0))
        .asinh()
        + 0.05;

    let eval = |u: &Float, f: &mut F| -> Result<Option<V>> {
        let su = u.clone().sinh();
        let arg = Float::with_val(wb, &pi_half * &su);
        // weight = (pi/2) cosh u / cosh^2((pi/2) sinh u)
        let ch = arg.clone().cosh();
        let w = Float::with_val(wb, &pi_half * &u.clone().cosh())
            / Float::with_val(wb, &ch * &ch);
        if !w.is_finite() || w.is_zero() {
            return Ok(None);
        }
        // measure x from the nearer endpoint: 1 -+ tanh(arg) = 2/(1 + e^{+-2 arg})
        // keeps full relative precision in the endpoint distance
        let two_arg = Float::with_val(wb, 2 * &arg);
        let x = if arg.is_sign_negative() {
            let denom = Float::with_val(wb, (-two_arg).exp() + 1u32);
            let off = Float::with_val(wb, 2 * &hw) / denom;
            Float::with_val(wb, a + &off)
        } else {
            let denom = Float::with_val(wb, two_arg.exp() + 1u32);
            let off = Float::with_val(wb, 2 * &hw) / denom;
            Float::with_val(wb, b - &off)
        };
        // skip samples that collapse onto an endpoint
        if x == *a || x == *b {
            return Ok(None);
        }
        let v = f(&x)?;
        Ok(Some(v.scale(&w)))
    };

    let mut h = Float::with_val(wb, 1);
    let mut sum = V::zero(wb);
    // level 0: u = 0, +-1, +-2, ... step 1
    {
        let mut u = Float::new(wb);
        if let Some(v) = eval(&u, &mut f)? {
            sum.add_assign(&v);
        }
        for side in [1i32, -1i32] {
            let mut miss = 0u32;
            let mut k = 1u64;
            loop {
                u = Float::with_val(wb, side) * Float::with_val(wb, k);
                if u.to_f64().abs() > u_max {
                    break;
                }
                match eval(&u, &mut f)? {
                    Some(v) => {
                        let small = v.magnitude() < eps;
                        sum.add_assign(&v);
                        miss = if small { miss + 1 } else { 0 };
                    }
                    None => miss += 1,
                }
                if miss >= CUTOFF_RUN {
                    break;
                }
                k += 1;
            }
        }
    }
    let mut integral = sum.scale(&Float::with_val(wb, &h * &hw));
    let mut delta = Float::with_val(wb, f64::INFINITY);

    for level in 1..=ctx.quad_level() {
        h /= 2u32;
        // new nodes at odd multiples of h
        let mut new_sum = V::zero(wb);
        for side in [1i32, -1i32] {
            let mut miss = 0u32;
            let mut k = 1u64;
            loop {
                let ku = Float::with_val(wb, 2 * k - 1) * &h;
                if ku.to_f64() > u_max {
                    break;
                }
                let u = Float::with_val(wb, side) * ku;
                match eval(&u, &mut f)? {
                    Some(v) => {
                        let small = v.magnitude() < eps;
                        new_sum.add_assign(&v);
                        miss = if small { miss + 1 } else { 0 };
                    }
                    None => miss += 1,
                }
                if miss >= CUTOFF_RUN {
                    break;
                }
                k += 1;
            }
        }
        sum.add_assign(&new_sum);
        let next = sum.scale(&Float::with_val(wb, &h * &hw));
        let prev_mag = integral.magnitude();
        delta = {
            let mut d = integral.clone();
            let minus = next.scale(&Float::with_val(wb, -1));
            d.add_assign(&minus);
            d.magnitude()
        };
        integral = next;
        let scale = Float::with_val(wb, &prev_mag + 1u32);
        if delta < Float::with_val(wb, &eps * &scale) && level >= 3 {
            return Ok(QuadResult {
                value: integral,
                error_estimate: delta,
                levels_used: level,
            });
        }
    }
    Ok(QuadResult {
        value: integral,
        error_estimate: delta,
        levels_used: ctx.quad_level(),
    })
}

/// Integrate f over (0, infinity) with the exp-sinh substitution
/// t = exp((pi/2) sinh u). Suits integrands with algebraic behavior at 0
/// and at least polynomial decay at infinity.
pub fn exp_sinh<V, F>(ctx: &EvalContext, mut f: F) -> Result<QuadResult<V>>
where
    V: QuadValue,
    F: FnMut(&Float) -> Result<V>,
{
    let wb = ctx.working_bits();
    let eps = ctx.eps_working();
    let pi_half = ctx.real(rug::float::Constant::Pi) / 2u32;
    // |ln t| budget generous enough for t^(-1-delta) tails; adaptive
    // truncation stops much earlier on exponentially decaying integrands
    let digits = ctx.working_digits() as f64;
    let u_max =
        ((2.0 / std::f64::consts::PI) * 2.5 * digits * std::f64::consts::LN_10).asinh() + 0.5;

    let eval = |u: &Float, f: &mut F| -> Result<Option<V>> {
        let su = u.clone().sinh();
        let arg = Float::with_val(wb, &pi_half * &su);
        let t = arg.exp();
        if !t.is_finite() || t.is_zero() {
            return Ok(None);
        }
        // weight = (pi/2) cosh u * t
        let w = Float::with_val(wb, &pi_half * &u.clone().cosh()) * &t;
        let v = f(&t)?;
        Ok(Some(v.scale(&w)))
    };

    let mut h = Float::with_val(wb, 1);
    let mut sum = V::zero(wb);
    {
        let u = Float::new(wb);
        if let Some(v) = eval(&u, &mut f)? {
            sum.add_assign(&v);
        }
        for side in [1i32, -1i32] {
            let mut miss = 0u32;
            let mut k = 1u64;
            loop {
                let u = Float::with_val(wb, side) * Float::with_val(wb, k);
                if u.to_f64().abs() > u_max {
                    break;
                }
                match eval(&u, &mut f)? {
                    Some(v) => {
                        let small = v.magnitude() < eps;
                        sum.add_assign(&v);
                        miss = if small { miss + 1 } else { 0 };
                    }
                    None => miss += 1,
                }
                if miss >= CUTOFF_RUN {
                    break;
                }
                k += 1;
            }
        }
    }
    let mut integral = sum.scale(&h);
    let mut delta = Float::with_val(wb, f64::INFINITY);

    for level in 1..=ctx.quad_level() {
        h /= 2u32;
        let mut new_sum = V::zero(wb);
        for side in [1i32, -1i32] {
            let mut miss = 0u32;
            let mut k = 1u64;
            loop {
                let ku = Float::with_val(wb, 2 * k - 1) * &h;
                if ku.to_f64() > u_max {
                    break;
                }
                let u = Float::with_val(wb, side) * ku;
                match eval(&u, &mut f)? {
                    Some(v) => {
                        let small = v.magnitude() < eps;
                        new_sum.add_assign(&v);
                        miss = if small { miss + 1 } else { 0 };
                    }
                    None => miss += 1,
                }
                if miss >= CUTOFF_RUN {
                    break;
                }
                k += 1;
            }
        }
        sum.add_assign(&new_sum);
        let next = sum.scale(&h);
        let prev_mag = integral.magnitude();
        delta = {
            let mut d = integral.clone();
            let minus = next.scale(&Float::with_val(wb, -1));
            d.add_assign(&minus);
            d.magnitude()
        };
        integral = next;
        let scale = Float::with_val(wb, &prev_mag + 1u32);
        if delta < Float::with_val(wb, &eps * &scale) && level >= 3 {
            return Ok(QuadResult {
                value: integral,
                error_estimate: delta,
                levels_used: level,
            });
        }
    }
    Ok(QuadResult {
        value: integral,
        error_estimate: delta,
        levels_used: ctx.quad_level(),
    })
}

/// Unwrap a quadrature result, rejecting non-finite outcomes.
pub fn require_converged<V: QuadValue>(r: QuadResult<V>, what: &str) -> Result<V> {
    if !r.value.magnitude().is_finite() {
        return Err(Error::Convergence(format!("{what}: non-finite quadrature")));
    }
    Ok(r.value)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> EvalContext {
        EvalContext::new(40).unwrap()
    }

    #[test]
    fn finite_interval_polynomial() {
        // int_0^1 x^2 dx = 1/3
        let c = ctx();
        let r: QuadResult<Float> = tanh_sinh(&c, &c.real(0), &c.real(1), |x| {
            Ok(Float::with_val(x.prec(), x * x))
        })
        .unwrap();
        let expect = c.real(1) / 3u32;
        assert!((r.value - expect).abs().to_f64() < 1e-45);
    }

    #[test]
    fn endpoint_singularity() {
        // int_0^1 1/sqrt(x) dx = 2
        let c = ctx();
        let r: QuadResult<Float> =
            tanh_sinh(&c, &c.real(0), &c.real(1), |x| Ok(x.clone().sqrt().recip())).unwrap();
        assert!((r.value - 2u32).abs().to_f64() < 1e-40);
    }

    #[test]
    fn halfline_gaussianish() {
        // int_0^inf e^{-t} dt = 1
        let c = ctx();
        let r: QuadResult<Float> = exp_sinh(&c, |t| Ok((-t.clone()).exp())).unwrap();
        assert!((r.value - 1u32).abs().to_f64() < 1e-45);
    }

    #[test]
    fn halfline_algebraic_singularity() {
        // int_0^inf t^{-1/2} e^{-t} dt = Gamma(1/2) = sqrt(pi)
        let c = ctx();
        let r: QuadResult<Float> = exp_sinh(&c, |t| {
            let p = t.prec();
            Ok(Float::with_val(p, (-t.clone()).exp() / t.clone().sqrt()))
        })
        .unwrap();
        let pi = c.real(rug::float::Constant::Pi);
        assert!((r.value - pi.sqrt()).abs().to_f64() < 1e-40);
    }

    #[test]
    fn complex_valued_integrand() {
        // int_0^inf e^{-(1+i)t} dt = 1/(1+i)
        let c = ctx();
        let wb = c.working_bits();
        let r: QuadResult<PrecComplex> = exp_sinh(&c, |t| {
            let z = PrecComplex::new(-t.clone(), -t.clone());
            Ok(z.exp())
        })
        .unwrap();
        let expect = PrecComplex::with_f64(wb, 1.0, 1.0).recip();
        assert!(r.value.sub(&expect).abs().to_f64() < 1e-40);
    }
}
