//! Exact Bernoulli numbers with a synchronized global cache.
//!
//! Convention: B_1 = -1/2. Computed by the defining recurrence
//! sum_{k=0}^{n} C(n+1, k) B_k = 0 in exact rational arithmetic; the cache
//! grows to the largest index ever demanded and feeds both the exact
//! zeta(1-n) values and every Euler-Maclaurin tail in the crate.

use once_cell::sync::Lazy;
use rug::{Float, Integer, Rational};
use std::sync::Mutex;

static CACHE: Lazy<Mutex<Vec<Rational>>> = Lazy::new(|| {
    Mutex::new(vec![
        Rational::from(1),
        Rational::from((-1, 2)),
    ])
});

/// Exact Bernoulli number B_n (B_1 = -1/2).
pub fn bernoulli(n: u32) -> Rational {
    let n = n as usize;
    let mut cache = CACHE.lock().unwrap();
    while cache.len() <= n {
        let m = cache.len(); // computing B_m
        if m % 2 == 1 {
            cache.push(Rational::new());
            continue;
        }
        // B_m = -1/(m+1) * sum_{k=0}^{m-1} C(m+1, k) B_k
        let mut acc = Rational::new();
        for (k, b) in cache.iter().enumerate() {
            if b.cmp0() == std::cmp::Ordering::Equal {
                continue;
            }
            let c = Integer::from(m as u32 + 1).binomial(k as u32);
            acc += b * Rational::from(c);
        }
        acc /= -Rational::from(m as u32 + 1);
        cache.push(acc);
    }
    cache[n].clone()
}

/// B_n as a float at the given precision.
pub fn bernoulli_float(n: u32, prec: u32) -> Float {
    Float::with_val(prec, &bernoulli(n))
}
