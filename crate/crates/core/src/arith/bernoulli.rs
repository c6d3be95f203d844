use std::sync::{OnceLock, RwLock};

use num_traits::{One, Zero};

use super::numtheory::binomial;
use super::rational::{int, Rational};
use crate::error::{Error, Result};

fn table() -> &'static RwLock<Vec<Rational>> {
    static TABLE: OnceLock<RwLock<Vec<Rational>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(vec![Rational::one()]))
}

/// The n-th Bernoulli number with `B_1 = -1/2`.
///
/// Computed from `sum_{j=0}^{n} C(n+1, j) B_j = 0` and memoized.
pub fn bernoulli(n: usize) -> Rational {
    if let Some(b) = table().read().unwrap().get(n) {
        return b.clone();
    }
    let mut t = table().write().unwrap();
    while t.len() <= n {
        let m = t.len();
        let s = t
            .iter()
            .enumerate()
            .map(|(j, b)| b * int(binomial(m as u64 + 1, j as u64)))
            .fold(Rational::zero(), |a, b| a + b);
        t.push(-s / int(m as u64 + 1));
    }
    t[n].clone()
}

/// Bernoulli polynomial `B_r(x) = sum_j C(r, j) B_j x^{r-j}`.
pub fn bernoulli_poly(r: usize, x: &Rational) -> Rational {
    let mut acc = Rational::zero();
    let mut xp = Rational::one();
    for j in (0..=r).rev() {
        acc += bernoulli(j) * int(binomial(r as u64, j as u64)) * &xp;
        xp *= x;
    }
    acc
}

/// `zeta(1 - k) = -B_k / k` for even `k >= 2`.
pub fn zeta_neg(k: u32) -> Result<Rational> {
    if k < 2 || k % 2 == 1 {
        return Err(Error::InvalidArgument(format!(
            "zeta(1-k) needs even k >= 2, got {k}"
        )));
    }
    Ok(-bernoulli(k as usize) / int(k))
}
