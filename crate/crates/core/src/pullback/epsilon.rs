use std::collections::HashMap;
use std::sync::RwLock;

use rayon::prelude::*;

use crate::arith::numtheory::factorize;
use crate::arith::pow_int;
use crate::eisen::EisensteinContext;
use crate::error::{Error, Result};
use crate::gegenbauer::{eval_binary, BinaryForm};
use crate::quadform::{build_t, enumerate_r, HalfIntegralMatrix};

/// Pullback coefficients `eps_{k,nu}(n, N)` for fixed `(k, nu)`, sharing one
/// degree-3 Eisenstein coefficient cache.
#[derive(Debug)]
pub struct PullbackContext {
    k: u32,
    nu: u32,
    eis: EisensteinContext,
    memo: RwLock<HashMap<(i64, HalfIntegralMatrix), BinaryForm>>,
}

impl PullbackContext {
    pub fn new(k: u32, nu: u32) -> Result<Self> {
        if k < 6 || k % 2 == 1 || nu < 2 || nu % 2 == 1 {
            return Err(Error::InvalidArgument(format!(
                "need k >= 6 and nu >= 2 both even, got k = {k}, nu = {nu}"
            )));
        }
        Ok(PullbackContext {
            k,
            nu,
            eis: EisensteinContext::new(3, k)?,
            memo: RwLock::default(),
        })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn nu(&self) -> u32 {
        self.nu
    }

    /// `eps_{k,nu}(n,N)(v) = sum_R a(T_{(n,N,R)}, E~_{3,k}) P_{2k,nu}(R v / 2, n v^t N v)`.
    pub fn epsilon(&self, n: i64, big_n: &HalfIntegralMatrix) -> Result<BinaryForm> {
        let key = (n, big_n.clone());
        if let Some(f) = self.memo.read().unwrap().get(&key) {
            return Ok(f.clone());
        }
        let rs = enumerate_r(n, big_n)?;
        let terms: Result<Vec<BinaryForm>> = rs
            .par_iter()
            .map(|&r| {
                let t = build_t(n, big_n, r)?;
                let a = self.eis.coeff(&t)?;
                Ok(eval_binary(2 * self.k, self.nu, r, n, big_n).scale(&a))
            })
            .collect();
        let sum = terms?
            .iter()
            .fold(BinaryForm::zero(self.nu), |acc, t| &acc + t);
        self.memo.write().unwrap().insert(key, sum.clone());
        Ok(sum)
    }

    /// Coefficient `n` of `g_N | T^{(m)}` in weight `k + nu`, where
    /// `g_N = sum_n eps(n, N) q^n`.
    pub fn epsilon_hecke(&self, m: u64, n: i64, big_n: &HalfIntegralMatrix) -> Result<BinaryForm> {
        if m == 0 || n < 1 {
            return Err(Error::InvalidArgument("m and n must be positive".into()));
        }
        let primes: Vec<u64> = factorize(m)
            .into_iter()
            .flat_map(|(p, e)| std::iter::repeat_n(p, e as usize))
            .collect();
        self.hecke_rec(&primes, n, big_n)
    }

    fn hecke_rec(&self, primes: &[u64], n: i64, big_n: &HalfIntegralMatrix) -> Result<BinaryForm> {
        let Some((&p, rest)) = primes.split_first() else {
            return self.epsilon(n, big_n);
        };
        let p = p as i64;
        let mut out = self.hecke_rec(rest, n * p, big_n)?;
        if n % p == 0 {
            let lower = self.hecke_rec(rest, n / p, big_n)?;
            out = &out + &lower.scale(&pow_int(p, self.k + self.nu - 1));
        }
        Ok(out)
    }
}

/// `eps_{k,nu}(n, N)` with a fresh context.
pub fn epsilon(k: u32, nu: u32, n: i64, big_n: &HalfIntegralMatrix) -> Result<BinaryForm> {
    PullbackContext::new(k, nu)?.epsilon(n, big_n)
}

/// `eps_{k,nu}(m, n, N)` with a fresh context.
pub fn epsilon_hecke(
    k: u32,
    nu: u32,
    m: u64,
    n: i64,
    big_n: &HalfIntegralMatrix,
) -> Result<BinaryForm> {
    PullbackContext::new(k, nu)?.epsilon_hecke(m, n, big_n)
}
