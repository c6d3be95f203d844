//! Fourier coefficients of the normalized Siegel Eisenstein series
//! `E~_{n,k} = Z(n,k) E_{n,k}` of degree `n <= 3`.

use std::collections::HashMap;
use std::sync::RwLock;

use crate::arith::numtheory::factorize;
use crate::arith::{l_value_neg, pow_int, zeta_neg, Rational};
use crate::error::{Error, Result};
use crate::quadform::HalfIntegralMatrix;
use crate::siegel::local_f;

/// `Z(n,k) = zeta(1-k) prod_{j=1}^{[n/2]} zeta(1+2j-2k)`.
pub fn z_const(n: u32, k: u32) -> Result<Rational> {
    if k < 4 || k % 2 == 1 {
        return Err(Error::InvalidArgument(format!(
            "weight {k} must be even and >= 4"
        )));
    }
    let mut z = zeta_neg(k)?;
    for j in 1..=n / 2 {
        z *= zeta_tail(j, k)?;
    }
    Ok(z)
}

/// `zeta(1 + 2i - 2k)`.
fn zeta_tail(i: u32, k: u32) -> Result<Rational> {
    if 2 * i >= 2 * k {
        return Err(Error::InvalidArgument(format!(
            "zeta(1+2*{i}-2*{k}) is not at a negative odd integer"
        )));
    }
    zeta_neg(2 * k - 2 * i)
}

/// Degree and weight of `E~_{n,k}` together with a coefficient cache keyed by
/// the nondegenerate block.
#[derive(Debug)]
pub struct EisensteinContext {
    n: u32,
    k: u32,
    memo: RwLock<HashMap<HalfIntegralMatrix, Rational>>,
}

impl EisensteinContext {
    pub fn new(n: u32, k: u32) -> Result<Self> {
        if !(1..=3).contains(&n) {
            return Err(Error::InvalidArgument(format!("degree {n} not in 1..=3")));
        }
        if k % 2 == 1 || k < 4 || 2 * k < n + 1 {
            return Err(Error::InvalidArgument(format!(
                "weight {k} must be even and >= 4"
            )));
        }
        if (2 * k == n + 2 || 2 * k == n + 3) && k % 4 == 2 {
            return Err(Error::InvalidArgument(format!(
                "weight {k} is excluded in degree {n}"
            )));
        }
        Ok(EisensteinContext {
            n,
            k,
            memo: RwLock::new(HashMap::new()),
        })
    }

    pub fn degree(&self) -> u32 {
        self.n
    }

    pub fn weight(&self) -> u32 {
        self.k
    }

    /// `a(T, E~_{n,k})`.
    pub fn coeff(&self, t: &HalfIntegralMatrix) -> Result<Rational> {
        if t.size() as u32 != self.n {
            return Err(Error::InvalidArgument(format!(
                "T has size {}, expected {}",
                t.size(),
                self.n
            )));
        }
        if !t.is_psd() {
            return Err(Error::NotPsd);
        }
        if t.rank() == 0 {
            return z_const(self.n, self.k);
        }
        let part = t.nondeg_part()?;
        if let Some(v) = self.memo.read().unwrap().get(&part.matrix) {
            return Ok(v.clone());
        }
        let v = self.nondegenerate_coeff(t, &part.matrix, part.det2)?;
        self.memo.write().unwrap().insert(part.matrix, v.clone());
        Ok(v)
    }

    fn nondegenerate_coeff(
        &self,
        t: &HalfIntegralMatrix,
        tt: &HalfIntegralMatrix,
        det2: i128,
    ) -> Result<Rational> {
        let (n, k) = (self.n, self.k);
        let m = tt.size() as u32;
        let mut value = pow_int(2, m.div_ceil(2));
        for (p, _) in factorize(det2 as u64) {
            let x = pow_int(p as i64, k - m - 1);
            value *= local_f(p, tt)?.eval(&x);
        }
        if m.is_multiple_of(2) {
            for i in m / 2 + 1..=n / 2 {
                value *= zeta_tail(i, k)?;
            }
            value *= l_value_neg(k - m / 2, t.chi_star()?);
        } else {
            for i in m.div_ceil(2)..=n / 2 {
                value *= zeta_tail(i, k)?;
            }
        }
        Ok(value)
    }
}

/// `a(T, E~_{n,k})` with a throwaway context.
pub fn eis_coeff(n: u32, k: u32, t: &HalfIntegralMatrix) -> Result<Rational> {
    EisensteinContext::new(n, k)?.coeff(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;
    use crate::arith::numtheory::sigma;

    #[test]
    fn z_values() {
        assert_eq!(z_const(1, 12).unwrap(), zeta_neg(12).unwrap());
        let z2 = zeta_neg(14).unwrap() * zeta_neg(26).unwrap();
        assert_eq!(z_const(2, 14).unwrap(), z2);
        assert_eq!(z_const(3, 14).unwrap(), z2);
        assert!(z_const(2, 5).is_err());
    }

    #[test]
    fn zero_matrix_gives_z() {
        let ctx = EisensteinContext::new(3, 14).unwrap();
        assert_eq!(
            ctx.coeff(&HalfIntegralMatrix::zero(3)).unwrap(),
            z_const(3, 14).unwrap()
        );
    }

    #[test]
    fn degree_one_examples() {
        let t = HalfIntegralMatrix::diag(&[2]).unwrap();
        assert_eq!(eis_coeff(1, 16, &t).unwrap(), int(65538));
        let ctx = EisensteinContext::new(1, 12).unwrap();
        for t in 1..=20i64 {
            let v = ctx.coeff(&HalfIntegralMatrix::diag(&[t]).unwrap()).unwrap();
            assert_eq!(v, int(2) * int(sigma(t as u64, 11)));
        }
    }

    #[test]
    fn siegel_operator() {
        let t1: HalfIntegralMatrix = "1,1,2".parse().unwrap();
        let a2 = eis_coeff(2, 14, &t1).unwrap();
        let a3 = eis_coeff(3, 14, &t1.pad_zero(1).unwrap()).unwrap();
        assert_eq!(a2, a3);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(EisensteinContext::new(4, 14).is_err());
        assert!(EisensteinContext::new(3, 7).is_err());
        let ctx = EisensteinContext::new(2, 8).unwrap();
        let indefinite = HalfIntegralMatrix::from_doubled(&[vec![2, 3], vec![3, 2]]).unwrap();
        assert!(matches!(ctx.coeff(&indefinite), Err(Error::NotPsd)));
        assert!(ctx.coeff(&HalfIntegralMatrix::identity(3)).is_err());
    }
}
