use num_bigint::BigInt;
use num_traits::{FromPrimitive, One, ToPrimitive, Zero};

use super::{default_precision, dim_cusp, hecke_t, miller_basis, MillerBasis, QExpansion};
use crate::arith::numtheory::factorize;
use crate::arith::{int, Rational};
use crate::error::{Error, Result};
use crate::linalg::{self, RatMat};

/// Characteristic polynomial `det(X I - A)`, coefficients from `X^0` up to the
/// leading `1` (Faddeev–LeVerrier).
pub fn charpoly(a: &RatMat) -> Vec<Rational> {
    let n = a.len();
    let mut c = vec![Rational::zero(); n + 1];
    c[n] = Rational::one();
    let mut m: RatMat = vec![vec![Rational::zero(); n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = mat_mul(a, &m);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &c[n - k + 1];
        }
        m = next;
        let am = mat_mul(a, &m);
        let tr = (0..n).fold(Rational::zero(), |acc, i| acc + &am[i][i]);
        c[n - k] = -tr / int(k as i64);
    }
    c
}

fn mat_mul(a: &RatMat, b: &RatMat) -> RatMat {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).fold(Rational::zero(), |acc, k| acc + &a[i][k] * &b[k][j]))
                .collect()
        })
        .collect()
}

fn eval_int(c: &[BigInt], x: &BigInt) -> BigInt {
    c.iter().rev().fold(BigInt::zero(), |acc, a| acc * x + a)
}

/// Integer roots of a monic integer polynomial, located numerically
/// (Durand–Kerner) and confirmed exactly.
fn integer_roots(c: &[BigInt]) -> Vec<BigInt> {
    let n = c.len() - 1;
    if n == 0 {
        return vec![];
    }
    if n == 1 {
        return vec![-c[0].clone()];
    }
    // Scale X = s Y so the roots are of moderate size.
    let bound = c[..n]
        .iter()
        .map(|a| a.to_f64().unwrap_or(f64::MAX).abs())
        .fold(1.0f64, f64::max)
        .powf(1.0 / n as f64)
        .max(1.0);
    let coef: Vec<f64> = (0..=n)
        .map(|i| c[i].to_f64().unwrap_or(f64::MAX) / bound.powi((n - i) as i32))
        .collect();
    let eval = |z: (f64, f64)| {
        let mut acc = (0.0, 0.0);
        for a in coef.iter().rev() {
            acc = (acc.0 * z.0 - acc.1 * z.1 + a, acc.0 * z.1 + acc.1 * z.0);
        }
        acc
    };
    let mut z: Vec<(f64, f64)> = (0..n)
        .map(|i| {
            let t = 0.4 + 0.9 * i as f64;
            (t.cos() * 1.3, t.sin() * 1.3)
        })
        .collect();
    for _ in 0..2000 {
        for i in 0..n {
            let num = eval(z[i]);
            let mut den = (1.0, 0.0);
            for j in 0..n {
                if j != i {
                    let d = (z[i].0 - z[j].0, z[i].1 - z[j].1);
                    den = (den.0 * d.0 - den.1 * d.1, den.0 * d.1 + den.1 * d.0);
                }
            }
            let norm = den.0 * den.0 + den.1 * den.1;
            if norm == 0.0 {
                continue;
            }
            let q = (
                (num.0 * den.0 + num.1 * den.1) / norm,
                (num.1 * den.0 - num.0 * den.1) / norm,
            );
            z[i] = (z[i].0 - q.0, z[i].1 - q.1);
        }
    }
    let mut roots: Vec<BigInt> = Vec::new();
    for w in z {
        let centre = (w.0 * bound).round();
        for delta in -2i64..=2 {
            let Some(r) = BigInt::from_f64(centre).map(|r| r + delta) else {
                continue;
            };
            if eval_int(c, &r).is_zero() && !roots.contains(&r) {
                roots.push(r);
            }
        }
    }
    roots.sort();
    roots
}

/// Normalized Hecke eigenforms spanning `S_k`, when `T(2)` splits over `Q` with
/// distinct eigenvalues.
#[derive(Clone, Debug)]
pub struct EigenBasis {
    weight: u32,
    forms: Vec<QExpansion>,
    miller: std::sync::Arc<MillerBasis>,
}

impl EigenBasis {
    /// Eigenbasis at the default precision for weight `k`.
    pub fn new(k: u32) -> Result<Self> {
        Self::with_precision(k, default_precision(k))
    }

    pub fn with_precision(k: u32, precision: usize) -> Result<Self> {
        if k < 12 || k % 2 == 1 {
            return Err(Error::InvalidArgument(format!(
                "eigenbasis needs even k >= 12, got {k}"
            )));
        }
        let d = dim_cusp(k);
        let precision = precision.max(2 * d + 2);
        let miller = miller_basis(k, precision)?;
        // Column c of the matrix: coordinates a(1..d) of T(2) g_c.
        let images: Vec<QExpansion> = miller
            .cusp
            .iter()
            .map(|g| hecke_t(2, g))
            .collect::<Result<_>>()?;
        let t2: RatMat = (0..d)
            .map(|i| (0..d).map(|c| images[c].coeff(i + 1).clone()).collect())
            .collect();
        let cp: Vec<BigInt> = charpoly(&t2)
            .into_iter()
            .map(|x| {
                debug_assert!(x.is_integer());
                x.to_integer()
            })
            .collect();
        let roots = integer_roots(&cp);
        if roots.len() != d {
            return Err(Error::UnsupportedHeckeField { weight: k });
        }
        let mut forms = Vec::with_capacity(d);
        for lam in roots.iter().rev() {
            let mut shifted = t2.clone();
            for (i, row) in shifted.iter_mut().enumerate() {
                row[i] -= Rational::from_integer(lam.clone());
            }
            let kernel = linalg::nullspace(&shifted);
            if kernel.len() != 1 || kernel[0][0].is_zero() {
                return Err(Error::UnsupportedHeckeField { weight: k });
            }
            let x0 = kernel[0][0].clone();
            let mut f = QExpansion::new(k, vec![Rational::zero(); precision + 1]);
            for (g, x) in miller.cusp.iter().zip(&kernel[0]) {
                f = f.add(&g.scale(&(x / &x0)))?;
            }
            forms.push(f);
        }
        Ok(EigenBasis {
            weight: k,
            forms,
            miller,
        })
    }

    pub fn weight(&self) -> u32 {
        self.weight
    }

    pub fn dim(&self) -> usize {
        self.forms.len()
    }

    pub fn forms(&self) -> &[QExpansion] {
        &self.forms
    }

    pub fn precision(&self) -> usize {
        self.miller.precision()
    }

    pub fn miller(&self) -> &MillerBasis {
        &self.miller
    }

    /// Eigenvalue of `T^{(m)} = T(p_1) ... T(p_r)` on form `j`: `prod a_j(p_i)`.
    pub fn eigenvalue(&self, j: usize, m: u64) -> Result<Rational> {
        let f = self
            .forms
            .get(j)
            .ok_or_else(|| Error::InvalidArgument(format!("no eigenform with index {j}")))?;
        let mut lam = Rational::one();
        for (p, e) in factorize(m) {
            if p as usize > f.precision() {
                return Err(Error::InsufficientPrecision {
                    have: f.precision(),
                    need: p as usize,
                });
            }
            for _ in 0..e {
                lam *= f.coeff(p as usize);
            }
        }
        Ok(lam)
    }

    /// Coefficients `c_j` with `g = sum c_j f_j`, for a cusp form `g`.
    pub fn coordinates(&self, g: &QExpansion) -> Result<Vec<Rational>> {
        if g.weight() != self.weight {
            return Err(Error::WeightMismatch(g.weight(), self.weight));
        }
        if g.precision() < super::sturm_bound(self.weight) {
            return Err(Error::SingularSystem(format!(
                "precision {} is below the Sturm bound {}",
                g.precision(),
                super::sturm_bound(self.weight)
            )));
        }
        if !self.miller.in_cusp_span(g) {
            return Err(Error::NotCuspForm(self.weight));
        }
        let d = self.dim();
        let a: RatMat = (0..d)
            .map(|i| (0..d).map(|j| self.forms[j].coeff(i + 1).clone()).collect())
            .collect();
        let b: Vec<Rational> = (0..d).map(|i| g.coeff(i + 1).clone()).collect();
        linalg::solve(&a, &b)
            .ok_or_else(|| Error::SingularSystem("eigenforms are dependent".into()))
    }
}
