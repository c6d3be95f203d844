//! Level-one modular forms as truncated `q`-expansions.

mod cohen;
mod eigen;

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::{One, Zero};

use crate::arith::numtheory::{factorize, is_prime, sigma};
use crate::arith::{bernoulli, int, pow_int, Rational};
use crate::error::{Error, Result};

pub use cohen::{cohen_series, petersson_ratio, std_l_value};
pub use eigen::{charpoly, EigenBasis};

/// `a(0), ..., a(P)` of a weight-`k` form; `P` is the precision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QExpansion {
    weight: u32,
    coeffs: Vec<Rational>,
}

impl QExpansion {
    pub fn new(weight: u32, coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a q-expansion needs a(0)");
        QExpansion { weight, coeffs }
    }

    pub fn weight(&self) -> u32 {
        self.weight
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// `a(n)`; panics beyond the precision.
    pub fn coeff(&self, n: usize) -> &Rational {
        assert!(
            n <= self.precision(),
            "a({n}) is beyond precision {}",
            self.precision()
        );
        &self.coeffs[n]
    }

    pub fn truncate(&self, precision: usize) -> Self {
        let p = precision.min(self.precision());
        QExpansion {
            weight: self.weight,
            coeffs: self.coeffs[..=p].to_vec(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        QExpansion {
            weight: self.weight,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.combine(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.combine(other, |a, b| a - b)
    }

    fn combine(&self, other: &Self, op: impl Fn(&Rational, &Rational) -> Rational) -> Result<Self> {
        if self.weight != other.weight {
            return Err(Error::WeightMismatch(self.weight, other.weight));
        }
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| op(a, b))
            .collect();
        Ok(QExpansion {
            weight: self.weight,
            coeffs,
        })
    }

    pub fn mul(&self, other: &Self) -> Self {
        let p = self.precision().min(other.precision());
        let mut coeffs = vec![Rational::zero(); p + 1];
        for (i, a) in self.coeffs[..=p].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=p - i].iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QExpansion {
            weight: self.weight + other.weight,
            coeffs,
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let one = QExpansion::new(0, {
            let mut c = vec![Rational::zero(); self.precision() + 1];
            c[0] = Rational::one();
            c
        });
        (0..e).fold(one, |acc, _| acc.mul(self))
    }
}

/// `E_k = 1 - (2k / B_k) sum sigma_{k-1}(n) q^n`.
pub fn eisenstein_qexp(k: u32, precision: usize) -> Result<QExpansion> {
    if k < 4 || k % 2 == 1 {
        return Err(Error::InvalidArgument(format!(
            "E_k needs even k >= 4, got {k}"
        )));
    }
    let c = -int(2 * k) / bernoulli(k as usize);
    let mut coeffs = vec![Rational::one()];
    for n in 1..=precision as u64 {
        coeffs.push(&c * int(sigma(n, k - 1)));
    }
    Ok(QExpansion::new(k, coeffs))
}

/// `Delta = (E_4^3 - E_6^2) / 1728`.
pub fn delta(precision: usize) -> QExpansion {
    let e4 = eisenstein_qexp(4, precision).expect("weight 4");
    let e6 = eisenstein_qexp(6, precision).expect("weight 6");
    e4.pow(3)
        .sub(&e6.pow(2))
        .expect("both weight 12")
        .scale(&Rational::new(1.into(), 1728.into()))
}

pub fn dim_modular(k: u32) -> usize {
    if k % 2 == 1 || k == 2 {
        0
    } else {
        (k / 12) as usize + usize::from(k % 12 != 2)
    }
}

pub fn dim_cusp(k: u32) -> usize {
    if k < 12 {
        0
    } else {
        dim_modular(k) - 1
    }
}

/// Number of leading coefficients `a(0), ..., a(B-1)` that determine a form of
/// weight `k`: `B = floor(k/12) + 1`.
pub fn sturm_bound(k: u32) -> usize {
    (k / 12) as usize + 1
}

/// `max(20, 2 * sturm_bound(k))`, overridable through `EISCONG_PRECISION`.
pub fn default_precision(k: u32) -> usize {
    let base = 20.max(2 * sturm_bound(k));
    std::env::var("EISCONG_PRECISION")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
        .map_or(base, |p| p.max(2 * dim_modular(k) + 2))
}

/// Echelonized integral bases of `M_k` and `S_k`.
#[derive(Clone, Debug)]
pub struct MillerBasis {
    pub weight: u32,
    /// `g_c = q^c + O(q^d)`, `c = 0..d`, `d = dim M_k`.
    pub modular: Vec<QExpansion>,
    /// The members of `modular` with `c >= 1`.
    pub cusp: Vec<QExpansion>,
}

impl MillerBasis {
    pub fn precision(&self) -> usize {
        self.modular
            .first()
            .map_or(usize::MAX, QExpansion::precision)
    }

    /// Coordinates of `g` in `basis`, or `None` when `g` is not in the span to
    /// the common precision. `basis[c]` is assumed to be `q^{c+offset} + O(q^d)`.
    fn coordinates(basis: &[QExpansion], offset: usize, g: &QExpansion) -> Option<Vec<Rational>> {
        let coords: Vec<Rational> = (0..basis.len())
            .map(|c| g.coeff(c + offset).clone())
            .collect();
        let p = g
            .precision()
            .min(basis.first().map_or(g.precision(), |b| b.precision()));
        for n in 0..=p {
            let mut v = Rational::zero();
            for (b, x) in basis.iter().zip(&coords) {
                v += x * b.coeff(n);
            }
            if &v != g.coeff(n) {
                return None;
            }
        }
        Some(coords)
    }

    pub fn in_modular_span(&self, g: &QExpansion) -> bool {
        g.weight() == self.weight && Self::coordinates(&self.modular, 0, g).is_some()
    }

    pub fn in_cusp_span(&self, g: &QExpansion) -> bool {
        g.weight() == self.weight
            && g.coeff(0).is_zero()
            && Self::coordinates(&self.cusp, 1, g).is_some()
    }

    pub fn cusp_coordinates(&self, g: &QExpansion) -> Option<Vec<Rational>> {
        if g.weight() != self.weight || !g.coeff(0).is_zero() {
            return None;
        }
        Self::coordinates(&self.cusp, 1, g)
    }
}

type MillerCache = RwLock<HashMap<(u32, usize), Arc<MillerBasis>>>;

fn miller_cache() -> &'static MillerCache {
    static CACHE: OnceLock<MillerCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Bases of `M_k` and `S_k` built from `E_4^a E_6^b Delta^c`.
pub fn miller_basis(k: u32, precision: usize) -> Result<Arc<MillerBasis>> {
    if k % 2 == 1 {
        return Err(Error::InvalidArgument(format!("odd weight {k}")));
    }
    let d = dim_modular(k);
    if precision + 1 < d {
        return Err(Error::InsufficientPrecision {
            have: precision,
            need: d.saturating_sub(1),
        });
    }
    if let Some(b) = miller_cache().read().unwrap().get(&(k, precision)) {
        return Ok(b.clone());
    }
    let e4 = eisenstein_qexp(4, precision)?;
    let e6 = eisenstein_qexp(6, precision)?;
    let dl = delta(precision);
    let mut gens: Vec<QExpansion> = (0..d as u32)
        .map(|c| {
            let w = k - 12 * c;
            let (a, b) = if w.is_multiple_of(4) {
                (w / 4, 0)
            } else {
                ((w - 6) / 4, 1)
            };
            e4.pow(a).mul(&e6.pow(b)).mul(&dl.pow(c))
        })
        .collect();
    for i in (0..d).rev() {
        for j in 0..i {
            let f = gens[j].coeff(i).clone();
            if !f.is_zero() {
                gens[j] = gens[j].sub(&gens[i].scale(&f)).expect("same weight");
            }
        }
    }
    let cusp = gens.iter().skip(1).cloned().collect();
    let basis = Arc::new(MillerBasis {
        weight: k,
        modular: gens,
        cusp,
    });
    miller_cache()
        .write()
        .unwrap()
        .insert((k, precision), basis.clone());
    Ok(basis)
}

/// `a(n, f | T(p)) = a(np) + p^{k-1} a(n/p)`, to precision `floor(P/p)`.
pub fn hecke_t(p: u64, f: &QExpansion) -> Result<QExpansion> {
    if !is_prime(p) {
        return Err(Error::InvalidArgument(format!("{p} is not prime")));
    }
    let p_us = p as usize;
    let pk = pow_int(p as i64, f.weight().saturating_sub(1));
    let coeffs = (0..=f.precision() / p_us)
        .map(|n| {
            let mut a = f.coeff(n * p_us).clone();
            if n % p_us == 0 && f.weight() >= 1 {
                a += &pk * f.coeff(n / p_us);
            }
            a
        })
        .collect();
    Ok(QExpansion::new(f.weight(), coeffs))
}

/// `T^{(m)} = T(p_1) ... T(p_r)` over the prime factors of `m` with multiplicity.
pub fn hecke_tm(m: u64, f: &QExpansion) -> Result<QExpansion> {
    if m == 0 {
        return Err(Error::InvalidArgument("m must be positive".into()));
    }
    let mut g = f.clone();
    for (p, e) in factorize(m) {
        for _ in 0..e {
            g = hecke_t(p, &g)?;
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eisenstein_series() {
        assert_eq!(eisenstein_qexp(4, 5).unwrap().coeff(1), &int(240));
        assert_eq!(eisenstein_qexp(6, 5).unwrap().coeff(1), &int(-504));
        for k in (4..30).step_by(2) {
            assert_eq!(eisenstein_qexp(k, 3).unwrap().coeff(0), &int(1));
        }
        assert!(eisenstein_qexp(2, 5).is_err());
        assert!(eisenstein_qexp(5, 5).is_err());
    }

    #[test]
    fn delta_coefficients() {
        let d = delta(12);
        let tau = [
            0i64, 1, -24, 252, -1472, 4830, -6048, -16744, 84480, -113643, -115920, 534612, -370944,
        ];
        for (n, &t) in tau.iter().enumerate() {
            assert_eq!(d.coeff(n), &int(t));
        }
    }

    #[test]
    fn dimensions() {
        let b = miller_basis(16, 10).unwrap();
        assert_eq!((b.modular.len(), b.cusp.len()), (2, 1));
        let b = miller_basis(2, 10).unwrap();
        assert_eq!(b.modular.len(), 0);
        let b = miller_basis(12, 10).unwrap();
        assert_eq!(b.cusp.len(), 1);
        assert_eq!(b.cusp[0], delta(10));
        for k in (0..80).step_by(2) {
            let b = miller_basis(k, 20).unwrap();
            assert_eq!(b.modular.len(), dim_modular(k));
            assert_eq!(b.cusp.len(), dim_cusp(k));
            for (c, g) in b.modular.iter().enumerate() {
                for n in 0..b.modular.len() {
                    assert_eq!(g.coeff(n), &int(i64::from(n == c)));
                }
                assert!(g.coeffs().iter().all(|a| a.is_integer()));
            }
        }
    }

    #[test]
    fn hecke_examples() {
        let d = delta(40);
        let t2 = hecke_t(2, &d).unwrap();
        assert_eq!(t2, d.truncate(20).scale(&int(-24)));
        for k in [4u32, 6, 12] {
            let e = eisenstein_qexp(k, 30).unwrap();
            for p in [2u64, 3, 5] {
                let lam = int(1) + pow_int(p as i64, k - 1);
                assert_eq!(
                    hecke_t(p, &e).unwrap(),
                    e.truncate(30 / p as usize).scale(&lam)
                );
            }
        }
        assert_eq!(hecke_tm(1, &d).unwrap(), d);
        assert_eq!(hecke_tm(4, &d).unwrap(), d.truncate(10).scale(&int(576)));
        assert_eq!(
            hecke_tm(6, &d).unwrap(),
            d.truncate(6).scale(&int(-24 * 252))
        );
        let w16 = miller_basis(16, 20).unwrap().cusp[0].clone();
        assert_eq!(w16.coeff(2), &int(216));
        assert_eq!(hecke_t(2, &w16).unwrap(), w16.truncate(10).scale(&int(216)));
    }

    #[test]
    fn hecke_commutes() {
        for k in [12u32, 16, 18, 20] {
            let b = miller_basis(k, 60).unwrap();
            for g in &b.modular {
                for (p, q) in [(2u64, 3u64), (2, 5), (3, 5)] {
                    let pq = hecke_t(q, &hecke_t(p, g).unwrap()).unwrap();
                    let qp = hecke_t(p, &hecke_t(q, g).unwrap()).unwrap();
                    let prec = pq.precision().min(qp.precision());
                    assert_eq!(pq.truncate(prec), qp.truncate(prec));
                }
            }
        }
    }

    #[test]
    fn arithmetic_rules() {
        let e4 = eisenstein_qexp(4, 5).unwrap();
        let e6 = eisenstein_qexp(6, 7).unwrap();
        assert!(matches!(e4.add(&e6), Err(Error::WeightMismatch(4, 6))));
        let p = e4.mul(&e6);
        assert_eq!((p.weight(), p.precision()), (10, 5));
        assert_eq!(p, eisenstein_qexp(10, 5).unwrap());
    }

    #[test]
    #[should_panic]
    fn reading_beyond_precision_panics() {
        let _ = delta(5).coeff(6);
    }
}
