//! Local Siegel series `b_p(B, s) = gamma_p(B, X) F_p(B, X)`, `X = p^{-s}`.

mod lattice;
pub mod oracle;
mod poly;

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::numtheory::is_prime;
use crate::arith::{int, ord_p, pow_int, Rational};
use crate::error::{Error, Result};
use crate::quadform::HalfIntegralMatrix;

pub use oracle::{oracle_bp, oracle_bp_stratified};
pub use poly::LaurentPolyX;

/// `F_p(B, X)`: integer coefficients, constant term 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SiegelSeriesPolynomial {
    coeffs: Vec<BigInt>,
}

impl SiegelSeriesPolynomial {
    fn from_laurent(p: &LaurentPolyX) -> Result<Self> {
        if p.low_degree().is_some_and(|e| e < 0) {
            return Err(Error::InexactDivision("negative power in F_p".into()));
        }
        let deg = p.degree().unwrap_or(0);
        let mut coeffs = Vec::with_capacity(deg as usize + 1);
        for e in 0..=deg {
            let c = p.coeff(e);
            if !c.is_integer() {
                return Err(Error::InexactDivision(format!(
                    "non-integral coefficient {c}"
                )));
            }
            coeffs.push(c.to_integer());
        }
        if coeffs[0] != BigInt::one() {
            return Err(Error::InexactDivision(format!(
                "constant term {} != 1",
                coeffs[0]
            )));
        }
        Ok(SiegelSeriesPolynomial { coeffs })
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + Rational::from_integer(c.clone());
        }
        acc
    }

    pub fn to_laurent(&self) -> LaurentPolyX {
        LaurentPolyX::from_coeffs(
            self.coeffs
                .iter()
                .map(|c| Rational::from_integer(c.clone())),
        )
    }
}

/// `1` if `a` is a square in `Q_p`, `-1` if `Q_p(sqrt a)` is unramified
/// quadratic, `0` if ramified.
pub fn chi_p(p: u64, a: &Rational) -> Result<i8> {
    check_prime(p)?;
    let v = ord_p(a, p).ok_or_else(|| Error::InvalidArgument("chi_p(0) is undefined".into()))?;
    if v.is_odd() {
        return Ok(0);
    }
    let pb = BigInt::from(p);
    // Unit part up to squares: numerator times denominator with p removed.
    let mut u = a.numer() * a.denom();
    while (&u % &pb).is_zero() {
        u /= &pb;
    }
    if p == 2 {
        let r = u.mod_floor(&BigInt::from(8));
        return Ok(if r == BigInt::one() {
            1
        } else if r == BigInt::from(5) {
            -1
        } else {
            0
        });
    }
    let r = u.mod_floor(&pb);
    let e = (p - 1) / 2;
    Ok(if r.modpow(&BigInt::from(e), &pb).is_one() {
        1
    } else {
        -1
    })
}

/// `gamma_p(B, X)` as numerator and denominator polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaFactor {
    pub numerator: LaurentPolyX,
    pub denominator: LaurentPolyX,
}

pub fn gamma_p(p: u64, b: &HalfIntegralMatrix) -> Result<GammaFactor> {
    check_prime(p)?;
    let n = b.size() as u32;
    let det = b.det();
    if det.is_zero() {
        return Err(Error::Degenerate);
    }
    let mut numerator = LaurentPolyX::one_minus(int(1), 1);
    for i in 1..=n / 2 {
        numerator = &numerator * &LaurentPolyX::one_minus(pow_int(p as i64, 2 * i), 2);
    }
    let denominator = if n.is_multiple_of(2) {
        let sign = if (n / 2).is_multiple_of(2) {
            int(1)
        } else {
            int(-1)
        };
        let chi = chi_p(p, &(sign * det))?;
        LaurentPolyX::one_minus(pow_int(p as i64, n / 2) * int(chi), 1)
    } else {
        LaurentPolyX::one()
    };
    Ok(GammaFactor {
        numerator,
        denominator,
    })
}

fn check_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("{p} is not prime")))
    }
}

type FCache = RwLock<HashMap<(u64, HalfIntegralMatrix), SiegelSeriesPolynomial>>;

fn cache() -> &'static FCache {
    static CACHE: OnceLock<FCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Work cap (number of sublattices) for the extra coefficient that confirms the
/// computed polynomial has stabilized.
const CHECK_BUDGET: u64 = 1 << 20;

/// `F_p(B, X)` for nondegenerate `B` of size at most 3.
///
/// Computed from sublattice counts: for each lattice `M` of index `p^i` the
/// classes `R` with `M` in the kernel of `R` contribute a full character sum that
/// is either `0` or their number; Moebius inversion over the lattice of
/// sublattices turns these sums into `b_p` truncated at `X^{i_max}`, and `F_p` is
/// read off after dividing by `gamma_p`. `ord_p(det 2B)` bounds the degree.
pub fn local_f(p: u64, b: &HalfIntegralMatrix) -> Result<SiegelSeriesPolynomial> {
    check_prime(p)?;
    let key = (p, b.clone());
    if let Some(f) = cache().read().unwrap().get(&key) {
        return Ok(f.clone());
    }
    let f = compute_local_f(p, b)?;
    cache().write().unwrap().insert(key, f.clone());
    Ok(f)
}

/// [`local_f`] without the process-wide memo.
pub fn local_f_uncached(p: u64, b: &HalfIntegralMatrix) -> Result<SiegelSeriesPolynomial> {
    check_prime(p)?;
    compute_local_f(p, b)
}

fn compute_local_f(p: u64, b: &HalfIntegralMatrix) -> Result<SiegelSeriesPolynomial> {
    let n = b.size();
    let det2 = b.det2();
    if det2 == 0 {
        return Err(Error::Degenerate);
    }
    let bound = lattice::valuation(det2, p as i128);
    let lattices_at = |e: u32| (p as f64).powi(((n - 1) * e as usize) as i32 + 1);
    let extra = u32::from(lattices_at(bound + 1) <= CHECK_BUDGET as f64);
    let top = bound + extra;
    let counts = lattice::kernel_counts(p, &b.doubled_mat(), top);
    let mut bp = LaurentPolyX::from_coeffs(counts.into_iter().map(Rational::from_integer));
    for r in 0..n as u32 {
        bp = (&bp * &LaurentPolyX::one_minus(pow_int(p as i64, r), 1)).truncate(top as i32);
    }
    let gamma = gamma_p(p, b)?;
    let f = (&bp * &gamma.denominator).series_div(&gamma.numerator, top as i32)?;
    if f.degree().is_some_and(|d| d > bound as i32) {
        return Err(Error::InexactDivision(format!(
            "F_{p} has a term beyond the degree bound {bound}: {f}"
        )));
    }
    SiegelSeriesPolynomial::from_laurent(&f)
}

/// `F_p^*(T, x) = F_p(T~, x)` for positive semi-definite `T` of rank at least 1.
pub fn local_f_star(p: u64, t: &HalfIntegralMatrix, x: &Rational) -> Result<Rational> {
    let part = t.nondeg_part()?;
    Ok(local_f(p, &part.matrix)?.eval(x))
}

/// Degree of `F_p(B, X)` predicted by the functional equation:
/// `ord_p(det 2B) - delta_{p,2}` for odd size, `ord_p(det 2B) - ord_p(d_B)` for
/// even size, `d_B` the discriminant of `Q(sqrt((-1)^{n/2} det B))`.
pub fn expected_degree(p: u64, b: &HalfIntegralMatrix) -> Result<u32> {
    let det2 = b.det2();
    if det2 == 0 {
        return Err(Error::Degenerate);
    }
    let e = lattice::valuation(det2, p as i128);
    let n = b.size();
    if n % 2 == 1 {
        return Ok(e - u32::from(p == 2));
    }
    let sign: i128 = if (n / 2).is_multiple_of(2) { 1 } else { -1 };
    let disc = i64::try_from(sign * det2).map_err(|_| Error::InvalidArgument("overflow".into()))?;
    let (chi, _) = crate::arith::fundamental_decomposition(disc)?;
    let dv = lattice::valuation(chi.disc().abs() as i128, p as i128);
    Ok(e - if chi.disc().abs() == 1 { 0 } else { dv })
}
