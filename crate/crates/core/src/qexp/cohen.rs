use num_traits::Zero;

use super::{EigenBasis, QExpansion};
use crate::arith::numtheory::isqrt;
use crate::arith::{cohen_h, factorial, int, pow_int, rat, Rational};
use crate::error::{Error, Result};
use crate::gegenbauer::gegenbauer_poly;

/// `C_{k,r} = sum_m (sum_{t^2 <= 4m} P_{2r+2,k-r-1}(t/2, m) H(r, 4m - t^2)) q^m`.
pub fn cohen_series(k: u32, r: u32, precision: usize) -> Result<QExpansion> {
    if k % 2 == 1 || r.is_multiple_of(2) || r < 3 || r > k - 1 {
        return Err(Error::InvalidArgument(format!(
            "cohen_series needs even k and odd 3 <= r <= k-1, got k = {k}, r = {r}"
        )));
    }
    let poly = gegenbauer_poly(2 * r + 2, k - r - 1);
    let coeffs = (0..=precision as u64)
        .map(|m| {
            let mut a = Rational::zero();
            let tmax = isqrt(4 * m) as i64;
            for t in -tmax..=tmax {
                let n = 4 * m - (t * t) as u64;
                let h = cohen_h(r, n);
                if !h.is_zero() {
                    a += poly.eval(&rat(t, 2), &int(m)) * h;
                }
            }
            a
        })
        .collect();
    Ok(QExpansion::new(k, coeffs))
}

/// `(f_j, g) / (f_j, f_j)`: the coefficient of `f_j` when the cusp form `g` is
/// written in the eigenbasis.
pub fn petersson_ratio(basis: &EigenBasis, j: usize, g: &QExpansion) -> Result<Rational> {
    let coords = basis.coordinates(g)?;
    coords
        .into_iter()
        .nth(j)
        .ok_or_else(|| Error::InvalidArgument(format!("no eigenform with index {j}")))
}

/// `L(k-1, f_j, St)` normalized, for the eigenform `f_j` of weight `k + nu`:
/// `-nu! (k-2)! / (k+nu-2)! * 2^{k+nu-3} * (f_j, C_{k+nu,k-1}) / (f_j, f_j)`.
pub fn std_l_value(k: u32, nu: u32, basis: &EigenBasis, j: usize) -> Result<Rational> {
    if k < 6 || k % 2 == 1 || nu < 2 || nu % 2 == 1 {
        return Err(Error::InvalidArgument(format!(
            "need k >= 6 and nu >= 2 both even, got k = {k}, nu = {nu}"
        )));
    }
    if basis.weight() != k + nu {
        return Err(Error::WeightMismatch(basis.weight(), k + nu));
    }
    let c = cohen_series(k + nu, k - 1, basis.precision())?;
    let ratio = petersson_ratio(basis, j, &c)?;
    let factor = -int(factorial(nu)) * int(factorial(k - 2)) / int(factorial(k + nu - 2))
        * pow_int(2, k + nu - 3);
    Ok(factor * ratio)
}
