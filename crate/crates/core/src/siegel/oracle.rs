//! Direct evaluation of `b_p(B, s) = sum_R e_p(tr(BR)) mu(R)^{-s}` truncated at
//! level `p^{j_max}`, with every character sum collapsed exactly.
//!
//! Two enumerations are offered. [`oracle_bp`] runs over all `R` with entries in
//! `p^{-J} Z / Z`. [`oracle_bp_stratified`] runs, for each sublattice `M` of
//! index `p^j`, over the `R` whose kernel contains `M`, and keeps those of level
//! exactly `p^j`; it reaches larger `J` for size 3.

use rayon::prelude::*;

use super::lattice;
use super::poly::LaurentPolyX;
use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::linalg::IntMat;
use crate::quadform::HalfIntegralMatrix;

struct Modulus {
    p: i64,
    j: u32,
    q: i64,
    val: Vec<u32>,
    inv: Vec<i64>,
}

impl Modulus {
    fn new(p: u64, j: u32) -> Self {
        let p = p as i64;
        let q = p.pow(j);
        let mut val = vec![0u32; q as usize];
        let mut inv = vec![0i64; q as usize];
        for x in 0..q {
            val[x as usize] = if x == 0 {
                j
            } else {
                let mut v = 0;
                let mut y = x;
                while y % p == 0 {
                    y /= p;
                    v += 1;
                }
                v
            };
            if x % p != 0 {
                inv[x as usize] = mod_inverse(x, q);
            }
        }
        Modulus { p, j, q, val, inv }
    }

    /// `sum_i max(0, J - v_i)` over the `p`-adic elementary divisors `p^{v_i}`
    /// of the symmetric matrix `a` (entries reduced mod `q`).
    fn level_exponent(&self, a: &mut [[i64; 3]; 3], n: usize) -> u32 {
        let mut rows = [0usize, 1, 2];
        let mut cols = [0usize, 1, 2];
        let mut level = 0;
        for size in (1..=n).rev() {
            let mut best = (self.j, 0, 0);
            for ri in 0..size {
                for ci in 0..size {
                    let v = self.val[a[rows[ri]][cols[ci]] as usize];
                    if v < best.0 {
                        best = (v, ri, ci);
                    }
                }
            }
            let (v, ri, ci) = best;
            if v >= self.j {
                break;
            }
            level += self.j - v;
            let (pr, pc) = (rows[ri], cols[ci]);
            let pv = self.p.pow(v);
            let unit_inv = self.inv[((a[pr][pc] / pv) % self.q) as usize];
            for &r in rows[..size].iter() {
                if r == pr || a[r][pc] == 0 {
                    continue;
                }
                let f = (a[r][pc] / pv) * unit_inv % self.q;
                for &c in cols[..size].iter() {
                    a[r][c] = (a[r][c] - f * a[pr][c]).rem_euclid(self.q);
                }
            }
            rows.swap(ri, size - 1);
            cols.swap(ci, size - 1);
        }
        level
    }

    /// Exact value of `sum_t h[t] zeta_q^t`, which must be rational.
    fn collapse(&self, mut h: Vec<i64>) -> Result<i64> {
        if self.j == 0 {
            return Ok(h[0]);
        }
        let step = self.q / self.p;
        let phi = (self.p - 1) * step;
        // zeta^{s + phi} = -sum_{i < p-1} zeta^{s + i step}
        for s in 0..step {
            let top = h[(s + phi) as usize];
            if top != 0 {
                for i in 0..self.p - 1 {
                    h[(s + i * step) as usize] -= top;
                }
                h[(s + phi) as usize] = 0;
            }
        }
        if h[1..].iter().any(|&c| c != 0) {
            return Err(Error::InexactDivision(
                "character sum is not rational".into(),
            ));
        }
        Ok(h[0])
    }
}

fn mod_inverse(a: i64, m: i64) -> i64 {
    let (mut r0, mut r1) = (a.rem_euclid(m), m);
    let (mut s0, mut s1) = (1i64, 0i64);
    while r1 != 0 {
        let t = r0 / r1;
        (r0, r1) = (r1, r0 - t * r1);
        (s0, s1) = (s1, s0 - t * s1);
    }
    debug_assert_eq!(r0, 1);
    s0.rem_euclid(m)
}

fn slots(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect()
}

/// Weight of each slot in `tr(BR)`: `B_ii` on the diagonal, `2 B_ij` off it.
fn phase_weights(b: &HalfIntegralMatrix) -> Vec<i64> {
    slots(b.size())
        .into_iter()
        .map(|(i, j)| {
            if i == j {
                b.doubled_entry(i, i) / 2
            } else {
                b.doubled_entry(i, j)
            }
        })
        .collect()
}

fn check_input(b: &HalfIntegralMatrix) -> Result<()> {
    if b.det2() == 0 {
        return Err(Error::Degenerate);
    }
    Ok(())
}

fn finish(m: &Modulus, hist: Vec<Vec<i64>>) -> Result<LaurentPolyX> {
    let mut coeffs = Vec::with_capacity(hist.len());
    for h in hist {
        coeffs.push(Rational::from_integer(m.collapse(h)?.into()));
    }
    Ok(LaurentPolyX::from_coeffs(coeffs))
}

fn merge(mut a: Vec<Vec<i64>>, b: Vec<Vec<i64>>) -> Vec<Vec<i64>> {
    for (x, y) in a.iter_mut().zip(b) {
        for (u, v) in x.iter_mut().zip(y) {
            *u += v;
        }
    }
    a
}

/// Coefficients of `X^0, ..., X^{j_max}` in `b_p(B, X)` by full enumeration of
/// `R` modulo `p^{-j_max}`; `budget` caps the number of points visited.
pub fn oracle_bp(p: u64, b: &HalfIntegralMatrix, j_max: u32, budget: u128) -> Result<LaurentPolyX> {
    check_input(b)?;
    let n = b.size();
    let sl = slots(n);
    let m = Modulus::new(p, j_max);
    let points = (m.q as u128)
        .checked_pow(sl.len() as u32)
        .unwrap_or(u128::MAX);
    if points > budget {
        return Err(Error::BudgetExceeded {
            needed: points,
            budget,
        });
    }
    let w = phase_weights(b);
    let q = m.q;
    let rest = q.pow(sl.len() as u32 - 1);
    let empty = || vec![vec![0i64; q as usize]; j_max as usize + 1];
    let hist = (0..q)
        .into_par_iter()
        .fold(empty, |mut hist, first| {
            let mut vals = vec![0i64; sl.len()];
            vals[0] = first;
            for idx in 0..rest {
                let mut t = idx;
                for v in vals[1..].iter_mut() {
                    *v = t % q;
                    t /= q;
                }
                let mut a = [[0i64; 3]; 3];
                let mut phase = 0i64;
                for (k, &(i, j)) in sl.iter().enumerate() {
                    a[i][j] = vals[k];
                    a[j][i] = vals[k];
                    phase += w[k] * vals[k];
                }
                let level = m.level_exponent(&mut a, n);
                if level <= j_max {
                    hist[level as usize][phase.rem_euclid(q) as usize] += 1;
                }
            }
            hist
        })
        .reduce(empty, merge);
    finish(&m, hist)
}

/// Same coefficients as [`oracle_bp`], enumerated by kernel lattice.
pub fn oracle_bp_stratified(
    p: u64,
    b: &HalfIntegralMatrix,
    j_max: u32,
    budget: u128,
) -> Result<LaurentPolyX> {
    check_input(b)?;
    let n = b.size();
    let sl = slots(n);
    let m = Modulus::new(p, j_max);
    let mut lattices: Vec<(u32, IntMat, Vec<u32>)> = Vec::new();
    let mut work: u128 = 0;
    lattice::for_each_sublattice(n, p, j_max, |l| {
        let e: u32 = sl.iter().map(|&(i, j)| l.exps[i].min(l.exps[j])).sum();
        work = work.saturating_add((p as u128).saturating_pow(e));
        lattices.push((l.index_exp, l.left.clone(), l.exps.clone()));
    });
    if work > budget {
        return Err(Error::BudgetExceeded {
            needed: work,
            budget,
        });
    }
    let w = phase_weights(b);
    let q = m.q;
    let empty = || vec![vec![0i64; q as usize]; j_max as usize + 1];
    let hist = lattices
        .par_iter()
        .fold(empty, |mut hist, (index, left, exps)| {
            let ranges: Vec<u32> = sl.iter().map(|&(i, j)| exps[i].min(exps[j])).collect();
            let total: u64 = ranges.iter().map(|&e| p.pow(e)).product();
            let mut rp = [[0i64; 3]; 3];
            for idx in 0..total {
                let mut t = idx;
                for (k, &(i, j)) in sl.iter().enumerate() {
                    let size = p.pow(ranges[k]);
                    let num = (t % size) as i64 * (p as i64).pow(j_max - ranges[k]);
                    t /= size;
                    rp[i][j] = num;
                    rp[j][i] = num;
                }
                // R = L^t R' L (mod q)
                let mut r = [[0i64; 3]; 3];
                for i in 0..n {
                    for j in 0..n {
                        let mut s: i128 = 0;
                        for a in 0..n {
                            for c in 0..n {
                                s += left[a][i] * rp[a][c] as i128 * left[c][j];
                            }
                        }
                        r[i][j] = s.rem_euclid(q as i128) as i64;
                    }
                }
                let mut phase = 0i64;
                for (k, &(i, j)) in sl.iter().enumerate() {
                    phase += w[k] * r[i][j];
                }
                let level = m.level_exponent(&mut r, n);
                if level == *index {
                    hist[level as usize][phase.rem_euclid(q) as usize] += 1;
                }
            }
            hist
        })
        .reduce(empty, merge);
    finish(&m, hist)
}

/// `b_p` predicted from `gamma_p` and `F_p`, multiplied through by the
/// denominator of `gamma_p`: returns `(oracle * den, num * F)` truncated to
/// `X^{j_max}` so the two can be compared coefficientwise.
pub fn cross_multiplied(
    p: u64,
    b: &HalfIntegralMatrix,
    oracle: &LaurentPolyX,
    j_max: u32,
) -> Result<(LaurentPolyX, LaurentPolyX)> {
    let gamma = super::gamma_p(p, b)?;
    let f = super::local_f(p, b)?.to_laurent();
    let lhs = (oracle * &gamma.denominator).truncate(j_max as i32);
    let rhs = (&gamma.numerator * &f).truncate(j_max as i32);
    Ok((lhs, rhs))
}
