//! Sublattices of `Z^n` of `p`-power index and the lattice-count form of `F_p`.

use crate::linalg::{self, IntMat};

/// A sublattice `H Z^n` with `H` in column Hermite normal form, together with a
/// unimodular `L` and exponents `d` such that `L H R = diag(p^{d_i})`.
pub(crate) struct SubLattice {
    pub index_exp: u32,
    pub left: IntMat,
    pub exps: Vec<u32>,
}

/// Calls `visit` once for every sublattice of `Z^n` of index `p^i`, `i <= max_exp`.
pub(crate) fn for_each_sublattice(
    n: usize,
    p: u64,
    max_exp: u32,
    mut visit: impl FnMut(&SubLattice),
) {
    let mut exps = vec![0u32; n];
    loop {
        let total: u32 = exps.iter().sum();
        if total <= max_exp {
            enumerate_hnf(n, p, &exps, total, &mut visit);
        }
        // Next exponent vector with sum <= max_exp.
        let mut i = 0;
        loop {
            if i == n {
                return;
            }
            exps[i] += 1;
            if exps.iter().sum::<u32>() <= max_exp {
                break;
            }
            exps[i] = 0;
            i += 1;
        }
    }
}

fn enumerate_hnf(n: usize, p: u64, exps: &[u32], total: u32, visit: &mut impl FnMut(&SubLattice)) {
    let p = p as i128;
    // Free entries (r, c), r < c, each ranging over [0, p^{exps[r]}).
    let slots: Vec<(usize, usize, i128)> = (0..n)
        .flat_map(|r| (r + 1..n).map(move |c| (r, c)))
        .map(|(r, c)| (r, c, p.pow(exps[r])))
        .collect();
    let mut h: IntMat = vec![vec![0; n]; n];
    for i in 0..n {
        h[i][i] = p.pow(exps[i]);
    }
    let mut counter = vec![0i128; slots.len()];
    loop {
        for (k, &(r, c, _)) in slots.iter().enumerate() {
            h[r][c] = counter[k];
        }
        let (left, d) = linalg::smith(&h);
        let exps_snf = d.iter().map(|&v| valuation(v, p)).collect();
        visit(&SubLattice {
            index_exp: total,
            left,
            exps: exps_snf,
        });
        let mut k = 0;
        loop {
            if k == slots.len() {
                return;
            }
            counter[k] += 1;
            if counter[k] < slots[k].2 {
                break;
            }
            counter[k] = 0;
            k += 1;
        }
    }
}

pub(crate) fn valuation(mut v: i128, p: i128) -> u32 {
    debug_assert!(v != 0);
    let mut e = 0;
    while v % p == 0 {
        v /= p;
        e += 1;
    }
    e
}

fn ord_capped(v: i128, p: i128, cap: u32) -> u32 {
    if v == 0 {
        cap
    } else {
        valuation(v, p).min(cap)
    }
}

/// `G_i = sum over sublattices M of index p^i of g(M)`, where `g(M)` is the
/// number of classes `R` in `Sym_n(Q_p)/Sym_n(Z_p)` with `M` inside the kernel of
/// `R` when `x -> e(tr(BR))` is trivial on them, and `0` otherwise.
pub(crate) fn kernel_counts(p: u64, doubled: &IntMat, max_exp: u32) -> Vec<num_bigint::BigInt> {
    use num_bigint::BigInt;
    let n = doubled.len();
    let pi = p as i128;
    let two_val = u32::from(p == 2);
    let mut counts = vec![BigInt::from(0); max_exp as usize + 1];
    for_each_sublattice(n, p, max_exp, |m| {
        let b = linalg::congruence(&m.left, doubled);
        let d = &m.exps;
        let mut size_exp = 0u32;
        for i in 0..n {
            let diag_ok = ord_capped(b[i][i], pi, u32::MAX) >= d[i] + two_val;
            if !diag_ok {
                return;
            }
            size_exp += d[i];
            for j in i + 1..n {
                let need = d[i].min(d[j]);
                if ord_capped(b[i][j], pi, u32::MAX) < need {
                    return;
                }
                size_exp += need;
            }
        }
        counts[m.index_exp as usize] += BigInt::from(p).pow(size_exp);
    });
    counts
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count_sublattices(n: usize, p: u64, e: u32) -> u64 {
        let mut c = 0;
        for_each_sublattice(n, p, e, |m| {
            if m.index_exp == e {
                c += 1;
            }
        });
        c
    }

    #[test]
    fn sublattice_counts_match_gaussian_formula() {
        // Number of index-p^e sublattices of Z^2 is sigma_1(p^e); of Z^3 it is
        // sum_{a+b+c=e} p^{2a+b}.
        for &p in &[2u64, 3, 5] {
            for e in 0..5u32 {
                let s1: u64 = (0..=e).map(|i| p.pow(i)).sum();
                assert_eq!(count_sublattices(2, p, e), s1);
                let mut s3 = 0;
                for a in 0..=e {
                    for b in 0..=e - a {
                        s3 += p.pow(2 * a + b);
                    }
                }
                assert_eq!(count_sublattices(3, p, e), s3);
            }
        }
    }

    #[test]
    fn smith_exponents_sum_to_index() {
        for_each_sublattice(3, 2, 4, |m| {
            assert_eq!(m.exps.iter().sum::<u32>(), m.index_exp);
            assert_eq!(linalg::det(&m.left).abs(), 1);
        });
    }
}
