#![allow(dead_code, clippy::needless_range_loop)]

use eiscong::linalg::{self, IntMat};
use eiscong::HalfIntegralMatrix;
use rand::Rng;

/// Reduced positive-definite binary forms `[[2a, b], [b, 2c]]`, `0 <= b <= a <= c`,
/// with `4ac - b^2 <= max_det`.
pub fn binary_forms(max_det: i64) -> Vec<HalfIntegralMatrix> {
    let mut out = Vec::new();
    for a in 1..=max_det {
        for c in a..=max_det {
            for b in 0..=a {
                let d = 4 * a * c - b * b;
                if d > 0 && d <= max_det {
                    out.push(
                        HalfIntegralMatrix::from_doubled(&[vec![2 * a, b], vec![b, 2 * c]])
                            .unwrap(),
                    );
                }
            }
        }
    }
    out
}

/// Minkowski-type reduced positive-definite ternary forms with
/// `det(2B) <= max_det`; diagonal `t_11 <= t_22 <= t_33`, `|2 t_ij| <= t_ii`, with the
/// first row made non-negative by sign changes.
pub fn ternary_forms(max_det: i128) -> Vec<HalfIntegralMatrix> {
    let mut out = Vec::new();
    for a in 1..=4i64 {
        for d in a..=4 {
            for f in d..=4 {
                for b in 0..=a {
                    for c in 0..=a {
                        for e in -d..=d {
                            let m = HalfIntegralMatrix::from_doubled(&[
                                vec![2 * a, b, c],
                                vec![b, 2 * d, e],
                                vec![c, e, 2 * f],
                            ])
                            .unwrap();
                            if m.is_pd() && m.det2() <= max_det {
                                out.push(m);
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

pub fn random_unimodular<R: Rng>(rng: &mut R, n: usize) -> IntMat {
    loop {
        let u: IntMat = (0..n)
            .map(|_| (0..n).map(|_| rng.gen_range(-3..=3)).collect())
            .collect();
        if linalg::det(&u).abs() == 1 {
            return u;
        }
    }
}

/// Random nonzero positive semi-definite half-integral matrix of size `n` with
/// small entries.
pub fn random_psd<R: Rng>(rng: &mut R, n: usize) -> HalfIntegralMatrix {
    loop {
        let mut g = vec![vec![0i64; n]; n];
        for i in 0..n {
            g[i][i] = 2 * rng.gen_range(0..=5);
            for j in 0..i {
                let v = rng.gen_range(-5..=5);
                g[i][j] = v;
                g[j][i] = v;
            }
        }
        if let Ok(m) = HalfIntegralMatrix::from_doubled(&g) {
            if m.is_psd() && !m.is_zero() {
                return m;
            }
        }
    }
}

pub fn random_pd<R: Rng>(rng: &mut R, n: usize) -> HalfIntegralMatrix {
    loop {
        let m = random_psd(rng, n);
        if m.is_pd() {
            return m;
        }
    }
}

/// Lattice vectors of the E8 root lattice of norm at most `2 * max`, in doubled
/// coordinates (so the inner product is `dot / 4`), including zero.
pub fn e8_vectors(max: i64) -> Vec<[i64; 8]> {
    let mut out = Vec::new();
    let r = 4i64;
    let mut v = [-r; 8];
    loop {
        let even = v.iter().all(|x| x % 2 == 0);
        let odd = v.iter().all(|x| x % 2 != 0);
        if (even || odd) && v.iter().sum::<i64>() % 4 == 0 {
            let n: i64 = v.iter().map(|x| x * x).sum();
            if n <= 8 * max {
                out.push(v);
            }
        }
        let mut i = 0;
        loop {
            if i == 8 {
                return out;
            }
            v[i] += 1;
            if v[i] <= r {
                break;
            }
            v[i] = -r;
            i += 1;
        }
    }
}

pub fn e8_dot(a: &[i64; 8], b: &[i64; 8]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum::<i64>() / 4
}

/// Number of triples of E8 vectors whose Gram matrix is `2T`.
pub fn e8_representations(vs: &[[i64; 8]], t: &HalfIntegralMatrix) -> u64 {
    let g = t.doubled_rows();
    let n = t.size();
    let mut count = 0u64;
    let mut stack: Vec<usize> = Vec::new();
    fn rec(vs: &[[i64; 8]], g: &[Vec<i64>], n: usize, stack: &mut Vec<usize>, count: &mut u64) {
        let i = stack.len();
        if i == n {
            *count += 1;
            return;
        }
        for (idx, v) in vs.iter().enumerate() {
            if e8_dot(v, v) != g[i][i] {
                continue;
            }
            if stack
                .iter()
                .enumerate()
                .all(|(j, &w)| e8_dot(&vs[w], v) == g[j][i])
            {
                stack.push(idx);
                rec(vs, g, n, stack, count);
                stack.pop();
            }
        }
    }
    rec(vs, &g, n, &mut stack, &mut count);
    count
}

pub const ORACLE_BUDGET: u128 = 1 << 24;

/// Which oracle produced a comparison.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleKind {
    Full,
    Stratified,
}

/// Compares `gamma_p * F_p` with the character-sum oracle through `X^j_max`,
/// cross-multiplied by the denominator of `gamma_p`. Falls back to the
/// stratified enumeration when the full one exceeds the budget.
pub fn oracle_matches(p: u64, b: &HalfIntegralMatrix, j_max: u32) -> Result<OracleKind, String> {
    use eiscong::siegel::oracle::{cross_multiplied, oracle_bp, oracle_bp_stratified};
    use eiscong::Error;
    let (oracle, kind) = match oracle_bp(p, b, j_max, ORACLE_BUDGET) {
        Ok(o) => (o, OracleKind::Full),
        Err(Error::BudgetExceeded { .. }) => (
            oracle_bp_stratified(p, b, j_max, ORACLE_BUDGET)
                .map_err(|e| format!("p={p} B={b}: {e}"))?,
            OracleKind::Stratified,
        ),
        Err(e) => return Err(format!("p={p} B={b}: {e}")),
    };
    let (lhs, rhs) =
        cross_multiplied(p, b, &oracle, j_max).map_err(|e| format!("p={p} B={b}: {e}"))?;
    if lhs == rhs {
        Ok(kind)
    } else {
        Err(format!(
            "p={p} B={b}: oracle gives {lhs}, series gives {rhs}"
        ))
    }
}

pub fn ord(p: u64, mut d: i128) -> u32 {
    let mut e = 0;
    while d != 0 && d % p as i128 == 0 {
        d /= p as i128;
        e += 1;
    }
    e
}

/// Number of coefficients needed to see every term of `den * gamma_p * F_p`
/// for sizes 1 and 2.
pub fn full_j(p: u64, b: &HalfIntegralMatrix) -> u32 {
    let num_deg = if b.size() == 1 { 1 } else { 3 };
    num_deg + ord(p, b.det2())
}
