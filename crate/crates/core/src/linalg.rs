//! Small dense linear algebra over `Z` (i128) and `Q`.

use num_traits::{One, Zero};

use crate::arith::Rational;

pub type IntMat = Vec<Vec<i128>>;

pub fn identity(n: usize) -> IntMat {
    (0..n)
        .map(|i| (0..n).map(|j| i128::from(i == j)).collect())
        .collect()
}

pub fn mat_mul(a: &IntMat, b: &IntMat) -> IntMat {
    let (n, m, l) = (a.len(), b.len(), b.first().map_or(0, |r| r.len()));
    let mut out = vec![vec![0i128; l]; n];
    for i in 0..n {
        for k in 0..m {
            let aik = a[i][k];
            if aik == 0 {
                continue;
            }
            for j in 0..l {
                out[i][j] += aik * b[k][j];
            }
        }
    }
    out
}

pub fn transpose(a: &IntMat) -> IntMat {
    let n = a.len();
    let m = a.first().map_or(0, |r| r.len());
    (0..m).map(|j| (0..n).map(|i| a[i][j]).collect()).collect()
}

/// `u * a * u^T`.
pub fn congruence(u: &IntMat, a: &IntMat) -> IntMat {
    mat_mul(&mat_mul(u, a), &transpose(u))
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn det(a: &IntMat) -> i128 {
    let n = a.len();
    if n == 0 {
        return 1;
    }
    let mut m = a.clone();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&i| m[i][k] != 0) {
                Some(i) => {
                    m.swap(i, k);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

/// Unimodular row reduction: returns `(w, e, rank)` with `w * a = e`,
/// `w in GL_n(Z)` and the first `rank` rows of `e` in echelon form, the rest zero.
pub fn row_echelon(a: &IntMat) -> (IntMat, IntMat, usize) {
    let n = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut e = a.clone();
    let mut w = identity(n);
    let mut row = 0;
    for c in 0..cols {
        if row == n {
            break;
        }
        loop {
            let pivot = (row..n)
                .filter(|&i| e[i][c] != 0)
                .min_by_key(|&i| e[i][c].unsigned_abs());
            let Some(pi) = pivot else { break };
            e.swap(row, pi);
            w.swap(row, pi);
            let mut clean = true;
            for i in row + 1..n {
                if e[i][c] == 0 {
                    continue;
                }
                let q = e[i][c].div_euclid(e[row][c]);
                for j in 0..cols {
                    e[i][j] -= q * e[row][j];
                }
                for j in 0..n {
                    w[i][j] -= q * w[row][j];
                }
                if e[i][c] != 0 {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if e[row][c] != 0 {
            row += 1;
        }
    }
    (w, e, row)
}

pub fn rank(a: &IntMat) -> usize {
    row_echelon(a).2
}

/// Smith normal form: returns `(l, d)` with `l * a * r = diag(d)` for some
/// unimodular `r`; `l` is unimodular. Entries of `d` are non-negative.
pub fn smith(a: &IntMat) -> (IntMat, Vec<i128>) {
    let n = a.len();
    let mut m = a.clone();
    let mut l = identity(n);
    for t in 0..n {
        loop {
            let pivot = (t..n)
                .flat_map(|i| (t..n).map(move |j| (i, j)))
                .filter(|&(i, j)| m[i][j] != 0)
                .min_by_key(|&(i, j)| m[i][j].unsigned_abs());
            let Some((pi, pj)) = pivot else {
                break;
            };
            m.swap(t, pi);
            l.swap(t, pi);
            for row in m.iter_mut() {
                row.swap(t, pj);
            }
            let mut done = true;
            for i in t + 1..n {
                let q = m[i][t].div_euclid(m[t][t]);
                if q != 0 {
                    for j in 0..n {
                        m[i][j] -= q * m[t][j];
                        l[i][j] -= q * l[t][j];
                    }
                }
                if m[i][t] != 0 {
                    done = false;
                }
            }
            for j in t + 1..n {
                let q = m[t][j].div_euclid(m[t][t]);
                if q != 0 {
                    for row in m.iter_mut() {
                        row[j] -= q * row[t];
                    }
                }
                if m[t][j] != 0 {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
    }
    let d = (0..n).map(|i| m[i][i].abs()).collect();
    (l, d)
}

pub type RatMat = Vec<Vec<Rational>>;

/// Reduced row echelon form in place; returns pivot columns.
pub fn rref(m: &mut RatMat) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pi) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, pi);
        let inv = Rational::one() / &m[r][c];
        for j in c..cols {
            m[r][j] = &m[r][j] * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..cols {
                    let t = &f * &m[r][j];
                    m[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Solves the square system `a x = b`; `None` when `a` is singular.
pub fn solve(a: &RatMat, b: &[Rational]) -> Option<Vec<Rational>> {
    let n = a.len();
    let mut aug: RatMat = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() != n || pivots.iter().enumerate().any(|(i, &c)| c != i) {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n].clone()).collect())
}

/// Basis of the right null space `{x : a x = 0}`.
pub fn nullspace(a: &RatMat) -> Vec<Vec<Rational>> {
    let cols = a.first().map_or(0, |r| r.len());
    let mut m = a.clone();
    let pivots = rref(&mut m);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); cols];
            v[f] = Rational::one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[i][f].clone();
            }
            v
        })
        .collect()
}

pub fn rat_det(a: &RatMat) -> Rational {
    let n = a.len();
    let mut m = a.clone();
    let mut d = Rational::one();
    for c in 0..n {
        let Some(pi) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return Rational::zero();
        };
        if pi != c {
            m.swap(pi, c);
            d = -d;
        }
        d *= &m[c][c];
        for i in c + 1..n {
            if m[i][c].is_zero() {
                continue;
            }
            let f = &m[i][c] / &m[c][c];
            for j in c..n {
                let t = &f * &m[c][j];
                m[i][j] -= t;
            }
        }
    }
    d
}
