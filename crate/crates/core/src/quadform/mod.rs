//! Half-integral symmetric matrices of size at most 3.
//!
//! A matrix `T` is stored through `2T`, an integral symmetric matrix with even
//! diagonal. The textual syntax lists the upper triangle of `2T` with the
//! diagonal halved: `"a,b,c"` is `[[2a, b], [b, 2c]]` and `"a,b,c,d,e,f"` is
//! `[[2a, b, c], [b, 2d, e], [c, e, 2f]]`; a single integer `"a"` is `(a)`.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::arith::numtheory::isqrt;
use crate::arith::{fundamental_decomposition, DiscriminantChar, Rational};
use crate::error::{Error, Result};
use crate::linalg::{self, IntMat};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfIntegralMatrix {
    n: usize,
    doubled: [[i64; 3]; 3],
}

impl HalfIntegralMatrix {
    /// Builds from the doubled matrix `2T`.
    pub fn from_doubled(rows: &[Vec<i64>]) -> Result<Self> {
        let n = rows.len();
        if !(1..=3).contains(&n) {
            return Err(Error::InvalidArgument(format!("size {n} not in 1..=3")));
        }
        let mut doubled = [[0i64; 3]; 3];
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidArgument("matrix is not square".into()));
            }
            for (j, &v) in row.iter().enumerate() {
                doubled[i][j] = v;
            }
        }
        for i in 0..n {
            if doubled[i][i] % 2 != 0 {
                return Err(Error::InvalidArgument(format!(
                    "doubled diagonal entry {} is odd",
                    doubled[i][i]
                )));
            }
            for j in 0..i {
                if doubled[i][j] != doubled[j][i] {
                    return Err(Error::InvalidArgument("matrix is not symmetric".into()));
                }
            }
        }
        Ok(HalfIntegralMatrix { n, doubled })
    }

    /// Diagonal matrix with the given integer diagonal.
    pub fn diag(entries: &[i64]) -> Result<Self> {
        let n = entries.len();
        let rows: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { 2 * entries[i] } else { 0 })
                    .collect()
            })
            .collect();
        Self::from_doubled(&rows)
    }

    pub fn identity(n: usize) -> Self {
        Self::diag(&vec![1; n]).expect("valid size")
    }

    pub fn zero(n: usize) -> Self {
        Self::diag(&vec![0; n]).expect("valid size")
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// Entry `(2T)_{ij}`.
    pub fn doubled_entry(&self, i: usize, j: usize) -> i64 {
        self.doubled[i][j]
    }

    /// Entry `T_{ij}` as a rational.
    pub fn entry(&self, i: usize, j: usize) -> Rational {
        Rational::new(self.doubled[i][j].into(), 2.into())
    }

    pub fn doubled_rows(&self) -> Vec<Vec<i64>> {
        (0..self.n)
            .map(|i| self.doubled[i][..self.n].to_vec())
            .collect()
    }

    pub(crate) fn doubled_mat(&self) -> IntMat {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.doubled[i][j] as i128).collect())
            .collect()
    }

    pub(crate) fn from_doubled_mat(m: &IntMat) -> Result<Self> {
        let rows: Result<Vec<Vec<i64>>> = m
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&v| {
                        i64::try_from(v)
                            .map_err(|_| Error::InvalidArgument("entry overflows i64".into()))
                    })
                    .collect()
            })
            .collect();
        Self::from_doubled(&rows?)
    }

    /// `det(2T)`.
    pub fn det2(&self) -> i128 {
        linalg::det(&self.doubled_mat())
    }

    pub fn rank(&self) -> usize {
        linalg::rank(&self.doubled_mat())
    }

    /// Positive semi-definite: every principal minor is non-negative.
    pub fn is_psd(&self) -> bool {
        let m = self.doubled_mat();
        (1u32..(1 << self.n)).all(|mask| {
            let idx: Vec<usize> = (0..self.n).filter(|i| mask & (1 << i) != 0).collect();
            let sub: IntMat = idx
                .iter()
                .map(|&i| idx.iter().map(|&j| m[i][j]).collect())
                .collect();
            linalg::det(&sub) >= 0
        })
    }

    /// Positive definite: every leading principal minor is positive.
    pub fn is_pd(&self) -> bool {
        let m = self.doubled_mat();
        (1..=self.n).all(|k| {
            let sub: IntMat = m[..k].iter().map(|r| r[..k].to_vec()).collect();
            linalg::det(&sub) > 0
        })
    }

    /// `U (2T) U^t / 2` for an integral `U` of matching size.
    pub fn transform(&self, u: &IntMat) -> Result<Self> {
        Self::from_doubled_mat(&linalg::congruence(u, &self.doubled_mat()))
    }

    /// Nondegenerate block of a positive semi-definite matrix.
    pub fn nondeg_part(&self) -> Result<NondegPart> {
        if !self.is_psd() {
            return Err(Error::NotPsd);
        }
        let a = self.doubled_mat();
        let (w, _, rank) = linalg::row_echelon(&a);
        if rank == 0 {
            return Err(Error::Degenerate);
        }
        let b = linalg::congruence(&w, &a);
        debug_assert!(b[rank..].iter().all(|r| r.iter().all(|&v| v == 0)));
        let block: IntMat = b[..rank].iter().map(|r| r[..rank].to_vec()).collect();
        let matrix = Self::from_doubled_mat(&block)?;
        let det2 = matrix.det2();
        debug_assert!(det2 > 0);
        Ok(NondegPart {
            matrix,
            det2,
            transform: w,
        })
    }

    /// Character of `Q(sqrt((-1)^{m/2} det T~))` for `T` of even rank `m`.
    pub fn chi_star(&self) -> Result<DiscriminantChar> {
        let m = self.rank();
        if m % 2 == 1 {
            return Err(Error::InvalidArgument(format!(
                "chi_star needs even rank, got {m}"
            )));
        }
        if m == 0 {
            return Ok(DiscriminantChar::trivial());
        }
        let part = self.nondeg_part()?;
        let sign: i128 = if (m / 2).is_multiple_of(2) { 1 } else { -1 };
        let disc = i64::try_from(sign * part.det2)
            .map_err(|_| Error::InvalidArgument("determinant overflows i64".into()))?;
        Ok(fundamental_decomposition(disc)?.0)
    }

    /// Block sum `diag(T, 0_k)`.
    pub fn pad_zero(&self, k: usize) -> Result<Self> {
        let n = self.n + k;
        let rows: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i < self.n && j < self.n {
                            self.doubled[i][j]
                        } else {
                            0
                        }
                    })
                    .collect()
            })
            .collect();
        Self::from_doubled(&rows)
    }

    /// Rational determinant `det T`.
    pub fn det(&self) -> Rational {
        Rational::new(self.det2().into(), (1i64 << self.n).into())
    }

    pub fn is_zero(&self) -> bool {
        self.doubled_rows().iter().flatten().all(|v| v.is_zero())
    }
}

/// Result of [`HalfIntegralMatrix::nondeg_part`].
#[derive(Clone, Debug)]
pub struct NondegPart {
    /// Positive-definite block `T~`.
    pub matrix: HalfIntegralMatrix,
    /// `det(2 T~)`.
    pub det2: i128,
    /// Unimodular `U` with `U (2T) U^t = diag(2T~, 0)`.
    pub transform: IntMat,
}

impl fmt::Display for HalfIntegralMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for i in 0..self.n {
            for j in i..self.n {
                let v = self.doubled[i][j];
                parts.push(if i == j { v / 2 } else { v }.to_string());
            }
        }
        f.write_str(&parts.join(","))
    }
}

impl FromStr for HalfIntegralMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut values = Vec::new();
        let mut offset = 0;
        for piece in s.split(',') {
            let trimmed = piece.trim();
            let v: i64 = trimmed.parse().map_err(|_| Error::Parse {
                position: offset + piece.find(trimmed).unwrap_or(0),
                message: format!("expected an integer, found {trimmed:?}"),
            })?;
            values.push(v);
            offset += piece.len() + 1;
        }
        let n = match values.len() {
            1 => 1,
            3 => 2,
            6 => 3,
            k => {
                return Err(Error::Parse {
                    position: s.len(),
                    message: format!("expected 1, 3 or 6 entries, found {k}"),
                })
            }
        };
        let mut rows = vec![vec![0i64; n]; n];
        let mut it = values.into_iter();
        for i in 0..n {
            for j in i..n {
                let v = it.next().expect("counted");
                if i == j {
                    rows[i][i] = 2 * v;
                } else {
                    rows[i][j] = v;
                    rows[j][i] = v;
                }
            }
        }
        Self::from_doubled(&rows)
    }
}

/// `T_{(n,N,R)} = [[n, R/2], [R^t/2, N]]`.
pub fn build_t(n: i64, big_n: &HalfIntegralMatrix, r: (i64, i64)) -> Result<HalfIntegralMatrix> {
    if big_n.size() != 2 {
        return Err(Error::InvalidArgument("N must be 2x2".into()));
    }
    let d = |i, j| big_n.doubled_entry(i, j);
    HalfIntegralMatrix::from_doubled(&[
        vec![2 * n, r.0, r.1],
        vec![r.0, d(0, 0), d(0, 1)],
        vec![r.1, d(1, 0), d(1, 1)],
    ])
}

/// All integer pairs `R` with `T_{(n,N,R)}` positive semi-definite, sorted.
pub fn enumerate_r(n: i64, big_n: &HalfIntegralMatrix) -> Result<Vec<(i64, i64)>> {
    if big_n.size() != 2 || !big_n.is_pd() {
        return Err(Error::InvalidArgument(
            "N must be a positive-definite 2x2 matrix".into(),
        ));
    }
    if n < 1 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    // 2N = [[2a, b], [b, 2c]]; PSD of T iff c r1^2 - b r1 r2 + a r2^2 <= n (4ac - b^2).
    let a = big_n.doubled_entry(0, 0) / 2;
    let b = big_n.doubled_entry(0, 1);
    let c = big_n.doubled_entry(1, 1) / 2;
    let bound = n as i128 * (4 * a * c - b * b) as i128;
    let r1_max = isqrt((4 * a * n) as u64) as i64;
    let r2_max = isqrt((4 * c * n) as u64) as i64;
    let mut out = Vec::new();
    for r1 in -r1_max..=r1_max {
        for r2 in -r2_max..=r2_max {
            let q = c as i128 * (r1 * r1) as i128 - b as i128 * (r1 * r2) as i128
                + a as i128 * (r2 * r2) as i128;
            if q <= bound {
                out.push((r1, r2));
            }
        }
    }
    Ok(out)
}
