use super::numtheory::factorize;
use crate::error::{Error, Result};

fn jacobi(mut a: i64, mut n: i64) -> i8 {
    debug_assert!(n > 0 && n % 2 == 1);
    a = a.rem_euclid(n);
    let mut s = 1i8;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            if matches!(n % 8, 3 | 5) {
                s = -s;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            s = -s;
        }
        a %= n;
    }
    if n == 1 {
        s
    } else {
        0
    }
}

/// Kronecker symbol `(a / n)` with the usual conventions at `n = 0`, `-1` and 2.
pub fn kronecker(a: i64, n: i64) -> i8 {
    if n == 0 {
        return if a.abs() == 1 { 1 } else { 0 };
    }
    let mut s = 1i8;
    let mut n = n;
    if n < 0 {
        n = -n;
        if a < 0 {
            s = -s;
        }
    }
    let v = n.trailing_zeros();
    if v > 0 {
        if a % 2 == 0 {
            return 0;
        }
        if v % 2 == 1 && matches!(a.rem_euclid(8), 3 | 5) {
            s = -s;
        }
        n >>= v;
    }
    if n == 1 {
        return s;
    }
    s * jacobi(a, n)
}

fn is_squarefree(n: u64) -> bool {
    factorize(n).iter().all(|&(_, e)| e == 1)
}

/// Kronecker character `(D / .)` of a fundamental discriminant `D`
/// (`D = 1` is the trivial character).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiscriminantChar {
    disc: i64,
}

impl DiscriminantChar {
    pub fn new(disc: i64) -> Result<Self> {
        if Self::is_fundamental(disc) {
            Ok(Self { disc })
        } else {
            Err(Error::InvalidArgument(format!(
                "{disc} is not a fundamental discriminant"
            )))
        }
    }

    pub fn trivial() -> Self {
        Self { disc: 1 }
    }

    pub fn is_fundamental(d: i64) -> bool {
        if d == 1 {
            return true;
        }
        if d == 0 {
            return false;
        }
        match d.rem_euclid(4) {
            1 => is_squarefree(d.unsigned_abs()),
            0 => {
                let m = d / 4;
                matches!(m.rem_euclid(4), 2 | 3) && is_squarefree(m.unsigned_abs())
            }
            _ => false,
        }
    }

    pub fn disc(&self) -> i64 {
        self.disc
    }

    pub fn conductor(&self) -> u64 {
        self.disc.unsigned_abs()
    }

    pub fn is_trivial(&self) -> bool {
        self.disc == 1
    }

    pub fn value(&self, n: i64) -> i8 {
        kronecker(self.disc, n)
    }
}

/// Writes `m = D f^2` with `D` a fundamental discriminant (or 1) and `f > 0`.
///
/// Only discriminants (`m = 0, 1 mod 4`) admit such a decomposition.
pub fn fundamental_decomposition(m: i64) -> Result<(DiscriminantChar, u64)> {
    if m == 0 {
        return Err(Error::InvalidArgument("cannot decompose 0".into()));
    }
    if !matches!(m.rem_euclid(4), 0 | 1) {
        return Err(Error::InvalidArgument(format!(
            "{m} is not congruent to 0 or 1 mod 4"
        )));
    }
    let mut core: i64 = m.signum();
    let mut square: u64 = 1;
    for (p, e) in factorize(m.unsigned_abs()) {
        square *= p.pow(e / 2);
        if e % 2 == 1 {
            core *= p as i64;
        }
    }
    let (d, f) = if core.rem_euclid(4) == 1 {
        (core, square)
    } else {
        (4 * core, square / 2)
    };
    Ok((DiscriminantChar { disc: d }, f))
}
