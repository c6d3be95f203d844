use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision exact rational, always stored in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

pub fn int<T: Into<BigInt>>(n: T) -> Rational {
    Rational::from_integer(n.into())
}

/// `num / den`, normalized. Panics on a zero denominator.
pub fn rat<T: Into<BigInt>, U: Into<BigInt>>(num: T, den: U) -> Rational {
    Rational::new(num.into(), den.into())
}

/// `base^exp` for a non-negative exponent, as a rational.
pub fn pow_int(base: i64, exp: u32) -> Rational {
    int(num_traits::pow(BigInt::from(base), exp as usize))
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n as u64).fold(BigInt::one(), |acc, i| acc * i)
}

/// Rising factorial `x (x+1) ... (x+n-1)`; the empty product is 1.
pub fn pochhammer(x: &Rational, n: u32) -> Rational {
    let mut acc = Rational::one();
    let mut term = x.clone();
    for _ in 0..n {
        acc *= &term;
        term += Rational::one();
    }
    acc
}

fn ord_p_int(n: &BigInt, p: u64) -> i64 {
    let p = BigInt::from(p);
    let mut n = n.abs();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            return v;
        }
        n = q;
        v += 1;
    }
}

/// p-adic valuation of a rational; `None` for zero.
pub fn ord_p(x: &Rational, p: u64) -> Option<i64> {
    if x.is_zero() {
        return None;
    }
    Some(ord_p_int(x.numer(), p) - ord_p_int(x.denom(), p))
}
