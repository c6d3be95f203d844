//! Gegenbauer polynomials `P_{d,nu}(s, m)` and binary forms.

use std::collections::BTreeMap;
use std::ops::{Add, Mul};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{factorial, int, pochhammer, rat, Rational};
use crate::quadform::HalfIntegralMatrix;

/// Polynomial in `s` and `m`; key `(i, j)` is the monomial `s^i m^j`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BivariatePoly {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl BivariatePoly {
    pub fn terms(&self) -> &BTreeMap<(u32, u32), Rational> {
        &self.terms
    }

    pub fn coeff(&self, i: u32, j: u32) -> Rational {
        self.terms
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, s: &Rational, m: &Rational) -> Rational {
        self.terms
            .iter()
            .map(|(&(i, j), c)| {
                c * num_traits::pow(s.clone(), i as usize) * num_traits::pow(m.clone(), j as usize)
            })
            .fold(Rational::zero(), |a, b| a + b)
    }
}

/// `P_{d,nu}(s,m) = sum_mu (-1)^mu (d/2-1)_{nu-mu} / ((nu-2mu)! mu!) (2s)^{nu-2mu} m^mu`.
pub fn gegenbauer_poly(d: u32, nu: u32) -> BivariatePoly {
    let half = rat(d as i64 - 2, 2);
    let mut terms = BTreeMap::new();
    for mu in 0..=nu / 2 {
        let e = nu - 2 * mu;
        let mut c = pochhammer(&half, nu - mu) / (int(factorial(e)) * int(factorial(mu)))
            * int(num_traits::pow(num_bigint::BigInt::from(2), e as usize));
        if mu % 2 == 1 {
            c = -c;
        }
        if !c.is_zero() {
            terms.insert((e, mu), c);
        }
    }
    BivariatePoly { terms }
}

/// Compares `P_{d,nu}(s,m)` for `nu <= nu_max` with the `t`-expansion of
/// `(1 - 2st + mt^2)^{-(d-2)/2}` computed by the binomial series.
pub fn generating_check(d: u32, nu_max: u32, s: &Rational, m: &Rational) -> bool {
    let len = nu_max as usize + 1;
    // u = 2st - mt^2
    let mut u = vec![Rational::zero(); len];
    if len > 1 {
        u[1] = int(2) * s;
    }
    if len > 2 {
        u[2] = -m.clone();
    }
    let a = rat(d as i64 - 2, 2);
    let mut series = vec![Rational::zero(); len];
    let mut power = vec![Rational::zero(); len];
    power[0] = Rational::one();
    for j in 0..len {
        let c = pochhammer(&a, j as u32) / int(factorial(j as u32));
        for (acc, p) in series.iter_mut().zip(&power) {
            *acc += &c * p;
        }
        power = truncated_mul(&power, &u);
    }
    (0..=nu_max).all(|nu| series[nu as usize] == gegenbauer_poly(d, nu).eval(s, m))
}

fn truncated_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let len = a.len();
    let mut out = vec![Rational::zero(); len];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(len - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// Homogeneous form `sum_i c_i x^{nu-i} y^i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BinaryForm {
    #[serde(with = "crate::serde_rational::vec")]
    coeffs: Vec<Rational>,
}

impl BinaryForm {
    pub fn zero(degree: u32) -> Self {
        BinaryForm {
            coeffs: vec![Rational::zero(); degree as usize + 1],
        }
    }

    pub fn constant(c: Rational) -> Self {
        BinaryForm { coeffs: vec![c] }
    }

    /// Coefficients of `x^{nu}, x^{nu-1} y, ..., y^{nu}`.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a binary form has at least one slot");
        BinaryForm { coeffs }
    }

    /// `a x + b y`.
    pub fn linear(a: Rational, b: Rational) -> Self {
        BinaryForm { coeffs: vec![a, b] }
    }

    /// `a x^2 + b xy + c y^2`.
    pub fn quadratic(a: Rational, b: Rational, c: Rational) -> Self {
        BinaryForm {
            coeffs: vec![a, b, c],
        }
    }

    pub fn degree(&self) -> u32 {
        self.coeffs.len() as u32 - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &Rational {
        &self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        BinaryForm {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(BinaryForm::constant(Rational::one()), |acc, _| &acc * self)
    }

    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        let nu = self.degree() as usize;
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c * num_traits::pow(x.clone(), nu - i) * num_traits::pow(y.clone(), i))
            .fold(Rational::zero(), |a, b| a + b)
    }
}

impl Add for &BinaryForm {
    type Output = BinaryForm;

    fn add(self, other: &BinaryForm) -> BinaryForm {
        assert_eq!(
            self.degree(),
            other.degree(),
            "adding binary forms of different degree"
        );
        BinaryForm {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Mul for &BinaryForm {
    type Output = BinaryForm;

    fn mul(self, other: &BinaryForm) -> BinaryForm {
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        BinaryForm { coeffs }
    }
}

/// `P_{d,nu}((r1 x + r2 y)/2, n (N11 x^2 + 2 N12 xy + N22 y^2))`.
pub fn eval_binary(
    d: u32,
    nu: u32,
    r: (i64, i64),
    n: i64,
    big_n: &HalfIntegralMatrix,
) -> BinaryForm {
    assert_eq!(big_n.size(), 2, "N must be 2x2");
    let s = BinaryForm::linear(rat(r.0, 2), rat(r.1, 2));
    let q = BinaryForm::quadratic(
        int(n) * big_n.entry(0, 0),
        int(n * big_n.doubled_entry(0, 1)),
        int(n) * big_n.entry(1, 1),
    );
    let poly = gegenbauer_poly(d, nu);
    let mut out = BinaryForm::zero(nu);
    for (&(i, j), c) in poly.terms() {
        let term = (&s.pow(i) * &q.pow(j)).scale(c);
        out = &out + &term;
    }
    out
}
