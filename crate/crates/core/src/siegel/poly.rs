use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::arith::{int, Rational};
use crate::error::{Error, Result};

/// Finitely supported Laurent polynomial in `X` with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LaurentPolyX {
    terms: BTreeMap<i32, Rational>,
}

impl LaurentPolyX {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, Rational::one())
    }

    pub fn monomial(exp: i32, c: Rational) -> Self {
        let mut p = Self::default();
        p.set(exp, c);
        p
    }

    /// `c_0 + c_1 X + ...`.
    pub fn from_coeffs<I: IntoIterator<Item = Rational>>(coeffs: I) -> Self {
        let mut p = Self::default();
        for (i, c) in coeffs.into_iter().enumerate() {
            p.set(i as i32, c);
        }
        p
    }

    /// `1 - c X^e`.
    pub fn one_minus(c: Rational, e: i32) -> Self {
        &Self::one() - &Self::monomial(e, c)
    }

    fn set(&mut self, exp: i32, c: Rational) {
        if c.is_zero() {
            self.terms.remove(&exp);
        } else {
            self.terms.insert(exp, c);
        }
    }

    pub fn coeff(&self, exp: i32) -> Rational {
        self.terms.get(&exp).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &Rational)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    pub fn low_degree(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    /// Drops every term of degree above `max`.
    pub fn truncate(&self, max: i32) -> Self {
        LaurentPolyX {
            terms: self
                .terms
                .range(..=max)
                .map(|(&e, c)| (e, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::default();
        for (&e, v) in &self.terms {
            out.set(e, v * c);
        }
        out
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.terms
            .iter()
            .map(|(&e, c)| {
                if e >= 0 {
                    c * num_traits::pow(x.clone(), e as usize)
                } else {
                    c / num_traits::pow(x.clone(), (-e) as usize)
                }
            })
            .fold(Rational::zero(), |a, b| a + b)
    }

    /// Power series quotient `self / den` modulo `X^{max+1}`; `den` must be a
    /// polynomial with nonzero constant term and `self` a polynomial.
    pub fn series_div(&self, den: &Self, max: i32) -> Result<Self> {
        if self.low_degree().is_some_and(|e| e < 0) || den.low_degree().is_some_and(|e| e < 0) {
            return Err(Error::InvalidArgument(
                "series_div needs polynomials".into(),
            ));
        }
        let d0 = den.coeff(0);
        if d0.is_zero() {
            return Err(Error::InvalidArgument(
                "denominator has zero constant term".into(),
            ));
        }
        let mut out = Self::default();
        let mut rem = self.truncate(max);
        for e in 0..=max {
            let c = rem.coeff(e) / &d0;
            if c.is_zero() {
                continue;
            }
            rem = &rem - &(den * &Self::monomial(e, c.clone())).truncate(max);
            out.set(e, c);
        }
        Ok(out)
    }

    /// `X^{shift} * self`.
    pub fn shift(&self, shift: i32) -> Self {
        LaurentPolyX {
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| (e + shift, c.clone()))
                .collect(),
        }
    }

    /// Exact division; fails unless the remainder vanishes.
    pub fn exact_div(&self, den: &Self) -> Result<Self> {
        let Some(dl) = den.low_degree() else {
            return Err(Error::InexactDivision(
                "division by the zero polynomial".into(),
            ));
        };
        let Some(nl) = self.low_degree() else {
            return Ok(Self::zero());
        };
        // Both normalized to polynomials with nonzero constant term.
        let d = den.shift(-dl);
        let mut rem = self.shift(-nl);
        let dd = d.degree().unwrap();
        let lead = d.coeff(dd);
        let mut quot = Self::default();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let c = rem.coeff(rd) / &lead;
            rem = &rem - &(&d * &Self::monomial(rd - dd, c.clone()));
            quot.set(rd - dd, c);
        }
        if !rem.is_zero() {
            return Err(Error::InexactDivision(format!("nonzero remainder {rem}")));
        }
        Ok(quot.shift(nl - dl))
    }
}

impl Add for &LaurentPolyX {
    type Output = LaurentPolyX;

    fn add(self, other: &LaurentPolyX) -> LaurentPolyX {
        let mut out = self.clone();
        for (&e, c) in &other.terms {
            out.set(e, out.coeff(e) + c);
        }
        out
    }
}

impl Sub for &LaurentPolyX {
    type Output = LaurentPolyX;

    fn sub(self, other: &LaurentPolyX) -> LaurentPolyX {
        self + &(-other)
    }
}

impl Neg for &LaurentPolyX {
    type Output = LaurentPolyX;

    fn neg(self) -> LaurentPolyX {
        self.scale(&int(-1))
    }
}

impl Mul for &LaurentPolyX {
    type Output = LaurentPolyX;

    fn mul(self, other: &LaurentPolyX) -> LaurentPolyX {
        let mut out = LaurentPolyX::default();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &other.terms {
                let e = e1 + e2;
                out.set(e, out.coeff(e) + c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for LaurentPolyX {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| match e {
                0 => format!("{c}"),
                1 => format!("({c})*X"),
                _ => format!("({c})*X^{e}"),
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}
