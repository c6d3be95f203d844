use std::fmt;
use std::ops::{Div, Mul};

use super::rational::Rational;

/// `coefficient * pi^pi_exponent`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiRational {
    pub coefficient: Rational,
    pub pi_exponent: i32,
}

impl PiRational {
    pub fn new(coefficient: Rational, pi_exponent: i32) -> Self {
        Self {
            coefficient,
            pi_exponent,
        }
    }
}

impl Mul for PiRational {
    type Output = PiRational;
    fn mul(self, rhs: PiRational) -> PiRational {
        PiRational::new(
            self.coefficient * rhs.coefficient,
            self.pi_exponent + rhs.pi_exponent,
        )
    }
}

impl Div for PiRational {
    type Output = PiRational;
    fn div(self, rhs: PiRational) -> PiRational {
        PiRational::new(
            self.coefficient / rhs.coefficient,
            self.pi_exponent - rhs.pi_exponent,
        )
    }
}

impl fmt::Display for PiRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.pi_exponent {
            0 => write!(f, "{}", self.coefficient),
            1 => write!(f, "{}*pi", self.coefficient),
            e => write!(f, "{}*pi^{}", self.coefficient, e),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    #[test]
    fn exponents_track() {
        let a = PiRational::new(int(3), 1);
        let b = PiRational::new(rat(1, 2), 3);
        assert_eq!((a.clone() * b.clone()).pi_exponent, 4);
        let q = a / b;
        assert_eq!(q, PiRational::new(int(6), -2));
        assert_eq!(q.to_string(), "6*pi^-2");
    }
}
