use crate::arith::{factorial, int, pochhammer, PiRational, Rational};
use crate::error::{Error, Result};

fn check(k: u32, nu: u32) -> Result<()> {
    if k == 0 || k % 2 == 1 || nu % 2 == 1 {
        return Err(Error::InvalidArgument(format!(
            "k = {k} and nu = {nu} must be even and positive"
        )));
    }
    if nu < 2 {
        return Err(Error::InvalidArgument(
            "nu = 0 (scalar weight) is not supported".into(),
        ));
    }
    Ok(())
}

fn sign(e: u32) -> Rational {
    if e.is_multiple_of(2) {
        int(1)
    } else {
        int(-1)
    }
}

fn common(k: u32, nu: u32) -> Rational {
    int(factorial(nu)) * pochhammer(&int(k - 1), nu + 1) * pochhammer(&int(2 * k - 1), nu - 2)
}

/// `gamma_1 = (-1)^{(k+nu)/2+1} 8 nu! (k-1)_{nu+1} (2k-1)_{nu-2} / (2k+nu-2)_{nu-1}`.
pub fn gamma1(k: u32, nu: u32) -> Result<Rational> {
    check(k, nu)?;
    Ok(sign((k + nu) / 2 + 1) * int(8) * common(k, nu) / pochhammer(&int(2 * k + nu - 2), nu - 1))
}

/// `gamma_2 = (-1)^{nu/2+1} 32 nu! (k-1)_{nu+1} (2k-1)_{nu-2} / (2k+nu-4)_{nu-1}`.
pub fn gamma2(k: u32, nu: u32) -> Result<Rational> {
    check(k, nu)?;
    Ok(sign(nu / 2 + 1) * int(32) * common(k, nu) / pochhammer(&int(2 * k + nu - 4), nu - 1))
}

/// `c_{k,nu,1} = 16 (k)_nu (2k-1)_{nu-1} pi`.
pub fn c_k_nu_1(k: u32, nu: u32) -> Result<PiRational> {
    check(k, nu)?;
    let c = int(16) * pochhammer(&int(k), nu) * pochhammer(&int(2 * k - 1), nu - 1);
    Ok(PiRational::new(c, 1))
}

/// `c_{k,nu,2} = (-1)^{k/2} 256 (k)_nu (2k-1)_{nu-2} / (k-2) pi^3`.
pub fn c_k_nu_2(k: u32, nu: u32) -> Result<PiRational> {
    check(k, nu)?;
    if k == 2 {
        return Err(Error::InvalidArgument("c_{k,nu,2} needs k != 2".into()));
    }
    let c = sign(k / 2) * int(256) * pochhammer(&int(k), nu) * pochhammer(&int(2 * k - 1), nu - 2)
        / int(k - 2);
    Ok(PiRational::new(c, 3))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    #[test]
    fn gamma_examples() {
        assert_eq!(gamma1(14, 2).unwrap(), int(-1560));
        assert_eq!(gamma2(14, 2).unwrap(), int(6720));
        assert!(gamma1(8, 8).unwrap().is_negative());
        assert!(gamma1(14, 0).is_err());
        assert!(gamma2(13, 2).is_err());
    }

    #[test]
    fn c_constants() {
        let c1 = c_k_nu_1(14, 2).unwrap();
        assert_eq!(c1.pi_exponent, 1);
        assert_eq!(c1.coefficient, int(16 * 14 * 15 * 27));
        let c2 = c_k_nu_2(14, 2).unwrap();
        assert_eq!(c2.pi_exponent, 3);
        assert_eq!(c2.coefficient, -(int(256 * 14 * 15) / int(12)));
    }
}
