use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::bernoulli::{bernoulli, zeta_neg};
use super::character::{fundamental_decomposition, DiscriminantChar};
use super::numtheory::{binomial, divisors, mobius, sigma};
use super::rational::{int, pow_int, Rational};

type GenBernoulliCache = RwLock<HashMap<(u32, i64), Rational>>;

fn cache() -> &'static GenBernoulliCache {
    static CACHE: OnceLock<GenBernoulliCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Generalized Bernoulli number `B_{r,chi} = m^{r-1} sum_{a=1}^{m} chi(a) B_r(a/m)`
/// with `m` the conductor of `chi`.
pub fn gen_bernoulli(r: u32, chi: DiscriminantChar) -> Rational {
    assert!(r >= 1, "gen_bernoulli needs r >= 1");
    let key = (r, chi.disc());
    if let Some(v) = cache().read().unwrap().get(&key) {
        return v.clone();
    }
    let m = chi.conductor();
    // B_r(a/m) expanded: sum_j C(r,j) B_j m^{j-1} sum_a chi(a) a^{r-j}.
    let mut power_sums = vec![BigInt::zero(); r as usize + 1];
    for a in 1..=m {
        let c = chi.value(a as i64);
        if c == 0 {
            continue;
        }
        let mut pw = BigInt::one();
        for s in power_sums.iter_mut() {
            *s += &pw * c;
            pw *= a;
        }
    }
    let mut value = Rational::zero();
    let mf = Rational::from_integer(BigInt::from(m));
    for j in 0..=r {
        let b = bernoulli(j as usize);
        if b.is_zero() {
            continue;
        }
        let term = b
            * int(binomial(r as u64, j as u64))
            * num_traits::pow::Pow::pow(&mf, j as i32 - 1)
            * int(power_sums[(r - j) as usize].clone());
        value += term;
    }
    cache().write().unwrap().insert(key, value.clone());
    value
}

/// `L(1 - r, chi) = -B_{r,chi} / r`.
pub fn l_value_neg(r: u32, chi: DiscriminantChar) -> Rational {
    -gen_bernoulli(r, chi) / int(r)
}

/// Cohen's function `H(r, N)`.
///
/// `H(r, 0) = zeta(1 - 2r)`; zero unless `(-1)^r N = 0, 1 mod 4`; otherwise,
/// with `(-1)^r N = D f^2` and `D` fundamental,
/// `L(1 - r, chi_D) * sum_{d | f} mu(d) chi_D(d) d^{r-1} sigma_{2r-1}(f / d)`.
pub fn cohen_h(r: u32, n: u64) -> Rational {
    assert!(r >= 1, "cohen_h needs r >= 1");
    if n == 0 {
        return zeta_neg(2 * r).expect("2r is even and >= 2");
    }
    let signed = if r % 2 == 1 { -(n as i64) } else { n as i64 };
    if !matches!(signed.rem_euclid(4), 0 | 1) {
        return Rational::zero();
    }
    let (chi, f) = fundamental_decomposition(signed).expect("discriminant");
    let mut divisor_sum = Rational::zero();
    for d in divisors(f) {
        let mu = mobius(d);
        if mu == 0 {
            continue;
        }
        let c = chi.value(d as i64);
        if c == 0 {
            continue;
        }
        divisor_sum += int(mu * c as i64) * pow_int(d as i64, r - 1) * int(sigma(f / d, 2 * r - 1));
    }
    l_value_neg(r, chi) * divisor_sum
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{bernoulli, bernoulli_poly, rat};

    fn chi(d: i64) -> DiscriminantChar {
        DiscriminantChar::new(d).unwrap()
    }

    #[test]
    fn gen_bernoulli_examples() {
        assert_eq!(gen_bernoulli(1, chi(-4)), rat(-1, 2));
        assert_eq!(gen_bernoulli(1, chi(-3)), rat(-1, 3));
        for r in 2..16 {
            assert_eq!(
                gen_bernoulli(r, DiscriminantChar::trivial()),
                bernoulli(r as usize)
            );
        }
    }

    #[test]
    fn power_sum_form_matches_definition() {
        for d in [-3i64, -4, -7, -8, 5, 8, 12, -15, -20, 13] {
            let c = chi(d);
            let m = c.conductor();
            for r in 1..=9u32 {
                let mut direct = Rational::zero();
                for a in 1..=m {
                    direct += int(c.value(a as i64)) * bernoulli_poly(r as usize, &rat(a, m));
                }
                direct *= pow_int(m as i64, r - 1);
                assert_eq!(gen_bernoulli(r, c), direct, "D={d} r={r}");
            }
        }
    }

    #[test]
    fn l_values() {
        assert_eq!(l_value_neg(1, chi(-4)), rat(1, 2));
        // Euler numbers: L(-2n, chi_{-4}) = E_{2n} / 2.
        assert_eq!(l_value_neg(3, chi(-4)), rat(-1, 2));
        assert_eq!(l_value_neg(13, chi(-4)), rat(2702765, 2));
        for r in (2..20).step_by(2) {
            assert_eq!(
                l_value_neg(r, DiscriminantChar::trivial()),
                zeta_neg(r).unwrap()
            );
        }
        // L(-2, chi_{-3}) = -2/9
        assert_eq!(l_value_neg(3, chi(-3)), rat(-2, 9));
    }

    #[test]
    fn parity_vanishing() {
        for d in -40i64..=40 {
            if d == 1 || !DiscriminantChar::is_fundamental(d) {
                continue;
            }
            for r in 1..=20u32 {
                let b = gen_bernoulli(r, chi(d));
                if d < 0 && r % 2 == 0 {
                    assert!(b.is_zero(), "D={d} r={r}");
                }
                if d > 0 && r % 2 == 1 && r >= 3 {
                    assert!(b.is_zero(), "D={d} r={r}");
                }
            }
        }
    }

    #[test]
    fn cohen_h_classical_values() {
        // Hurwitz class numbers H(1, N) with the weight 1/12 at N = 0.
        assert_eq!(cohen_h(1, 0), rat(-1, 12));
        assert_eq!(cohen_h(1, 3), rat(1, 3));
        assert_eq!(cohen_h(1, 4), rat(1, 2));
        assert_eq!(cohen_h(1, 7), int(1));
        assert_eq!(cohen_h(1, 8), int(1));
        assert_eq!(cohen_h(1, 12), rat(4, 3));
        assert_eq!(cohen_h(1, 16), rat(3, 2));
        assert_eq!(cohen_h(1, 15), int(2));
        assert_eq!(cohen_h(1, 27), rat(4, 3));
        assert_eq!(cohen_h(13, 3), l_value_neg(13, chi(-3)));
        assert_eq!(cohen_h(3, 5), int(0));
    }

    #[test]
    fn cohen_h_support() {
        for r in 1..=13 {
            for n in 1..=200u64 {
                let h = cohen_h(r, n);
                let signed = if r % 2 == 1 { -(n as i64) } else { n as i64 };
                if matches!(signed.rem_euclid(4), 2 | 3) {
                    assert!(h.is_zero());
                } else {
                    assert!(!h.is_zero(), "H({r},{n}) vanished");
                }
            }
        }
    }
}
