use std::fmt;

use num_traits::One;
use serde::{Deserialize, Serialize};

use super::constants::{gamma1, gamma2};
use super::epsilon::PullbackContext;
use crate::arith::numtheory::is_prime;
use crate::arith::{int, ord_p, zeta_neg, Rational};
use crate::error::{Error, Result};
use crate::gegenbauer::BinaryForm;
use crate::linalg::{self, RatMat};
use crate::qexp::{default_precision, std_l_value, EigenBasis};
use crate::quadform::HalfIntegralMatrix;

pub const SCHEMA: &str = "eiscong-cert-v1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Strictness {
    #[default]
    Strict,
    Relaxed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    ProvenModP,
    ProvenModPAlpha,
    NotEstablished,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::ProvenModP => "ProvenModP",
            Verdict::ProvenModPAlpha => "ProvenModPAlpha",
            Verdict::NotEstablished => "NotEstablished",
        })
    }
}

/// Determinant of `[e_{m_i}[slot] | lambda_{j,m_i}]`, `j` running over the
/// eigenforms other than the target, together with `Delta = det(lambda_{j,m_i})`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EpsilonWitness {
    pub m_list: Vec<u64>,
    pub slot: usize,
    #[serde(with = "crate::serde_rational")]
    pub delta: Rational,
    #[serde(with = "crate::serde_rational")]
    pub determinant: Rational,
    /// `zeta(3-2k)` times `determinant`.
    #[serde(with = "crate::serde_rational")]
    pub scaled_determinant: Rational,
}

/// Computes the determinant criterion for the eigenform `form` of weight `k+nu`.
pub fn cond2_determinant(
    ctx: &PullbackContext,
    basis: &EigenBasis,
    form: usize,
    big_n: &HalfIntegralMatrix,
    m_list: &[u64],
    slot: usize,
) -> Result<EpsilonWitness> {
    let d = basis.dim();
    if m_list.len() != d {
        return Err(Error::InvalidArgument(format!(
            "m-list has {} entries, dim S_{} = {d}",
            m_list.len(),
            basis.weight()
        )));
    }
    if form >= d {
        return Err(Error::InvalidArgument(format!(
            "no eigenform with index {form}"
        )));
    }
    if slot > ctx.nu() as usize {
        return Err(Error::InvalidArgument(format!(
            "slot {slot} exceeds degree {}",
            ctx.nu()
        )));
    }
    let order: Vec<usize> = std::iter::once(form)
        .chain((0..d).filter(|&j| j != form))
        .collect();
    let mut lam: RatMat = Vec::with_capacity(d);
    let mut mat: RatMat = Vec::with_capacity(d);
    for &m in m_list {
        let row: Vec<Rational> = order
            .iter()
            .map(|&j| basis.eigenvalue(j, m))
            .collect::<Result<_>>()?;
        let e = ctx.epsilon_hecke(m, 1, big_n)?;
        let mut r = row.clone();
        r[0] = e.coeff(slot).clone();
        mat.push(r);
        lam.push(row);
    }
    let determinant = linalg::rat_det(&mat);
    let zeta = zeta_neg(2 * ctx.k() - 2)?;
    Ok(EpsilonWitness {
        m_list: m_list.to_vec(),
        slot,
        delta: linalg::rat_det(&lam),
        scaled_determinant: &zeta * &determinant,
        determinant,
    })
}

/// First slot whose coefficient is a nonzero `p`-unit.
pub fn pick_slot(eps: &BinaryForm, p: u64) -> Option<usize> {
    eps.coeffs().iter().position(|c| ord_p(c, p) == Some(0))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionStatus {
    /// `ord_p(L) > 0`.
    pub cond1: bool,
    /// `zeta(3-2k)`, the determinant and `Delta` are `p`-units.
    pub cond2: bool,
    /// `p >= 2(k+nu) - 3`.
    pub cond3: bool,
    /// `p >= max(2k, k+nu-2)` and `ord_p(gamma_1) = 0`.
    pub cond3_prime: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CongruenceCertificate {
    pub schema: String,
    pub k: u32,
    pub nu: u32,
    pub p: u64,
    /// `A` in the textual matrix syntax.
    pub a: String,
    pub strictness: Strictness,
    pub form_index: usize,
    pub dim_cusp: usize,
    #[serde(with = "crate::serde_rational")]
    pub l_value: Rational,
    /// `ord_p(L)`; absent when `L = 0`.
    pub alpha: Option<i64>,
    #[serde(with = "crate::serde_rational")]
    pub gamma1: Rational,
    #[serde(with = "crate::serde_rational")]
    pub gamma2: Rational,
    pub ord_p_gamma1: Option<i64>,
    #[serde(with = "crate::serde_rational")]
    pub zeta_3m2k: Rational,
    pub epsilon: BinaryForm,
    #[serde(with = "crate::serde_rational")]
    pub epsilon_at_1_0: Rational,
    #[serde(with = "crate::serde_rational")]
    pub epsilon_at_1_1: Rational,
    pub epsilon_witness: EpsilonWitness,
    pub condition_status: ConditionStatus,
    pub warnings: Vec<String>,
    pub verdict: Verdict,
    pub implied_congruence: String,
    /// Externally quoted normalizing constant, kept for display only.
    #[serde(with = "crate::serde_rational::option")]
    pub reference_gamma: Option<Rational>,
}

#[derive(Clone, Debug, Default)]
pub struct CertifyOptions {
    /// Defaults to `[1, 2, ..., d]`.
    pub m_list: Option<Vec<u64>>,
    /// Defaults to [`pick_slot`] on `eps(1, A)`.
    pub slot: Option<usize>,
    pub strictness: Strictness,
    /// Index of the target eigenform in the eigenbasis.
    pub form: usize,
    pub reference_gamma: Option<Rational>,
    pub precision: Option<usize>,
}

struct Decision {
    status: ConditionStatus,
    alpha: Option<i64>,
    ord_gamma1: Option<i64>,
    warnings: Vec<String>,
    verdict: Verdict,
    implied: String,
}

fn is_unit(x: &Rational, p: u64) -> bool {
    ord_p(x, p) == Some(0)
}

#[allow(clippy::too_many_arguments)]
fn decide(
    k: u32,
    nu: u32,
    p: u64,
    dim: usize,
    strictness: Strictness,
    l_value: &Rational,
    zeta: &Rational,
    witness: &EpsilonWitness,
) -> Result<Decision> {
    let alpha = ord_p(l_value, p);
    let g1 = gamma1(k, nu)?;
    let ord_gamma1 = ord_p(&g1, p);
    let status = ConditionStatus {
        cond1: alpha.is_some_and(|a| a > 0),
        cond2: is_unit(zeta, p) && is_unit(&witness.determinant, p) && is_unit(&witness.delta, p),
        cond3: p >= u64::from(2 * (k + nu) - 3),
        cond3_prime: p >= u64::from((2 * k).max(k + nu - 2)) && ord_gamma1 == Some(0),
    };
    let size_ok = status.cond3 || status.cond3_prime;
    let mut warnings = Vec::new();
    if !size_ok {
        let msg = format!(
            "size condition fails: p = {p} < 2(k+nu)-3 = {} and (p < max(2k, k+nu-2) = {} or ord_p(gamma1) = {})",
            2 * (k + nu) - 3,
            (2 * k).max(k + nu - 2),
            ord_gamma1.map_or("inf".to_string(), |o| o.to_string())
        );
        warnings.push(msg);
    }
    let gates = status.cond1 && status.cond2 && (size_ok || strictness == Strictness::Relaxed);
    let verdict = match (gates, alpha) {
        (true, Some(a)) if dim == 1 && a >= 2 => Verdict::ProvenModPAlpha,
        (true, _) => Verdict::ProvenModP,
        _ => Verdict::NotEstablished,
    };
    let modulus = match (verdict, alpha) {
        (Verdict::ProvenModPAlpha, Some(a)) => format!("{p}^{a}"),
        _ => p.to_string(),
    };
    let implied = if verdict == Verdict::NotEstablished {
        "none".to_string()
    } else {
        format!(
            "λ_G(q) ≡ (1+q^{})λ_f(q) mod {modulus} for every prime q",
            k - 2
        )
    };
    Ok(Decision {
        status,
        alpha,
        ord_gamma1,
        warnings,
        verdict,
        implied,
    })
}

/// Assembles the congruence certificate for the eigenform of weight `k+nu`.
pub fn certify(
    k: u32,
    nu: u32,
    p: u64,
    a: &HalfIntegralMatrix,
    opts: &CertifyOptions,
) -> Result<CongruenceCertificate> {
    if !is_prime(p) {
        return Err(Error::InvalidArgument(format!("{p} is not prime")));
    }
    if a.size() != 2 || !a.is_pd() {
        return Err(Error::InvalidArgument(
            "A must be a positive-definite 2x2 matrix".into(),
        ));
    }
    let ctx = PullbackContext::new(k, nu)?;
    let precision = opts.precision.unwrap_or_else(|| default_precision(k + nu));
    let basis = EigenBasis::with_precision(k + nu, precision)?;
    let d = basis.dim();
    let l_value = std_l_value(k, nu, &basis, opts.form)?;
    let zeta = zeta_neg(2 * k - 2)?;
    if p >= u64::from(2 * k) && ord_p(&zeta, p).is_some_and(|o| o < 0) {
        return Err(Error::InvalidArgument(format!(
            "zeta(3-2k) has {p} in its denominator, contradicting von Staudt–Clausen"
        )));
    }
    let eps = ctx.epsilon(1, a)?;
    let m_list = opts
        .m_list
        .clone()
        .unwrap_or_else(|| (1..=d as u64).collect());
    let slot = opts.slot.or_else(|| pick_slot(&eps, p)).unwrap_or(0);
    let witness = cond2_determinant(&ctx, &basis, opts.form, a, &m_list, slot)?;
    let dec = decide(k, nu, p, d, opts.strictness, &l_value, &zeta, &witness)?;
    Ok(CongruenceCertificate {
        schema: SCHEMA.to_string(),
        k,
        nu,
        p,
        a: a.to_string(),
        strictness: opts.strictness,
        form_index: opts.form,
        dim_cusp: d,
        alpha: dec.alpha,
        l_value,
        gamma1: gamma1(k, nu)?,
        gamma2: gamma2(k, nu)?,
        ord_p_gamma1: dec.ord_gamma1,
        zeta_3m2k: zeta,
        epsilon_at_1_0: eps.eval(&int(1), &int(0)),
        epsilon_at_1_1: eps.eval(&int(1), &int(1)),
        epsilon: eps,
        epsilon_witness: witness,
        condition_status: dec.status,
        warnings: dec.warnings,
        verdict: dec.verdict,
        implied_congruence: dec.implied,
        reference_gamma: opts.reference_gamma.clone(),
    })
}

impl CongruenceCertificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    /// Parses a certificate and re-derives every field that follows from the
    /// stored inputs; any disagreement is an error.
    pub fn from_json(s: &str) -> Result<Self> {
        let cert: Self = serde_json::from_str(s)
            .map_err(|e| Error::CertificateMismatch(format!("malformed certificate: {e}")))?;
        cert.check()?;
        Ok(cert)
    }

    fn check(&self) -> Result<()> {
        let mismatch =
            |what: &str| Err(Error::CertificateMismatch(format!("{what} does not match")));
        if self.schema != SCHEMA {
            return mismatch("schema");
        }
        let a: HalfIntegralMatrix = self.a.parse()?;
        if a.size() != 2 || !a.is_pd() {
            return mismatch("A");
        }
        if !is_prime(self.p) {
            return mismatch("p");
        }
        if self.gamma1 != gamma1(self.k, self.nu)? {
            return mismatch("gamma1");
        }
        if self.gamma2 != gamma2(self.k, self.nu)? {
            return mismatch("gamma2");
        }
        let zeta = zeta_neg(2 * self.k - 2)?;
        if self.zeta_3m2k != zeta {
            return mismatch("zeta(3-2k)");
        }
        let w = &self.epsilon_witness;
        if w.scaled_determinant != &zeta * &w.determinant {
            return mismatch("scaled determinant");
        }
        if w.m_list.len() != self.dim_cusp || self.epsilon.degree() != self.nu {
            return mismatch("witness shape");
        }
        if self.epsilon_at_1_0 != self.epsilon.eval(&int(1), &int(0))
            || self.epsilon_at_1_1 != self.epsilon.eval(&int(1), &int(1))
        {
            return mismatch("epsilon evaluations");
        }
        if self.dim_cusp == 1
            && w.m_list == [1]
            && (w.determinant != *self.epsilon.coeff(w.slot) || !w.delta.is_one())
        {
            return mismatch("1x1 witness");
        }
        let dec = decide(
            self.k,
            self.nu,
            self.p,
            self.dim_cusp,
            self.strictness,
            &self.l_value,
            &zeta,
            w,
        )?;
        if dec.alpha != self.alpha || dec.ord_gamma1 != self.ord_p_gamma1 {
            return mismatch("valuations");
        }
        if dec.status != self.condition_status {
            return mismatch("condition status");
        }
        if dec.verdict != self.verdict {
            return mismatch("verdict");
        }
        if dec.implied != self.implied_congruence || dec.warnings != self.warnings {
            return mismatch("implied congruence");
        }
        Ok(())
    }

    /// Reruns the whole computation from the stored inputs and compares.
    pub fn recompute(&self) -> Result<()> {
        let opts = CertifyOptions {
            m_list: Some(self.epsilon_witness.m_list.clone()),
            slot: Some(self.epsilon_witness.slot),
            strictness: self.strictness,
            form: self.form_index,
            reference_gamma: self.reference_gamma.clone(),
            precision: None,
        };
        let fresh = certify(self.k, self.nu, self.p, &self.a.parse()?, &opts)?;
        if &fresh != self {
            return Err(Error::CertificateMismatch(
                "recomputed certificate differs".into(),
            ));
        }
        Ok(())
    }
}
