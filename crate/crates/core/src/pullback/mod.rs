//! Pullback coefficients and congruence certificates.

mod certificate;
mod constants;
mod epsilon;

pub use certificate::{
    certify, cond2_determinant, pick_slot, CertifyOptions, ConditionStatus, CongruenceCertificate,
    EpsilonWitness, Strictness, Verdict, SCHEMA,
};
pub use constants::{c_k_nu_1, c_k_nu_2, gamma1, gamma2};
pub use epsilon::{epsilon, epsilon_hecke, PullbackContext};
