//! Exact arithmetic for pullbacks of degree-three Siegel Eisenstein series,
//! local Siegel series, and Eisenstein congruence certificates.
//!
//! Everything is computed over `Q` with arbitrary-precision integers; there is
//! no floating point in any result.

#![allow(clippy::needless_range_loop)]

pub mod arith;
pub mod eisen;
pub mod error;
pub mod gegenbauer;
pub mod linalg;
pub mod pullback;
pub mod qexp;
pub mod quadform;
pub mod serde_rational;
pub mod siegel;

pub use arith::{DiscriminantChar, PiRational, Rational};
pub use eisen::{eis_coeff, z_const, EisensteinContext};
pub use error::{Error, Result};
pub use gegenbauer::{eval_binary, gegenbauer_poly, BinaryForm, BivariatePoly};
pub use pullback::{
    certify, epsilon, epsilon_hecke, CertifyOptions, CongruenceCertificate, PullbackContext,
    Strictness, Verdict,
};
pub use qexp::{cohen_series, std_l_value, EigenBasis, QExpansion};
pub use quadform::{build_t, enumerate_r, HalfIntegralMatrix};
pub use siegel::{local_f, local_f_star, LaurentPolyX, SiegelSeriesPolynomial};
