//! Exact scalar arithmetic: rationals, Bernoulli numbers, quadratic characters,
//! L-values at non-positive integers and Cohen's function `H(r, N)`.

mod bernoulli;
mod character;
mod lfunc;
pub mod numtheory;
mod pi;
mod rational;

pub use bernoulli::{bernoulli, bernoulli_poly, zeta_neg};
pub use character::{fundamental_decomposition, kronecker, DiscriminantChar};
pub use lfunc::{cohen_h, gen_bernoulli, l_value_neg};
pub use pi::PiRational;
pub use rational::{factorial, int, ord_p, pochhammer, pow_int, rat, Rational};
