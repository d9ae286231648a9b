//! Exact symbolic algebra of power-sum functionals on the classical compact
//! groups: normalisation, arithmetic, Laplacian operators, and exact Haar
//! expectations.

mod expectation;
mod monomial;
pub mod npoly;
mod poly;

pub use expectation::{f_factor, ExpectationResult};
pub use monomial::Monomial;
pub use npoly::{ratio, RankPoly};
pub use poly::PsPolynomial;
