//! Exact Haar expectations of power-sum polynomials.
//!
//! The per-monomial values come from the classical moment formulas for the
//! three families. On U the joint moment of `prod p_j^{a_j} prod
//! conj(p_j)^{b_j}` vanishes whenever the weights `k_a` and `k_b` differ
//! (for every rank, by invariance under center rotations), and equals
//! `delta_{a,b} prod_j j^{a_j} a_j!` once `n >= k_a`. On SO and USp the
//! moment factorises over indices into the four-case factor `f_a(j)`, with
//! USp picking up the sign `(-1)^{(j-1) a_j}`; validity needs
//! `n - 1 >= k_a` resp. `2n >= k_a`.

use super::npoly::RankPoly;
use super::poly::PsPolynomial;
use crate::{Error, GroupKind, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use std::collections::BTreeMap;

/// An exact expectation together with the smallest rank at which the moment
/// formulas behind it are guaranteed exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpectationResult {
    value: RankPoly,
    validity_threshold: u32,
}

impl ExpectationResult {
    pub fn value(&self) -> &RankPoly {
        &self.value
    }

    /// Smallest `n` for which `value` is exact; unconditional results report 1.
    pub fn validity_threshold(&self) -> u32 {
        self.validity_threshold
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    /// Evaluate at a concrete rank, refusing ranks below the threshold.
    pub fn evaluate(&self, n: u32) -> Result<BigRational> {
        if n < self.validity_threshold {
            return Err(Error::BelowThreshold {
                n,
                threshold: self.validity_threshold,
            });
        }
        Ok(self.value.eval_int(i64::from(n)))
    }

    /// Evaluate regardless of the threshold. The boolean is `true` when the
    /// value is guaranteed exact at this rank.
    pub fn evaluate_forced(&self, n: u32) -> (BigRational, bool) {
        (
            self.value.eval_int(i64::from(n)),
            n >= self.validity_threshold,
        )
    }

    pub fn evaluate_f64(&self, n: u32) -> Result<f64> {
        Ok(self.evaluate(n)?.to_f64().expect("moment fits in f64"))
    }
}

/// Double factorial `(2m-1)!! = (2m-1)(2m-3)...3*1`, with `(-1)!! = 1`.
fn odd_double_factorial(m: u32) -> BigInt {
    let mut acc = BigInt::one();
    let mut k = 1i64;
    while k <= 2 * i64::from(m) - 1 {
        acc *= k;
        k += 2;
    }
    acc
}

fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

fn factorial(k: u32) -> BigInt {
    (1..=u64::from(k)).map(BigInt::from).product()
}

/// The case-split moment factor for SO/USp:
/// 1 when `a_j = 0`; 0 when `j*a_j` is odd; `j^{a_j/2} (a_j-1)!!` for odd
/// `j`, even `a_j`; and `1 + sum_d j^d C(a_j, 2d) (2d-1)!!` for even `j`.
pub fn f_factor(j: u32, a_j: u32) -> BigInt {
    if a_j == 0 {
        return BigInt::one();
    }
    if j % 2 == 1 {
        if a_j % 2 == 1 {
            return BigInt::zero();
        }
        return BigInt::from(j).pow(a_j / 2) * odd_double_factorial(a_j / 2);
    }
    let mut acc = BigInt::one();
    for d in 1..=(a_j / 2) {
        acc += BigInt::from(j).pow(d) * binomial(a_j, 2 * d) * odd_double_factorial(d);
    }
    acc
}

/// Exact Haar moment of a single normalised monomial: (value, threshold).
fn monomial_moment(
    kind: GroupKind,
    a: &BTreeMap<u32, u32>,
    b: &BTreeMap<u32, u32>,
) -> Result<(BigRational, u32)> {
    let k_a: u32 = a.iter().map(|(&j, &e)| j * e).sum();
    let k_b: u32 = b.iter().map(|(&j, &e)| j * e).sum();
    match kind {
        GroupKind::Unitary => {
            if k_a != k_b {
                // Zero for every rank by center-rotation invariance.
                return Ok((BigRational::zero(), 1));
            }
            let threshold = k_a.max(1);
            if a != b {
                return Ok((BigRational::zero(), threshold));
            }
            let mut acc = BigInt::one();
            for (&j, &e) in a {
                acc *= BigInt::from(j).pow(e) * factorial(e);
            }
            Ok((BigRational::from(acc), threshold))
        }
        GroupKind::SpecialOrthogonal => {
            if !b.is_empty() {
                return Err(Error::ConjugateUnsupported(kind));
            }
            let mut acc = BigInt::one();
            for (&j, &e) in a {
                acc *= f_factor(j, e);
            }
            Ok((BigRational::from(acc), k_a + 1))
        }
        GroupKind::UnitarySymplectic => {
            if !b.is_empty() {
                return Err(Error::ConjugateUnsupported(kind));
            }
            let mut acc = BigInt::one();
            for (&j, &e) in a {
                let f = f_factor(j, e);
                // (-1)^{(j-1) a_j}
                if (j - 1) * e % 2 == 1 {
                    acc *= -f;
                } else {
                    acc *= f;
                }
            }
            Ok((BigRational::from(acc), k_a.div_ceil(2).max(1)))
        }
    }
}

impl PsPolynomial {
    /// Exact Haar expectation, extended linearly over terms.
    ///
    /// The value is a polynomial in the rank symbol (through the
    /// coefficients; the per-monomial moments themselves are rank-free), and
    /// the threshold is the maximum over contributing monomials: `k_a` on U
    /// (1 when the weights differ), `k_a + 1` on SO, `ceil(k_a/2)` on USp.
    pub fn haar_expectation(&self) -> Result<ExpectationResult> {
        let mut value = RankPoly::zero();
        let mut threshold = 1u32;
        for (m, coeff) in self.terms() {
            let (moment, t) = monomial_moment(self.kind(), m.plain(), m.conjugated())?;
            threshold = threshold.max(t);
            if !moment.is_zero() {
                value = value.add(&coeff.scale(&moment));
            }
        }
        Ok(ExpectationResult {
            value,
            validity_threshold: threshold,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::psalgebra::npoly::ratio;

    const U: GroupKind = GroupKind::Unitary;
    const SO: GroupKind = GroupKind::SpecialOrthogonal;
    const SP: GroupKind = GroupKind::UnitarySymplectic;

    fn expect_const(e: &ExpectationResult) -> BigRational {
        e.value().as_constant().expect("constant expectation")
    }

    #[test]
    fn f_factor_cases() {
        assert_eq!(f_factor(3, 0), BigInt::from(1));
        assert_eq!(f_factor(3, 1), BigInt::from(0)); // j odd, a odd
        assert_eq!(f_factor(3, 2), BigInt::from(3)); // 3^1 * 1!!
        assert_eq!(f_factor(1, 4), BigInt::from(3)); // 1^2 * 3!!
        assert_eq!(f_factor(2, 1), BigInt::from(1)); // even j, empty sum
        assert_eq!(f_factor(2, 2), BigInt::from(3)); // 1 + 2*C(2,2)*1
        assert_eq!(f_factor(4, 2), BigInt::from(5)); // 1 + 4
        assert_eq!(f_factor(2, 4), BigInt::from(25)); // 1 + 2*6*1 + 4*1*3
    }

    #[test]
    fn unitary_moments() {
        // E[p_2 conj(p_2)] = 2, n >= 2
        let f = &PsPolynomial::p(U, 2) * &PsPolynomial::p_conj(2);
        let e = f.haar_expectation().unwrap();
        assert_eq!(expect_const(&e), ratio(2, 1));
        assert_eq!(e.validity_threshold(), 2);

        // E[p_1^2 conj(p_2)] = 0 with matching weights but a != b
        let f = &(&PsPolynomial::p(U, 1) * &PsPolynomial::p(U, 1)) * &PsPolynomial::p_conj(2);
        let e = f.haar_expectation().unwrap();
        assert!(e.is_zero());
        assert_eq!(e.validity_threshold(), 2);

        // E[p_3] = 0 for every rank
        let e = PsPolynomial::p(U, 3).haar_expectation().unwrap();
        assert!(e.is_zero());
        assert_eq!(e.validity_threshold(), 1);

        // E[1] = 1
        let e = PsPolynomial::one(U).haar_expectation().unwrap();
        assert_eq!(expect_const(&e), ratio(1, 1));
    }

    #[test]
    fn covariance_identity_unitary() {
        // E[p_j conj(p_k)] = delta_{jk} j with threshold <= max(j, k)
        for j in 1..=6u32 {
            for k in 1..=6u32 {
                let f = &PsPolynomial::p(U, j) * &PsPolynomial::p_conj(k);
                let e = f.haar_expectation().unwrap();
                let want = if j == k { ratio(j.into(), 1) } else { ratio(0, 1) };
                assert_eq!(expect_const(&e), want, "j={j} k={k}");
                assert!(e.validity_threshold() <= j.max(k));
                if j == k {
                    assert_eq!(e.validity_threshold(), j.max(1));
                }
            }
        }
    }

    #[test]
    fn orthogonal_moments() {
        // E[p_2^2] = 3, n >= 5
        let f = &PsPolynomial::p(SO, 2) * &PsPolynomial::p(SO, 2);
        let e = f.haar_expectation().unwrap();
        assert_eq!(expect_const(&e), ratio(3, 1));
        assert_eq!(e.validity_threshold(), 5);

        // E[p_2] = 1, E[p_1] = 0
        let e = PsPolynomial::p(SO, 2).haar_expectation().unwrap();
        assert_eq!(expect_const(&e), ratio(1, 1));
        let e = PsPolynomial::p(SO, 1).haar_expectation().unwrap();
        assert!(e.is_zero());
    }

    #[test]
    fn symplectic_moments() {
        // E[p_2] = -1, n >= 1
        let e = PsPolynomial::p(SP, 2).haar_expectation().unwrap();
        assert_eq!(expect_const(&e), ratio(-1, 1));
        assert_eq!(e.validity_threshold(), 1);

        // E[p_2^2] = 3 (sign squares away), threshold ceil(4/2) = 2
        let f = &PsPolynomial::p(SP, 2) * &PsPolynomial::p(SP, 2);
        let e = f.haar_expectation().unwrap();
        assert_eq!(expect_const(&e), ratio(3, 1));
        assert_eq!(e.validity_threshold(), 2);

        // mixed parity product: E[p_1^2 p_2] = 1 * (-1) = -1
        let f = &(&PsPolynomial::p(SP, 1) * &PsPolynomial::p(SP, 1)) * &PsPolynomial::p(SP, 2);
        let e = f.haar_expectation().unwrap();
        assert_eq!(expect_const(&e), ratio(-1, 1));
    }

    #[test]
    fn threshold_gating() {
        let f = &PsPolynomial::p(SO, 2) * &PsPolynomial::p(SO, 2);
        let e = f.haar_expectation().unwrap();
        assert!(matches!(
            e.evaluate(4),
            Err(Error::BelowThreshold { n: 4, threshold: 5 })
        ));
        assert_eq!(e.evaluate(5).unwrap(), ratio(3, 1));
        let (v, exact) = e.evaluate_forced(3);
        assert_eq!(v, ratio(3, 1));
        assert!(!exact);
    }

    #[test]
    fn linearity() {
        // E[2 f + 3 g] = 2 E[f] + 3 E[g] with f = p_2^2, g = p_4
        let f = &PsPolynomial::p(SO, 2) * &PsPolynomial::p(SO, 2);
        let g = PsPolynomial::p(SO, 4);
        let combo = f.scale_ratio(2, 1).add(&g.scale_ratio(3, 1)).unwrap();
        let lhs = combo.haar_expectation().unwrap();
        let ef = f.haar_expectation().unwrap();
        let eg = g.haar_expectation().unwrap();
        assert_eq!(
            expect_const(&lhs),
            expect_const(&ef) * ratio(2, 1) + expect_const(&eg) * ratio(3, 1)
        );
        assert_eq!(
            lhs.validity_threshold(),
            ef.validity_threshold().max(eg.validity_threshold())
        );
    }

    #[test]
    fn stationarity_spot_check_so_p2() {
        // E[Delta p_2] = -(n-1)*1 - 1 + n = 0 identically
        let lap = PsPolynomial::p(SO, 2).laplacian().unwrap();
        let e = lap.haar_expectation().unwrap();
        assert!(e.is_zero(), "E[Delta p_2] = {}", e.value());
    }
}
