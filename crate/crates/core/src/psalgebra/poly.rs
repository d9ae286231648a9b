//! Power-sum polynomials: normalisation, exact arithmetic, Laplacians.

use super::monomial::Monomial;
use super::npoly::{ratio, RankPoly};
use crate::{Error, GroupKind, Result};
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::One;
use std::collections::BTreeMap;
use std::fmt;

/// A finite linear combination of power-sum monomials over one group family,
/// with coefficients that are exact rational polynomials in the rank `n`.
///
/// Zero coefficients are never stored, so structural equality is semantic
/// equality. All operations are pure; values are safe to share across
/// threads.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PsPolynomial {
    kind: GroupKind,
    terms: BTreeMap<Monomial, RankPoly>,
}

impl PsPolynomial {
    pub fn zero(kind: GroupKind) -> Self {
        PsPolynomial {
            kind,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(kind: GroupKind) -> Self {
        PsPolynomial::constant(kind, RankPoly::one())
    }

    /// A constant (trace-free) polynomial.
    pub fn constant(kind: GroupKind, c: RankPoly) -> Self {
        let mut p = PsPolynomial::zero(kind);
        p.add_term(Monomial::one(), c);
        p
    }

    /// The matrix dimension as a constant polynomial: `n` for U and SO,
    /// `2n` for USp.
    pub fn dimension_poly(kind: GroupKind) -> RankPoly {
        match kind {
            GroupKind::Unitary | GroupKind::SpecialOrthogonal => RankPoly::n(),
            GroupKind::UnitarySymplectic => RankPoly::term(ratio(2, 1), 1),
        }
    }

    /// `p_raw` with the extended index conventions folded away:
    /// index 0 becomes the matrix dimension, a negative index `-k` becomes
    /// `conj(p_k)` on U and `p_k` on SO/USp (real traces, inverse transpose).
    pub fn power_sum(kind: GroupKind, raw_index: i64) -> Self {
        if raw_index == 0 {
            return PsPolynomial::constant(kind, Self::dimension_poly(kind));
        }
        let j = raw_index.unsigned_abs() as u32;
        let mono = if raw_index > 0 {
            Monomial::p(j)
        } else if kind.supports_conjugation() {
            Monomial::p_conj(j)
        } else {
            Monomial::p(j)
        };
        let mut p = PsPolynomial::zero(kind);
        p.add_term(mono, RankPoly::one());
        p
    }

    /// Wrap a single normalised monomial with coefficient one.
    ///
    /// Errors if the monomial carries conjugated factors on SO/USp, where
    /// traces are real and the normal form keeps the conjugate map empty.
    pub fn from_monomial(kind: GroupKind, m: Monomial) -> Result<Self> {
        if m.has_conjugated() && !kind.supports_conjugation() {
            return Err(Error::ConjugateUnsupported(kind));
        }
        let mut p = PsPolynomial::zero(kind);
        p.add_term(m, RankPoly::one());
        Ok(p)
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &RankPoly)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> RankPoly {
        self.terms.get(m).cloned().unwrap_or_else(RankPoly::zero)
    }

    /// Largest power-sum index appearing in any factor.
    pub fn max_index(&self) -> u32 {
        self.terms
            .keys()
            .flat_map(|m| {
                m.plain()
                    .keys()
                    .chain(m.conjugated().keys())
                    .copied()
                    .max()
            })
            .max()
            .unwrap_or(0)
    }

    /// Largest monomial weight `k_a + k_b` with nonzero coefficient.
    pub fn max_weight(&self) -> u32 {
        self.terms.keys().map(|m| m.weight()).max().unwrap_or(0)
    }

    fn add_term(&mut self, m: Monomial, c: RankPoly) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().add(&c);
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_kind(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        PsPolynomial {
            kind: self.kind,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &RankPoly) -> Self {
        if c.is_zero() {
            return PsPolynomial::zero(self.kind);
        }
        PsPolynomial {
            kind: self.kind,
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k.mul(c)))
                .collect(),
        }
    }

    pub fn scale_ratio(&self, num: i64, den: i64) -> Self {
        self.scale(&RankPoly::from_ratio(num, den))
    }

    /// Distributive exact product; errors when the operands belong to
    /// different group families.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_kind(other)?;
        let mut out = PsPolynomial::zero(self.kind);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1.mul(c2));
            }
        }
        Ok(out)
    }

    fn check_kind(&self, other: &Self) -> Result<()> {
        if self.kind != other.kind {
            return Err(Error::KindMismatch(self.kind, other.kind));
        }
        Ok(())
    }

    /// Swap plain and conjugated factors in every monomial. Coefficients are
    /// real rational polynomials in `n`, hence fixed; the map is an
    /// involution, and the identity on SO/USp where conjugate maps are empty.
    pub fn conjugate(&self) -> Self {
        PsPolynomial {
            kind: self.kind,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.conjugate(), c.clone()))
                .collect(),
        }
    }

    /// Evaluate at concrete rank and concrete traces `p(j) = Tr(M^j)`.
    pub fn eval_on_traces(&self, n: u32, p: &dyn Fn(u32) -> Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (m, c) in &self.terms {
            let mut v = Complex64::new(c.eval_f64(n), 0.0);
            for (&j, &e) in m.plain() {
                v *= p(j).powu(e);
            }
            for (&j, &e) in m.conjugated() {
                v *= p(j).conj().powu(e);
            }
            acc += v;
        }
        acc
    }
}

// ------------------------------------------------------------------
// Laplacians
// ------------------------------------------------------------------

/// `sum_{l=1}^{j-1} p_{l, j-l}` — all indices already positive.
fn sum_split(kind: GroupKind, j: u32) -> PsPolynomial {
    let mut out = PsPolynomial::zero(kind);
    for l in 1..j {
        let m = Monomial::p(l).mul(&Monomial::p(j - l));
        out.add_term(m, RankPoly::one());
    }
    out
}

/// `sum_{l=1}^{j-1} p_{2l-j}` with indices normalised per group
/// (`p_0 -> dim`, negatives folded). Equal to `sum_l p_{j-2l}`.
fn sum_fold(kind: GroupKind, j: u32) -> PsPolynomial {
    let mut out = PsPolynomial::zero(kind);
    for l in 1..j {
        let idx = 2 * i64::from(l) - i64::from(j);
        out = out
            .add(&PsPolynomial::power_sum(kind, idx))
            .expect("same kind");
    }
    out
}

fn laplacian_p(kind: GroupKind, j: u32) -> PsPolynomial {
    let jq = i64::from(j);
    let pj = PsPolynomial::power_sum(kind, jq);
    match kind {
        GroupKind::Unitary => {
            // -n j p_j - j sum p_{l,j-l}
            let lead = RankPoly::term(ratio(-jq, 1), 1);
            pj.scale(&lead)
                .add(&sum_split(kind, j).scale_ratio(-jq, 1))
                .expect("same kind")
        }
        GroupKind::SpecialOrthogonal => {
            // -((n-1)/2) j p_j - (j/2) sum p_{l,j-l} + (j/2) sum p_{2l-j}
            let lead = RankPoly::term(ratio(-jq, 2), 1).add(&RankPoly::from_ratio(jq, 2));
            pj.scale(&lead)
                .add(&sum_split(kind, j).scale_ratio(-jq, 2))
                .and_then(|acc| acc.add(&sum_fold(kind, j).scale_ratio(jq, 2)))
                .expect("same kind")
        }
        GroupKind::UnitarySymplectic => {
            // -((2n+1)/2) j p_j - (j/2) sum p_{l,j-l} - (j/2) sum p_{2l-j}
            let lead = RankPoly::term(ratio(-jq, 1), 1).add(&RankPoly::from_ratio(-jq, 2));
            pj.scale(&lead)
                .add(&sum_split(kind, j).scale_ratio(-jq, 2))
                .and_then(|acc| acc.add(&sum_fold(kind, j).scale_ratio(-jq, 2)))
                .expect("same kind")
        }
    }
}

fn laplacian_pp(kind: GroupKind, j: u32, k: u32) -> PsPolynomial {
    let (jq, kq) = (i64::from(j), i64::from(k));
    let pj = PsPolynomial::power_sum(kind, jq);
    let pk = PsPolynomial::power_sum(kind, kq);
    let pjk = pj.try_mul(&pk).expect("same kind");
    let split_j = pk
        .try_mul(&sum_split(kind, j))
        .expect("same kind");
    let split_k = pj
        .try_mul(&sum_split(kind, k))
        .expect("same kind");
    match kind {
        GroupKind::Unitary => {
            // -n(j+k) p_{j,k} - 2jk p_{j+k} - j p_k sum p_{l,j-l} - k p_j sum p_{l,k-l}
            let lead = RankPoly::term(ratio(-(jq + kq), 1), 1);
            pjk.scale(&lead)
                .add(&PsPolynomial::power_sum(kind, jq + kq).scale_ratio(-2 * jq * kq, 1))
                .and_then(|acc| acc.add(&split_j.scale_ratio(-jq, 1)))
                .and_then(|acc| acc.add(&split_k.scale_ratio(-kq, 1)))
                .expect("same kind")
        }
        GroupKind::SpecialOrthogonal | GroupKind::UnitarySymplectic => {
            let sp = kind == GroupKind::UnitarySymplectic;
            // SO: -((n-1)(j+k)/2) p_{j,k} - jk p_{j+k}
            //     - (j/2) p_k sum p_{l,j-l} - (k/2) p_j sum p_{l,k-l}
            //     + (j/2) p_k sum p_{j-2l} + (k/2) p_j sum p_{k-2l} + jk p_{j-k}
            // USp: same with (2n+1)/2 in the lead and minus on the fold sums.
            let lead = if sp {
                RankPoly::term(ratio(-(jq + kq), 1), 1)
                    .add(&RankPoly::from_ratio(-(jq + kq), 2))
            } else {
                RankPoly::term(ratio(-(jq + kq), 2), 1)
                    .add(&RankPoly::from_ratio(jq + kq, 2))
            };
            let fold_sign = if sp { -1 } else { 1 };
            let fold_j = pk
                .try_mul(&sum_fold(kind, j))
                .expect("same kind")
                .scale_ratio(fold_sign * jq, 2);
            let fold_k = pj
                .try_mul(&sum_fold(kind, k))
                .expect("same kind")
                .scale_ratio(fold_sign * kq, 2);
            pjk.scale(&lead)
                .add(&PsPolynomial::power_sum(kind, jq + kq).scale_ratio(-jq * kq, 1))
                .and_then(|acc| acc.add(&split_j.scale_ratio(-jq, 2)))
                .and_then(|acc| acc.add(&split_k.scale_ratio(-kq, 2)))
                .and_then(|acc| acc.add(&fold_j))
                .and_then(|acc| acc.add(&fold_k))
                .and_then(|acc| {
                    acc.add(&PsPolynomial::power_sum(kind, jq - kq).scale_ratio(jq * kq, 1))
                })
                .expect("same kind")
        }
    }
}

/// `Delta(p_j * conj(p_k))` on the unitary group.
fn laplacian_mixed_u(j: u32, k: u32) -> PsPolynomial {
    let kind = GroupKind::Unitary;
    let (jq, kq) = (i64::from(j), i64::from(k));
    let pj = PsPolynomial::power_sum(kind, jq);
    let pk_conj = PsPolynomial::power_sum(kind, -kq);
    let cross = pj.try_mul(&pk_conj).expect("same kind");
    let lead = RankPoly::term(ratio(-(jq + kq), 1), 1);
    PsPolynomial::power_sum(kind, jq - kq)
        .scale_ratio(2 * jq * kq, 1)
        .add(&cross.scale(&lead))
        .and_then(|acc| {
            acc.add(
                &pk_conj
                    .try_mul(&sum_split(kind, j))
                    .expect("same kind")
                    .scale_ratio(-jq, 1),
            )
        })
        .and_then(|acc| {
            acc.add(
                &pj.try_mul(&sum_split(kind, k).conjugate())
                    .expect("same kind")
                    .scale_ratio(-kq, 1),
            )
        })
        .expect("same kind")
}

/// Indices of a two-factor exponent map as an ordered pair.
fn two_indices(m: &BTreeMap<u32, u32>) -> (u32, u32) {
    let mut it = m.iter();
    match (it.next(), it.next()) {
        (Some((&j, &2)), None) => (j, j),
        (Some((&j, &1)), Some((&k, &1))) => (j, k),
        _ => unreachable!("caller checked trace degree 2"),
    }
}

impl PsPolynomial {
    /// Laplace–Beltrami image under the group's Laplacian, extended linearly
    /// over terms.
    ///
    /// Covers trace-degree <= 2 monomials — `1`, `p_j`, `p_{j,k}`,
    /// `p_j*conj(p_k)` and their conjugates — and errors on anything of
    /// higher degree, where no closed formula is wired in. Conjugated shapes
    /// go through `Delta . conj = conj . Delta`.
    pub fn laplacian(&self) -> Result<Self> {
        let mut out = PsPolynomial::zero(self.kind);
        for (m, c) in &self.terms {
            let image = self.laplacian_monomial(m)?;
            out = out.add(&image.scale(c))?;
        }
        Ok(out)
    }

    fn laplacian_monomial(&self, m: &Monomial) -> Result<Self> {
        let deg_a: u32 = m.plain().values().sum();
        let deg_b: u32 = m.conjugated().values().sum();
        match (deg_a, deg_b) {
            (0, 0) => Ok(PsPolynomial::zero(self.kind)),
            (1, 0) => {
                let (&j, _) = m.plain().iter().next().expect("degree 1");
                Ok(laplacian_p(self.kind, j))
            }
            (2, 0) => {
                let (j, k) = two_indices(m.plain());
                Ok(laplacian_pp(self.kind, j, k))
            }
            (1, 1) => {
                let (&j, _) = m.plain().iter().next().expect("degree 1");
                let (&k, _) = m.conjugated().iter().next().expect("degree 1");
                Ok(laplacian_mixed_u(j, k))
            }
            (0, 1) | (0, 2) => Ok(self
                .laplacian_monomial(&m.conjugate())?
                .conjugate()),
            _ => Err(Error::UnsupportedShape(
                m.to_string(),
                (deg_a + deg_b) as usize,
            )),
        }
    }
}

// ------------------------------------------------------------------
// Rendering
// ------------------------------------------------------------------

impl fmt::Display for PsPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut ordered: Vec<(&Monomial, &RankPoly)> = self.terms.iter().collect();
        ordered.sort_by_key(|(m, _)| m.render_rank());
        for (i, (m, c)) in ordered.iter().enumerate() {
            let (neg, mag) = c.render_factor();
            let body = if m.is_one() {
                mag
            } else if mag == "1" {
                m.to_string()
            } else {
                format!("{}*{}", mag, m)
            };
            if i == 0 {
                if neg {
                    write!(f, "-{}", body)?;
                } else {
                    write!(f, "{}", body)?;
                }
            } else if neg {
                write!(f, " - {}", body)?;
            } else {
                write!(f, " + {}", body)?;
            }
        }
        Ok(())
    }
}

// Operator sugar for same-kind arithmetic; panics on kind mismatch like
// dimension mismatches do in the matrix layer. Use `try_mul`/`add` for
// fallible paths.
impl std::ops::Add for &PsPolynomial {
    type Output = PsPolynomial;
    fn add(self, rhs: &PsPolynomial) -> PsPolynomial {
        PsPolynomial::add(self, rhs).expect("kind mismatch in +")
    }
}

impl std::ops::Sub for &PsPolynomial {
    type Output = PsPolynomial;
    fn sub(self, rhs: &PsPolynomial) -> PsPolynomial {
        PsPolynomial::sub(self, rhs).expect("kind mismatch in -")
    }
}

impl std::ops::Mul for &PsPolynomial {
    type Output = PsPolynomial;
    fn mul(self, rhs: &PsPolynomial) -> PsPolynomial {
        PsPolynomial::try_mul(self, rhs).expect("kind mismatch in *")
    }
}

impl PsPolynomial {
    /// `self - c` for a rational constant, a common centering step.
    pub fn sub_const(&self, c: BigRational) -> Self {
        let mut out = self.clone();
        out.add_term(Monomial::one(), RankPoly::constant(-c));
        out
    }

    /// `self + c`.
    pub fn add_const(&self, c: BigRational) -> Self {
        self.sub_const(-c)
    }

    /// Coefficient-one helper used all over the test suites.
    pub fn p(kind: GroupKind, j: u32) -> Self {
        PsPolynomial::power_sum(kind, i64::from(j))
    }

    /// `conj(p_j)` on U.
    pub fn p_conj(j: u32) -> Self {
        PsPolynomial::power_sum(GroupKind::Unitary, -i64::from(j))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    const U: GroupKind = GroupKind::Unitary;
    const SO: GroupKind = GroupKind::SpecialOrthogonal;
    const SP: GroupKind = GroupKind::UnitarySymplectic;

    #[test]
    fn index_normalisation() {
        // p_0 on SO is the constant n
        let p0 = PsPolynomial::power_sum(SO, 0);
        assert_eq!(p0.coefficient(&Monomial::one()), RankPoly::n());
        // p_{-3} on SO folds to p_3
        assert_eq!(
            PsPolynomial::power_sum(SO, -3),
            PsPolynomial::p(SO, 3)
        );
        // p_{-2} on U folds to conj(p_2)
        assert_eq!(PsPolynomial::power_sum(U, -2), PsPolynomial::p_conj(2));
        // p_0 on USp is 2n
        let p0 = PsPolynomial::power_sum(SP, 0);
        assert_eq!(
            p0.coefficient(&Monomial::one()),
            RankPoly::term(ratio(2, 1), 1)
        );
    }

    #[test]
    fn products() {
        let p1 = PsPolynomial::p(U, 1);
        let sq = &p1 * &p1;
        let m11 = Monomial::p(1).mul(&Monomial::p(1));
        assert_eq!(sq.coefficient(&m11), RankPoly::one());
        assert_eq!(sq.num_terms(), 1);

        // (p_2 - 1)^2 = p_2^2 - 2 p_2 + 1
        let f = PsPolynomial::p(SO, 2).sub_const(BigRational::one());
        let g = &f * &f;
        let m22 = Monomial::p(2).mul(&Monomial::p(2));
        assert_eq!(g.coefficient(&m22), RankPoly::one());
        assert_eq!(g.coefficient(&Monomial::p(2)), RankPoly::from_int(-2));
        assert_eq!(g.coefficient(&Monomial::one()), RankPoly::one());

        // p_1 * conj(p_1)
        let mixed = &PsPolynomial::p(U, 1) * &PsPolynomial::p_conj(1);
        let expect = Monomial::p(1).mul(&Monomial::p_conj(1));
        assert_eq!(mixed.coefficient(&expect), RankPoly::one());

        // mixing kinds errors
        assert!(PsPolynomial::p(U, 1)
            .try_mul(&PsPolynomial::p(SO, 1))
            .is_err());
    }

    #[test]
    fn conjugation_involution() {
        let f = &PsPolynomial::p(U, 1) * &PsPolynomial::p_conj(2);
        assert_eq!(f.conjugate().conjugate(), f);
        let g = &PsPolynomial::p_conj(1) * &PsPolynomial::p(U, 2);
        assert_eq!(f.conjugate(), g);
        assert_eq!(PsPolynomial::p_conj(2).conjugate(), PsPolynomial::p(U, 2));
    }

    #[test]
    fn laplacian_u_p2() {
        // -2n p_2 - 2 p_{1,1}
        let lap = PsPolynomial::p(U, 2).laplacian().unwrap();
        let m11 = Monomial::p(1).mul(&Monomial::p(1));
        assert_eq!(lap.coefficient(&Monomial::p(2)), RankPoly::term(ratio(-2, 1), 1));
        assert_eq!(lap.coefficient(&m11), RankPoly::from_int(-2));
        assert_eq!(lap.num_terms(), 2);
        assert_eq!(lap.to_string(), "-2*n*p[2] - 2*p[1,1]");
    }

    #[test]
    fn laplacian_so_p2() {
        // -(n-1) p_2 - p_{1,1} + n
        let lap = PsPolynomial::p(SO, 2).laplacian().unwrap();
        let m11 = Monomial::p(1).mul(&Monomial::p(1));
        let minus_nm1 = RankPoly::term(ratio(-1, 1), 1).add(&RankPoly::one());
        assert_eq!(lap.coefficient(&Monomial::p(2)), minus_nm1);
        assert_eq!(lap.coefficient(&m11), RankPoly::from_int(-1));
        assert_eq!(lap.coefficient(&Monomial::one()), RankPoly::n());
        assert_eq!(lap.to_string(), "-(n-1)*p[2] - p[1,1] + n");
    }

    #[test]
    fn laplacian_sp_p1() {
        // -((2n+1)/2) p_1, both sums empty
        let lap = PsPolynomial::p(SP, 1).laplacian().unwrap();
        let coeff = RankPoly::term(ratio(-1, 1), 1).add(&RankPoly::from_ratio(-1, 2));
        assert_eq!(lap.coefficient(&Monomial::p(1)), coeff);
        assert_eq!(lap.num_terms(), 1);
        assert_eq!(lap.to_string(), "-(1/2)*(2*n+1)*p[1]");
    }

    #[test]
    fn laplacian_u_mixed() {
        // Delta(p_1 conj(p_1)) = 2n - 2n p_1 conj(p_1)
        let f = &PsPolynomial::p(U, 1) * &PsPolynomial::p_conj(1);
        let lap = f.laplacian().unwrap();
        let mixed = Monomial::p(1).mul(&Monomial::p_conj(1));
        assert_eq!(lap.coefficient(&Monomial::one()), RankPoly::term(ratio(2, 1), 1));
        assert_eq!(lap.coefficient(&mixed), RankPoly::term(ratio(-2, 1), 1));
        assert_eq!(lap.num_terms(), 2);
    }

    #[test]
    fn laplacian_commutes_with_conjugation() {
        for f in [
            PsPolynomial::p(U, 3),
            &PsPolynomial::p(U, 2) * &PsPolynomial::p(U, 3),
            &PsPolynomial::p(U, 2) * &PsPolynomial::p_conj(4),
        ] {
            let a = f.laplacian().unwrap().conjugate();
            let b = f.conjugate().laplacian().unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn laplacian_rejects_high_degree() {
        let p1 = PsPolynomial::p(U, 1);
        let cube = &(&p1 * &p1) * &p1;
        let err = cube.laplacian().unwrap_err();
        assert!(matches!(err, Error::UnsupportedShape(_, 3)));
    }

    #[test]
    fn laplacian_of_constant_is_zero() {
        let c = PsPolynomial::constant(SO, RankPoly::from_int(5));
        assert!(c.laplacian().unwrap().is_zero());
        assert!(PsPolynomial::zero(U).laplacian().unwrap().is_zero());
    }

    #[test]
    fn eval_on_traces_matches_hand_value() {
        // p_2 - 1 at p_2 = 3 + 4i is 2 + 4i
        let f = PsPolynomial::p(U, 2).sub_const(BigRational::one());
        let v = f.eval_on_traces(7, &|j| {
            assert_eq!(j, 2);
            Complex64::new(3.0, 4.0)
        });
        assert!((v - Complex64::new(2.0, 4.0)).norm() < 1e-15);
        // coefficient n evaluates at the rank
        let g = PsPolynomial::power_sum(SO, 0);
        let v = g.eval_on_traces(9, &|_| Complex64::zero());
        assert!((v.re - 9.0).abs() < 1e-15);
    }
}
