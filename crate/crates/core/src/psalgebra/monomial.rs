//! Normalised power-sum monomials.

use std::collections::BTreeMap;
use std::fmt;

/// A product `prod_j p_j^{a_j} * prod_j conj(p_j)^{b_j}` in normal form.
///
/// Normal form keeps only strictly positive indices with strictly positive
/// exponents; index 0 and negative indices are folded away by the
/// group-dependent normalisation before a monomial is ever stored. The maps
/// are ordered, so equal monomials compare equal structurally and the type
/// can key a `BTreeMap`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    /// Plain factors: index -> exponent.
    a: BTreeMap<u32, u32>,
    /// Conjugated factors: index -> exponent. Empty on SO/USp.
    b: BTreeMap<u32, u32>,
}

impl Monomial {
    /// The empty product.
    pub fn one() -> Self {
        Monomial::default()
    }

    /// Single plain factor `p_j`. Index must be positive.
    pub fn p(j: u32) -> Self {
        assert!(j > 0, "normalise index 0 / negatives before storing");
        let mut a = BTreeMap::new();
        a.insert(j, 1);
        Monomial { a, b: BTreeMap::new() }
    }

    /// Single conjugated factor `conj(p_j)`.
    pub fn p_conj(j: u32) -> Self {
        Monomial::p(j).conjugate()
    }

    /// Build from explicit exponent maps, dropping zero exponents.
    pub fn from_maps(a: BTreeMap<u32, u32>, b: BTreeMap<u32, u32>) -> Self {
        let clean = |m: BTreeMap<u32, u32>| {
            m.into_iter()
                .filter(|&(j, e)| {
                    assert!(j > 0, "monomial index must be positive");
                    e > 0
                })
                .collect()
        };
        Monomial { a: clean(a), b: clean(b) }
    }

    pub fn is_one(&self) -> bool {
        self.a.is_empty() && self.b.is_empty()
    }

    pub fn plain(&self) -> &BTreeMap<u32, u32> {
        &self.a
    }

    pub fn conjugated(&self) -> &BTreeMap<u32, u32> {
        &self.b
    }

    pub fn has_conjugated(&self) -> bool {
        !self.b.is_empty()
    }

    /// Number of trace factors counted with multiplicity.
    pub fn trace_degree(&self) -> usize {
        (self.a.values().sum::<u32>() + self.b.values().sum::<u32>()) as usize
    }

    /// Total weight `k_a + k_b`.
    pub fn weight(&self) -> u32 {
        self.weight_plain() + self.weight_conjugated()
    }

    /// `k_a = sum_j j * a_j`.
    pub fn weight_plain(&self) -> u32 {
        self.a.iter().map(|(&j, &e)| j * e).sum()
    }

    /// `k_b = sum_j j * b_j`.
    pub fn weight_conjugated(&self) -> u32 {
        self.b.iter().map(|(&j, &e)| j * e).sum()
    }

    /// Swap plain and conjugated factors.
    pub fn conjugate(&self) -> Self {
        Monomial {
            a: self.b.clone(),
            b: self.a.clone(),
        }
    }

    /// Exponent-wise product.
    pub fn mul(&self, other: &Self) -> Self {
        let mut a = self.a.clone();
        for (&j, &e) in &other.a {
            *a.entry(j).or_insert(0) += e;
        }
        let mut b = self.b.clone();
        for (&j, &e) in &other.b {
            *b.entry(j).or_insert(0) += e;
        }
        Monomial { a, b }
    }

    /// Key used to order terms in rendered polynomials: monomials by trace
    /// degree, the constant term last.
    pub fn render_rank(&self) -> (usize, Monomial) {
        let deg = if self.is_one() {
            usize::MAX
        } else {
            self.trace_degree()
        };
        (deg, self.clone())
    }
}

fn fmt_exponents(f: &mut fmt::Formatter<'_>, m: &BTreeMap<u32, u32>) -> fmt::Result {
    let indices: Vec<String> = m
        .iter()
        .flat_map(|(&j, &e)| std::iter::repeat(j.to_string()).take(e as usize))
        .collect();
    write!(f, "p[{}]", indices.join(","))
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        if !self.a.is_empty() {
            fmt_exponents(f, &self.a)?;
            if !self.b.is_empty() {
                write!(f, "*")?;
            }
        }
        if !self.b.is_empty() {
            write!(f, "~")?;
            fmt_exponents(f, &self.b)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_and_weights() {
        let m = Monomial::p(2).mul(&Monomial::p(1)).mul(&Monomial::p_conj(3));
        assert_eq!(m.weight_plain(), 3);
        assert_eq!(m.weight_conjugated(), 3);
        assert_eq!(m.trace_degree(), 3);
        assert_eq!(m.to_string(), "p[1,2]*~p[3]");
        assert_eq!(m.conjugate().conjugate(), m);
    }

    #[test]
    fn display_repeated_factors() {
        let m = Monomial::p(1).mul(&Monomial::p(1));
        assert_eq!(m.to_string(), "p[1,1]");
        assert_eq!(Monomial::one().to_string(), "1");
    }
}
