//! Exact polynomials in the rank symbol `n` with rational coefficients.
//!
//! Laplacian coefficients such as `-n*j`, `(n-1)/2`, `(2n+1)/2` and the
//! `p_0`-normalisation constants are polynomials in the rank, so coefficient
//! arithmetic has to stay exact for the stationarity and regression
//! identities to hold as identities rather than up to rounding.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;

/// Convenience constructor for a rational from an integer pair.
pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// A polynomial in the rank symbol `n` over the rationals.
///
/// Stored dense by degree; the coefficient vector never has a trailing zero,
/// so the zero polynomial is the empty vector and equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct RankPoly {
    coeffs: Vec<BigRational>,
}

impl RankPoly {
    pub fn zero() -> Self {
        RankPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        RankPoly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        let mut p = RankPoly { coeffs: vec![c] };
        p.trim();
        p
    }

    pub fn from_int(c: i64) -> Self {
        RankPoly::constant(BigRational::from(BigInt::from(c)))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        RankPoly::constant(ratio(num, den))
    }

    /// The monomial `c * n^k`.
    pub fn term(c: BigRational, k: usize) -> Self {
        if c.is_zero() {
            return RankPoly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); k + 1];
        coeffs[k] = c;
        RankPoly { coeffs }
    }

    /// The symbol `n` itself.
    pub fn n() -> Self {
        RankPoly::term(BigRational::one(), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    fn trim(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(len);
        for k in 0..len {
            coeffs.push(self.coeff(k) + other.coeff(k));
        }
        let mut p = RankPoly { coeffs };
        p.trim();
        p
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        RankPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return RankPoly::zero();
        }
        let mut coeffs =
            vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        let mut p = RankPoly { coeffs };
        p.trim();
        p
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return RankPoly::zero();
        }
        RankPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Exact evaluation at integer rank.
    pub fn eval_int(&self, n: i64) -> BigRational {
        let n = BigRational::from(BigInt::from(n));
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * &n + c;
        }
        acc
    }

    /// Floating-point evaluation at integer rank.
    pub fn eval_f64(&self, n: u32) -> f64 {
        self.eval_int(i64::from(n))
            .to_f64()
            .expect("rational fits in f64")
    }

    /// If the polynomial is constant, return the constant.
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.coeffs.len() {
            0 => Some(BigRational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }
}

fn fmt_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Render a rational in coefficient position: integers bare, fractions
/// parenthesised, so `-1/2` prints as `-(1/2)`.
fn fmt_coeff_magnitude(q: &BigRational) -> String {
    let a = q.abs();
    if a.is_integer() {
        a.numer().to_string()
    } else {
        format!("({}/{})", a.numer(), a.denom())
    }
}

impl RankPoly {
    /// Render for the term `self * <monomial>`, degree-1 polynomials in the
    /// factored form `c*(u*n - v)` the group Laplacians naturally produce.
    ///
    /// Returns the signed magnitude string without a leading `+`; the caller
    /// decides how to join terms. `Some("")` magnitude means coefficient one.
    pub fn render_factor(&self) -> (bool, String) {
        if self.is_zero() {
            return (false, "0".to_string());
        }
        if let Some(c) = self.as_constant() {
            let neg = c.is_negative();
            return (neg, fmt_coeff_magnitude(&c));
        }
        if self.degree() == Some(1) {
            // a1*n + a0 = c*(u*n + v) with coprime integers u > 0, v.
            let a1 = self.coeff(1);
            let a0 = self.coeff(0);
            let den_lcm = a1.denom().lcm(a0.denom());
            let i1 = (&a1 * BigRational::from(den_lcm.clone()))
                .to_integer();
            let i0 = (&a0 * BigRational::from(den_lcm.clone()))
                .to_integer();
            let g = i1.gcd(&i0);
            let neg = i1.is_negative();
            let u = (&i1 / &g).abs();
            let v = if neg { -(&i0 / &g) } else { (&i0 / &g).clone() };
            let c = BigRational::new(g, den_lcm);
            let inner = if v.is_zero() {
                if u.is_one() {
                    "n".to_string()
                } else {
                    format!("{}*n", u)
                }
            } else {
                let un = if u.is_one() {
                    "n".to_string()
                } else {
                    format!("{}*n", u)
                };
                if v.is_negative() {
                    format!("({}-{})", un, -v)
                } else {
                    format!("({}+{})", un, v)
                }
            };
            let mag = if c.is_one() {
                inner
            } else {
                format!("{}*{}", fmt_coeff_magnitude(&c), inner)
            };
            return (neg, mag);
        }
        // Higher degree: expanded parenthesised form.
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let base = match k {
                0 => fmt_rational(c),
                1 => format!("{}*n", fmt_rational(c)),
                _ => format!("{}*n^{}", fmt_rational(c), k),
            };
            parts.push(base);
        }
        let joined = parts
            .iter()
            .enumerate()
            .map(|(i, s)| {
                if i == 0 {
                    s.clone()
                } else if let Some(stripped) = s.strip_prefix('-') {
                    format!(" - {}", stripped)
                } else {
                    format!(" + {}", s)
                }
            })
            .collect::<String>();
        (false, format!("({})", joined))
    }
}

impl fmt::Display for RankPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (neg, mag) = self.render_factor();
        if neg {
            write!(f, "-{}", mag)
        } else {
            write!(f, "{}", mag)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_is_exact() {
        let n = RankPoly::n();
        let p = n.sub(&RankPoly::one()); // n - 1
        let q = p.mul(&p); // n^2 - 2n + 1
        assert_eq!(q.coeff(0), ratio(1, 1));
        assert_eq!(q.coeff(1), ratio(-2, 1));
        assert_eq!(q.coeff(2), ratio(1, 1));
        assert_eq!(q.eval_int(5), ratio(16, 1));
        assert!(p.sub(&p).is_zero());
    }

    #[test]
    fn factored_rendering() {
        // -2n
        let p = RankPoly::term(ratio(-2, 1), 1);
        assert_eq!(p.to_string(), "-2*n");
        // -(1/2)(n - 1)
        let q = RankPoly::term(ratio(-1, 2), 1).add(&RankPoly::from_ratio(1, 2));
        assert_eq!(q.to_string(), "-(1/2)*(n-1)");
        // -(1/2)(2n + 1)
        let r = RankPoly::term(ratio(-1, 1), 1).add(&RankPoly::from_ratio(-1, 2));
        assert_eq!(r.to_string(), "-(1/2)*(2*n+1)");
        // -(n-1)
        let s = RankPoly::term(ratio(-1, 1), 1).add(&RankPoly::one());
        assert_eq!(s.to_string(), "-(n-1)");
        // plain n and constants
        assert_eq!(RankPoly::n().to_string(), "n");
        assert_eq!(RankPoly::from_int(7).to_string(), "7");
        assert_eq!(RankPoly::from_ratio(-1, 2).to_string(), "-(1/2)");
    }
}
