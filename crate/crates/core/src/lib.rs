//! Exact and numerical machinery for traces of powers of Haar-distributed
//! matrices on the classical compact groups.
//!
//! The crate is organised around one exact engine and three numerical layers:
//!
//! - [`psalgebra`]: power-sum functionals on U(n), SO(n), USp(2n) with exact
//!   rational-polynomial coefficients in the rank symbol `n`, the group
//!   Laplacians on low trace-degree monomials, and exact Haar expectations.
//! - [`groups`]: concrete matrix models — Haar sampling, orthonormal Lie
//!   algebra bases, one-step geodesic Brownian motion, trace statistics.
//! - [`stein`]: exchangeable-pair regression data (Λ, Σ, R, S, T), exact
//!   second moments, and the assembled Wasserstein bounds and rates.
//! - [`transport`]: realification of complex data, Gaussian reference clouds,
//!   and exact/1-D/sliced Wasserstein-1 estimators.
//! - [`experiments`]: reproducible Monte Carlo studies tying the layers
//!   together, with 5-standard-error gates.
//! - [`cli`]: the textual polynomial grammar and subcommand drivers behind
//!   the `haar-traces` binary.

pub mod cli;
pub mod experiments;
pub mod groups;
pub mod psalgebra;
pub mod stein;
pub mod transport;

use serde::{Deserialize, Serialize};

/// One of the classical compact matrix groups.
///
/// The rank symbol `n` parametrises each family; the matrix dimension is `n`
/// for the unitary and special orthogonal families and `2n` for the unitary
/// symplectic family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GroupKind {
    /// U(n), complex unitary matrices.
    #[serde(rename = "u")]
    Unitary,
    /// SO(n), real special orthogonal matrices.
    #[serde(rename = "so")]
    SpecialOrthogonal,
    /// USp(2n), unitary symplectic matrices of size 2n.
    #[serde(rename = "sp")]
    UnitarySymplectic,
}

impl GroupKind {
    /// Matrix dimension at rank `n`.
    pub fn dimension(self, n: usize) -> usize {
        match self {
            GroupKind::Unitary | GroupKind::SpecialOrthogonal => n,
            GroupKind::UnitarySymplectic => 2 * n,
        }
    }

    /// Whether power-sum monomials on this group may carry conjugated factors.
    ///
    /// SO and USp traces are real, so conjugation is trivial there and the
    /// monomial normal form keeps the conjugate exponent map empty.
    pub fn supports_conjugation(self) -> bool {
        matches!(self, GroupKind::Unitary)
    }

    /// Short lowercase label used in reports and file formats.
    pub fn label(self) -> &'static str {
        match self {
            GroupKind::Unitary => "u",
            GroupKind::SpecialOrthogonal => "so",
            GroupKind::UnitarySymplectic => "sp",
        }
    }

    /// Parse the report label back into a kind.
    pub fn from_label(s: &str) -> Option<Self> {
        match s {
            "u" | "U" => Some(GroupKind::Unitary),
            "so" | "SO" => Some(GroupKind::SpecialOrthogonal),
            "sp" | "SP" | "usp" => Some(GroupKind::UnitarySymplectic),
            _ => None,
        }
    }
}

impl std::fmt::Display for GroupKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

/// Error type shared by the exact and numerical layers.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("operands belong to different groups: {0} vs {1}")]
    KindMismatch(GroupKind, GroupKind),

    #[error("conjugated power-sum factors are not defined on {0}")]
    ConjugateUnsupported(GroupKind),

    #[error(
        "Laplacian formulas cover trace-degree <= 2 only; monomial {0} has trace-degree {1}"
    )]
    UnsupportedShape(String, usize),

    #[error("expectation at n = {n} below validity threshold n >= {threshold} (use force to evaluate anyway)")]
    BelowThreshold { n: u32, threshold: u32 },

    #[error("rank must satisfy n >= 1")]
    ZeroRank,

    #[error("window requires 1 <= r <= d, got d = {d}, r = {r}")]
    BadWindow { d: u32, r: u32 },

    #[error("theorem threshold requires n >= {threshold} for {kind} at d = {d} (got n = {n}; use force to evaluate anyway)")]
    BelowTheoremThreshold {
        kind: GroupKind,
        d: u32,
        n: u32,
        threshold: u32,
    },

    #[error("clouds must have matching dimension: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("clouds must have matching size: {0} vs {1}")]
    SizeMismatch(usize, usize),

    #[error("exact assignment capped at {cap} points, got {got}")]
    AssignmentCap { cap: usize, got: usize },

    #[error("estimator requires dimension 1, got {0}")]
    NotOneDimensional(usize),

    #[error("time step must be positive and finite, got {0}")]
    BadTimeStep(f64),

    #[error("invalid study configuration: {0}")]
    BadConfig(String),

    #[error("parse error in polynomial expression: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
