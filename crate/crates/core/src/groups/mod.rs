//! Concrete matrix models: Haar sampling, Lie-algebra bases, Brownian
//! motion by the exponential map, and trace-vector statistics.

mod brownian;
mod lie;
mod sampling;
mod traces;

pub use brownian::brownian_step;
pub use lie::{lie_basis, LieBasis};
pub use sampling::haar_sample;
pub use traces::{trace_vector, TraceVector};

use crate::GroupKind;
use nalgebra::DMatrix;
use num_complex::Complex64;

/// Deviation threshold for the defining group constraints.
pub const GROUP_TOL: f64 = 1e-10;

/// A concrete matrix tagged with its group family and rank.
///
/// Matrices are stored complex for all families; SO elements are real up to
/// floating-point dirt and their diagnostics use the transpose.
#[derive(Clone, Debug)]
pub struct GroupElement {
    kind: GroupKind,
    n: usize,
    matrix: DMatrix<Complex64>,
}

impl GroupElement {
    pub(crate) fn new(kind: GroupKind, n: usize, matrix: DMatrix<Complex64>) -> Self {
        debug_assert_eq!(matrix.nrows(), kind.dimension(n));
        debug_assert_eq!(matrix.ncols(), kind.dimension(n));
        GroupElement { kind, n, matrix }
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    /// Rank symbol value (matrix dimension is `dimension(kind, n)`).
    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.kind.dimension(self.n)
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.matrix
    }

    /// Left translation by another element of the same group.
    pub fn left_multiply(&self, u: &GroupElement) -> GroupElement {
        assert_eq!(self.kind, u.kind);
        assert_eq!(self.n, u.n);
        GroupElement::new(self.kind, self.n, &u.matrix * &self.matrix)
    }

    /// Max-norm deviations from the defining constraints.
    pub fn diagnostics(&self) -> DiagnosticsReport {
        group_diagnostics(self.kind, self.n, &self.matrix)
    }
}

/// Deviations of a candidate matrix from the group constraints, each
/// compared against [`GROUP_TOL`].
#[derive(Clone, Copy, Debug)]
pub struct DiagnosticsReport {
    /// `max |(M*M - I)_{jk}|` with `*` the adjoint (transpose on SO).
    pub unitarity_dev: f64,
    /// `|det(M) - 1|`, SO only.
    pub determinant_dev: Option<f64>,
    /// `max |(M^T J M - J)_{jk}|`, USp only.
    pub symplectic_dev: Option<f64>,
}

impl DiagnosticsReport {
    pub fn pass(&self) -> bool {
        self.unitarity_dev <= GROUP_TOL
            && self.determinant_dev.map_or(true, |d| d <= GROUP_TOL)
            && self.symplectic_dev.map_or(true, |d| d <= GROUP_TOL)
    }
}

fn max_abs(m: &DMatrix<Complex64>) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// The standard skew form `[[0, I_n], [-I_n, 0]]` on C^{2n}.
pub fn symplectic_form(n: usize) -> DMatrix<Complex64> {
    let mut j = DMatrix::zeros(2 * n, 2 * n);
    for k in 0..n {
        j[(k, n + k)] = Complex64::new(1.0, 0.0);
        j[(n + k, k)] = Complex64::new(-1.0, 0.0);
    }
    j
}

/// Constraint deviations for an arbitrary square matrix interpreted as a
/// candidate element of the given group.
pub fn group_diagnostics(
    kind: GroupKind,
    n: usize,
    m: &DMatrix<Complex64>,
) -> DiagnosticsReport {
    let dim = m.nrows();
    let eye = DMatrix::<Complex64>::identity(dim, dim);
    let gram = match kind {
        GroupKind::SpecialOrthogonal => m.transpose() * m,
        _ => m.adjoint() * m,
    };
    let unitarity_dev = max_abs(&(gram - &eye));
    let determinant_dev = match kind {
        GroupKind::SpecialOrthogonal => {
            Some((m.determinant() - Complex64::new(1.0, 0.0)).norm())
        }
        _ => None,
    };
    let symplectic_dev = match kind {
        GroupKind::UnitarySymplectic => {
            let j = symplectic_form(n);
            Some(max_abs(&(m.transpose() * &j * m - &j)))
        }
        _ => None,
    };
    DiagnosticsReport {
        unitarity_dev,
        determinant_dev,
        symplectic_dev,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn diagnostics_flag_perturbations() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for kind in [
            GroupKind::Unitary,
            GroupKind::SpecialOrthogonal,
            GroupKind::UnitarySymplectic,
        ] {
            let g = haar_sample(kind, 5, &mut rng).unwrap();
            assert!(g.diagnostics().pass(), "{kind} sample fails diagnostics");

            let mut bad = g.matrix().clone();
            bad[(0, 1)] += Complex64::new(1e-3, 0.0);
            let report = group_diagnostics(kind, 5, &bad);
            assert!(!report.pass(), "{kind} perturbation not flagged");
            assert!(report.unitarity_dev > 1e-4);
        }
    }

    #[test]
    fn so_determinant_is_one() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let g = haar_sample(GroupKind::SpecialOrthogonal, 6, &mut rng).unwrap();
            let d = g.diagnostics();
            assert!(d.determinant_dev.unwrap() <= GROUP_TOL);
        }
    }
}
