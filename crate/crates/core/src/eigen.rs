//! Dense nonsymmetric eigendecomposition with biorthogonally normalized
//! left/right eigenvector pairs, plus scalar spectral diagnostics.
//!
//! Left eigenvectors are taken from the conjugated inverse of the right
//! eigenvector matrix, so y_k^* z_k = 1 holds by construction.

use faer::Mat;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::{ComplexMatrix, RealMatrix};

/// Relative residual allowed in ‖A z_k − λ_k z_k‖ before the decomposition
/// is rejected.
const RESIDUAL_TOL: f64 = 1e-8;

/// Allowed departure of y_k^* z_k from one.
const BIORTHOGONALITY_TOL: f64 = 1e-10;

/// Full spectrum of a real square matrix with simple eigenvalues.
///
/// Eigenvalues are ordered by descending real part, ties broken by
/// descending imaginary part, so indexing is deterministic.
#[derive(Clone, Debug)]
pub struct EigenSystem {
    values: Vec<Complex64>,
    right: ComplexMatrix,
    left: ComplexMatrix,
    separation: f64,
}

impl EigenSystem {
    pub fn order(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn value(&self, k: usize) -> Complex64 {
        self.values[k]
    }

    /// Real parts λ_k^r in eigenvalue order.
    pub fn real_parts(&self) -> Vec<f64> {
        self.values.iter().map(|v| v.re).collect()
    }

    /// Right eigenvector z_k.
    pub fn right_vector(&self, k: usize) -> Vec<Complex64> {
        self.right.column(k)
    }

    /// Left eigenvector y_k, normalized so y_k^* z_k = 1.
    pub fn left_vector(&self, k: usize) -> Vec<Complex64> {
        self.left.column(k)
    }

    /// Minimum pairwise eigenvalue distance.
    pub fn separation(&self) -> f64 {
        self.separation
    }

    /// Eigenvalue condition number ‖y_k‖·‖z_k‖; large values flag
    /// near-defective eigenvalues.
    pub fn condition(&self, k: usize) -> f64 {
        let norm = |v: &[Complex64]| v.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
        norm(&self.left_vector(k)) * norm(&self.right_vector(k))
    }

    /// Assemble an eigensystem from explicit parts. Used by tests that
    /// need rescaled eigenvector pairs; performs no validation.
    #[cfg(test)]
    pub(crate) fn from_parts(
        values: Vec<Complex64>,
        right: ComplexMatrix,
        left: ComplexMatrix,
        separation: f64,
    ) -> Self {
        Self {
            values,
            right,
            left,
            separation,
        }
    }
}

/// Default threshold under which two eigenvalues are treated as repeated.
pub fn default_simplicity_tol(a: &RealMatrix) -> f64 {
    1e-8 * a.frobenius_norm().max(1.0)
}

fn to_faer(a: &RealMatrix) -> Mat<f64> {
    Mat::from_fn(a.rows(), a.cols(), |i, j| a.get(i, j))
}

fn require_square(a: &RealMatrix, what: &str) -> Result<()> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "{what} requires a square matrix, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    Ok(())
}

/// Maximum real part over the eigenvalues of a square matrix.
pub fn spectral_abscissa(a: &RealMatrix) -> Result<f64> {
    require_square(a, "spectral abscissa")?;
    let vals = to_faer(a)
        .eigenvalues::<Complex64>()
        .map_err(|e| Error::EigSolver(format!("{e:?}")))?;
    Ok(vals
        .iter()
        .map(|v| v.re)
        .fold(f64::NEG_INFINITY, f64::max))
}

/// Frobenius norm of the commutator A^T A − A A^T; zero iff A is normal.
pub fn normality_gap(a: &RealMatrix) -> Result<f64> {
    require_square(a, "normality gap")?;
    let at = a.transpose();
    let gap = at.matmul(a)?.sub(&a.matmul(&at)?)?;
    Ok(gap.frobenius_norm())
}

/// Full eigendecomposition with biorthogonal left/right pairs.
///
/// Fails with `RepeatedEigenvalue` when the minimum eigenvalue gap is at or
/// below `simplicity_tol`, and with `DefectiveMatrix` when the right
/// eigenvector matrix is numerically singular.
pub fn eigensystem(a: &RealMatrix, simplicity_tol: f64) -> Result<EigenSystem> {
    require_square(a, "eigendecomposition")?;
    if !(simplicity_tol > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "simplicity tolerance must be positive, got {simplicity_tol}"
        )));
    }
    let n = a.rows();
    let evd = to_faer(a)
        .eigen()
        .map_err(|e| Error::EigSolver(format!("{e:?}")))?;
    let s = evd.S();
    let u = evd.U();

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        let (a, b) = (s[i], s[j]);
        b.re.partial_cmp(&a.re)
            .unwrap()
            .then(b.im.partial_cmp(&a.im).unwrap())
    });
    let values: Vec<Complex64> = order.iter().map(|&i| s[i]).collect();
    let right = ComplexMatrix::from_fn(n, n, |i, j| u[(i, order[j])]);

    let mut separation = f64::INFINITY;
    for i in 0..n {
        for j in i + 1..n {
            separation = separation.min((values[i] - values[j]).norm());
        }
    }
    if separation <= simplicity_tol {
        return Err(Error::RepeatedEigenvalue {
            gap: separation,
            tol: simplicity_tol,
        });
    }

    // y_k^* is row k of Z^{-1}, hence Y^* Z = I exactly up to roundoff.
    let left = right.inverse()?.conj_transpose();

    let sys = EigenSystem {
        values,
        right,
        left,
        separation,
    };
    check_decomposition(a, &sys)?;
    Ok(sys)
}

fn check_decomposition(a: &RealMatrix, sys: &EigenSystem) -> Result<()> {
    let n = sys.order();
    let scale = a.frobenius_norm().max(f64::MIN_POSITIVE);
    for k in 0..n {
        let z = sys.right_vector(k);
        let lambda = sys.value(k);
        let mut resid = 0.0_f64;
        for i in 0..n {
            let mut az = Complex64::new(0.0, 0.0);
            for j in 0..n {
                az += a.get(i, j) * z[j];
            }
            resid += (az - lambda * z[i]).norm_sqr();
        }
        if resid.sqrt() > RESIDUAL_TOL * scale {
            return Err(Error::EigSolver(format!(
                "residual {:.3e} for eigenvalue {k} exceeds {:.3e}",
                resid.sqrt(),
                RESIDUAL_TOL * scale
            )));
        }
        let y = sys.left_vector(k);
        let dot: Complex64 = y
            .iter()
            .zip(&z)
            .map(|(yi, zi)| yi.conj() * zi)
            .sum();
        if (dot - Complex64::new(1.0, 0.0)).norm() > BIORTHOGONALITY_TOL {
            return Err(Error::EigSolver(format!(
                "biorthogonality defect {:.3e} for eigenvalue {k}",
                (dot - Complex64::new(1.0, 0.0)).norm()
            )));
        }
    }
    Ok(())
}
