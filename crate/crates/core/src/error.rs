//! Error types shared across the crate.

use thiserror::Error;

/// Errors produced by matrix construction, analysis and design routines.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("non-finite entry at ({row}, {col}) in {context}")]
    NonFinite {
        row: usize,
        col: usize,
        context: &'static str,
    },

    #[error("mask entry at ({row}, {col}) is {value}; entries must be 0 or 1")]
    NonBinaryMask { row: usize, col: usize, value: f64 },

    #[error("nominal matrix is not stable: spectral abscissa = {alpha}")]
    UnstableNominal { alpha: f64 },

    #[error("eigenvalues are not simple: minimum gap {gap} <= tolerance {tol}")]
    RepeatedEigenvalue { gap: f64, tol: f64 },

    #[error("eigenvector matrix is numerically singular; matrix is defective or near-defective")]
    DefectiveMatrix,

    #[error("eigensolver failed: {0}")]
    EigSolver(String),

    #[error("eigenvalue {k} cannot be shifted under the sparsity mask")]
    InfeasibleIndex { k: usize },

    #[error("no eigenvalue can be shifted under the sparsity mask")]
    EmptyFeasibleSet,

    #[error("the nominal problem is infeasible: no eigenvalue can be shifted")]
    InfeasibleAtNominal,

    #[error("iteration did not terminate within {iterations} iterations")]
    NonTermination { iterations: usize },

    #[error("feasibility repair failed after {attempts} attempts")]
    RepairFailed { attempts: usize },

    #[error("mask has {count} free entries; the grid oracle supports at most {max}")]
    TooManyFreeEntries { count: usize, max: usize },

    #[error("no destabilizing perturbation found below norm {gamma_hi}")]
    NoUpperBound { gamma_hi: f64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Validation(#[from] ValidationErrors),
}

/// All invariant violations found while validating a problem instance.
#[derive(Debug, Error)]
pub struct ValidationErrors(pub Vec<Error>);

impl std::fmt::Display for ValidationErrors {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} validation error(s):", self.0.len())?;
        for e in &self.0 {
            write!(f, "\n  - {e}")?;
        }
        Ok(())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
