//! Dense real and complex matrix primitives: construction with finiteness
//! checks, Frobenius/Hadamard algebra, and binary sparsity masks.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Dense real matrix with row-major storage. Entries are finite by
/// construction.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(into = "Vec<Vec<f64>>", try_from = "Vec<Vec<f64>>")]
pub struct RealMatrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl RealMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<f64>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::DimensionMismatch(format!(
                "matrix dimensions must be at least 1x1, got {rows}x{cols}"
            )));
        }
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "expected {rows}x{cols} = {} entries, got {}",
                rows * cols,
                data.len()
            )));
        }
        for (idx, &v) in data.iter().enumerate() {
            if !v.is_finite() {
                return Err(Error::NonFinite {
                    row: idx / cols,
                    col: idx % cols,
                    context: "real matrix",
                });
            }
        }
        Ok(Self { rows, cols, data })
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::DimensionMismatch(
                "matrix must have at least one row".into(),
            ));
        }
        let cols = rows[0].len();
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row {i} has {} entries, expected {cols}",
                    r.len()
                )));
            }
        }
        Self::new(rows.len(), cols, rows.concat())
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1.0;
        }
        m
    }

    /// Matrix with every entry equal to one.
    pub fn ones(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![1.0; rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[f64] {
        &self.data
    }

    pub fn to_nested(&self) -> Vec<Vec<f64>> {
        (0..self.rows)
            .map(|i| self.data[i * self.cols..(i + 1) * self.cols].to_vec())
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j * self.rows + i] = self.data[i * self.cols + j];
            }
        }
        out
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a == 0.0 {
                    continue;
                }
                for j in 0..other.cols {
                    out.data[i * other.cols + j] += a * other.data[k * other.cols + j];
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a - b)
    }

    /// Elementwise (Hadamard) product of equally shaped matrices.
    pub fn hadamard(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a * b)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(f64, f64) -> f64) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "shape {}x{} does not match {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| f(a, b))
            .collect();
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn scale(&self, s: f64) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&v| v * s).collect(),
        }
    }

    /// Frobenius norm, sqrt(Tr(M^T M)).
    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|&v| v * v).sum::<f64>().sqrt()
    }

    /// Sum of all entries; equals 1^T M 1.
    pub fn entry_sum(&self) -> f64 {
        self.data.iter().sum()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, &v| m.max(v.abs()))
    }

    pub fn to_complex(&self) -> ComplexMatrix {
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&v| Complex64::new(v, 0.0)).collect(),
        }
    }
}

impl From<RealMatrix> for Vec<Vec<f64>> {
    fn from(m: RealMatrix) -> Self {
        m.to_nested()
    }
}

impl TryFrom<Vec<Vec<f64>>> for RealMatrix {
    type Error = Error;

    fn try_from(rows: Vec<Vec<f64>>) -> Result<Self> {
        Self::from_rows(&rows)
    }
}

/// Dense complex matrix with row-major storage. Used internally for
/// eigenvectors and sensitivity matrices; not serialized.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Complex64::new(0.0, 0.0); rows * cols],
        }
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Complex64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    /// Rank-one outer product u v^T of a column vector and a row vector.
    pub fn outer(u: &[Complex64], v: &[Complex64]) -> Self {
        Self::from_fn(u.len(), v.len(), |i, j| u[i] * v[j])
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Complex64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn column(&self, j: usize) -> Vec<Complex64> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn conj_transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).conj())
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Entrywise real parts.
    pub fn real_part(&self) -> RealMatrix {
        RealMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v.re).collect(),
        }
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let zero = Complex64::new(0.0, 0.0);
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a == zero {
                    continue;
                }
                for j in 0..other.cols {
                    out.data[i * other.cols + j] += a * other.data[k * other.cols + j];
                }
            }
        }
        Ok(out)
    }

    /// Inverse by Gaussian elimination with partial pivoting.
    pub fn inverse(&self) -> Result<Self> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "cannot invert {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::from_fn(n, n, |i, j| {
            Complex64::new(if i == j { 1.0 } else { 0.0 }, 0.0)
        });
        let scale = self.data.iter().fold(0.0_f64, |m, v| m.max(v.norm()));
        for col in 0..n {
            let mut pivot = col;
            let mut pmax = a.get(col, col).norm();
            for r in col + 1..n {
                let v = a.get(r, col).norm();
                if v > pmax {
                    pmax = v;
                    pivot = r;
                }
            }
            if pmax <= scale * 1e-14 + f64::MIN_POSITIVE {
                return Err(Error::DefectiveMatrix);
            }
            if pivot != col {
                for j in 0..n {
                    let (x, y) = (a.get(col, j), a.get(pivot, j));
                    a.set(col, j, y);
                    a.set(pivot, j, x);
                    let (x, y) = (inv.get(col, j), inv.get(pivot, j));
                    inv.set(col, j, y);
                    inv.set(pivot, j, x);
                }
            }
            let d = a.get(col, col);
            for j in 0..n {
                a.set(col, j, a.get(col, j) / d);
                inv.set(col, j, inv.get(col, j) / d);
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let factor = a.get(r, col);
                if factor == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..n {
                    let v = a.get(r, j) - factor * a.get(col, j);
                    a.set(r, j, v);
                    let v = inv.get(r, j) - factor * inv.get(col, j);
                    inv.set(r, j, v);
                }
            }
        }
        Ok(inv)
    }
}

/// Binary sparsity mask. An entry of 1 marks a perturbation entry that is
/// allowed to change; 0 forces it to zero.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(into = "Vec<Vec<f64>>", try_from = "Vec<Vec<f64>>")]
pub struct SparsityMask {
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

impl SparsityMask {
    pub fn new(rows: usize, cols: usize, entries: &[f64]) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::DimensionMismatch(format!(
                "mask dimensions must be at least 1x1, got {rows}x{cols}"
            )));
        }
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "expected {rows}x{cols} = {} mask entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        let mut data = Vec::with_capacity(entries.len());
        for (idx, &v) in entries.iter().enumerate() {
            if v == 0.0 {
                data.push(0);
            } else if v == 1.0 {
                data.push(1);
            } else {
                return Err(Error::NonBinaryMask {
                    row: idx / cols,
                    col: idx % cols,
                    value: v,
                });
            }
        }
        Ok(Self { rows, cols, data })
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::DimensionMismatch(
                "mask must have at least one row".into(),
            ));
        }
        let cols = rows[0].len();
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "mask row {i} has {} entries, expected {cols}",
                    r.len()
                )));
            }
        }
        Self::new(rows.len(), cols, &rows.concat())
    }

    pub fn ones(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![1; rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn is_one(&self, i: usize, j: usize) -> bool {
        self.data[i * self.cols + j] == 1
    }

    /// Complement mask; satisfies self + complement = all-ones.
    pub fn complement(&self) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&v| 1 - v).collect(),
        }
    }

    pub fn as_real(&self) -> RealMatrix {
        RealMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&v| f64::from(v)).collect(),
        }
    }

    /// Number of free (unit) entries.
    pub fn free_count(&self) -> usize {
        self.data.iter().filter(|&&v| v == 1).count()
    }

    /// Positions of free entries in row-major order.
    pub fn free_positions(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.free_count());
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self.is_one(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Apply the mask elementwise: returns S ∘ M, zeroing masked-out entries.
    pub fn apply(&self, m: &RealMatrix) -> Result<RealMatrix> {
        if self.rows != m.rows() || self.cols != m.cols() {
            return Err(Error::DimensionMismatch(format!(
                "mask {}x{} does not match matrix {}x{}",
                self.rows,
                self.cols,
                m.rows(),
                m.cols()
            )));
        }
        let data = m
            .entries()
            .iter()
            .zip(&self.data)
            .map(|(&v, &s)| if s == 1 { v } else { 0.0 })
            .collect();
        Ok(RealMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }
}

impl From<SparsityMask> for Vec<Vec<f64>> {
    fn from(m: SparsityMask) -> Self {
        (0..m.rows)
            .map(|i| {
                (0..m.cols)
                    .map(|j| f64::from(m.data[i * m.cols + j]))
                    .collect()
            })
            .collect()
    }
}

impl TryFrom<Vec<Vec<f64>>> for SparsityMask {
    type Error = Error;

    fn try_from(rows: Vec<Vec<f64>>) -> Result<Self> {
        Self::from_rows(&rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frobenius_zero_matrix() {
        assert_eq!(RealMatrix::zeros(2, 2).frobenius_norm(), 0.0);
    }

    #[test]
    fn frobenius_identity() {
        let i3 = RealMatrix::identity(3);
        assert!((i3.frobenius_norm() - 3.0_f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn frobenius_matches_entrywise_sum() {
        // Independent route: direct sum of squares over the listed entries.
        let rows = vec![
            vec![-3.0, -4.0, -7.0],
            vec![-1.0, -9.0, -6.0],
            vec![-1.0, -1.0, -9.0],
        ];
        let a = RealMatrix::from_rows(&rows).unwrap();
        let sum_sq: f64 = rows.iter().flatten().map(|v| v * v).sum();
        assert!((a.frobenius_norm() - sum_sq.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn hadamard_with_complement_is_zero() {
        let s = SparsityMask::from_rows(&[vec![1.0, 1.0], vec![0.0, 0.0]]).unwrap();
        let prod = s
            .as_real()
            .hadamard(&s.complement().as_real())
            .unwrap();
        assert_eq!(prod.frobenius_norm(), 0.0);
    }

    #[test]
    fn hadamard_with_ones_is_identity_map() {
        let m = RealMatrix::from_rows(&[vec![1.5, -2.0], vec![0.25, 3.0]]).unwrap();
        let ones = RealMatrix::ones(2, 2);
        assert_eq!(ones.hadamard(&m).unwrap(), m);
    }

    #[test]
    fn hadamard_shape_mismatch() {
        let a = RealMatrix::zeros(2, 2);
        let b = RealMatrix::zeros(2, 3);
        assert!(matches!(
            a.hadamard(&b),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn construction_rejects_non_finite() {
        let err = RealMatrix::new(1, 2, vec![1.0, f64::NAN]).unwrap_err();
        assert!(matches!(err, Error::NonFinite { row: 0, col: 1, .. }));
    }

    #[test]
    fn mask_rejects_non_binary() {
        let err = SparsityMask::from_rows(&[vec![1.0, 2.0]]).unwrap_err();
        assert!(matches!(
            err,
            Error::NonBinaryMask { row: 0, col: 1, value } if value == 2.0
        ));
    }

    #[test]
    fn mask_plus_complement_is_all_ones() {
        let s = SparsityMask::from_rows(&[vec![1.0, 0.0], vec![0.0, 1.0]]).unwrap();
        let sum = s.as_real().add(&s.complement().as_real()).unwrap();
        assert_eq!(sum, RealMatrix::ones(2, 2));
    }

    #[test]
    fn complex_inverse_roundtrip() {
        let z = ComplexMatrix::from_fn(3, 3, |i, j| {
            Complex64::new((i * 3 + j) as f64 + if i == j { 5.0 } else { 0.0 }, (i as f64) - (j as f64))
        });
        let zinv = z.inverse().unwrap();
        let prod = z.matmul(&zinv).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let expect = if i == j { 1.0 } else { 0.0 };
                assert!((prod.get(i, j) - Complex64::new(expect, 0.0)).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn complex_inverse_detects_singular() {
        let z = ComplexMatrix::from_fn(2, 2, |i, _| Complex64::new(i as f64 + 1.0, 0.0));
        assert!(matches!(z.inverse(), Err(Error::DefectiveMatrix)));
    }

    #[test]
    fn matmul_identity() {
        let a = RealMatrix::from_rows(&[vec![1.0, 2.0], vec![3.0, 4.0]]).unwrap();
        assert_eq!(a.matmul(&RealMatrix::identity(2)).unwrap(), a);
    }

    #[test]
    fn free_positions_row_major() {
        let s = SparsityMask::from_rows(&[vec![1.0, 0.0, 1.0], vec![0.0, 1.0, 0.0]]).unwrap();
        assert_eq!(s.free_positions(), vec![(0, 0), (0, 2), (1, 1)]);
        assert_eq!(s.free_count(), 3);
    }
}
