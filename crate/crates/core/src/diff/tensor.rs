//! Dense row-major `f64` tensors: scalars (rank 0), vectors (rank 1) and
//! matrices (rank 2). This is all the engine needs; there is no broadcasting
//! machinery beyond scalar-tensor and matrix-vector forms, which keeps every
//! gradient rule auditable.

use serde::{Deserialize, Serialize};

/// A dense row-major tensor of `f64` values.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Tensor {
    shape: Vec<usize>,
    values: Vec<f64>,
}

impl Tensor {
    /// Builds a tensor from a shape and a flat row-major value buffer.
    ///
    /// Panics if `product(shape) != values.len()`.
    pub fn new(shape: Vec<usize>, values: Vec<f64>) -> Self {
        let n: usize = shape.iter().product();
        assert_eq!(
            n,
            values.len(),
            "tensor shape {:?} implies {} values, got {}",
            shape,
            n,
            values.len()
        );
        Tensor { shape, values }
    }

    pub fn scalar(x: f64) -> Self {
        Tensor { shape: vec![], values: vec![x] }
    }

    pub fn vector(values: Vec<f64>) -> Self {
        Tensor { shape: vec![values.len()], values }
    }

    pub fn matrix(rows: usize, cols: usize, values: Vec<f64>) -> Self {
        Tensor::new(vec![rows, cols], values)
    }

    pub fn zeros(shape: &[usize]) -> Self {
        let n: usize = shape.iter().product();
        Tensor { shape: shape.to_vec(), values: vec![0.0; n] }
    }

    pub fn full(shape: &[usize], x: f64) -> Self {
        let n: usize = shape.iter().product();
        Tensor { shape: shape.to_vec(), values: vec![x; n] }
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn rank(&self) -> usize {
        self.shape.len()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn is_scalar(&self) -> bool {
        self.shape.is_empty()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [f64] {
        &mut self.values
    }

    /// The single value of a rank-0 tensor.
    pub fn item(&self) -> f64 {
        assert!(self.is_scalar(), "item() on non-scalar tensor {:?}", self.shape);
        self.values[0]
    }

    /// Number of rows of a matrix, or 1 for a vector treated as a row.
    pub fn rows(&self) -> usize {
        match self.shape.len() {
            2 => self.shape[0],
            _ => 1,
        }
    }

    pub fn cols(&self) -> usize {
        match self.shape.len() {
            2 => self.shape[1],
            1 => self.shape[0],
            _ => 1,
        }
    }

    pub fn get2(&self, r: usize, c: usize) -> f64 {
        debug_assert_eq!(self.rank(), 2);
        self.values[r * self.shape[1] + c]
    }

    pub fn set2(&mut self, r: usize, c: usize, x: f64) {
        debug_assert_eq!(self.rank(), 2);
        self.values[r * self.shape[1] + c] = x;
    }

    /// Row `r` of a matrix as a slice.
    pub fn row(&self, r: usize) -> &[f64] {
        debug_assert_eq!(self.rank(), 2);
        let c = self.shape[1];
        &self.values[r * c..(r + 1) * c]
    }

    pub fn iter(&self) -> std::slice::Iter<'_, f64> {
        self.values.iter()
    }

    pub fn all_finite(&self) -> bool {
        self.values.iter().all(|x| x.is_finite())
    }

    /// Elementwise in-place accumulate: `self += other`. Shapes must match.
    pub fn add_assign(&mut self, other: &Tensor) {
        debug_assert_eq!(self.shape, other.shape);
        for (a, b) in self.values.iter_mut().zip(other.values.iter()) {
            *a += b;
        }
    }

    pub fn scale(&mut self, s: f64) {
        for v in &mut self.values {
            *v *= s;
        }
    }

    /// Plain matrix-vector product `self * v` (no tape involved); used by
    /// evaluation paths that extract distribution parameters.
    pub fn matvec(&self, v: &[f64]) -> Vec<f64> {
        assert_eq!(self.rank(), 2, "matvec on rank-{} tensor", self.rank());
        let (r, c) = (self.shape[0], self.shape[1]);
        assert_eq!(c, v.len(), "matvec dims {}x{} vs {}", r, c, v.len());
        (0..r)
            .map(|i| {
                self.values[i * c..(i + 1) * c]
                    .iter()
                    .zip(v)
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }

    /// Squared Euclidean norm of the flattened tensor.
    pub fn sq_norm(&self) -> f64 {
        self.values.iter().map(|x| x * x).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shape_value_consistency() {
        let t = Tensor::matrix(2, 3, vec![1., 2., 3., 4., 5., 6.]);
        assert_eq!(t.len(), 6);
        assert_eq!(t.get2(1, 2), 6.0);
        assert_eq!(t.row(0), &[1., 2., 3.]);
    }

    #[test]
    #[should_panic]
    fn mismatched_shape_panics() {
        let _ = Tensor::new(vec![2, 2], vec![1.0, 2.0, 3.0]);
    }

    #[test]
    fn matvec_2x2() {
        let m = Tensor::matrix(2, 2, vec![1., 2., 3., 4.]);
        assert_eq!(m.matvec(&[1.0, 1.0]), vec![3.0, 7.0]);
    }
}
