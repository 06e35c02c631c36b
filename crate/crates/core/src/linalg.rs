//! Dense symmetric eigendecomposition with ascending eigenvalues and a
//! residual certificate.

use nalgebra::{DMatrix, DVector, SymmetricEigen};

use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct Eigen {
    /// Ascending.
    pub values: Vec<f64>,
    /// Column `k` is the unit eigenvector for `values[k]`.
    pub vectors: DMatrix<f64>,
}

impl Eigen {
    pub fn vector(&self, k: usize) -> DVector<f64> {
        self.vectors.column(k).into_owned()
    }
}

/// Largest `‖Av − λv‖` over the computed pairs.
pub fn max_residual(a: &DMatrix<f64>, eig: &Eigen) -> f64 {
    let av = a * &eig.vectors;
    (0..eig.values.len())
        .map(|k| (av.column(k) - eig.vectors.column(k) * eig.values[k]).norm())
        .fold(0.0, f64::max)
}

/// Eigendecomposition of a symmetric matrix; fails if any residual exceeds
/// `1e-9 · max(‖A‖_F, 1)`.
pub fn symmetric_eigen(a: &DMatrix<f64>) -> Result<Eigen> {
    assert!(a.is_square());
    let n = a.nrows();
    if n == 0 {
        return Ok(Eigen {
            values: Vec::new(),
            vectors: DMatrix::zeros(0, 0),
        });
    }
    let se = SymmetricEigen::new(a.clone());
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| se.eigenvalues[i].total_cmp(&se.eigenvalues[j]).then(i.cmp(&j)));
    let values = order.iter().map(|&i| se.eigenvalues[i]).collect();
    let vectors = DMatrix::from_fn(n, n, |r, c| se.eigenvectors[(r, order[c])]);
    let eig = Eigen { values, vectors };

    let bound = 1e-9 * a.norm().max(1.0);
    let residual = max_residual(a, &eig);
    if residual > bound || !residual.is_finite() {
        return Err(Error::EigenResidual { residual, bound });
    }
    Ok(eig)
}
