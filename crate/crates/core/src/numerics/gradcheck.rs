//! Central finite differences, the oracle every analytic gradient in the
//! crate is validated against.

use crate::error::{Error, Result};
use crate::numerics::Matrix;

/// Entrywise central-difference gradient of a scalar function of a matrix:
/// `(f(M + h*e_ij) - f(M - h*e_ij)) / (2h)`.
///
/// Fails if `f` returns a non-finite value at any probe point, naming the
/// perturbed entry.
pub fn finite_difference_gradient(
    f: impl Fn(&Matrix) -> f64,
    m: &Matrix,
    h: f64,
) -> Result<Matrix> {
    if !(h > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "finite-difference step must be positive, got {}",
            h
        )));
    }
    let mut probe = m.clone();
    let mut grad = Matrix::zeros(m.rows(), m.cols());
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            let orig = probe.get(i, j);
            probe.set(i, j, orig + h);
            let plus = f(&probe);
            probe.set(i, j, orig - h);
            let minus = f(&probe);
            probe.set(i, j, orig);
            if !plus.is_finite() || !minus.is_finite() {
                return Err(Error::NonFinite(format!(
                    "objective is non-finite when perturbing entry ({}, {})",
                    i, j
                )));
            }
            grad.set(i, j, (plus - minus) / (2.0 * h));
        }
    }
    Ok(grad)
}

/// Frobenius-relative disagreement between two gradients, the figure of
/// merit used by the gradient-check suites.
pub fn relative_gradient_error(analytic: &Matrix, numeric: &Matrix) -> Result<f64> {
    let diff = analytic.sub(numeric)?;
    let denom = super::frobenius_norm(analytic)
        .max(super::frobenius_norm(numeric))
        .max(1e-12);
    Ok(super::frobenius_norm(&diff) / denom)
}
