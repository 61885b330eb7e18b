//! Central finite differences on chart functions.

use nalgebra::DMatrix;

use crate::chart::ChartFunction;
use crate::error::{LabError, Result};
use crate::tolerances::{H_GRAD, H_HESS};

/// First-order central differences with step [`H_GRAD`]; error O(h^2).
///
/// The point must keep a margin of at least `H_GRAD` to the chart boundary.
pub fn gradient_fd(f: &ChartFunction, chart: usize, x: &[f64]) -> Result<Vec<f64>> {
    let c = f.chart(chart)?;
    if !c.contains_with_margin(x, H_GRAD) {
        return Err(LabError::OutsideChart {
            chart: c.id.clone(),
            margin: H_GRAD,
        });
    }
    Ok(gradient_raw(f, chart, x))
}

pub(crate) fn gradient_raw(f: &ChartFunction, chart: usize, x: &[f64]) -> Vec<f64> {
    let eval = &f.charts[chart].eval;
    let mut probe = x.to_vec();
    (0..x.len())
        .map(|i| {
            probe[i] = x[i] + H_GRAD;
            let above = eval(&probe);
            probe[i] = x[i] - H_GRAD;
            let below = eval(&probe);
            probe[i] = x[i];
            (above - below) / (2.0 * H_GRAD)
        })
        .collect()
}

/// Second-order central differences with step [`H_HESS`], symmetrized as
/// (H + H^T)/2. The point must keep a margin of at least `2 * H_HESS`.
pub fn hessian_fd(f: &ChartFunction, chart: usize, x: &[f64]) -> Result<DMatrix<f64>> {
    hessian_fd_with_step(f, chart, x, H_HESS)
}

/// [`hessian_fd`] with an explicit step, for convergence-order checks.
pub fn hessian_fd_with_step(
    f: &ChartFunction,
    chart: usize,
    x: &[f64],
    h: f64,
) -> Result<DMatrix<f64>> {
    let c = f.chart(chart)?;
    if !c.contains_with_margin(x, 2.0 * h) {
        return Err(LabError::OutsideChart {
            chart: c.id.clone(),
            margin: 2.0 * h,
        });
    }
    Ok(hessian_raw(f, chart, x, h))
}

pub(crate) fn hessian_raw(f: &ChartFunction, chart: usize, x: &[f64], h: f64) -> DMatrix<f64> {
    let eval = &f.charts[chart].eval;
    let n = x.len();
    let center = eval(x);
    let mut matrix = DMatrix::zeros(n, n);
    let mut probe = x.to_vec();
    for i in 0..n {
        probe[i] = x[i] + h;
        let above = eval(&probe);
        probe[i] = x[i] - h;
        let below = eval(&probe);
        probe[i] = x[i];
        matrix[(i, i)] = (above - 2.0 * center + below) / (h * h);
        for j in (i + 1)..n {
            let mut corner = |si: f64, sj: f64| {
                probe[i] = x[i] + si * h;
                probe[j] = x[j] + sj * h;
                let v = eval(&probe);
                probe[i] = x[i];
                probe[j] = x[j];
                v
            };
            let mixed = (corner(1.0, 1.0) - corner(1.0, -1.0) - corner(-1.0, 1.0)
                + corner(-1.0, -1.0))
                / (4.0 * h * h);
            matrix[(i, j)] = mixed;
            matrix[(j, i)] = mixed;
        }
    }
    // The four-point stencil is already symmetric; keep the explicit
    // symmetrization so the eigensolver sees an exactly symmetric matrix.
    let transpose = matrix.transpose();
    (matrix + transpose) * 0.5
}

/// Ascending eigenvalues of a symmetric matrix.
pub fn symmetric_eigenvalues(matrix: &DMatrix<f64>) -> Vec<f64> {
    let mut eigs: Vec<f64> = matrix
        .clone()
        .symmetric_eigen()
        .eigenvalues
        .iter()
        .copied()
        .collect();
    eigs.sort_by(f64::total_cmp);
    eigs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn circle_gradient_at_quarter_turn() {
        let f = catalog::circle_cos(1).unwrap();
        let g = gradient_fd(&f, 0, &[std::f64::consts::FRAC_PI_2]).unwrap();
        assert!((g[0] - (-1.0)).abs() < 1e-8);
    }

    #[test]
    fn sphere_gradient_vanishes_at_the_pole() {
        let f = catalog::sphere_height();
        let g = gradient_fd(&f, 0, &[0.0, 0.0]).unwrap();
        assert!(g[0].abs() < 1e-10 && g[1].abs() < 1e-10);
    }

    #[test]
    fn torus_gradient_vanishes_at_the_saddle_row() {
        let f = catalog::torus_height();
        let g = gradient_fd(&f, 0, &[0.0, std::f64::consts::FRAC_PI_2]).unwrap();
        assert!(g[0].abs() < 1e-8 && g[1].abs() < 1e-8);
    }

    #[test]
    fn circle_second_derivative_at_zero() {
        let f = catalog::circle_cos(1).unwrap();
        let h = hessian_fd(&f, 0, &[0.0]).unwrap();
        assert!((h[(0, 0)] - (-1.0)).abs() < 1e-5);
    }

    #[test]
    fn sphere_hessian_at_the_minimum_is_positive() {
        let f = catalog::sphere_height();
        let h = hessian_fd(&f, 0, &[0.0, 0.0]).unwrap();
        let eigs = symmetric_eigenvalues(&h);
        assert!(eigs.iter().all(|&e| e > 0.0));
        // Expanding (r^2 - 1)/(r^2 + 1) = -1 + 2 r^2 + O(r^4) gives 4 I.
        assert!(eigs.iter().all(|&e| (e - 4.0).abs() < 1e-4));
    }

    #[test]
    fn margin_violations_are_rejected() {
        let f = catalog::circle_cos(1).unwrap();
        assert!(matches!(
            gradient_fd(&f, 0, &[2.0]),
            Err(LabError::OutsideChart { .. })
        ));
        assert!(matches!(
            hessian_fd(&f, 0, &[-1.99999]),
            Err(LabError::OutsideChart { .. })
        ));
        assert!(matches!(
            gradient_fd(&f, 5, &[0.0]),
            Err(LabError::ChartIndex { .. })
        ));
    }
}
