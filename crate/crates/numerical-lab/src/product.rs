//! Weighted product functions on product manifolds.

use crate::chart::{Chart, ChartFunction};
use crate::error::{LabError, Result};
use crate::tolerances::MAX_PRODUCT_DIM;

/// The function (x1, x2) -> a*f1(x1) + b*f2(x2) on the product manifold,
/// i.e. the product map composed with the positively weighted projection to
/// a line. Charts are pairwise products of the factor charts; declared
/// counts convolve because indices of paired critical points add.
///
/// Both weights must be strictly positive: the Hessian at a critical point
/// is the block sum of the weighted factor Hessians, and positive scaling
/// is exactly what keeps every eigenvalue sign (hence every index) intact.
pub fn product_function(
    f1: &ChartFunction,
    f2: &ChartFunction,
    weights: (f64, f64),
) -> Result<ChartFunction> {
    let (a, b) = weights;
    for w in [a, b] {
        if !(w.is_finite() && w > 0.0) {
            return Err(LabError::NonPositiveWeight(w));
        }
    }
    let dim = f1.dim + f2.dim;
    if dim > MAX_PRODUCT_DIM {
        return Err(LabError::DimensionCap {
            dim,
            max: MAX_PRODUCT_DIM,
        });
    }
    let split = f1.dim;
    let mut charts = Vec::with_capacity(f1.charts.len() * f2.charts.len());
    for c1 in &f1.charts {
        for c2 in &f2.charts {
            let mut bounds = c1.bounds.clone();
            bounds.extend_from_slice(&c2.bounds);
            let e1 = c1.eval.clone();
            let e2 = c2.eval.clone();
            charts.push(Chart::new(
                &format!("{}*{}", c1.id, c2.id),
                &format!("{}|{}", c1.frame, c2.frame),
                bounds,
                move |x: &[f64]| a * e1(&x[..split]) + b * e2(&x[split..]),
            ));
        }
    }
    let mut periodicities = f1.periodicities.clone();
    periodicities.extend_from_slice(&f2.periodicities);
    let declared_counts = match (&f1.declared_counts, &f2.declared_counts) {
        (Some(h1), Some(h2)) => Some(h1.convolve(h2)),
        _ => None,
    };
    Ok(ChartFunction {
        name: format!("{}*{}", f1.name, f2.name),
        dim,
        periodicities,
        charts,
        declared_counts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    const W: (f64, f64) = (std::f64::consts::FRAC_1_SQRT_2, std::f64::consts::FRAC_1_SQRT_2);

    #[test]
    fn product_declared_counts_convolve() {
        let c = catalog::circle_cos(1).unwrap();
        let p = product_function(&c, &c, W).unwrap();
        assert_eq!(p.declared_counts.unwrap().as_slice(), &[1, 2, 1]);

        let s = catalog::sphere_height();
        let p = product_function(&s, &c, W).unwrap();
        assert_eq!(p.declared_counts.unwrap().as_slice(), &[1, 1, 1, 1]);
        assert_eq!(p.dim, 3);
        assert_eq!(p.charts.len(), 4);
        assert_eq!(p.periodicities, vec![None, None, Some(std::f64::consts::TAU)]);
    }

    #[test]
    fn weights_must_be_positive() {
        let c = catalog::circle_cos(1).unwrap();
        assert!(matches!(
            product_function(&c, &c, (0.0, 1.0)),
            Err(LabError::NonPositiveWeight(_))
        ));
        assert!(matches!(
            product_function(&c, &c, (1.0, -0.5)),
            Err(LabError::NonPositiveWeight(_))
        ));
        assert!(product_function(&c, &c, (1.0, f64::NAN)).is_err());
    }

    #[test]
    fn dimension_cap_is_enforced() {
        let t = catalog::torus_height();
        let quad = product_function(&t, &t, W).unwrap();
        assert_eq!(quad.dim, 4);
        let c = catalog::circle_cos(1).unwrap();
        assert!(matches!(
            product_function(&quad, &c, W),
            Err(LabError::DimensionCap { dim: 5, .. })
        ));
    }

    #[test]
    fn product_eval_is_the_weighted_sum() {
        let c = catalog::circle_cos(1).unwrap();
        let p = product_function(&c, &c, (2.0, 3.0)).unwrap();
        let v = p.eval(0, &[0.3, 1.1]).unwrap();
        assert!((v - (2.0 * 0.3f64.cos() + 3.0 * 1.1f64.cos())).abs() < 1e-15);
    }
}
