//! Closed-form functions with known critical data.
//!
//! Every entry guarantees that each critical point of the underlying
//! function lies well inside at least one chart (margins are at least 0.4,
//! far above the stencil requirement), and declares its expected index
//! counts so searches are self-checking.

use std::f64::consts::TAU;

use morse_algebra::IndexCountVector;

use crate::chart::{Chart, ChartFunction};
use crate::error::{LabError, Result};

/// cos(n * theta) on the circle: n maxima and n minima.
///
/// Two overlapping angular charts share one periodic coordinate; their
/// boundary regions are deep interior to each other, so every critical
/// point kpi/n is comfortably interior to one of them.
pub fn circle_cos(n: u32) -> Result<ChartFunction> {
    if n < 1 {
        return Err(LabError::InvalidParameter(format!(
            "circle_cos needs n >= 1, got {n}"
        )));
    }
    let freq = f64::from(n);
    let counts = IndexCountVector::new(1, vec![i64::from(n), i64::from(n)]);
    Ok(ChartFunction {
        name: format!("circle_cos:{n}"),
        dim: 1,
        periodicities: vec![Some(TAU)],
        charts: vec![
            Chart::new("a", "angular", vec![(-2.0, 2.0)], move |x: &[f64]| {
                (freq * x[0]).cos()
            }),
            Chart::new("b", "angular", vec![(1.0, 5.4)], move |x: &[f64]| {
                (freq * x[0]).cos()
            }),
        ],
        declared_counts: Some(counts),
    })
}

/// The height function of the round 2-sphere in two stereographic charts.
///
/// The chart centered at the minimum reads (|u|^2 - 1)/(|u|^2 + 1), the one
/// centered at the maximum reads (1 - |u|^2)/(1 + |u|^2); each contains
/// exactly one critical point, at its origin.
pub fn sphere_height() -> ChartFunction {
    let box2 = vec![(-1.5, 1.5), (-1.5, 1.5)];
    ChartFunction {
        name: "sphere_height".to_string(),
        dim: 2,
        periodicities: vec![None, None],
        charts: vec![
            Chart::new("south", "south", box2.clone(), |u: &[f64]| {
                let r2 = u[0] * u[0] + u[1] * u[1];
                (r2 - 1.0) / (r2 + 1.0)
            }),
            Chart::new("north", "north", box2, |u: &[f64]| {
                let r2 = u[0] * u[0] + u[1] * u[1];
                (1.0 - r2) / (1.0 + r2)
            }),
        ],
        declared_counts: Some(IndexCountVector::new(2, vec![1, 0, 1])),
    }
}

/// The standard torus height (R + r cos u) sin v with R = 2, r = 1:
/// a minimum, two saddles and a maximum.
pub fn torus_height() -> ChartFunction {
    const R: f64 = 2.0;
    const SMALL_R: f64 = 1.0;
    ChartFunction {
        name: "torus_height".to_string(),
        dim: 2,
        periodicities: vec![Some(TAU), Some(TAU)],
        charts: vec![Chart::new(
            "angles",
            "angular",
            vec![(-3.0, 3.6), (-3.0, 3.6)],
            |x: &[f64]| (R + SMALL_R * x[0].cos()) * x[1].sin(),
        )],
        declared_counts: Some(IndexCountVector::new(2, vec![1, 2, 1])),
    }
}

/// Resolve a CLI-style catalog spec: `circle_cos:<n>`, `sphere_height`,
/// or `torus_height`.
pub fn catalog(spec: &str) -> Result<ChartFunction> {
    match spec.split_once(':') {
        Some(("circle_cos", arg)) => {
            let n: u32 = arg.parse().map_err(|_| {
                LabError::InvalidParameter(format!("circle_cos parameter `{arg}` is not a count"))
            })?;
            circle_cos(n)
        }
        None => match spec {
            "sphere_height" => Ok(sphere_height()),
            "torus_height" => Ok(torus_height()),
            "circle_cos" => Err(LabError::InvalidParameter(
                "circle_cos needs a parameter, e.g. circle_cos:2".to_string(),
            )),
            other => Err(LabError::UnknownCatalog(other.to_string())),
        },
        Some((other, _)) => Err(LabError::UnknownCatalog(other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_specs_parse() {
        assert_eq!(catalog("circle_cos:3").unwrap().name, "circle_cos:3");
        assert_eq!(catalog("sphere_height").unwrap().name, "sphere_height");
        assert_eq!(catalog("torus_height").unwrap().name, "torus_height");
        assert!(catalog("circle_cos:0").is_err());
        assert!(catalog("circle_cos:x").is_err());
        assert!(catalog("circle_cos").is_err());
        assert!(catalog("klein_bottle").is_err());
    }

    #[test]
    fn chart_unions_cover_the_circle() {
        // Every angle (mod tau) is at least 0.4 interior to one chart.
        let f = circle_cos(1).unwrap();
        let mut theta = 0.0;
        while theta < TAU {
            let covered = f.charts.iter().any(|c| {
                let (lo, hi) = c.bounds[0];
                [theta, theta - TAU]
                    .iter()
                    .any(|&t| t >= lo + 0.4 && t <= hi - 0.4)
            });
            assert!(covered, "angle {theta} uncovered");
            theta += 0.01;
        }
    }

    #[test]
    fn declared_counts_match_the_catalog() {
        assert_eq!(circle_cos(3).unwrap().declared_counts.unwrap().as_slice(), &[3, 3]);
        assert_eq!(sphere_height().declared_counts.unwrap().as_slice(), &[1, 0, 1]);
        assert_eq!(torus_height().declared_counts.unwrap().as_slice(), &[1, 2, 1]);
    }

    #[test]
    fn torus_critical_angles_are_interior() {
        let f = torus_height();
        let chart = &f.charts[0];
        for u in [0.0, std::f64::consts::PI] {
            for v in [std::f64::consts::FRAC_PI_2, -std::f64::consts::FRAC_PI_2] {
                assert!(chart.contains_with_margin(&[u, v], 0.4));
            }
        }
    }
}
