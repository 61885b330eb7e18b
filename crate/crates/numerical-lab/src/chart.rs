//! Chart-based descriptions of smooth functions on closed manifolds.
//!
//! A function is a list of charts, each an open coordinate box with an
//! evaluation rule. Every critical point of the underlying function is
//! interior to at least one chart with a comfortable margin (the catalog
//! guarantees it), so grid-seeded searches per chart see everything.

use std::fmt;
use std::sync::Arc;

use morse_algebra::IndexCountVector;

use crate::error::{LabError, Result};

pub(crate) type EvalFn = Arc<dyn Fn(&[f64]) -> f64 + Send + Sync>;

/// One coordinate chart: an open box and an evaluation rule.
///
/// `frame` names the coordinate system; coordinates are comparable across
/// charts exactly when their frames agree (the two angular charts of a
/// circle share a frame, the two stereographic charts of a sphere do not).
#[derive(Clone)]
pub struct Chart {
    pub id: String,
    pub frame: String,
    /// Per-axis open interval bounds.
    pub bounds: Vec<(f64, f64)>,
    pub(crate) eval: EvalFn,
}

impl Chart {
    pub fn new(
        id: &str,
        frame: &str,
        bounds: Vec<(f64, f64)>,
        eval: impl Fn(&[f64]) -> f64 + Send + Sync + 'static,
    ) -> Self {
        Self {
            id: id.to_string(),
            frame: frame.to_string(),
            bounds,
            eval: Arc::new(eval),
        }
    }

    /// True when `x` lies in the box with at least `margin` to every face.
    pub fn contains_with_margin(&self, x: &[f64], margin: f64) -> bool {
        x.len() == self.bounds.len()
            && x.iter().zip(&self.bounds).all(|(&xi, &(lo, hi))| {
                xi.is_finite() && xi >= lo + margin && xi <= hi - margin
            })
    }
}

impl fmt::Debug for Chart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Chart")
            .field("id", &self.id)
            .field("frame", &self.frame)
            .field("bounds", &self.bounds)
            .finish_non_exhaustive()
    }
}

/// A smooth function given by charts, with optional axis periodicities and
/// optionally declared critical-point counts for self-checking searches.
#[derive(Debug, Clone)]
pub struct ChartFunction {
    pub name: String,
    pub dim: usize,
    /// Per-axis period for angular coordinates; `None` for plain axes.
    pub periodicities: Vec<Option<f64>>,
    pub charts: Vec<Chart>,
    pub declared_counts: Option<IndexCountVector>,
}

impl ChartFunction {
    /// Evaluate chart `chart` at local coordinates `x`.
    pub fn eval(&self, chart: usize, x: &[f64]) -> Result<f64> {
        let c = self.chart(chart)?;
        Ok((c.eval)(x))
    }

    pub fn chart(&self, index: usize) -> Result<&Chart> {
        self.charts.get(index).ok_or_else(|| LabError::ChartIndex {
            name: self.name.clone(),
            index,
            charts: self.charts.len(),
        })
    }

    /// Distance between two coordinate tuples of this function, respecting
    /// per-axis periodicity. Only meaningful for points in a common frame.
    pub fn periodic_distance(&self, a: &[f64], b: &[f64]) -> f64 {
        a.iter()
            .zip(b)
            .zip(&self.periodicities)
            .map(|((&ai, &bi), &period)| axis_delta(ai, bi, period).powi(2))
            .sum::<f64>()
            .sqrt()
    }
}

/// Per-axis distance modulo an optional period.
pub(crate) fn axis_delta(a: f64, b: f64, period: Option<f64>) -> f64 {
    let d = (a - b).abs();
    match period {
        None => d,
        Some(p) => {
            let r = d.rem_euclid(p);
            r.min(p - r)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn margin_containment() {
        let c = Chart::new("c", "f", vec![(0.0, 1.0)], |_| 0.0);
        assert!(c.contains_with_margin(&[0.5], 0.1));
        assert!(!c.contains_with_margin(&[0.05], 0.1));
        assert!(!c.contains_with_margin(&[f64::NAN], 0.1));
        assert!(!c.contains_with_margin(&[0.5, 0.5], 0.1));
    }

    #[test]
    fn periodic_axis_distance_wraps() {
        let tau = std::f64::consts::TAU;
        assert!(axis_delta(0.1, tau - 0.1, Some(tau)) - 0.2 < 1e-12);
        assert_eq!(axis_delta(0.1, 0.4, None), 0.30000000000000004);
    }

    #[test]
    fn chart_function_distance_mixes_axes() {
        let tau = std::f64::consts::TAU;
        let f = ChartFunction {
            name: "t".into(),
            dim: 2,
            periodicities: vec![Some(tau), None],
            charts: vec![],
            declared_counts: None,
        };
        let d = f.periodic_distance(&[0.05, 1.0], &[tau - 0.05, 1.0]);
        assert!((d - 0.1).abs() < 1e-12);
    }
}
