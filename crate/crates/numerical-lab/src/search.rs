//! Grid-seeded Newton search for critical points, with deduplication and
//! Hessian classification.

use nalgebra::{DMatrix, DVector};
use rayon::prelude::*;
use serde::Serialize;

use morse_algebra::IndexCountVector;

use crate::chart::ChartFunction;
use crate::error::{LabError, Result};
use crate::fd::{gradient_raw, hessian_raw, symmetric_eigenvalues};
use crate::tolerances::{
    H_HESS, MAX_ITER, N_SEED, SEARCH_MARGIN, TOL_DEDUPE, TOL_DEGENERATE, TOL_GRAD,
};

/// A classified critical point.
#[derive(Debug, Clone, Serialize)]
pub struct CriticalPoint {
    /// Chart id the point was recorded in.
    pub chart: String,
    #[serde(skip)]
    pub chart_index: usize,
    #[serde(skip)]
    pub frame: String,
    pub coordinates: Vec<f64>,
    pub value: f64,
    pub gradient_norm: f64,
    /// Ascending.
    pub hessian_eigenvalues: Vec<f64>,
    /// Number of negative Hessian eigenvalues.
    pub index: usize,
}

struct Candidate {
    chart_index: usize,
    coordinates: Vec<f64>,
    gradient_norm: f64,
}

/// Find, deduplicate and classify all critical points, then check the found
/// index histogram against the declared counts when the function carries
/// them. Histogram mismatches, degenerate Hessians and a fully unconverged
/// search are distinct errors.
pub fn find_critical_points(f: &ChartFunction) -> Result<Vec<CriticalPoint>> {
    let points = search_critical_points(f)?;
    if let Some(declared) = &f.declared_counts {
        let found = histogram(f.dim, &points);
        if &found != declared {
            return Err(LabError::HistogramMismatch {
                name: f.name.clone(),
                found: found.as_slice().to_vec(),
                declared: declared.as_slice().to_vec(),
            });
        }
    }
    Ok(points)
}

/// The search itself, without the declared-counts check.
pub(crate) fn search_critical_points(f: &ChartFunction) -> Result<Vec<CriticalPoint>> {
    let seeds: Vec<(usize, Vec<f64>)> = f
        .charts
        .iter()
        .enumerate()
        .flat_map(|(ci, chart)| seed_grid(&chart.bounds).into_iter().map(move |s| (ci, s)))
        .collect();
    // Seeds are independent; candidates come back in seed order, so the
    // sequential deduplication below is deterministic.
    let candidates: Vec<Candidate> = seeds
        .par_iter()
        .map(|(ci, seed)| newton_from_seed(f, *ci, seed))
        .collect::<Vec<Option<Candidate>>>()
        .into_iter()
        .flatten()
        .collect();
    let survivors = dedupe(f, candidates);
    if survivors.is_empty() {
        return Err(LabError::NoConvergence {
            name: f.name.clone(),
        });
    }
    let mut points = survivors
        .into_iter()
        .map(|c| classify(f, c))
        .collect::<Result<Vec<_>>>()?;
    points.sort_by(|a, b| {
        a.value
            .total_cmp(&b.value)
            .then_with(|| compare_coords(&a.coordinates, &b.coordinates))
            .then_with(|| a.chart.cmp(&b.chart))
    });
    Ok(points)
}

/// Index histogram of a point list.
pub fn histogram(dim: usize, points: &[CriticalPoint]) -> IndexCountVector {
    IndexCountVector::from_indices(dim, points.iter().map(|p| p.index))
}

fn compare_coords(a: &[f64], b: &[f64]) -> std::cmp::Ordering {
    for (x, y) in a.iter().zip(b) {
        let ord = x.total_cmp(y);
        if ord != std::cmp::Ordering::Equal {
            return ord;
        }
    }
    std::cmp::Ordering::Equal
}

/// N_SEED points per axis, strictly interior to the margin-shrunk box.
fn seed_grid(bounds: &[(f64, f64)]) -> Vec<Vec<f64>> {
    let axes: Vec<Vec<f64>> = bounds
        .iter()
        .map(|&(lo, hi)| {
            let lo = lo + SEARCH_MARGIN;
            let hi = hi - SEARCH_MARGIN;
            (0..N_SEED)
                .map(|i| lo + (hi - lo) * (i as f64 + 0.5) / N_SEED as f64)
                .collect()
        })
        .collect();
    let mut grid: Vec<Vec<f64>> = vec![Vec::new()];
    for axis in &axes {
        grid = grid
            .into_iter()
            .flat_map(|prefix| {
                axis.iter().map(move |&v| {
                    let mut next = prefix.clone();
                    next.push(v);
                    next
                })
            })
            .collect();
    }
    grid
}

/// Newton iteration on the finite-difference gradient. Returns the
/// converged point, or `None` when the seed diverges, leaves the chart,
/// hits a singular Hessian, or runs out of iterations.
fn newton_from_seed(f: &ChartFunction, chart_index: usize, seed: &[f64]) -> Option<Candidate> {
    let chart = &f.charts[chart_index];
    let mut x = seed.to_vec();
    for _ in 0..MAX_ITER {
        let gradient = gradient_raw(f, chart_index, &x);
        let norm = gradient.iter().map(|g| g * g).sum::<f64>().sqrt();
        if !norm.is_finite() {
            return None;
        }
        if norm < TOL_GRAD {
            return Some(Candidate {
                chart_index,
                coordinates: x,
                gradient_norm: norm,
            });
        }
        let hessian = hessian_raw(f, chart_index, &x, H_HESS);
        let rhs = DVector::from_iterator(x.len(), gradient.iter().map(|g| -g));
        let step = hessian.lu().solve(&rhs)?;
        for (xi, si) in x.iter_mut().zip(step.iter()) {
            *xi += si;
        }
        if !chart.contains_with_margin(&x, SEARCH_MARGIN) {
            return None;
        }
    }
    None
}

/// Sequential reduction of the candidate list: candidates within
/// [`TOL_DEDUPE`] of a kept point (in a shared frame, modulo periods) merge
/// into it, keeping the better-converged representative.
fn dedupe(f: &ChartFunction, candidates: Vec<Candidate>) -> Vec<Candidate> {
    let mut kept: Vec<Candidate> = Vec::new();
    for candidate in candidates {
        let frame = &f.charts[candidate.chart_index].frame;
        match kept.iter_mut().find(|existing| {
            &f.charts[existing.chart_index].frame == frame
                && f.periodic_distance(&existing.coordinates, &candidate.coordinates)
                    < TOL_DEDUPE
        }) {
            Some(existing) => {
                if candidate.gradient_norm < existing.gradient_norm {
                    *existing = candidate;
                }
            }
            None => kept.push(candidate),
        }
    }
    kept
}

fn classify(f: &ChartFunction, candidate: Candidate) -> Result<CriticalPoint> {
    let chart = &f.charts[candidate.chart_index];
    let hessian = hessian_raw(f, candidate.chart_index, &candidate.coordinates, H_HESS);
    let eigenvalues = symmetric_eigenvalues(&hessian);
    if is_degenerate(&eigenvalues) {
        return Err(LabError::DegenerateHessian {
            name: f.name.clone(),
            chart: chart.id.clone(),
            coordinates: candidate.coordinates,
            eigenvalues,
        });
    }
    let index = eigenvalues.iter().filter(|&&e| e < 0.0).count();
    let value = (chart.eval)(&candidate.coordinates);
    Ok(CriticalPoint {
        chart: chart.id.clone(),
        chart_index: candidate.chart_index,
        frame: chart.frame.clone(),
        coordinates: candidate.coordinates,
        value,
        gradient_norm: candidate.gradient_norm,
        hessian_eigenvalues: eigenvalues,
        index,
    })
}

fn is_degenerate(eigenvalues: &[f64]) -> bool {
    let max_abs = eigenvalues.iter().fold(0.0f64, |m, e| m.max(e.abs()));
    let min_abs = eigenvalues
        .iter()
        .fold(f64::INFINITY, |m, e| m.min(e.abs()));
    min_abs <= TOL_DEGENERATE * max_abs.max(1.0)
}

/// Largest off-diagonal block entry of the Hessian at a product point,
/// relative to max(1, largest |eigenvalue|). The block-diagonal structure
/// of product Hessians makes this noise-level small at critical points.
pub(crate) fn offdiagonal_block_rel(hessian: &DMatrix<f64>, split: usize) -> f64 {
    let eigenvalues = symmetric_eigenvalues(hessian);
    let max_abs = eigenvalues.iter().fold(0.0f64, |m, e| m.max(e.abs()));
    let mut worst = 0.0f64;
    for i in 0..split {
        for j in split..hessian.ncols() {
            worst = worst.max(hessian[(i, j)].abs());
        }
    }
    worst / max_abs.max(1.0)
}
