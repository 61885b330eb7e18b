//! Index-additivity verification: critical points of a weighted product
//! are exactly the pairs of factor critical points, with indices adding.

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use morse_algebra::IndexCountVector;

use crate::chart::ChartFunction;
use crate::error::Result;
use crate::fd::hessian_raw;
use crate::product::product_function;
use crate::search::{
    histogram, offdiagonal_block_rel, search_critical_points, CriticalPoint,
};
use crate::tolerances::{H_HESS, OFFDIAG_REL_MAX, TOL_MATCH};

/// One matched product critical point.
#[derive(Debug, Clone, Serialize)]
pub struct PairMatch {
    /// Indices into the report's point lists.
    pub product_point: usize,
    pub f1_point: usize,
    pub f2_point: usize,
    /// index(p) == index(p1) + index(p2).
    pub index_sum_ok: bool,
    /// Largest off-diagonal Hessian block entry relative to
    /// max(1, largest |eigenvalue|).
    pub offdiag_rel: f64,
}

/// The full verification record for one product.
#[derive(Debug, Clone, Serialize)]
pub struct IndexAdditivityReport {
    pub f1_name: String,
    pub f2_name: String,
    pub weights: (f64, f64),
    pub f1_points: Vec<CriticalPoint>,
    pub f2_points: Vec<CriticalPoint>,
    pub product_points: Vec<CriticalPoint>,
    pub pairs: Vec<PairMatch>,
    /// Product points without a unique factor pair within tolerance.
    pub unmatched: Vec<usize>,
    pub f1_histogram: IndexCountVector,
    pub f2_histogram: IndexCountVector,
    pub product_histogram: IndexCountVector,
    /// Found histograms agree with the catalog's declared counts.
    pub f1_declared_ok: bool,
    pub f2_declared_ok: bool,
    /// |crit(f)| == |crit(f1)| * |crit(f2)|.
    pub count_identity_ok: bool,
    pub pairing_bijective: bool,
    pub index_additivity_ok: bool,
    /// Product histogram equals the convolution of the factor histograms.
    pub histogram_matches_convolution: bool,
    pub block_offdiag_ok: bool,
    pub max_offdiag_rel: f64,
    pub pass: bool,
}

/// Search the factors and the weighted product, pair every product critical
/// point with its factor pair, and check index additivity, bijectivity, the
/// count identity, the histogram convolution, and the block structure of
/// the product Hessians.
pub fn verify_index_additivity(
    f1: &ChartFunction,
    f2: &ChartFunction,
    weights: (f64, f64),
) -> Result<IndexAdditivityReport> {
    let product = product_function(f1, f2, weights)?;
    let f1_points = search_critical_points(f1)?;
    let f2_points = search_critical_points(f2)?;
    let product_points = search_critical_points(&product)?;

    let split = f1.dim;
    let charts2 = f2.charts.len();
    let mut pairs = Vec::new();
    let mut unmatched = Vec::new();
    let mut seen: HashSet<(usize, usize)> = HashSet::new();
    let mut duplicate_pair = false;
    let mut index_additivity_ok = true;
    let mut block_offdiag_ok = true;
    let mut max_offdiag_rel = 0.0f64;

    for (pi, point) in product_points.iter().enumerate() {
        let (x1, x2) = point.coordinates.split_at(split);
        let frame1 = &f1.charts[point.chart_index / charts2].frame;
        let frame2 = &f2.charts[point.chart_index % charts2].frame;
        let m1 = unique_match(f1, &f1_points, frame1, x1);
        let m2 = unique_match(f2, &f2_points, frame2, x2);
        let (Some(i1), Some(i2)) = (m1, m2) else {
            unmatched.push(pi);
            continue;
        };
        if !seen.insert((i1, i2)) {
            duplicate_pair = true;
        }
        let index_sum_ok = point.index == f1_points[i1].index + f2_points[i2].index;
        index_additivity_ok &= index_sum_ok;
        let hessian = hessian_raw(&product, point.chart_index, &point.coordinates, H_HESS);
        let offdiag_rel = offdiagonal_block_rel(&hessian, split);
        max_offdiag_rel = max_offdiag_rel.max(offdiag_rel);
        block_offdiag_ok &= offdiag_rel < OFFDIAG_REL_MAX;
        pairs.push(PairMatch {
            product_point: pi,
            f1_point: i1,
            f2_point: i2,
            index_sum_ok,
            offdiag_rel,
        });
    }

    let f1_histogram = histogram(f1.dim, &f1_points);
    let f2_histogram = histogram(f2.dim, &f2_points);
    let product_histogram = histogram(product.dim, &product_points);
    let count_identity_ok = product_points.len() == f1_points.len() * f2_points.len();
    let pairing_bijective = unmatched.is_empty() && !duplicate_pair && count_identity_ok;
    let histogram_matches_convolution =
        product_histogram == f1_histogram.convolve(&f2_histogram);
    let f1_declared_ok = f1
        .declared_counts
        .as_ref()
        .map_or(true, |d| d == &f1_histogram);
    let f2_declared_ok = f2
        .declared_counts
        .as_ref()
        .map_or(true, |d| d == &f2_histogram);
    let pass = count_identity_ok
        && pairing_bijective
        && index_additivity_ok
        && histogram_matches_convolution
        && block_offdiag_ok
        && f1_declared_ok
        && f2_declared_ok;

    Ok(IndexAdditivityReport {
        f1_name: f1.name.clone(),
        f2_name: f2.name.clone(),
        weights,
        f1_points,
        f2_points,
        product_points,
        pairs,
        unmatched,
        f1_histogram,
        f2_histogram,
        product_histogram,
        f1_declared_ok,
        f2_declared_ok,
        count_identity_ok,
        pairing_bijective,
        index_additivity_ok,
        histogram_matches_convolution,
        block_offdiag_ok,
        max_offdiag_rel,
        pass,
    })
}

/// The unique point of `points` in `frame` within [`TOL_MATCH`] of `x`,
/// or `None` when there is no match or more than one.
fn unique_match(
    f: &ChartFunction,
    points: &[CriticalPoint],
    frame: &str,
    x: &[f64],
) -> Option<usize> {
    let mut found = None;
    for (i, p) in points.iter().enumerate() {
        if p.frame == frame && f.periodic_distance(&p.coordinates, x) < TOL_MATCH {
            if found.is_some() {
                return None;
            }
            found = Some(i);
        }
    }
    found
}

impl IndexAdditivityReport {
    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("report serialization");
        text.push('\n');
        text
    }
}

fn coords_string(coords: &[f64]) -> String {
    let parts: Vec<String> = coords.iter().map(|c| format!("{c:.4}")).collect();
    format!("({})", parts.join(", "))
}

impl fmt::Display for IndexAdditivityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "product verification: f1={} f2={} weights=({:.6}, {:.6})",
            self.f1_name, self.f2_name, self.weights.0, self.weights.1
        )?;
        writeln!(
            f,
            "f1: {} critical points, histogram {}",
            self.f1_points.len(),
            self.f1_histogram
        )?;
        writeln!(
            f,
            "f2: {} critical points, histogram {}",
            self.f2_points.len(),
            self.f2_histogram
        )?;
        writeln!(
            f,
            "product: {} critical points, histogram {}",
            self.product_points.len(),
            self.product_histogram
        )?;
        writeln!(
            f,
            "{:>4}  {:<16} {:>6}  {:<34} {:>10}  {}",
            "#", "chart", "index", "coordinates", "pair", "i1+i2"
        )?;
        for pair in &self.pairs {
            let p = &self.product_points[pair.product_point];
            let sum = self.f1_points[pair.f1_point].index + self.f2_points[pair.f2_point].index;
            writeln!(
                f,
                "{:>4}  {:<16} {:>6}  {:<34} {:>10}  {}{}",
                pair.product_point,
                p.chart,
                p.index,
                coords_string(&p.coordinates),
                format!("({}, {})", pair.f1_point, pair.f2_point),
                sum,
                if pair.index_sum_ok { "" } else { "  MISMATCH" }
            )?;
        }
        for &pi in &self.unmatched {
            let p = &self.product_points[pi];
            writeln!(
                f,
                "{:>4}  {:<16} {:>6}  {:<34} {:>10}  UNMATCHED",
                pi,
                p.chart,
                p.index,
                coords_string(&p.coordinates),
                "-"
            )?;
        }
        writeln!(
            f,
            "checks: counts {}; pairing {}; index additivity {}; histogram vs convolution {}; \
             off-diagonal blocks {} (max rel {:.2e})",
            ok_word(self.count_identity_ok),
            ok_word(self.pairing_bijective),
            ok_word(self.index_additivity_ok),
            ok_word(self.histogram_matches_convolution),
            ok_word(self.block_offdiag_ok),
            self.max_offdiag_rel
        )?;
        write!(f, "verdict: {}", if self.pass { "PASS" } else { "FAIL" })
    }
}

fn ok_word(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAIL"
    }
}
