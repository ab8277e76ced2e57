//! Branching structures: 2-D linear, curvy and exponential branches, and
//! p-D branches that all originate at one point.

use crate::dataset::Dataset;
use crate::error::{Error, Result};
use crate::partition::gen_nsum;
use crate::rng::RandomStream;

/// Half-open jitter width δ for the 2-D branch kinds.
pub const BRANCH_JITTER: f64 = 0.1;
/// Slope magnitudes for linear branches beyond the second.
pub const LINEAR_SLOPE_RANGE: (f64, f64) = (0.1, 2.0);
/// Curvatures for curvy branches beyond the second.
pub const CURVY_SCALES: [f64; 8] = [-2.0, -1.5, -1.0, -0.5, 0.0, 0.5, 1.0, 1.5];
/// Noise sd for the originating (p-D) branch kinds.
pub const ORG_NOISE_SD: f64 = 0.05;
/// Maximum re-draws when placing a branch away from existing ones.
pub const ATTACH_TRIES: usize = 100;
/// Acceptable fraction of a new branch's bounding box covered by an older one.
pub const ATTACH_MAX_OVERLAP: f64 = 0.5;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BranchKind {
    Linear,
    Curvy,
    Exp,
    OrgLinear,
    OrgCurvy,
}

/// Parameters drawn for one branch.
#[derive(Debug, Clone, PartialEq)]
pub struct BranchParams {
    /// Slope, curvature or steepness `s_i`.
    pub scale: f64,
    /// `(x_start, y_start)`; `(0, 0)` for the originating kinds.
    pub start: (f64, f64),
    /// Sampling interval of the driving coordinate.
    pub domain: (f64, f64),
    /// 0-based active coordinate pair.
    pub axes: (usize, usize),
    /// `σ_i` for exponential branches, 1 otherwise.
    pub sign: f64,
}

/// Branch points (labelled `branch_1`, ...) with the parameters used for each.
#[derive(Debug, Clone)]
pub struct Branches {
    pub data: Dataset,
    pub params: Vec<BranchParams>,
}

pub fn gen_branches(
    kind: BranchKind,
    n: usize,
    k: usize,
    p: usize,
    allow_share: bool,
    stream: &mut RandomStream,
) -> Result<Branches> {
    if k < 1 || n < k {
        return Err(Error::Infeasible(format!("{n} points cannot fill {k} branches")));
    }
    let sizes = gen_nsum(n, k)?;
    match kind {
        BranchKind::Linear => planar(n, &sizes, stream, &LinearRule),
        BranchKind::Curvy => planar(n, &sizes, stream, &CurvyRule),
        BranchKind::Exp => exponential(&sizes, stream),
        BranchKind::OrgLinear | BranchKind::OrgCurvy => {
            if p < 2 {
                return Err(Error::Dimension(format!(
                    "originating branches need p >= 2, got {p}"
                )));
            }
            originating(kind == BranchKind::OrgCurvy, p, &sizes, allow_share, stream)
        }
    }
}

/// Per-kind formulas for the attached 2-D branch families.
trait PlanarRule {
    fn initial(&self, index: usize) -> BranchParams;
    fn draw_scale(&self, stream: &mut RandomStream) -> f64;
    /// Noise-free curve value at `x`.
    fn curve(&self, b: &BranchParams, index: usize, x: f64) -> f64;
    /// Jitter interval added to the curve.
    fn jitter(&self, index: usize) -> (f64, f64);
}

struct LinearRule;

impl PlanarRule for LinearRule {
    fn initial(&self, index: usize) -> BranchParams {
        let scale = if index == 0 { 0.5 } else { -0.5 };
        BranchParams {
            scale,
            start: (0.0, 0.0),
            domain: (0.0, 1.0),
            axes: (0, 1),
            sign: 1.0,
        }
    }

    fn draw_scale(&self, stream: &mut RandomStream) -> f64 {
        let magnitude = stream.uniform(LINEAR_SLOPE_RANGE.0, LINEAR_SLOPE_RANGE.1);
        if stream.uniform01() < 0.5 {
            -magnitude
        } else {
            magnitude
        }
    }

    fn curve(&self, b: &BranchParams, _index: usize, x: f64) -> f64 {
        b.scale * (x - b.start.0) + b.start.1
    }

    fn jitter(&self, _index: usize) -> (f64, f64) {
        (0.0, BRANCH_JITTER)
    }
}

struct CurvyRule;

impl PlanarRule for CurvyRule {
    fn initial(&self, index: usize) -> BranchParams {
        let (domain, scale) = if index == 0 {
            ((0.0, 1.0), 1.0)
        } else {
            ((-1.0, 0.0), -2.0)
        };
        BranchParams {
            scale,
            start: (0.0, 0.0),
            domain,
            axes: (0, 1),
            sign: 1.0,
        }
    }

    fn draw_scale(&self, stream: &mut RandomStream) -> f64 {
        CURVY_SCALES[stream.index(CURVY_SCALES.len())]
    }

    fn curve(&self, b: &BranchParams, index: usize, x: f64) -> f64 {
        if index < 2 {
            0.1 * x + b.scale * x * x
        } else {
            let (xs, ys) = b.start;
            0.1 * x - b.scale * (x * x - xs) + ys
        }
    }

    fn jitter(&self, index: usize) -> (f64, f64) {
        if index < 2 {
            (-BRANCH_JITTER, BRANCH_JITTER)
        } else {
            (0.0, 0.0)
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct BoundingBox {
    x: (f64, f64),
    y: (f64, f64),
}

impl BoundingBox {
    fn area(&self) -> f64 {
        (self.x.1 - self.x.0) * (self.y.1 - self.y.0)
    }

    fn intersection_area(&self, other: &BoundingBox) -> f64 {
        let w = self.x.1.min(other.x.1) - self.x.0.max(other.x.0);
        let h = self.y.1.min(other.y.1) - self.y.0.max(other.y.0);
        w.max(0.0) * h.max(0.0)
    }
}

fn bounding_box<R: PlanarRule>(rule: &R, b: &BranchParams, index: usize) -> BoundingBox {
    let (lo, hi) = b.domain;
    let (j0, j1) = rule.jitter(index);
    let mut y = (f64::INFINITY, f64::NEG_INFINITY);
    for t in 0..=32 {
        let x = lo + (hi - lo) * t as f64 / 32.0;
        let v = rule.curve(b, index, x);
        y = (y.0.min(v + j0), y.1.max(v + j1));
    }
    // keep degenerate (flat, jitter-free) boxes measurable
    if y.1 - y.0 < 1e-6 {
        y = (y.0 - 5e-7, y.1 + 5e-7);
    }
    BoundingBox { x: (lo, hi), y }
}

fn overlap_fraction(candidate: &BoundingBox, existing: &[BoundingBox]) -> f64 {
    let area = candidate.area();
    existing
        .iter()
        .map(|e| candidate.intersection_area(e) / area)
        .fold(0.0, f64::max)
}

fn planar<R: PlanarRule>(
    n: usize,
    sizes: &[usize],
    stream: &mut RandomStream,
    rule: &R,
) -> Result<Branches> {
    let mut values = Vec::with_capacity(2 * n);
    let mut labels = Vec::with_capacity(n);
    let mut params = Vec::with_capacity(sizes.len());
    let mut boxes = Vec::with_capacity(sizes.len());

    for (index, &size) in sizes.iter().enumerate() {
        let branch = if index < 2 {
            rule.initial(index)
        } else {
            attach(rule, index, &values, &boxes, stream)
        };
        let (j0, j1) = rule.jitter(index);
        for _ in 0..size {
            let x = stream.uniform(branch.domain.0, branch.domain.1);
            let eps = if j1 > j0 { stream.uniform(j0, j1) } else { 0.0 };
            values.push(x);
            values.push(rule.curve(&branch, index, x) + eps);
            labels.push(format!("branch_{}", index + 1));
        }
        boxes.push(bounding_box(rule, &branch, index));
        params.push(branch);
    }
    let data = Dataset::from_vec(labels.len(), 2, values)?.with_labels(labels)?;
    Ok(Branches { data, params })
}

/// Starts a new branch at an existing point, re-drawing until its bounding
/// box overlaps every earlier box by less than [`ATTACH_MAX_OVERLAP`]. Keeps
/// the least-overlapping draw if none qualifies.
fn attach<R: PlanarRule>(
    rule: &R,
    index: usize,
    values: &[f64],
    boxes: &[BoundingBox],
    stream: &mut RandomStream,
) -> BranchParams {
    let existing = values.len() / 2;
    let mut best: Option<(f64, BranchParams)> = None;
    for _ in 0..ATTACH_TRIES {
        let at = stream.index(existing);
        let start = (values[2 * at], values[2 * at + 1]);
        let candidate = BranchParams {
            scale: rule.draw_scale(stream),
            start,
            domain: (start.0, start.0 + 1.0),
            axes: (0, 1),
            sign: 1.0,
        };
        let overlap = overlap_fraction(&bounding_box(rule, &candidate, index), boxes);
        if overlap < ATTACH_MAX_OVERLAP {
            return candidate;
        }
        if best.as_ref().is_none_or(|(o, _)| overlap < *o) {
            best = Some((overlap, candidate));
        }
    }
    best.expect("at least one attachment attempt").1
}

fn exponential(sizes: &[usize], stream: &mut RandomStream) -> Result<Branches> {
    let n: usize = sizes.iter().sum();
    let mut values = Vec::with_capacity(2 * n);
    let mut labels = Vec::with_capacity(n);
    let mut params = Vec::with_capacity(sizes.len());
    for (index, &size) in sizes.iter().enumerate() {
        let sign = if index % 2 == 0 { 1.0 } else { -1.0 };
        let scale = stream.uniform(0.5, 2.0);
        for _ in 0..size {
            let x = stream.uniform(-2.0, 2.0);
            values.push(x);
            values.push((sign * scale * x).exp() + stream.uniform(0.0, BRANCH_JITTER));
            labels.push(format!("branch_{}", index + 1));
        }
        params.push(BranchParams {
            scale,
            start: (0.0, 1.0),
            domain: (-2.0, 2.0),
            axes: (0, 1),
            sign,
        });
    }
    let data = Dataset::from_vec(n, 2, values)?.with_labels(labels)?;
    Ok(Branches { data, params })
}

fn coordinate_pairs(p: usize) -> Vec<(usize, usize)> {
    (0..p)
        .flat_map(|a| (a + 1..p).map(move |b| (a, b)))
        .collect()
}

fn originating(
    curvy: bool,
    p: usize,
    sizes: &[usize],
    allow_share: bool,
    stream: &mut RandomStream,
) -> Result<Branches> {
    let pairs = coordinate_pairs(p);
    let order = stream.permutation(pairs.len());
    let n: usize = sizes.iter().sum();
    let mut values = Vec::with_capacity(p * n);
    let mut labels = Vec::with_capacity(n);
    let mut params = Vec::with_capacity(sizes.len());
    for (index, &size) in sizes.iter().enumerate() {
        let axes = if !allow_share && index < pairs.len() {
            pairs[order[index]]
        } else {
            pairs[stream.index(pairs.len())]
        };
        let scale = if index < pairs.len() {
            1.0
        } else {
            // {1, 1.5, ..., 8}
            1.0 + 0.5 * stream.index(15) as f64
        };
        for _ in 0..size {
            let mut row: Vec<f64> = (0..p).map(|_| stream.normal(0.0, ORG_NOISE_SD)).collect();
            let x = stream.uniform(0.0, 1.0);
            let f = if curvy { -scale * x * x } else { scale * x };
            row[axes.0] = x;
            row[axes.1] += f;
            values.extend(row);
            labels.push(format!("branch_{}", index + 1));
        }
        params.push(BranchParams {
            scale,
            start: (0.0, 0.0),
            domain: (0.0, 1.0),
            axes,
            sign: 1.0,
        });
    }
    let data = Dataset::from_vec(n, p, values)?.with_labels(labels)?;
    Ok(Branches { data, params })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::make_stream;

    fn rows_of(b: &Branches, label: &str) -> Vec<Vec<f64>> {
        b.data
            .rows()
            .zip(b.data.labels().unwrap())
            .filter(|(_, l)| l.as_str() == label)
            .map(|(r, _)| r.to_vec())
            .collect()
    }

    #[test]
    fn linear_first_branch() {
        let b = gen_branches(BranchKind::Linear, 300, 2, 2, false, &mut make_stream(1)).unwrap();
        let first = rows_of(&b, "branch_1");
        assert_eq!(first.len(), 150);
        assert_eq!(rows_of(&b, "branch_2").len(), 150);
        let bp = &b.params[0];
        assert_eq!(bp.scale, 0.5);
        for r in first {
            let resid = r[1] - (0.5 * (r[0] - bp.start.0) + bp.start.1);
            assert!((0.0..=BRANCH_JITTER).contains(&resid), "{resid}");
        }
    }

    #[test]
    fn linear_extra_branches_attach_to_existing_points() {
        let b = gen_branches(BranchKind::Linear, 600, 6, 2, false, &mut make_stream(2)).unwrap();
        for (i, bp) in b.params.iter().enumerate().skip(2) {
            assert!(bp.scale.abs() >= 0.1 && bp.scale.abs() <= 2.0);
            let earlier: Vec<&[f64]> = b
                .data
                .rows()
                .zip(b.data.labels().unwrap())
                .filter(|(_, l)| l[7..].parse::<usize>().unwrap() <= i)
                .map(|(r, _)| r)
                .collect();
            assert!(earlier.iter().any(|r| r[0] == bp.start.0 && r[1] == bp.start.1));
        }
    }

    #[test]
    fn exp_second_branch_mirrors() {
        let b = gen_branches(BranchKind::Exp, 200, 2, 2, false, &mut make_stream(3)).unwrap();
        let s2 = b.params[1].scale;
        assert_eq!(b.params[1].sign, -1.0);
        for r in rows_of(&b, "branch_2") {
            let resid = r[1] - (-s2 * r[0]).exp();
            assert!((0.0..=BRANCH_JITTER + 1e-12).contains(&resid), "{resid}");
        }
    }

    #[test]
    fn curvy_reference_branches() {
        let b = gen_branches(BranchKind::Curvy, 400, 4, 2, false, &mut make_stream(4)).unwrap();
        for r in rows_of(&b, "branch_1") {
            assert!((0.0..1.0).contains(&r[0]));
            assert!((r[1] - (0.1 * r[0] + r[0] * r[0])).abs() <= BRANCH_JITTER);
        }
        for r in rows_of(&b, "branch_2") {
            assert!((r[1] - (0.1 * r[0] - 2.0 * r[0] * r[0])).abs() <= BRANCH_JITTER);
        }
        let bp = &b.params[2];
        for r in rows_of(&b, "branch_3") {
            let (xs, ys) = bp.start;
            assert!((r[1] - (0.1 * r[0] - bp.scale * (r[0] * r[0] - xs) + ys)).abs() < 1e-12);
        }
    }

    /// Active pair = the two coordinates with the largest variance.
    fn active_pair(rows: &[Vec<f64>]) -> (usize, usize) {
        let p = rows[0].len();
        let ds = Dataset::from_rows(rows).unwrap();
        let sds = ds.column_sds();
        let mut idx: Vec<usize> = (0..p).collect();
        idx.sort_by(|a, b| sds[*b].partial_cmp(&sds[*a]).unwrap());
        (idx[0].min(idx[1]), idx[0].max(idx[1]))
    }

    #[test]
    fn org_branches_use_distinct_pairs() {
        let b = gen_branches(BranchKind::OrgLinear, 900, 3, 3, false, &mut make_stream(5)).unwrap();
        let mut seen: Vec<(usize, usize)> = (1..=3)
            .map(|i| active_pair(&rows_of(&b, &format!("branch_{i}"))))
            .collect();
        seen.sort();
        assert_eq!(seen, vec![(0, 1), (0, 2), (1, 2)]);
        assert!(b.params.iter().all(|bp| bp.scale == 1.0));
    }

    #[test]
    fn org_extra_branches_reuse_pairs_with_larger_scales() {
        let b = gen_branches(BranchKind::OrgCurvy, 500, 5, 3, false, &mut make_stream(6)).unwrap();
        for bp in &b.params[3..] {
            assert!((1.0..=8.0).contains(&bp.scale));
            assert_eq!((bp.scale * 2.0).fract(), 0.0);
        }
    }

    #[test]
    fn errors() {
        let mut s = make_stream(7);
        assert!(matches!(gen_branches(BranchKind::Linear, 3, 4, 2, false, &mut s), Err(Error::Infeasible(_))));
        assert!(matches!(gen_branches(BranchKind::Linear, 3, 0, 2, false, &mut s), Err(Error::Infeasible(_))));
        assert!(matches!(gen_branches(BranchKind::OrgLinear, 30, 3, 1, false, &mut s), Err(Error::Dimension(_))));
    }
}
