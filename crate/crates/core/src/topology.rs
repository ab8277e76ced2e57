//! Spherical holes cut into datasets.

use crate::dataset::Dataset;
use crate::error::{param_err, Error, Result};
use crate::rng::RandomStream;
use crate::shapes::{gen_scurve, gen_unifcube};

/// Fraction retained below which a hole is reported as low-retention.
pub const LOW_RETENTION: f64 = 0.1;
/// Extra oversampling margin for the hole wrappers.
pub const OVERSAMPLE_MARGIN: f64 = 1.1;
const MAX_ROUNDS: usize = 32;

#[derive(Debug, Clone, PartialEq)]
pub struct HoleSpec {
    /// Ball centre; the column means when `None`.
    pub anchor: Option<Vec<f64>>,
    pub r: f64,
}

impl HoleSpec {
    pub fn new(r: f64) -> Self {
        Self { anchor: None, r }
    }

    pub fn at(anchor: Vec<f64>, r: f64) -> Self {
        Self { anchor: Some(anchor), r }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct HoleReport {
    pub data: Dataset,
    pub anchor: Vec<f64>,
    /// Rows examined before filtering.
    pub input_rows: usize,
    /// Rows outside the ball.
    pub retained: usize,
    pub low_retention: bool,
}

impl HoleReport {
    pub fn retained_fraction(&self) -> f64 {
        self.retained as f64 / self.input_rows as f64
    }
}

/// Keeps the rows strictly farther than `r` from the anchor, in order.
pub fn gen_hole(ds: &Dataset, spec: &HoleSpec) -> Result<Dataset> {
    gen_hole_report(ds, spec).map(|r| r.data)
}

pub fn gen_hole_report(ds: &Dataset, spec: &HoleSpec) -> Result<HoleReport> {
    if ds.is_empty() {
        return Err(Error::EmptyInput("cannot cut a hole in an empty dataset".into()));
    }
    if !(spec.r > 0.0) || !spec.r.is_finite() {
        return Err(param_err("r", "radius must be positive"));
    }
    let anchor = match &spec.anchor {
        Some(a) if a.len() != ds.ncols() => {
            return Err(Error::Dimension(format!(
                "anchor has {} entries, data has {} columns",
                a.len(),
                ds.ncols()
            )))
        }
        Some(a) => a.clone(),
        None => ds.column_means(),
    };
    let r2 = spec.r * spec.r;
    let keep: Vec<usize> = ds
        .rows()
        .enumerate()
        .filter(|(_, row)| row.iter().zip(&anchor).map(|(x, a)| (x - a) * (x - a)).sum::<f64>() > r2)
        .map(|(i, _)| i)
        .collect();
    if keep.is_empty() {
        return Err(Error::DegenerateHole(format!(
            "a ball of radius {} removes every row",
            spec.r
        )));
    }
    let retained = keep.len();
    let low_retention = (retained as f64) < LOW_RETENTION * ds.nrows() as f64;
    if low_retention {
        log::warn!("hole keeps only {retained} of {} rows", ds.nrows());
    }
    Ok(HoleReport {
        data: ds.select_rows(&keep),
        anchor,
        input_rows: ds.nrows(),
        retained,
        low_retention,
    })
}

/// Draws `m` rows, cuts the hole and grows `m` by the observed loss (plus a
/// margin) until at least `n` rows survive, then thins uniformly to `n`.
/// The returned report describes the final round before thinning.
fn oversample<G, A>(n: usize, r: f64, stream: &mut RandomStream, mut draw: G, anchor: A) -> Result<HoleReport>
where
    G: FnMut(usize, &mut RandomStream) -> Result<Dataset>,
    A: Fn(&Dataset) -> Vec<f64>,
{
    if n == 0 {
        return Err(param_err("n", "must be at least 1"));
    }
    let mut m = n;
    for _ in 0..MAX_ROUNDS {
        let ds = draw(m, stream)?;
        let mut report = gen_hole_report(&ds, &HoleSpec::at(anchor(&ds), r))?;
        if report.retained >= n {
            let keep = stream.sample_sorted(report.retained, n);
            report.data = report.data.select_rows(&keep);
            return Ok(report);
        }
        let grow = (n as f64 * m as f64 / report.retained as f64 * OVERSAMPLE_MARGIN).ceil() as usize;
        m = grow.max(m + 1);
    }
    Err(Error::Infeasible(format!("could not keep {n} rows outside a hole of radius {r}")))
}

/// S-curve with a hole of radius `r_hole` at its (pre-filter) mean.
pub fn gen_scurvehole(n: usize, r_hole: f64, stream: &mut RandomStream) -> Result<Dataset> {
    scurvehole_report(n, r_hole, stream).map(|r| r.data)
}

pub fn scurvehole_report(n: usize, r_hole: f64, stream: &mut RandomStream) -> Result<HoleReport> {
    oversample(n, r_hole, stream, gen_scurve, Dataset::column_means)
}

/// Uniform `[0, 1]^p` cube with a hole of radius `r_hole` at its centre.
pub fn gen_unifcubehole(n: usize, p: usize, r_hole: f64, stream: &mut RandomStream) -> Result<Dataset> {
    unifcubehole_report(n, p, r_hole, stream).map(|r| r.data)
}

pub fn unifcubehole_report(n: usize, p: usize, r_hole: f64, stream: &mut RandomStream) -> Result<HoleReport> {
    if p == 0 {
        return Err(Error::Dimension("unifcubehole needs p >= 1".into()));
    }
    if r_hole >= (p as f64).sqrt() / 2.0 {
        return Err(Error::DegenerateHole(format!(
            "radius {r_hole} covers the whole {p}-cube"
        )));
    }
    oversample(n, r_hole, stream, |m, s| gen_unifcube(m, p, s), |_| vec![0.5; p])
}
