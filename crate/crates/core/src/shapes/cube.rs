use crate::dataset::Dataset;
use crate::error::Result;
use crate::partition::gen_nproduct;
use crate::rng::RandomStream;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CubeKind {
    Grid,
    Unif,
}

pub fn gen_cube(kind: CubeKind, n: usize, p: usize, stream: &mut RandomStream) -> Result<Dataset> {
    match kind {
        CubeKind::Grid => gen_gridcube(n, p),
        CubeKind::Unif => gen_unifcube(n, p, stream),
    }
}

/// Regular lattice in `[0, 1]^p`, endpoints included, with per-axis
/// resolution from `gen_nproduct(n, p)`. The point count is the product of
/// those resolutions. The first column varies fastest.
pub fn gen_gridcube(n: usize, p: usize) -> Result<Dataset> {
    let levels = gen_nproduct(n as u64, p);
    let total: usize = levels.iter().map(|&l| l as usize).product();
    let mut values = Vec::with_capacity(total * p);
    let mut counter = vec![0u64; p];
    for _ in 0..total {
        for (c, &l) in counter.iter().zip(&levels) {
            values.push(if l > 1 { *c as f64 / (l - 1) as f64 } else { 0.0 });
        }
        for (c, &l) in counter.iter_mut().zip(&levels) {
            *c += 1;
            if *c < l {
                break;
            }
            *c = 0;
        }
    }
    Dataset::from_vec(total, p, values)
}

/// `n` uniform points in `[0, 1]^p`; rows that land exactly on a vertex are
/// re-drawn.
pub fn gen_unifcube(n: usize, p: usize, stream: &mut RandomStream) -> Result<Dataset> {
    let mut values = Vec::with_capacity(n * p);
    let mut row = vec![0.0; p];
    let mut kept = 0;
    while kept < n {
        row.iter_mut().for_each(|v| *v = stream.uniform01());
        let is_vertex = p > 0 && row.iter().all(|&v| v == 0.0 || v == 1.0);
        if !is_vertex {
            values.extend_from_slice(&row);
            kept += 1;
        }
    }
    Dataset::from_vec(n, p, values)
}
