use std::f64::consts::PI;

use crate::dataset::Dataset;
use crate::error::{param_err, Result};

/// Half-width of the band of θ values around π/4.
pub const TREFOIL_BAND: f64 = 0.1;
/// Rows with `1 − X4` at or below this are dropped by the projection.
pub const STEREO_EPS: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrefoilKind {
    FourD,
    ThreeD,
}

pub fn gen_trefoil(kind: TrefoilKind, n: usize, steps: usize) -> Result<Dataset> {
    let knot = gen_trefoil4d(n, steps)?;
    match kind {
        TrefoilKind::FourD => Ok(knot),
        TrefoilKind::ThreeD => stereographic(&knot),
    }
}

/// Trefoil on the 3-sphere. θ takes `steps` values across the band and φ
/// takes `ceil(n / steps)` values in `[0, 4π)`; the φ-major grid is cut to
/// exactly `n` rows.
pub fn gen_trefoil4d(n: usize, steps: usize) -> Result<Dataset> {
    if steps == 0 {
        return Err(param_err("steps", "must be at least 1"));
    }
    let thetas: Vec<f64> = if steps == 1 {
        vec![PI / 4.0]
    } else {
        (0..steps)
            .map(|i| PI / 4.0 - TREFOIL_BAND + 2.0 * TREFOIL_BAND * i as f64 / (steps - 1) as f64)
            .collect()
    };
    let m = n.div_ceil(steps);
    let mut values = Vec::with_capacity(4 * n);
    'grid: for i in 0..m {
        let phi = 4.0 * PI * i as f64 / m as f64;
        for &theta in &thetas {
            if values.len() == 4 * n {
                break 'grid;
            }
            values.extend(trefoil_point(theta, phi));
        }
    }
    Dataset::from_vec(n, 4, values)
}

pub fn trefoil_point(theta: f64, phi: f64) -> [f64; 4] {
    [
        theta.cos() * phi.cos(),
        theta.cos() * phi.sin(),
        theta.sin() * (1.5 * phi).cos(),
        theta.sin() * (1.5 * phi).sin(),
    ]
}

/// `X_i / (1 − X4)` for `i = 1..3`, skipping rows at the pole.
pub fn stereographic(ds: &Dataset) -> Result<Dataset> {
    let mut values = Vec::with_capacity(3 * ds.nrows());
    for r in ds.rows() {
        let d = 1.0 - r[3];
        if d > STEREO_EPS {
            values.extend([r[0] / d, r[1] / d, r[2] / d]);
        }
    }
    Dataset::from_vec(values.len() / 3, 3, values)
}
