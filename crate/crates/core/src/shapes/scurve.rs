use std::f64::consts::PI;

use crate::dataset::Dataset;
use crate::error::Result;
use crate::rng::RandomStream;

/// S-curve: `θ ~ U(−3π/2, 3π/2)`, `(sin θ, U(0, 2), sign(θ)(cos θ − 1))`.
pub fn gen_scurve(n: usize, stream: &mut RandomStream) -> Result<Dataset> {
    let mut values = Vec::with_capacity(3 * n);
    for _ in 0..n {
        let theta = stream.uniform(-1.5 * PI, 1.5 * PI);
        let x2 = stream.uniform(0.0, 2.0);
        let sign = if theta > 0.0 {
            1.0
        } else if theta < 0.0 {
            -1.0
        } else {
            0.0
        };
        values.extend([theta.sin(), x2, sign * (theta.cos() - 1.0)]);
    }
    Dataset::from_vec(n, 3, values)
}
