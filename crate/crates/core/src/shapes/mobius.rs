use std::f64::consts::PI;

use crate::dataset::Dataset;
use crate::error::Result;
use crate::rng::RandomStream;

/// Möbius strip with ring radius 1 and width 1 (one half-twist):
/// `t ~ U(0, 2π)`, `w ~ U(−1, 1)`,
/// `(1 + (w/2)cos(t/2))·(cos t, sin t)` and `z = (w/2) sin(t/2)`.
pub fn gen_mobius(n: usize, stream: &mut RandomStream) -> Result<Dataset> {
    let mut values = Vec::with_capacity(3 * n);
    for _ in 0..n {
        let t = stream.uniform(0.0, 2.0 * PI);
        let w = stream.uniform(-1.0, 1.0);
        let radial = 1.0 + 0.5 * w * (t / 2.0).cos();
        values.extend([radial * t.cos(), radial * t.sin(), 0.5 * w * (t / 2.0).sin()]);
    }
    Dataset::from_vec(n, 3, values)
}
