use std::f64::consts::PI;

use crate::dataset::Dataset;
use crate::error::{param_err, Result};
use crate::rng::RandomStream;

/// Swiss roll: `t ~ U(0, 3π)`, `(t cos t, t sin t, U(w1, w2))`.
pub fn gen_swissroll(n: usize, w: [f64; 2], stream: &mut RandomStream) -> Result<Dataset> {
    let [w1, w2] = w;
    if !(w1 < w2) || !w1.is_finite() || !w2.is_finite() {
        return Err(param_err("w", format!("needs w1 < w2, got ({w1}, {w2})")));
    }
    let mut values = Vec::with_capacity(3 * n);
    for _ in 0..n {
        let t = stream.uniform(0.0, 3.0 * PI);
        values.extend([t * t.cos(), t * t.sin(), stream.uniform(w1, w2)]);
    }
    Dataset::from_vec(n, 3, values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::rng::make_stream;

    #[test]
    fn radius_recovers_parameter() {
        let ds = gen_swissroll(2000, [-1.0, 2.0], &mut make_stream(1)).unwrap();
        for r in ds.rows() {
            let t = r[0].hypot(r[1]);
            assert!((0.0..=3.0 * PI).contains(&t));
            assert!((r[0] - t * t.cos()).abs() < 1e-9);
            assert!((r[1] - t * t.sin()).abs() < 1e-9);
            assert!((-1.0..=2.0).contains(&r[2]));
        }
    }

    #[test]
    fn rejects_empty_interval() {
        assert!(matches!(
            gen_swissroll(5, [1.0, 0.0], &mut make_stream(2)),
            Err(Error::Parameter { .. })
        ));
    }
}
