use crate::dataset::Dataset;
use crate::error::{param_err, Error, Result};
use crate::rng::RandomStream;

use super::sampling::{truncated_exp, unit_direction};

/// p-D cone along the last axis.
///
/// Heights follow `Exp(2/h)` truncated to `[0, h]`; at height `z` the first
/// `p − 1` coordinates lie on a sphere of radius
/// `ratio + (1 − ratio)·z/h`.
pub fn gen_cone(n: usize, p: usize, h: f64, ratio: f64, stream: &mut RandomStream) -> Result<Dataset> {
    if p < 3 {
        return Err(Error::Dimension(format!("cone needs p >= 3, got {p}")));
    }
    if !(h > 0.0) || !h.is_finite() {
        return Err(param_err("h", "height must be positive"));
    }
    if !(0.0..=1.0).contains(&ratio) {
        return Err(param_err("ratio", format!("{ratio} is outside [0, 1]")));
    }
    let rate = 2.0 / h;
    let mut values = Vec::with_capacity(n * p);
    for _ in 0..n {
        let z = truncated_exp(rate, h, stream);
        let radius = ratio + (1.0 - ratio) * z / h;
        values.extend(unit_direction(p - 1, stream).into_iter().map(|d| d * radius));
        values.push(z);
    }
    Dataset::from_vec(n, p, values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::make_stream;

    fn cross_norm(row: &[f64]) -> f64 {
        row[..row.len() - 1].iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    #[test]
    fn radius_follows_height() {
        let ds = gen_cone(1000, 5, 3.0, 0.25, &mut make_stream(1)).unwrap();
        for r in ds.rows() {
            let z = r[4];
            assert!((0.0..=3.0).contains(&z));
            assert!((cross_norm(r) - (0.25 + 0.75 * z / 3.0)).abs() < 1e-9);
        }
    }

    #[test]
    fn cylinder_and_sharp_limits() {
        let ds = gen_cone(500, 4, 2.0, 1.0, &mut make_stream(2)).unwrap();
        assert!(ds.rows().all(|r| (cross_norm(r) - 1.0).abs() < 1e-9));
        let ds = gen_cone(1000, 3, 2.0, 0.0, &mut make_stream(3)).unwrap();
        assert!(ds.rows().all(|r| (cross_norm(r) - r[2] / 2.0).abs() < 1e-9));
    }

    #[test]
    fn validation() {
        let mut s = make_stream(4);
        assert!(matches!(gen_cone(10, 4, 1.0, 1.5, &mut s), Err(Error::Parameter { .. })));
        assert!(matches!(gen_cone(10, 2, 1.0, 0.5, &mut s), Err(Error::Dimension(_))));
    }
}
