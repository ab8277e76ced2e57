//! Shared sampling primitives.

use crate::dataset::Dataset;
use crate::error::Result;
use crate::noise;
use crate::rng::RandomStream;

/// Uniform direction on the unit sphere in `dim` dimensions, by normalizing
/// a standard normal vector.
pub fn unit_direction(dim: usize, stream: &mut RandomStream) -> Vec<f64> {
    loop {
        let v: Vec<f64> = (0..dim).map(|_| stream.std_normal()).collect();
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm > 1e-12 {
            return v.into_iter().map(|x| x / norm).collect();
        }
    }
}

/// Exponential with the given rate conditioned on `[0, upper]`, drawn by
/// inverting the truncated CDF `F(x) = (1 − e^{−rate·x}) / (1 − e^{−rate·upper})`.
pub fn truncated_exp(rate: f64, upper: f64, stream: &mut RandomStream) -> f64 {
    let mass = -(-rate * upper).exp_m1();
    let u = stream.uniform01();
    (-(-u * mass).ln_1p() / rate).clamp(0.0, upper)
}

/// `min(Exp(rate), upper)`.
pub fn clamped_exp(rate: f64, upper: f64, stream: &mut RandomStream) -> f64 {
    let u = stream.uniform01();
    (-(-u).ln_1p() / rate).min(upper)
}

/// `n` evenly spaced values from `a` to `b` inclusive; `[a]` when `n == 1`.
pub fn linspace(a: f64, b: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![a],
        _ => {
            let step = (b - a) / (n - 1) as f64;
            (0..n)
                .map(|i| if i == n - 1 { b } else { a + step * i as f64 })
                .collect()
        }
    }
}

/// Appends `extra` Gaussian noise columns (mean 0, sd 0.2).
pub fn append_noise(ds: Dataset, extra: usize, stream: &mut RandomStream) -> Result<Dataset> {
    if extra == 0 {
        return Ok(ds);
    }
    let noise = noise::gen_noisedims(
        ds.nrows(),
        extra,
        &vec![noise::DEFAULT_NOISE_MEAN; extra],
        &vec![noise::DEFAULT_NOISE_SD; extra],
        stream,
    )?;
    ds.hcat(&noise)
}
