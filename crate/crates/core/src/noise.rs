//! Auxiliary noise dimensions appended to existing structures.

use crate::dataset::Dataset;
use crate::error::{param_err, Error, Result};
use crate::rng::RandomStream;

pub const DEFAULT_NOISE_MEAN: f64 = 0.0;
pub const DEFAULT_NOISE_SD: f64 = 0.2;
/// Noise sd for [`gen_wavydims1`].
pub const DEFAULT_WAVY_SIGMA: f64 = 0.05;
/// Half-width of the uniform jitter in [`gen_wavydims2`] and [`gen_wavydims3`].
pub const DEFAULT_WAVY_JITTER: f64 = 0.05;

/// `p` independent columns, `X_j ~ N(m_j, s_j²)`, with odd-numbered columns
/// (1-based) negated after sampling.
pub fn gen_noisedims(
    n: usize,
    p: usize,
    m: &[f64],
    s: &[f64],
    stream: &mut RandomStream,
) -> Result<Dataset> {
    if m.len() != p || s.len() != p {
        return Err(Error::Shape(format!(
            "m has {} and s has {} entries, expected {p}",
            m.len(),
            s.len()
        )));
    }
    if let Some(bad) = s.iter().find(|v| !(**v > 0.0) || !v.is_finite()) {
        return Err(param_err("s", format!("standard deviations must be positive, got {bad}")));
    }
    let block = stream.fork();
    let mut columns = Vec::with_capacity(p);
    for j in 0..p {
        let mut col = block.derive(j as u64);
        let sign = if (j + 1) % 2 == 1 { -1.0 } else { 1.0 };
        columns.push((0..n).map(|_| sign * col.normal(m[j], s[j])).collect());
    }
    if p == 0 {
        return Dataset::from_vec(n, 0, Vec::new());
    }
    Dataset::from_columns(&columns)
}

/// `X_j = α_j·θ + ε_j`, `α_j = 0.1·j`, `ε_j ~ N(0, σ²)`.
pub fn gen_wavydims1(
    n: usize,
    p: usize,
    theta: &[f64],
    sigma: f64,
    stream: &mut RandomStream,
) -> Result<Dataset> {
    if theta.len() != n {
        return Err(Error::Shape(format!("theta has {} entries, expected {n}", theta.len())));
    }
    if !(sigma >= 0.0) || !sigma.is_finite() {
        return Err(param_err("sigma", "must be non-negative"));
    }
    let columns: Vec<Vec<f64>> = (1..=p)
        .map(|j| {
            let alpha = wavy1_slope(j);
            theta.iter().map(|t| alpha * t + stream.normal(0.0, sigma)).collect()
        })
        .collect();
    Dataset::from_columns(&columns)
}

/// Slope of column `j` (1-based) in [`gen_wavydims1`].
pub fn wavy1_slope(j: usize) -> f64 {
    0.1 * j as f64
}

/// One column of [`gen_wavydims2`]: `beta · (−1)^⌊j/2⌋ · x^power`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerTerm {
    pub beta: f64,
    pub power: i32,
    pub sign: f64,
}

impl PowerTerm {
    pub fn eval(&self, x: f64) -> f64 {
        self.beta * self.sign * x.powi(self.power)
    }
}

/// `(−1)^⌊j/2⌋` for 1-based column `j`.
pub fn alternating_sign(j: usize) -> f64 {
    if (j / 2).is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

/// `X_j = β_j (−1)^⌊j/2⌋ x1^{k_j} + ε_j` with `k_j ∈ {2, 3, 4}`,
/// `β_j ~ U(0.5, 1.5)` and `ε_j ~ U(−jitter, jitter)`.
///
/// Returns the drawn terms alongside the data.
pub fn gen_wavydims2(
    n: usize,
    p: usize,
    x1: &[f64],
    jitter: f64,
    stream: &mut RandomStream,
) -> Result<(Dataset, Vec<PowerTerm>)> {
    if x1.len() != n {
        return Err(Error::Shape(format!("x1 has {} entries, expected {n}", x1.len())));
    }
    if !(jitter >= 0.0) || !jitter.is_finite() {
        return Err(param_err("jitter", "must be non-negative"));
    }
    let terms: Vec<PowerTerm> = (1..=p)
        .map(|j| PowerTerm {
            power: 2 + stream.index(3) as i32,
            beta: stream.uniform(0.5, 1.5),
            sign: alternating_sign(j),
        })
        .collect();
    let columns: Vec<Vec<f64>> = terms
        .iter()
        .map(|t| {
            x1.iter()
                .map(|&x| t.eval(x) + stream.uniform(-jitter, jitter))
                .collect()
        })
        .collect();
    Ok((Dataset::from_columns(&columns)?, terms))
}

/// Nonlinear combinations used for columns 4, 5, ... of [`gen_wavydims3`],
/// cycling through the list.
pub fn wavy3_term(j: usize, x1: f64, x2: f64, x3: f64) -> f64 {
    match (j - 4) % 4 {
        0 => x1 * x2,
        1 => x1.sin() + x3 * x3,
        2 => x1 * x1 - x2 * x3,
        _ => x2.cos() * x3,
    }
}

/// First three columns are `base` columns 1–3 plus `U(−jitter, jitter)`
/// perturbations; column `j > 3` is `wavy3_term(j, X1, X2, X3)` plus the same
/// kind of jitter. `p` is the total number of output columns.
pub fn gen_wavydims3(
    n: usize,
    p: usize,
    base: &Dataset,
    jitter: f64,
    stream: &mut RandomStream,
) -> Result<Dataset> {
    if base.ncols() < 3 {
        return Err(Error::Shape(format!(
            "base needs at least 3 columns, has {}",
            base.ncols()
        )));
    }
    if base.nrows() != n {
        return Err(Error::Shape(format!("base has {} rows, expected {n}", base.nrows())));
    }
    if p < 3 {
        return Err(Error::Dimension(format!("p = {p} must be at least 3")));
    }
    if !(jitter >= 0.0) || !jitter.is_finite() {
        return Err(param_err("jitter", "must be non-negative"));
    }
    let mut values = Vec::with_capacity(n * p);
    for row in base.rows() {
        let (x1, x2, x3) = (row[0], row[1], row[2]);
        for j in 1..=p {
            let clean = if j <= 3 { row[j - 1] } else { wavy3_term(j, x1, x2, x3) };
            values.push(clean + stream.uniform(-jitter, jitter));
        }
    }
    Dataset::from_vec(n, p, values)
}

/// Appends columns to `target`, leaving its existing columns untouched.
pub fn append_dims(target: &Dataset, extra: &Dataset) -> Result<Dataset> {
    target.hcat(extra)
}
