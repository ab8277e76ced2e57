use crate::dataset::Dataset;
use crate::error::Result;
use crate::rng::RandomStream;

/// Per-column affine parameters drawn by [`gen_longlinear`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LineCoefficients {
    pub scale: f64,
    pub shift: f64,
}

/// A single noisy line in p-D: `X_ij = a_j (t_i + b_j + ε_ij)` with
/// `t_i = i − 1`, `a_j ~ U(−10, 10)`, `b_j ~ U(−300, 300)` and
/// `ε_ij ~ N(0, (0.03 n)²)`.
pub fn gen_longlinear(n: usize, p: usize, stream: &mut RandomStream) -> Result<Dataset> {
    longlinear_with_coefficients(n, p, stream).map(|(d, _)| d)
}

pub fn longlinear_with_coefficients(
    n: usize,
    p: usize,
    stream: &mut RandomStream,
) -> Result<(Dataset, Vec<LineCoefficients>)> {
    let coefs: Vec<LineCoefficients> = (0..p)
        .map(|_| LineCoefficients {
            scale: stream.uniform(-10.0, 10.0),
            shift: stream.uniform(-300.0, 300.0),
        })
        .collect();
    let sd = 0.03 * n as f64;
    let mut values = Vec::with_capacity(n * p);
    for i in 0..n {
        let t = i as f64;
        for c in &coefs {
            values.push(c.scale * (t + c.shift + stream.normal(0.0, sd)));
        }
    }
    Ok((Dataset::from_vec(n, p, values)?, coefs))
}
