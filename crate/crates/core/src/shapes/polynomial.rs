use crate::dataset::Dataset;
use crate::error::{param_err, Result};
use crate::rng::RandomStream;

/// Upper end of the one-sided `U(0, 0.5)` jitter.
pub const POLY_JITTER: f64 = 0.5;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyKind {
    /// `X2 = X1 − X1² + ε`
    Quadratic,
    /// `X2 = X1 + X1² − X1³ + ε`
    Cubic,
}

impl PolyKind {
    pub fn eval(self, x: f64) -> f64 {
        match self {
            PolyKind::Quadratic => x - x * x,
            PolyKind::Cubic => x + x * x - x * x * x,
        }
    }
}

/// 2-D polynomial curve with `X1 ~ U(a, b)` and `ε ~ U(0, 0.5)`.
pub fn gen_polynomial(
    kind: PolyKind,
    n: usize,
    range: [f64; 2],
    stream: &mut RandomStream,
) -> Result<Dataset> {
    let [a, b] = range;
    if !(a < b) || !a.is_finite() || !b.is_finite() {
        return Err(param_err("range", format!("needs a < b, got ({a}, {b})")));
    }
    let mut values = Vec::with_capacity(2 * n);
    for _ in 0..n {
        let x = stream.uniform(a, b);
        values.push(x);
        values.push(kind.eval(x) + stream.uniform(0.0, POLY_JITTER));
    }
    Dataset::from_vec(n, 2, values)
}
