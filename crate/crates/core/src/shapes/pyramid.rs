use std::f64::consts::PI;

use crate::dataset::Dataset;
use crate::error::{param_err, Error, Result};
use crate::rng::RandomStream;

use super::sampling::{append_noise, clamped_exp};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PyramidKind {
    /// Rectangular base with half-widths `l_vec` and tip half-width `rt`.
    Rect { l_vec: [f64; 2], rt: f64 },
    /// Triangular base of size `l` and tip size `rt`.
    Tri { l: f64, rt: f64 },
    /// Hexagonal star base of radius `rb`.
    Star { rb: f64 },
    /// Chaos-game fill of a p-simplex.
    Frac,
}

/// Pyramid family. For rect, tri and star the last column is the height and
/// the columns between the base block and the height are N(0, 0.2²) noise.
pub fn gen_pyramid(kind: PyramidKind, n: usize, p: usize, h: f64, stream: &mut RandomStream) -> Result<Dataset> {
    match kind {
        PyramidKind::Rect { l_vec, rt } => {
            check_dim("pyrrect", p, 4)?;
            check_height(h)?;
            let [lx, ly] = l_vec;
            check_base("l_vec", lx.min(ly), rt)?;
            let rate = 2.0 / h;
            tapered(n, p, 3, stream, |s| {
                let z = clamped_exp(rate, h, s);
                let rx = rt + (lx - rt) * z / h;
                let ry = rt + (ly - rt) * z / h;
                (vec![s.uniform(-rx, rx), s.uniform(-ry, ry), s.uniform(-rx, rx)], z)
            })
        }
        PyramidKind::Tri { l, rt } => {
            check_dim("pyrtri", p, 4)?;
            check_height(h)?;
            check_base("l", l, rt)?;
            let rate = 2.0 / h;
            tapered(n, p, 3, stream, |s| {
                let z = clamped_exp(rate, h, s);
                let r = rt + (l - rt) * z / h;
                let (mut u, mut v) = (s.uniform01(), s.uniform01());
                if u + v > 1.0 {
                    u = 1.0 - u;
                    v = 1.0 - v;
                }
                (vec![r * (1.0 - u - v), r * u, r * v], z)
            })
        }
        PyramidKind::Star { rb } => {
            check_dim("pyrstar", p, 3)?;
            check_height(h)?;
            if !(rb > 0.0) || !rb.is_finite() {
                return Err(param_err("rb", "base radius must be positive"));
            }
            tapered(n, p, 2, stream, |s| {
                let z = s.uniform(0.0, h);
                let r = rb * (1.0 - z / h);
                let theta = s.index(6) as f64 * PI / 3.0;
                let rp = s.uniform01().sqrt();
                (vec![r * rp * theta.cos(), r * rp * theta.sin()], z)
            })
        }
        PyramidKind::Frac => gen_pyrfrac(n, p, stream),
    }
}

fn check_dim(name: &str, p: usize, min: usize) -> Result<()> {
    if p < min {
        return Err(Error::Dimension(format!("{name} needs p >= {min}, got {p}")));
    }
    Ok(())
}

fn check_height(h: f64) -> Result<()> {
    if !(h > 0.0) || !h.is_finite() {
        return Err(param_err("h", "height must be positive"));
    }
    Ok(())
}

fn check_base(name: &str, base: f64, rt: f64) -> Result<()> {
    if !(base > 0.0) || !base.is_finite() {
        return Err(param_err(name, "base size must be positive"));
    }
    if !(rt >= 0.0) || rt > base {
        return Err(param_err("rt", format!("tip size {rt} must lie in [0, {base}]")));
    }
    Ok(())
}

/// Samples `(base block, height)` per row, then lays out
/// `[base | noise | height]`.
fn tapered<F>(n: usize, p: usize, width: usize, stream: &mut RandomStream, mut draw: F) -> Result<Dataset>
where
    F: FnMut(&mut RandomStream) -> (Vec<f64>, f64),
{
    let mut base = Vec::with_capacity(n * width);
    let mut heights = Vec::with_capacity(n);
    for _ in 0..n {
        let (block, z) = draw(stream);
        base.extend(block);
        heights.push(z);
    }
    let base = Dataset::from_vec(n, width, base)?;
    let body = append_noise(base, p - width - 1, stream)?;
    body.hcat(&Dataset::from_vec(n, 1, heights)?)
}

/// Vertices of the simplex used by [`gen_pyrfrac`]: the origin and `p·e_k`.
/// Its hull contains `[0, 1]^p`, so the starting point is inside.
pub fn frac_vertices(p: usize) -> Vec<Vec<f64>> {
    let mut out = vec![vec![0.0; p]];
    for k in 0..p {
        let mut v = vec![0.0; p];
        v[k] = p as f64;
        out.push(v);
    }
    out
}

/// Chaos game: `T_0 ~ U(0,1)^p`, `T_i = (T_{i−1} + C_k)/2` with `C_k` a
/// uniformly chosen simplex vertex. Returns `T_1..T_n`.
pub fn gen_pyrfrac(n: usize, p: usize, stream: &mut RandomStream) -> Result<Dataset> {
    check_dim("pyrfrac", p, 2)?;
    let vertices = frac_vertices(p);
    let mut t: Vec<f64> = (0..p).map(|_| stream.uniform01()).collect();
    let mut values = Vec::with_capacity(n * p);
    for _ in 0..n {
        let c = &vertices[stream.index(vertices.len())];
        for (x, v) in t.iter_mut().zip(c) {
            *x = 0.5 * (*x + v);
        }
        values.extend_from_slice(&t);
    }
    Dataset::from_vec(n, p, values)
}
