use std::f64::consts::PI;

use crate::dataset::Dataset;
use crate::error::{param_err, Error, Result};
use crate::partition::gen_nproduct;
use crate::rng::RandomStream;

use super::sampling::{append_noise, linspace, unit_direction};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClusteredSpheres {
    /// `(n_big, n_small)`; derived from `n` when absent.
    pub n_vec: Option<[usize; 2]>,
    pub k_small: usize,
    /// `(r_big, r_small)`.
    pub r_vec: [f64; 2],
    /// Standard deviation of the small-sphere centers.
    pub spe: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SphereKind {
    Circle,
    CurvyCycle,
    UnifSphere { r: f64 },
    HollowSphere,
    GridedSphere,
    Clustered(ClusteredSpheres),
    Hemisphere,
}

/// Sphere family. `p` is ignored by `UnifSphere` (always 3-D).
pub fn gen_sphere_family(kind: SphereKind, n: usize, p: usize, stream: &mut RandomStream) -> Result<Dataset> {
    match kind {
        SphereKind::Circle => gen_circle(n, p, stream),
        SphereKind::CurvyCycle => gen_curvycycle(n, p, stream),
        SphereKind::UnifSphere { r } => gen_unifsphere(n, r, stream),
        SphereKind::HollowSphere => gen_hollowsphere(n, p, stream),
        SphereKind::GridedSphere => gen_gridedsphere(n, p),
        SphereKind::Clustered(cfg) => gen_clusteredspheres(n, p, cfg, stream),
        SphereKind::Hemisphere => gen_hemisphere(n, p, stream),
    }
}

fn check_dim(name: &str, p: usize, min: usize) -> Result<()> {
    if p < min {
        return Err(Error::Dimension(format!("{name} needs p >= {min}, got {p}")));
    }
    Ok(())
}

/// Unit circle in `(X1, X2)`; `X_j = s_j sin(θ + φ_j)` for `j ≥ 3` with
/// `s_j = √(0.5^{j−2})` and `φ_j = (j − 2)π/(2p)`.
pub fn gen_circle(n: usize, p: usize, stream: &mut RandomStream) -> Result<Dataset> {
    check_dim("circle", p, 2)?;
    let extra: Vec<(f64, f64)> = (3..=p)
        .map(|j| {
            let k = (j - 2) as f64;
            (0.5f64.powf(k).sqrt(), k * PI / (2.0 * p as f64))
        })
        .collect();
    let mut values = Vec::with_capacity(n * p);
    for _ in 0..n {
        let theta = stream.uniform(0.0, 2.0 * PI);
        values.extend([theta.cos(), theta.sin()]);
        values.extend(extra.iter().map(|(s, phi)| s * (theta + phi).sin()));
    }
    Dataset::from_vec(n, p, values)
}

/// `(cos θ, √3/3 + sin θ, cos(3θ)/3)` followed by `p − 3` noise columns.
pub fn gen_curvycycle(n: usize, p: usize, stream: &mut RandomStream) -> Result<Dataset> {
    check_dim("curvycycle", p, 3)?;
    let mut values = Vec::with_capacity(n * 3);
    for _ in 0..n {
        let theta = stream.uniform(0.0, 2.0 * PI);
        values.extend([theta.cos(), 3f64.sqrt() / 3.0 + theta.sin(), (3.0 * theta).cos() / 3.0]);
    }
    append_noise(Dataset::from_vec(n, 3, values)?, p - 3, stream)
}

/// Uniform on the surface of the radius-`r` sphere in 3-D.
pub fn gen_unifsphere(n: usize, r: f64, stream: &mut RandomStream) -> Result<Dataset> {
    if !(r > 0.0) || !r.is_finite() {
        return Err(param_err("r", "radius must be positive"));
    }
    let mut values = Vec::with_capacity(3 * n);
    for _ in 0..n {
        let u = stream.uniform(-1.0, 1.0);
        let theta = stream.uniform(0.0, 2.0 * PI);
        let s = (1.0 - u * u).sqrt();
        values.extend([r * s * theta.cos(), r * s * theta.sin(), r * u]);
    }
    Dataset::from_vec(n, 3, values)
}

/// Uniform on the unit `(p − 1)`-sphere in `R^p`.
pub fn gen_hollowsphere(n: usize, p: usize, stream: &mut RandomStream) -> Result<Dataset> {
    check_dim("hollowsphere", p, 2)?;
    let mut values = Vec::with_capacity(n * p);
    for _ in 0..n {
        values.extend(unit_direction(p, stream));
    }
    Dataset::from_vec(n, p, values)
}

/// Deterministic grid on the unit `(p − 1)`-sphere. Angle resolutions come
/// from `gen_nproduct(n, p − 1)`; the first `p − 2` angles span `[0, π]`
/// inclusive and the last spans `[0, 2π)`.
pub fn gen_gridedsphere(n: usize, p: usize) -> Result<Dataset> {
    check_dim("gridedsphere", p, 2)?;
    let m = p - 1;
    let levels = gen_nproduct(n as u64, m);
    let axes: Vec<Vec<f64>> = levels
        .iter()
        .enumerate()
        .map(|(a, &l)| {
            let l = l as usize;
            if a + 1 < m {
                linspace(0.0, PI, l)
            } else {
                (0..l).map(|i| 2.0 * PI * i as f64 / l as f64).collect()
            }
        })
        .collect();
    let total: usize = levels.iter().map(|&l| l as usize).product();
    let mut values = Vec::with_capacity(total * p);
    let mut counter = vec![0usize; m];
    let mut angles = vec![0.0; m];
    for _ in 0..total {
        for (a, c) in counter.iter().enumerate() {
            angles[a] = axes[a][*c];
        }
        values.extend(hyperspherical(&angles));
        for (a, c) in counter.iter_mut().enumerate() {
            *c += 1;
            if *c < axes[a].len() {
                break;
            }
            *c = 0;
        }
    }
    Dataset::from_vec(total, p, values)
}

/// Product-of-sines map from `p − 1` angles to the unit sphere in `R^p`.
pub fn hyperspherical(angles: &[f64]) -> Vec<f64> {
    let mut out = Vec::with_capacity(angles.len() + 1);
    let mut sines = 1.0;
    for a in angles {
        out.push(sines * a.cos());
        sines *= a.sin();
    }
    out.push(sines);
    out
}

/// Resolves `(n_big, n_small)`. Without `n_vec`, each small sphere gets
/// `max(1, n / (5 + k_small))` points and the big one the rest.
pub fn clustered_sizes(n: usize, cfg: &ClusteredSpheres) -> Result<(usize, usize)> {
    let k = cfg.k_small;
    match cfg.n_vec {
        Some([big, small]) => {
            if big + k * small != n {
                return Err(param_err(
                    "n_vec",
                    format!("{big} + {k}·{small} does not add up to n = {n}"),
                ));
            }
            Ok((big, small))
        }
        None => {
            let small = (n / (5 + k)).max(1);
            let used = k * small;
            if used >= n {
                return Err(Error::Infeasible(format!(
                    "n = {n} is too small for {k} small spheres and a big one"
                )));
            }
            Ok((n - used, small))
        }
    }
}

/// One big sphere at the origin and `k_small` small spheres centred at
/// `N(0, spe² I_p)` draws, labelled `big` and `small_1..`.
pub fn gen_clusteredspheres(n: usize, p: usize, cfg: ClusteredSpheres, stream: &mut RandomStream) -> Result<Dataset> {
    check_dim("clusteredspheres", p, 2)?;
    let [r_big, r_small] = cfg.r_vec;
    if !(r_big > 0.0 && r_small > 0.0) || !r_big.is_finite() || !r_small.is_finite() {
        return Err(param_err("r_vec", "radii must be positive"));
    }
    if !(cfg.spe > 0.0) || !cfg.spe.is_finite() {
        return Err(param_err("spe", "spacing must be positive"));
    }
    let (n_big, n_small) = clustered_sizes(n, &cfg)?;
    let mut values = Vec::with_capacity(n * p);
    let mut labels = Vec::with_capacity(n);
    for _ in 0..n_big {
        values.extend(unit_direction(p, stream).into_iter().map(|d| d * r_big));
        labels.push("big".to_string());
    }
    for c in 1..=cfg.k_small {
        let center: Vec<f64> = (0..p).map(|_| stream.normal(0.0, cfg.spe)).collect();
        let label = format!("small_{c}");
        for _ in 0..n_small {
            let dir = unit_direction(p, stream);
            values.extend(dir.iter().zip(&center).map(|(d, m)| m + d * r_small));
            labels.push(label.clone());
        }
    }
    Dataset::from_vec(n, p, values)?.with_labels(labels)
}

/// One half of the unit 3-sphere in `R^4`: `θ1, θ2 ~ U(0, π)`,
/// `θ3 ~ U(0, π/2)`.
pub fn gen_hemisphere(n: usize, p: usize, stream: &mut RandomStream) -> Result<Dataset> {
    if p != 4 {
        return Err(Error::Dimension(format!("hemisphere needs p = 4, got {p}")));
    }
    let mut values = Vec::with_capacity(4 * n);
    for _ in 0..n {
        let t1 = stream.uniform(0.0, PI);
        let t2 = stream.uniform(0.0, PI);
        let t3 = stream.uniform(0.0, PI / 2.0);
        values.extend([
            t1.sin() * t2.cos(),
            t1.sin() * t2.sin(),
            t1.cos() * t3.cos(),
            t1.cos() * t3.sin(),
        ]);
    }
    Dataset::from_vec(n, 4, values)
}
