//! Multi-cluster scenes: per-cluster generation, scaling, rotation, noise
//! padding and placement, plus the named preset scenes.

pub mod presets;
pub mod spec;

pub use presets::{make_preset, PresetOptions, PRESETS};
pub use spec::{MultiClusterSpec, Rotation, BACKGROUND_FRACTION, DEFAULT_PAD_SD, ROTATION_TOL};

use nalgebra::DMatrix;

use crate::dataset::Dataset;
use crate::error::{Error, Result};
use crate::ops::{gen_bkgnoise, randomize_rows};
use crate::rng::RandomStream;
use crate::rotation::{check_orthogonal, rotate_rows};
use crate::shapes;

/// Appends `p_target − p` columns drawn from `N(μ, sd²)`, where `μ` is the
/// mean of every entry already in `ds`.
pub fn pad_to_dim(ds: &Dataset, p_target: usize, sd: f64, stream: &mut RandomStream) -> Result<Dataset> {
    let p = ds.ncols();
    if p_target < p {
        return Err(Error::Dimension(format!("cannot pad {p} columns down to {p_target}")));
    }
    if p_target == p {
        return Ok(ds.clone());
    }
    let extra = p_target - p;
    let mu = ds.grand_mean();
    let noise = gen_bkgnoise(ds.nrows(), extra, &vec![mu; extra], &vec![sd; extra], stream)?;
    ds.hcat(&noise)
}

/// `x ← R·(scale·x)`, then a shift that puts the column means at `center`.
pub fn apply_transform(
    ds: &Dataset,
    scale: f64,
    rotation: Option<&DMatrix<f64>>,
    center: Option<&[f64]>,
) -> Result<Dataset> {
    let mut out = ds.map_rows(|src, dst| {
        for (d, s) in dst.iter_mut().zip(src) {
            *d = scale * s;
        }
    })?;
    if let Some(r) = rotation {
        check_orthogonal(r, ROTATION_TOL)?;
        out = rotate_rows(&out, r)?;
    }
    if let Some(center) = center {
        if center.len() != out.ncols() {
            return Err(Error::Dimension(format!(
                "centre has {} entries, data has {} columns",
                center.len(),
                out.ncols()
            )));
        }
        let shift: Vec<f64> = out.column_means().iter().zip(center).map(|(m, c)| c - m).collect();
        out = out.map_rows(|src, dst| {
            for ((d, s), t) in dst.iter_mut().zip(src).zip(&shift) {
                *d = s + t;
            }
        })?;
    }
    Ok(out)
}

/// One cluster: generate, scale, rotate, pad and centre at its `loc` row.
/// A rotation sized to the ambient dimension is applied after padding.
fn build_cluster(spec: &MultiClusterSpec, c: usize, stream: &mut RandomStream) -> Result<Dataset> {
    let p = spec.dim();
    let kind = spec.shape[c];
    let raw = shapes::generate(kind, &spec.params_for(c), stream)?;
    if raw.ncols() > p {
        return Err(Error::Dimension(format!(
            "{kind} produces {} columns but loc has {p}",
            raw.ncols()
        )));
    }
    let rotation = match spec.rotation.as_ref().and_then(|r| r[c].as_ref()) {
        Some(r) => Some(r.matrix()?),
        None => None,
    };
    let d = raw.ncols();
    let rotate_after_pad = match &rotation {
        Some(r) if r.nrows() == d => false,
        Some(r) if r.nrows() == p => true,
        Some(r) => {
            let (size, cluster) = (r.nrows(), c + 1);
            return Err(Error::InvalidRotation(format!(
                "cluster {cluster} rotation is {size}x{size} but the shape has {d} and the scene {p} columns"
            )));
        }
        None => false,
    };
    let early = if rotate_after_pad { None } else { rotation.as_ref() };
    let shaped = apply_transform(&raw, spec.scale[c], early, None)?;
    let padded = pad_to_dim(&shaped, p, spec.pad_sd, stream)?;
    let late = if rotate_after_pad { rotation.as_ref() } else { None };
    apply_transform(&padded, 1.0, late, Some(&spec.loc[c]))
}

/// Composes the scene described by `spec`. Cluster `c` draws from
/// `stream.derive(c)`, the background from `derive(k)` and the final shuffle
/// from `derive(k + 1)`.
pub fn gen_multicluster(spec: &MultiClusterSpec, stream: &RandomStream) -> Result<Dataset> {
    spec.validate()?;
    let labels = spec.labels();
    let mut parts = Vec::with_capacity(spec.k + 1);
    for (c, label) in labels.iter().enumerate() {
        let cluster = build_cluster(spec, c, &mut stream.derive(c as u64))?;
        parts.push(cluster.with_label(label));
    }
    let mut data = Dataset::vcat(&parts)?;
    if spec.is_bkg {
        let count = (BACKGROUND_FRACTION * data.nrows() as f64).round() as usize;
        if count > 0 {
            let bkg = gen_bkgnoise(
                count,
                data.ncols(),
                &data.column_means(),
                &data.column_sds(),
                &mut stream.derive(spec.k as u64),
            )?
            .with_label("background");
            data = Dataset::vcat(&[data, bkg])?;
        }
    }
    if spec.shuffle {
        data = randomize_rows(&data, &mut stream.derive(spec.k as u64 + 1));
    }
    Ok(data)
}

/// Vertices of a regular simplex with `p + 1` vertices in `R^p`, centred at
/// the origin with edge length `√2`.
pub fn simplex_vertices(p: usize) -> Vec<Vec<f64>> {
    let m = p + 1;
    // orthonormal basis of the sum-zero hyperplane of R^m (Helmert rows)
    let basis: Vec<Vec<f64>> = (1..m)
        .map(|k| {
            let norm = ((k * (k + 1)) as f64).sqrt();
            (0..m)
                .map(|i| match i.cmp(&k) {
                    std::cmp::Ordering::Less => 1.0 / norm,
                    std::cmp::Ordering::Equal => -(k as f64) / norm,
                    std::cmp::Ordering::Greater => 0.0,
                })
                .collect()
        })
        .collect();
    (0..m)
        .map(|v| basis.iter().map(|b| b[v]).collect())
        .collect()
}
