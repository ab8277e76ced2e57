//! Named scenes built from the base generators.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

use serde::{Deserialize, Serialize};

use super::spec::{MultiClusterSpec, Rotation};
use super::{gen_multicluster, pad_to_dim};
use crate::dataset::Dataset;
use crate::error::{Error, Result};
use crate::ops::randomize_rows;
use crate::partition::gen_nsum;
use crate::rng::RandomStream;
use crate::rotation::RotationPlan;
use crate::shapes::gaussian::identity_covariance;
use crate::shapes::{gen_gaussian, gen_mobius, ShapeKind, ShapeParams};

pub const PRESETS: &[&str] = &[
    "mobiusgau",
    "multigau",
    "curvygau",
    "klink_circles",
    "chain_circles",
    "klink_curvycycle",
    "chain_curvycycle",
    "gaucircles",
    "gaucurvycycle",
    "onegrid",
    "twogrid_overlap",
    "twogrid_shift",
    "shape_para",
];

/// Noise sd used to lift preset clusters to the scene dimension.
pub const PRESET_PAD_SD: f64 = 0.05;
pub const DEFAULT_PRESET_N: usize = 1000;

/// Overrides for a preset; unset fields take the preset's defaults.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresetOptions {
    /// Total number of cluster points.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
}

struct Layout {
    default_p: usize,
    min_p: usize,
    /// Default cluster count for presets that take `k`.
    default_k: Option<usize>,
    min_k: usize,
}

fn layout(name: &str) -> Option<Layout> {
    let fixed = |default_p, min_p| Layout {
        default_p,
        min_p,
        default_k: None,
        min_k: 1,
    };
    let with_k = |default_p, min_p, k, min_k| Layout {
        default_p,
        min_p,
        default_k: Some(k),
        min_k,
    };
    Some(match name {
        "mobiusgau" => fixed(4, 3),
        "multigau" => with_k(4, 1, 4, 1),
        "curvygau" => fixed(4, 2),
        "klink_circles" | "klink_curvycycle" => with_k(4, 3, 3, 2),
        "chain_circles" | "chain_curvycycle" => with_k(4, 3, 3, 1),
        "gaucircles" | "gaucurvycycle" => with_k(4, 3, 2, 1),
        "onegrid" | "twogrid_overlap" | "twogrid_shift" => fixed(2, 2),
        "shape_para" => with_k(2, 2, 3, 1),
        _ => return None,
    })
}

/// Builds the named scene. Cluster sizes split the total `n` as evenly as
/// possible.
pub fn make_preset(name: &str, opts: &PresetOptions, stream: &RandomStream) -> Result<Dataset> {
    let lay = layout(name).ok_or_else(|| Error::UnknownPreset(name.to_string()))?;
    let p = opts.p.unwrap_or(lay.default_p);
    if p < lay.min_p {
        return Err(Error::Dimension(format!("{name} needs p >= {}, got {p}", lay.min_p)));
    }
    let k = match (lay.default_k, opts.k) {
        (None, Some(_)) => {
            return Err(Error::RejectedParameter {
                param: "k".into(),
                target: name.into(),
            })
        }
        (None, None) => 0,
        (Some(d), k) => k.unwrap_or(d),
    };
    if lay.default_k.is_some() && k < lay.min_k {
        return Err(Error::Infeasible(format!("{name} needs k >= {}, got {k}", lay.min_k)));
    }
    let n = opts.n.unwrap_or(DEFAULT_PRESET_N);
    let origin = vec![0.0; p];
    let along = |axis: usize, v: f64| {
        let mut x = vec![0.0; p];
        x[axis] = v;
        x
    };
    let spec = match name {
        "mobiusgau" => return mobiusgau(n, p, stream),
        "multigau" => {
            let loc = (0..k).map(|c| along(c % p, 5.0 * (1 + c / p) as f64)).collect();
            scene(n, loc, vec![1.0; k], vec![ShapeKind::Gaussian; k])?
        }
        "curvygau" => scene(
            n,
            vec![origin.clone(), along(1, 1.5)],
            vec![1.0, 0.3],
            vec![ShapeKind::Quadratic, ShapeKind::Gaussian],
        )?,
        "klink_circles" | "klink_curvycycle" => {
            let kind = ring_kind(name);
            let mut spec = scene(
                n,
                (0..k)
                    .map(|c| match c {
                        0 => origin.clone(),
                        _ => {
                            let beta = 2.0 * PI * (c - 1) as f64 / (k - 1) as f64;
                            let mut x = origin.clone();
                            x[0] = beta.cos();
                            x[1] = beta.sin();
                            x
                        }
                    })
                    .collect(),
                (0..k).map(|c| if c == 0 { 1.0 } else { 0.8 }).collect(),
                vec![kind; k],
            )?;
            spec.rotation = Some(
                (0..k)
                    .map(|c| {
                        (c > 0).then(|| {
                            let beta = 2.0 * PI * (c - 1) as f64 / (k - 1) as f64;
                            Rotation::Plan(RotationPlan::new(p).then(2, 3, FRAC_PI_2).then(1, 2, beta))
                        })
                    })
                    .collect(),
            );
            ring_params(spec, kind)
        }
        "chain_circles" | "chain_curvycycle" => {
            let kind = ring_kind(name);
            let mut spec = scene(n, (0..k).map(|c| along(0, c as f64)).collect(), vec![1.0; k], vec![kind; k])?;
            spec.rotation = Some(
                (0..k)
                    .map(|c| (c % 2 == 1).then(|| Rotation::Plan(RotationPlan::new(p).then(2, 3, FRAC_PI_2))))
                    .collect(),
            );
            ring_params(spec, kind)
        }
        "gaucircles" | "gaucurvycycle" => {
            let kind = ring_kind(name);
            let mut shapes = vec![ShapeKind::Gaussian];
            shapes.extend(vec![kind; k]);
            let mut scales = vec![0.5];
            scales.extend((1..=k).map(|c| 2.0 * c as f64));
            let spec = scene(n, vec![origin.clone(); k + 1], scales, shapes)?;
            ring_params(spec, kind)
        }
        "onegrid" => grid_scene(n, vec![origin.clone()], vec![None])?,
        "twogrid_overlap" => grid_scene(
            n,
            vec![origin.clone(), origin.clone()],
            vec![None, Some(Rotation::Plan(RotationPlan::new(2).then(1, 2, FRAC_PI_4)))],
        )?,
        "twogrid_shift" => grid_scene(n, vec![origin.clone(), along(0, 0.5)], vec![None, None])?,
        "shape_para" => scene(
            n,
            (0..k).map(|c| along(1, c as f64)).collect(),
            vec![1.0; k],
            vec![ShapeKind::Quadratic; k],
        )?,
        _ => unreachable!("layout covers every preset"),
    };
    gen_multicluster(&spec, stream)
}

fn scene(n: usize, loc: Vec<Vec<f64>>, scale: Vec<f64>, shape: Vec<ShapeKind>) -> Result<MultiClusterSpec> {
    let sizes = gen_nsum(n, shape.len())?;
    let mut spec = MultiClusterSpec::new(sizes, loc, scale, shape);
    spec.pad_sd = PRESET_PAD_SD;
    Ok(spec)
}

fn ring_kind(name: &str) -> ShapeKind {
    if name.ends_with("circles") {
        ShapeKind::Circle
    } else {
        ShapeKind::CurvyCycle
    }
}

/// Keeps circles planar so rings can be placed by rotation.
fn ring_params(mut spec: MultiClusterSpec, kind: ShapeKind) -> MultiClusterSpec {
    if kind == ShapeKind::Circle {
        spec.cluster_params = Some(
            spec.shape
                .iter()
                .map(|s| match s {
                    ShapeKind::Circle => ShapeParams { p: Some(2), ..Default::default() },
                    _ => ShapeParams::default(),
                })
                .collect(),
        );
    }
    spec
}

fn grid_scene(n: usize, loc: Vec<Vec<f64>>, rotation: Vec<Option<Rotation>>) -> Result<MultiClusterSpec> {
    let k = loc.len();
    let mut spec = scene(n, loc, vec![1.0; k], vec![ShapeKind::GridCube; k])?;
    spec.cluster_params = Some(vec![ShapeParams { p: Some(2), ..Default::default() }; k]);
    spec.rotation = Some(rotation);
    Ok(spec)
}

/// A Möbius strip around a small Gaussian at its centre. Built directly so
/// the strip keeps its exact coordinates in the first three columns.
fn mobiusgau(n: usize, p: usize, stream: &RandomStream) -> Result<Dataset> {
    let sizes = gen_nsum(n, 2)?;
    let mut s0 = stream.derive(0);
    let strip = gen_mobius(sizes[0], &mut s0)?;
    let strip = pad_to_dim(&strip, p, PRESET_PAD_SD, &mut s0)?.with_label("mobius");
    let cov: Vec<Vec<f64>> = identity_covariance(p)
        .into_iter()
        .map(|row| row.into_iter().map(|v| v * 0.01).collect())
        .collect();
    let blob = gen_gaussian(sizes[1], &cov, &mut stream.derive(1))?.with_label("gaussian");
    let data = Dataset::vcat(&[strip, blob])?;
    Ok(randomize_rows(&data, &mut stream.derive(2)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::gen_nproduct;
    use crate::rng::make_stream;

    fn distinct_labels(ds: &Dataset) -> Vec<String> {
        let mut l = ds.labels().unwrap().to_vec();
        l.sort();
        l.dedup();
        l
    }

    #[test]
    fn all_presets_build() {
        for name in PRESETS {
            let ds = make_preset(name, &PresetOptions::default(), &make_stream(1)).unwrap_or_else(|e| panic!("{name}: {e}"));
            assert!(ds.nrows() > 0, "{name}");
            assert_eq!(ds, make_preset(name, &PresetOptions::default(), &make_stream(1)).unwrap());
        }
        assert!(matches!(
            make_preset("nope", &PresetOptions::default(), &make_stream(1)),
            Err(Error::UnknownPreset(_))
        ));
    }

    #[test]
    fn mobiusgau_strip_bound() {
        let ds = make_preset("mobiusgau", &PresetOptions::default(), &make_stream(2)).unwrap();
        assert_eq!(distinct_labels(&ds), vec!["gaussian", "mobius"]);
        for (r, l) in ds.rows().zip(ds.labels().unwrap()) {
            if l == "mobius" {
                let radial = r[0].hypot(r[1]);
                assert!((0.5..=1.5).contains(&radial));
            }
        }
    }

    #[test]
    fn multigau_separation() {
        let opts = PresetOptions { k: Some(4), n: Some(2000), ..Default::default() };
        let ds = make_preset("multigau", &opts, &make_stream(3)).unwrap();
        let labels = distinct_labels(&ds);
        assert_eq!(labels.len(), 4);
        let means: Vec<Vec<f64>> = labels
            .iter()
            .map(|l| {
                let idx: Vec<usize> = (0..ds.nrows()).filter(|&i| &ds.labels().unwrap()[i] == l).collect();
                ds.select_rows(&idx).column_means()
            })
            .collect();
        for a in 0..4 {
            for b in a + 1..4 {
                let d: f64 = means[a].iter().zip(&means[b]).map(|(x, y)| (x - y).powi(2)).sum::<f64>().sqrt();
                assert!(d > 3.0);
            }
        }
    }

    #[test]
    fn onegrid_is_lattice() {
        let ds = make_preset("onegrid", &PresetOptions { n: Some(400), ..Default::default() }, &make_stream(4)).unwrap();
        let factors = gen_nproduct(400, 2);
        for (j, &levels) in factors.iter().enumerate() {
            let mut col: Vec<u64> = ds.column(j).iter().map(|v| v.to_bits()).collect();
            col.sort();
            col.dedup();
            assert!(col.len() as u64 <= levels);
        }
    }

    #[test]
    fn option_checks() {
        let bad_k = PresetOptions { k: Some(3), ..Default::default() };
        assert!(matches!(make_preset("onegrid", &bad_k, &make_stream(5)), Err(Error::RejectedParameter { .. })));
        let low_p = PresetOptions { p: Some(2), ..Default::default() };
        assert!(matches!(make_preset("chain_circles", &low_p, &make_stream(5)), Err(Error::Dimension(_))));
    }
}
