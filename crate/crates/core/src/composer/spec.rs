use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rotation::{check_orthogonal, gen_rotation, RotationPlan};
use crate::shapes::{ParamName, ShapeKind, ShapeParams};

/// Tolerance for user-supplied rotation matrices.
pub const ROTATION_TOL: f64 = 1e-8;
/// Default sd of the noise columns that lift a cluster to the ambient dimension.
pub const DEFAULT_PAD_SD: f64 = 0.2;
/// Background rows as a fraction of the cluster rows.
pub const BACKGROUND_FRACTION: f64 = 0.1;

/// A per-cluster rotation, either as plane steps or as an explicit matrix
/// (row by row).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Rotation {
    Plan(RotationPlan),
    Matrix(Vec<Vec<f64>>),
}

impl Rotation {
    /// The realized matrix, checked for orthogonality.
    pub fn matrix(&self) -> Result<DMatrix<f64>> {
        let m = match self {
            Rotation::Plan(plan) => gen_rotation(plan)?,
            Rotation::Matrix(rows) => {
                let d = rows.len();
                if d == 0 || rows.iter().any(|r| r.len() != d) {
                    return Err(Error::InvalidRotation("matrix must be square and non-empty".into()));
                }
                DMatrix::from_fn(d, d, |i, j| rows[i][j])
            }
        };
        check_orthogonal(&m, ROTATION_TOL)?;
        Ok(m)
    }
}

fn default_true() -> bool {
    true
}

fn default_pad_sd() -> f64 {
    DEFAULT_PAD_SD
}

/// Everything needed to compose a multi-cluster scene.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MultiClusterSpec {
    /// Points per cluster.
    pub n: Vec<usize>,
    pub k: usize,
    /// Cluster centroids, one row per cluster; the row length is the ambient dimension.
    pub loc: Vec<Vec<f64>>,
    pub scale: Vec<f64>,
    pub shape: Vec<ShapeKind>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rotation: Option<Vec<Option<Rotation>>>,
    #[serde(default)]
    pub is_bkg: bool,
    /// Extra arguments offered to every cluster whose kind accepts them.
    #[serde(default, skip_serializing_if = "ShapeParams::is_empty")]
    pub params: ShapeParams,
    /// Extra arguments for individual clusters.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cluster_params: Option<Vec<ShapeParams>>,
    #[serde(default = "default_true")]
    pub shuffle: bool,
    #[serde(default = "default_pad_sd")]
    pub pad_sd: f64,
}

impl MultiClusterSpec {
    /// A spec with no rotations, extras or background.
    pub fn new(n: Vec<usize>, loc: Vec<Vec<f64>>, scale: Vec<f64>, shape: Vec<ShapeKind>) -> Self {
        Self {
            k: n.len(),
            n,
            loc,
            scale,
            shape,
            rotation: None,
            is_bkg: false,
            params: ShapeParams::default(),
            cluster_params: None,
            shuffle: true,
            pad_sd: DEFAULT_PAD_SD,
        }
    }

    /// Ambient dimension (length of the `loc` rows).
    pub fn dim(&self) -> usize {
        self.loc.first().map_or(0, Vec::len)
    }

    pub fn total(&self) -> usize {
        self.n.iter().sum()
    }

    /// Checks lengths, sizes and parameter placement.
    pub fn validate(&self) -> Result<()> {
        let k = self.k;
        if k == 0 {
            return Err(Error::Shape("k must be at least 1".into()));
        }
        let lengths = [
            ("n", self.n.len()),
            ("loc", self.loc.len()),
            ("scale", self.scale.len()),
            ("shape", self.shape.len()),
            ("rotation", self.rotation.as_ref().map_or(k, Vec::len)),
            ("cluster_params", self.cluster_params.as_ref().map_or(k, Vec::len)),
        ];
        for (name, len) in lengths {
            if len != k {
                return Err(Error::Shape(format!("{name} has {len} entries but k = {k}")));
            }
        }
        let p = self.dim();
        if p == 0 || self.loc.iter().any(|row| row.len() != p) {
            return Err(Error::Shape("loc rows must all have the same, non-zero length".into()));
        }
        if self.loc.iter().flatten().any(|v| !v.is_finite()) {
            return Err(Error::Shape("loc entries must be finite".into()));
        }
        if let Some(c) = self.n.iter().position(|&n| n == 0) {
            return Err(Error::Shape(format!("cluster {} has n = 0", c + 1)));
        }
        if let Some(s) = self.scale.iter().find(|s| !(**s > 0.0) || !s.is_finite()) {
            return Err(Error::Shape(format!("scale {s} is not positive")));
        }
        if !(self.pad_sd > 0.0) || !self.pad_sd.is_finite() {
            return Err(Error::Shape("pad_sd must be positive".into()));
        }
        for name in self.params.set_names() {
            if matches!(name, ParamName::N | ParamName::P) {
                return Err(Error::RejectedParameter {
                    param: name.as_str().into(),
                    target: "multicluster".into(),
                });
            }
            if !self.shape.iter().any(|s| s.accepts(name)) {
                return Err(Error::RejectedParameter {
                    param: name.as_str().into(),
                    target: "multicluster".into(),
                });
            }
        }
        if let Some(extras) = &self.cluster_params {
            for (kind, extra) in self.shape.iter().zip(extras) {
                if extra.n.is_some() {
                    return Err(Error::RejectedParameter {
                        param: "n".into(),
                        target: kind.name().into(),
                    });
                }
                extra.check_accepted(*kind)?;
            }
        }
        Ok(())
    }

    /// Parameters passed to the generator of cluster `c`: cluster extras over
    /// shared extras over the ambient `p` (capped at the kind's maximum).
    pub fn params_for(&self, c: usize) -> ShapeParams {
        let kind = self.shape[c];
        let mut base = ShapeParams::with_n(self.n[c]);
        if kind.accepts(ParamName::P) {
            let p = self.dim();
            base.p = Some(kind.max_dim().map_or(p, |m| p.min(m)));
        }
        let mut out = base.overlay(&self.params.filtered_for(kind));
        if let Some(extras) = &self.cluster_params {
            out = out.overlay(&extras[c]);
        }
        if kind == ShapeKind::Gaussian {
            if let Some(s) = &out.s {
                out.p = Some(s.len());
            }
        }
        out
    }

    /// Row labels: shape names, with `_1`, `_2`, … on every repeated name.
    pub fn labels(&self) -> Vec<String> {
        self.shape
            .iter()
            .enumerate()
            .map(|(c, kind)| {
                let same = self.shape.iter().filter(|s| *s == kind).count();
                if same > 1 {
                    let nth = self.shape[..=c].iter().filter(|s| *s == kind).count();
                    format!("{}_{nth}", kind.name())
                } else {
                    kind.name().to_string()
                }
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn usage() -> MultiClusterSpec {
        MultiClusterSpec::new(
            vec![200, 300, 500],
            vec![vec![0.0; 4], vec![5.0, 9.0, 0.0, 0.0], vec![3.0, 4.0, 10.0, 7.0]],
            vec![3.0, 1.0, 2.0],
            vec![ShapeKind::Gaussian, ShapeKind::Cone, ShapeKind::UnifCube],
        )
    }

    #[test]
    fn length_mismatch() {
        let mut spec = usage();
        spec.scale.push(1.0);
        assert!(matches!(spec.validate(), Err(Error::Shape(_))));
    }

    #[test]
    fn shared_parameter_must_fit_someone() {
        let mut spec = usage();
        spec.shape = vec![ShapeKind::Gaussian; 3];
        spec.params.ratio = Some(0.3);
        assert!(matches!(spec.validate(), Err(Error::RejectedParameter { .. })));
        spec.shape[1] = ShapeKind::Cone;
        spec.validate().unwrap();
        assert_eq!(spec.params_for(0).ratio, None);
        assert_eq!(spec.params_for(1).ratio, Some(0.3));
    }

    #[test]
    fn cluster_parameter_must_fit_its_kind() {
        let mut spec = usage();
        let mut extras = vec![ShapeParams::default(); 3];
        extras[0].h = Some(2.0);
        spec.cluster_params = Some(extras);
        assert!(matches!(spec.validate(), Err(Error::RejectedParameter { .. })));
    }

    #[test]
    fn precedence_and_dim_cap() {
        let mut spec = usage();
        spec.shape[2] = ShapeKind::Cone;
        spec.params.h = Some(3.0);
        let mut extras = vec![ShapeParams::default(); 3];
        extras[2].h = Some(7.0);
        spec.cluster_params = Some(extras);
        assert_eq!(spec.params_for(1).h, Some(3.0));
        assert_eq!(spec.params_for(2).h, Some(7.0));
        assert_eq!(spec.params_for(1).p, Some(4));
        spec.loc = vec![vec![0.0; 6]; 3];
        spec.shape[0] = ShapeKind::Hemisphere;
        assert_eq!(spec.params_for(0).p, Some(4));
    }

    #[test]
    fn duplicate_labels() {
        let mut spec = usage();
        spec.shape = vec![ShapeKind::Gaussian, ShapeKind::Cone, ShapeKind::Gaussian];
        assert_eq!(spec.labels(), vec!["gaussian_1", "cone", "gaussian_2"]);
    }

    #[test]
    fn json_config() {
        let json = r#"{
            "n": [10, 20], "k": 2, "loc": [[0, 0, 0], [1, 1, 1]],
            "scale": [1, 2], "shape": ["gaussian", "swissroll"],
            "rotation": [null, {"dim": 3, "steps": [{"i": 1, "j": 2, "angle": 0.5}]}],
            "cluster_params": [{}, {"w": [0, 3]}]
        }"#;
        let spec: MultiClusterSpec = serde_json::from_str(json).unwrap();
        spec.validate().unwrap();
        assert!(spec.shuffle);
        assert!(matches!(spec.rotation.as_ref().unwrap()[1], Some(Rotation::Plan(_))));
        let matrix: Rotation = serde_json::from_str("[[0, -1], [1, 0]]").unwrap();
        assert!(matrix.matrix().is_ok());
        let skew: Rotation = serde_json::from_str("[[1, 1], [0, 1]]").unwrap();
        assert!(matches!(skew.matrix(), Err(Error::InvalidRotation(_))));
    }
}
