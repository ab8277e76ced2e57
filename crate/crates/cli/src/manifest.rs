use std::path::{Path, PathBuf};

use hdshapes::topology::{gen_scurvehole, gen_unifcubehole};
use hdshapes::{gen_multicluster, generate, make_preset, make_stream, Dataset, MultiClusterSpec, PresetOptions, ShapeKind, ShapeParams};
use serde::{Deserialize, Serialize};

use crate::args::{Format, HoleBase};

pub const DEFAULT_HOLE_DIM: usize = 3;

/// What was generated, in enough detail to run it again.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "lowercase")]
pub enum RunSpec {
    Generate {
        shape: ShapeKind,
        params: ShapeParams,
    },
    Multicluster {
        scene: MultiClusterSpec,
    },
    Hole {
        base: HoleBase,
        n: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        p: Option<usize>,
        r: f64,
    },
    Preset {
        name: String,
        options: PresetOptions,
    },
}

impl RunSpec {
    pub fn run(&self, seed: u64) -> hdshapes::Result<Dataset> {
        let mut stream = make_stream(seed);
        match self {
            RunSpec::Generate { shape, params } => generate(*shape, params, &mut stream),
            RunSpec::Multicluster { scene } => gen_multicluster(scene, &stream),
            RunSpec::Hole { base: HoleBase::Scurve, n, r, .. } => gen_scurvehole(*n, *r, &mut stream),
            RunSpec::Hole { base: HoleBase::Unifcube, n, p, r } => {
                gen_unifcubehole(*n, p.unwrap_or(DEFAULT_HOLE_DIM), *r, &mut stream)
            }
            RunSpec::Preset { name, options } => make_preset(name, options, &stream),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunManifest {
    pub tool_version: String,
    pub seed: u64,
    pub spec: RunSpec,
    pub output_path: PathBuf,
    pub format: Format,
    pub row_count: usize,
    pub col_count: usize,
    pub created_at: String,
}

impl RunManifest {
    pub fn new(seed: u64, spec: RunSpec, output_path: &Path, format: Format, data: &Dataset) -> Self {
        Self {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            seed,
            spec,
            output_path: output_path.to_path_buf(),
            format,
            row_count: data.nrows(),
            col_count: data.ncols(),
            created_at: chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true),
        }
    }
}

/// `<out>.manifest.json`, next to the data file.
pub fn manifest_path(out: &Path) -> PathBuf {
    let mut name = out.as_os_str().to_owned();
    name.push(".manifest.json");
    PathBuf::from(name)
}
