use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hdshapes::{ParamName, ShapeParams};
use serde::{Deserialize, Serialize};

#[derive(Debug, Parser)]
#[command(name = "hdshapes", version, about = "Generate synthetic high-dimensional shapes and cluster scenes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a single shape.
    Generate(Box<GenerateArgs>),
    /// Compose a multi-cluster scene from a JSON config.
    Multicluster(MulticlusterArgs),
    /// Generate a shape with a spherical hole.
    Hole(HoleArgs),
    /// Generate a named preset scene.
    Preset(PresetArgs),
    /// List shape kinds and their parameters.
    List(ListArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Ndjson,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Seed; falls back to HDSHAPES_SEED, then to a fresh random seed.
    #[arg(long, env = "HDSHAPES_SEED")]
    pub seed: Option<u64>,
    /// Data file; stdout when absent (no manifest is written then).
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    /// Shape kind (see `hdshapes list`).
    #[arg(required_unless_present = "from_manifest")]
    pub shape: Option<String>,
    /// Replay a previous run from its manifest.
    #[arg(long, conflicts_with = "shape")]
    pub from_manifest: Option<PathBuf>,
    #[command(flatten)]
    pub params: ParamFlags,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args, Default)]
pub struct ParamFlags {
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub p: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub h: Option<f64>,
    #[arg(long)]
    pub ratio: Option<f64>,
    /// Covariance matrix as JSON, e.g. `[[1,0],[0,4]]`.
    #[arg(long)]
    pub s: Option<String>,
    #[arg(long)]
    pub r: Option<f64>,
    /// Interval `w1,w2`.
    #[arg(long, allow_hyphen_values = true)]
    pub w: Option<String>,
    #[arg(long)]
    pub steps: Option<usize>,
    #[arg(long)]
    pub spins: Option<usize>,
    #[arg(long)]
    pub hc: Option<f64>,
    #[arg(long = "non-fac")]
    pub non_fac: Option<f64>,
    #[arg(long)]
    pub l: Option<f64>,
    /// Base half-widths `lx,ly`.
    #[arg(long = "l-vec")]
    pub l_vec: Option<String>,
    #[arg(long)]
    pub rt: Option<f64>,
    #[arg(long)]
    pub rb: Option<f64>,
    /// Big and small sphere sizes `n_big,n_small`.
    #[arg(long = "n-vec")]
    pub n_vec: Option<String>,
    #[arg(long = "k-small")]
    pub k_small: Option<usize>,
    /// Big and small sphere radii `r_big,r_small`.
    #[arg(long = "r-vec")]
    pub r_vec: Option<String>,
    #[arg(long)]
    pub spe: Option<f64>,
    /// Polynomial domain `a,b`.
    #[arg(long, allow_hyphen_values = true)]
    pub range: Option<String>,
    #[arg(long = "allow-share")]
    pub allow_share: bool,
}

impl ParamFlags {
    /// Flags given on the command line, before their values are parsed.
    pub fn present(&self) -> Vec<ParamName> {
        use ParamName::*;
        let set = [
            (N, self.n.is_some()),
            (P, self.p.is_some()),
            (K, self.k.is_some()),
            (H, self.h.is_some()),
            (Ratio, self.ratio.is_some()),
            (S, self.s.is_some()),
            (R, self.r.is_some()),
            (W, self.w.is_some()),
            (Steps, self.steps.is_some()),
            (Spins, self.spins.is_some()),
            (Hc, self.hc.is_some()),
            (NonFac, self.non_fac.is_some()),
            (L, self.l.is_some()),
            (LVec, self.l_vec.is_some()),
            (Rt, self.rt.is_some()),
            (Rb, self.rb.is_some()),
            (NVec, self.n_vec.is_some()),
            (KSmall, self.k_small.is_some()),
            (RVec, self.r_vec.is_some()),
            (Spe, self.spe.is_some()),
            (Range, self.range.is_some()),
            (AllowShare, self.allow_share),
        ];
        set.into_iter().filter(|(_, on)| *on).map(|(p, _)| p).collect()
    }

    /// Parses the structured flags; errors name the offending flag.
    pub fn to_params(&self) -> Result<ShapeParams, (ParamName, String)> {
        let pair = |name: ParamName, raw: &Option<String>| {
            raw.as_deref().map(parse_pair).transpose().map_err(|e| (name, e))
        };
        Ok(ShapeParams {
            n: self.n,
            p: self.p,
            k: self.k,
            h: self.h,
            ratio: self.ratio,
            s: self
                .s
                .as_deref()
                .map(|raw| serde_json::from_str(raw).map_err(|e| (ParamName::S, e.to_string())))
                .transpose()?,
            r: self.r,
            w: pair(ParamName::W, &self.w)?,
            steps: self.steps,
            spins: self.spins,
            hc: self.hc,
            non_fac: self.non_fac,
            l: self.l,
            l_vec: pair(ParamName::LVec, &self.l_vec)?,
            rt: self.rt,
            rb: self.rb,
            n_vec: self
                .n_vec
                .as_deref()
                .map(parse_count_pair)
                .transpose()
                .map_err(|e| (ParamName::NVec, e))?,
            k_small: self.k_small,
            r_vec: pair(ParamName::RVec, &self.r_vec)?,
            spe: self.spe,
            range: pair(ParamName::Range, &self.range)?,
            allow_share: self.allow_share.then_some(true),
        })
    }
}

#[derive(Debug, Args)]
pub struct MulticlusterArgs {
    /// JSON config with the scene fields (n, k, loc, scale, shape, ...).
    pub config: PathBuf,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum HoleBase {
    Scurve,
    Unifcube,
}

#[derive(Debug, Args)]
pub struct HoleArgs {
    pub base: HoleBase,
    #[arg(long)]
    pub n: usize,
    /// Cube dimension (unifcube only, default 3).
    #[arg(long)]
    pub p: Option<usize>,
    /// Hole radius.
    #[arg(long)]
    pub r: f64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct PresetArgs {
    pub name: String,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub p: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct ListArgs {
    /// List preset scenes instead of shape kinds.
    #[arg(long)]
    pub presets: bool,
}

fn parse_pair(s: &str) -> Result<[f64; 2], String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    match parts.as_slice() {
        [a, b] => Ok([
            a.parse().map_err(|e| format!("{a:?}: {e}"))?,
            b.parse().map_err(|e| format!("{b:?}: {e}"))?,
        ]),
        _ => Err(format!("expected two comma-separated numbers, got {s:?}")),
    }
}

fn parse_count_pair(s: &str) -> Result<[usize; 2], String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    match parts.as_slice() {
        [a, b] => Ok([
            a.parse().map_err(|e| format!("{a:?}: {e}"))?,
            b.parse().map_err(|e| format!("{b:?}: {e}"))?,
        ]),
        _ => Err(format!("expected two comma-separated counts, got {s:?}")),
    }
}
