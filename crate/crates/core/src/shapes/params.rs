//! Shape kinds, the parameters each accepts, and their defaults.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const DEFAULT_K: usize = 4;
pub const DEFAULT_P: usize = 4;
pub const DEFAULT_H: f64 = 5.0;
pub const DEFAULT_RATIO: f64 = 0.5;
pub const DEFAULT_R: f64 = 1.0;
pub const DEFAULT_W: [f64; 2] = [-1.0, 1.0];
pub const DEFAULT_STEPS: usize = 5;
pub const DEFAULT_SPINS: usize = 1;
pub const DEFAULT_HC: f64 = 1.0;
pub const DEFAULT_NON_FAC: f64 = 0.5;
pub const DEFAULT_L: f64 = 1.0;
pub const DEFAULT_L_VEC: [f64; 2] = [1.0, 1.0];
pub const DEFAULT_RT: f64 = 0.0;
pub const DEFAULT_RB: f64 = 1.0;
pub const DEFAULT_RANGE: [f64; 2] = [-1.0, 1.0];
pub const DEFAULT_N_VEC: [usize; 2] = [500, 100];
pub const DEFAULT_K_SMALL: usize = 3;
pub const DEFAULT_R_VEC: [f64; 2] = [10.0, 1.0];
pub const DEFAULT_SPE: f64 = 3.0;

/// Every parameter a shape generator may take.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ParamName {
    N,
    P,
    K,
    H,
    Ratio,
    S,
    R,
    W,
    Steps,
    Spins,
    Hc,
    NonFac,
    L,
    LVec,
    Rt,
    Rb,
    NVec,
    KSmall,
    RVec,
    Spe,
    Range,
    AllowShare,
}

impl ParamName {
    pub fn as_str(self) -> &'static str {
        use ParamName::*;
        match self {
            N => "n",
            P => "p",
            K => "k",
            H => "h",
            Ratio => "ratio",
            S => "s",
            R => "r",
            W => "w",
            Steps => "steps",
            Spins => "spins",
            Hc => "hc",
            NonFac => "non_fac",
            L => "l",
            LVec => "l_vec",
            Rt => "rt",
            Rb => "rb",
            NVec => "n_vec",
            KSmall => "k_small",
            RVec => "r_vec",
            Spe => "spe",
            Range => "range",
            AllowShare => "allow_share",
        }
    }
}

impl fmt::Display for ParamName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

macro_rules! shape_kinds {
    ($($variant:ident => $name:literal),+ $(,)?) => {
        /// A registered single-shape generator.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
        pub enum ShapeKind {
            $(#[serde(rename = $name)] $variant,)+
        }

        impl ShapeKind {
            pub const ALL: &'static [ShapeKind] = &[$(ShapeKind::$variant,)+];

            pub fn name(self) -> &'static str {
                match self {
                    $(ShapeKind::$variant => $name,)+
                }
            }
        }

        impl FromStr for ShapeKind {
            type Err = Error;

            fn from_str(s: &str) -> Result<Self> {
                match s {
                    $($name => Ok(ShapeKind::$variant),)+
                    other => Err(Error::UnknownShape(other.to_string())),
                }
            }
        }
    };
}

shape_kinds! {
    ExpBranches => "expbranches",
    LinearBranches => "linearbranches",
    CurvyBranches => "curvybranches",
    OrgLinearBranches => "orglinearbranches",
    OrgCurvyBranches => "orgcurvybranches",
    Cone => "cone",
    GridCube => "gridcube",
    UnifCube => "unifcube",
    Gaussian => "gaussian",
    LongLinear => "longlinear",
    Mobius => "mobius",
    Quadratic => "quadratic",
    Cubic => "cubic",
    PyrRect => "pyrrect",
    PyrTri => "pyrtri",
    PyrStar => "pyrstar",
    PyrFrac => "pyrfrac",
    SCurve => "scurve",
    Circle => "circle",
    CurvyCycle => "curvycycle",
    UnifSphere => "unifsphere",
    HollowSphere => "hollowsphere",
    GridedSphere => "gridedsphere",
    ClusteredSpheres => "clusteredspheres",
    Hemisphere => "hemisphere",
    SwissRoll => "swissroll",
    Trefoil4d => "trefoil4d",
    Trefoil3d => "trefoil3d",
    Crescent => "crescent",
    CurvyCylinder => "curvycylinder",
    SphericalSpiral => "sphericalspiral",
    HelicalSpiral => "helicalspiral",
    ConicSpiral => "conicspiral",
    Nonlinear => "nonlinear",
}

impl fmt::Display for ShapeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl ShapeKind {
    /// Parameters this kind accepts, `n` first.
    pub fn accepted(self) -> &'static [ParamName] {
        use ParamName::*;
        use ShapeKind::*;
        match self {
            ExpBranches | LinearBranches | CurvyBranches => &[N, K],
            OrgLinearBranches | OrgCurvyBranches => &[N, P, K, AllowShare],
            Cone => &[N, P, H, Ratio],
            GridCube | UnifCube | LongLinear | PyrFrac | Circle | CurvyCycle | HollowSphere
            | GridedSphere | Hemisphere | HelicalSpiral => &[N, P],
            Gaussian => &[N, P, S],
            Mobius | SCurve | Crescent => &[N],
            Quadratic | Cubic => &[N, Range],
            PyrRect => &[N, P, H, LVec, Rt],
            PyrTri => &[N, P, H, L, Rt],
            PyrStar => &[N, P, H, Rb],
            UnifSphere => &[N, R],
            ClusteredSpheres => &[N, P, NVec, KSmall, RVec, Spe],
            SwissRoll => &[N, W],
            Trefoil4d | Trefoil3d => &[N, Steps],
            CurvyCylinder => &[N, P, H],
            SphericalSpiral | ConicSpiral => &[N, P, Spins],
            Nonlinear => &[N, P, Hc, NonFac],
        }
    }

    pub fn accepts(self, param: ParamName) -> bool {
        self.accepted().contains(&param)
    }

    /// Smallest allowed `p`, or the fixed output dimension for kinds without `p`.
    pub fn min_dim(self) -> usize {
        use ShapeKind::*;
        match self {
            ExpBranches | LinearBranches | CurvyBranches | Quadratic | Cubic | Crescent => 2,
            OrgLinearBranches | OrgCurvyBranches | PyrFrac | Circle | GridedSphere => 2,
            HollowSphere | ClusteredSpheres => 2,
            GridCube | UnifCube | LongLinear | Gaussian => 1,
            Cone | CurvyCycle | PyrStar => 3,
            Mobius | SCurve | UnifSphere | SwissRoll | Trefoil3d => 3,
            PyrRect | PyrTri | Hemisphere | Trefoil4d => 4,
            CurvyCylinder | SphericalSpiral | HelicalSpiral | ConicSpiral | Nonlinear => 4,
        }
    }

    /// Largest allowed `p` for kinds that take one, if bounded.
    pub fn max_dim(self) -> Option<usize> {
        match self {
            ShapeKind::Hemisphere => Some(4),
            k if k.accepts(ParamName::P) => None,
            k => Some(k.min_dim()),
        }
    }

    /// `p` used when the caller does not supply one.
    pub fn default_dim(self) -> usize {
        use ShapeKind::*;
        match self {
            GridedSphere | ClusteredSpheres => 3,
            k if k.accepts(ParamName::P) => DEFAULT_P.max(k.min_dim()),
            k => k.min_dim(),
        }
    }

    /// Number of output columns for the given `p` (ignored when not accepted).
    pub fn output_dim(self, p: Option<usize>) -> usize {
        if self.accepts(ParamName::P) {
            p.unwrap_or_else(|| self.default_dim())
        } else {
            self.min_dim()
        }
    }

    /// Whether row count can differ from `n` (lattices).
    pub fn approximate_count(self) -> bool {
        matches!(self, ShapeKind::GridCube | ShapeKind::GridedSphere)
    }

    /// Table-style signature, e.g. `cone: n, p, h, ratio`.
    pub fn signature(self) -> String {
        let names: Vec<&str> = self.accepted().iter().map(|p| p.as_str()).collect();
        format!("{}: {}", self.name(), names.join(", "))
    }
}

/// Optional arguments for a shape generator. Unset fields take the kind's
/// default; set fields the kind does not accept are rejected.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ShapeParams {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ratio: Option<f64>,
    /// Covariance matrix, row by row.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<Vec<Vec<f64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub w: Option<[f64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub steps: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spins: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hc: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub non_fac: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub l: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub l_vec: Option<[f64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rt: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rb: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n_vec: Option<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k_small: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r_vec: Option<[f64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spe: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub range: Option<[f64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub allow_share: Option<bool>,
}

macro_rules! for_each_param {
    ($mac:ident) => {
        $mac!(
            n => N, p => P, k => K, h => H, ratio => Ratio, s => S, r => R, w => W,
            steps => Steps, spins => Spins, hc => Hc, non_fac => NonFac, l => L,
            l_vec => LVec, rt => Rt, rb => Rb, n_vec => NVec, k_small => KSmall,
            r_vec => RVec, spe => Spe, range => Range, allow_share => AllowShare
        )
    };
}

impl ShapeParams {
    pub fn with_n(n: usize) -> Self {
        Self {
            n: Some(n),
            ..Self::default()
        }
    }

    /// Names of the fields that are set.
    pub fn set_names(&self) -> Vec<ParamName> {
        let mut out = Vec::new();
        macro_rules! collect {
            ($($field:ident => $name:ident),+) => {
                $(if self.$field.is_some() { out.push(ParamName::$name); })+
            };
        }
        for_each_param!(collect);
        out
    }

    pub fn is_empty(&self) -> bool {
        self.set_names().is_empty()
    }

    /// Copy of `self` with every field set in `top` replaced.
    pub fn overlay(&self, top: &ShapeParams) -> ShapeParams {
        let mut out = self.clone();
        macro_rules! merge {
            ($($field:ident => $name:ident),+) => {
                $(if top.$field.is_some() { out.$field = top.$field.clone(); })+
            };
        }
        for_each_param!(merge);
        out
    }

    /// Copy keeping only the fields `kind` accepts.
    pub fn filtered_for(&self, kind: ShapeKind) -> ShapeParams {
        let mut out = ShapeParams::default();
        macro_rules! keep {
            ($($field:ident => $name:ident),+) => {
                $(if kind.accepts(ParamName::$name) { out.$field = self.$field.clone(); })+
            };
        }
        for_each_param!(keep);
        out
    }

    /// Clears one field.
    pub fn unset(&mut self, param: ParamName) {
        macro_rules! clear {
            ($($field:ident => $name:ident),+) => {
                match param { $(ParamName::$name => self.$field = None,)+ }
            };
        }
        for_each_param!(clear);
    }

    /// Fails on the first set field that `kind` does not accept.
    pub fn check_accepted(&self, kind: ShapeKind) -> Result<()> {
        match self.set_names().into_iter().find(|p| !kind.accepts(*p)) {
            Some(param) => Err(Error::RejectedParameter {
                param: param.as_str().to_string(),
                target: kind.name().to_string(),
            }),
            None => Ok(()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_roundtrip() {
        for kind in ShapeKind::ALL {
            assert_eq!(kind.name().parse::<ShapeKind>().unwrap(), *kind);
        }
        assert!(matches!("blob".parse::<ShapeKind>(), Err(Error::UnknownShape(_))));
    }

    #[test]
    fn cone_signature() {
        assert_eq!(ShapeKind::Cone.signature(), "cone: n, p, h, ratio");
    }

    #[test]
    fn rejects_foreign_parameter() {
        let params = ShapeParams {
            w: Some([0.0, 3.0]),
            ..ShapeParams::with_n(5)
        };
        assert_eq!(
            params.check_accepted(ShapeKind::Cone),
            Err(Error::RejectedParameter {
                param: "w".into(),
                target: "cone".into()
            })
        );
        assert!(params.check_accepted(ShapeKind::SwissRoll).is_ok());
    }

    #[test]
    fn overlay_and_filter() {
        let base = ShapeParams {
            h: Some(2.0),
            ratio: Some(0.1),
            ..Default::default()
        };
        let top = ShapeParams {
            h: Some(3.0),
            ..Default::default()
        };
        let merged = base.overlay(&top);
        assert_eq!(merged.h, Some(3.0));
        assert_eq!(merged.ratio, Some(0.1));
        assert_eq!(merged.filtered_for(ShapeKind::CurvyCylinder).set_names(), vec![ParamName::H]);
    }

    #[test]
    fn serde_names() {
        let json = serde_json::to_string(&ShapeKind::Trefoil4d).unwrap();
        assert_eq!(json, "\"trefoil4d\"");
        let params: ShapeParams = serde_json::from_str(r#"{"non_fac": 0.3, "l_vec": [1, 2]}"#).unwrap();
        assert_eq!(params.set_names(), vec![ParamName::NonFac, ParamName::LVec]);
        assert!(serde_json::from_str::<ShapeParams>(r#"{"bogus": 1}"#).is_err());
    }
}
