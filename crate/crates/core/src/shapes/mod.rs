//! Single-shape generators and a registry that dispatches on [`ShapeKind`].

pub mod branches;
pub mod cone;
pub mod cube;
pub mod gaussian;
pub mod linear;
pub mod mobius;
pub mod params;
pub mod polynomial;
pub mod pyramid;
pub mod sampling;
pub mod scurve;
pub mod sphere;
pub mod swissroll;
pub mod trefoil;
pub mod trig;

pub use branches::{gen_branches, BranchKind, BranchParams, Branches};
pub use cone::gen_cone;
pub use cube::{gen_cube, gen_gridcube, gen_unifcube, CubeKind};
pub use gaussian::gen_gaussian;
pub use linear::gen_longlinear;
pub use mobius::gen_mobius;
pub use params::{ParamName, ShapeKind, ShapeParams};
pub use polynomial::{gen_polynomial, PolyKind};
pub use pyramid::{gen_pyramid, gen_pyrfrac, PyramidKind};
pub use scurve::gen_scurve;
pub use sphere::{gen_sphere_family, ClusteredSpheres, SphereKind};
pub use swissroll::gen_swissroll;
pub use trefoil::{gen_trefoil, TrefoilKind};
pub use trig::{gen_trig, TrigKind};

use crate::dataset::Dataset;
use crate::error::{param_err, Error, Result};
use crate::rng::RandomStream;

use params::*;

/// Resolved `p` for `kind`, checked against its bounds.
pub fn resolve_dim(kind: ShapeKind, params: &ShapeParams) -> Result<usize> {
    let p = match (kind, params.p, &params.s) {
        (ShapeKind::Gaussian, None, Some(s)) => s.len(),
        (_, Some(p), _) => p,
        _ => kind.default_dim(),
    };
    if p < kind.min_dim() || kind.max_dim().is_some_and(|m| p > m) {
        let range = match kind.max_dim() {
            Some(m) if m == kind.min_dim() => format!("p = {m}"),
            Some(m) => format!("{} <= p <= {m}", kind.min_dim()),
            None => format!("p >= {}", kind.min_dim()),
        };
        return Err(Error::Dimension(format!("{kind} needs {range}, got {p}")));
    }
    Ok(p)
}

/// Generates one shape. `params.n` is required; unset parameters take the
/// kind's defaults and parameters the kind does not take are rejected.
pub fn generate(kind: ShapeKind, params: &ShapeParams, stream: &mut RandomStream) -> Result<Dataset> {
    params.check_accepted(kind)?;
    let n = params.n.ok_or_else(|| param_err("n", "is required"))?;
    if n == 0 {
        return Err(param_err("n", "must be at least 1"));
    }
    let p = resolve_dim(kind, params)?;
    let k = params.k.unwrap_or(DEFAULT_K);
    let h = params.h.unwrap_or(DEFAULT_H);
    let rt = params.rt.unwrap_or(DEFAULT_RT);
    let allow_share = params.allow_share.unwrap_or(false);
    let branches = |bk: BranchKind, stream: &mut RandomStream| {
        gen_branches(bk, n, k, p, allow_share, stream).map(|b| b.data)
    };
    use ShapeKind::*;
    match kind {
        LinearBranches => branches(BranchKind::Linear, stream),
        CurvyBranches => branches(BranchKind::Curvy, stream),
        ExpBranches => branches(BranchKind::Exp, stream),
        OrgLinearBranches => branches(BranchKind::OrgLinear, stream),
        OrgCurvyBranches => branches(BranchKind::OrgCurvy, stream),
        Cone => gen_cone(n, p, h, params.ratio.unwrap_or(DEFAULT_RATIO), stream),
        GridCube => gen_cube(CubeKind::Grid, n, p, stream),
        UnifCube => gen_cube(CubeKind::Unif, n, p, stream),
        Gaussian => {
            let s = params.s.clone().unwrap_or_else(|| gaussian::identity_covariance(p));
            if s.len() != p {
                return Err(Error::Dimension(format!("covariance is {0}x{0} but p = {p}", s.len())));
            }
            gen_gaussian(n, &s, stream)
        }
        LongLinear => gen_longlinear(n, p, stream),
        Mobius => gen_mobius(n, stream),
        Quadratic | Cubic => {
            let poly = if kind == Quadratic { PolyKind::Quadratic } else { PolyKind::Cubic };
            gen_polynomial(poly, n, params.range.unwrap_or(DEFAULT_RANGE), stream)
        }
        PyrRect => {
            let l_vec = params.l_vec.unwrap_or(DEFAULT_L_VEC);
            gen_pyramid(PyramidKind::Rect { l_vec, rt }, n, p, h, stream)
        }
        PyrTri => {
            let l = params.l.unwrap_or(DEFAULT_L);
            gen_pyramid(PyramidKind::Tri { l, rt }, n, p, h, stream)
        }
        PyrStar => {
            let rb = params.rb.unwrap_or(DEFAULT_RB);
            gen_pyramid(PyramidKind::Star { rb }, n, p, h, stream)
        }
        PyrFrac => gen_pyramid(PyramidKind::Frac, n, p, h, stream),
        SCurve => gen_scurve(n, stream),
        Circle => gen_sphere_family(SphereKind::Circle, n, p, stream),
        CurvyCycle => gen_sphere_family(SphereKind::CurvyCycle, n, p, stream),
        UnifSphere => {
            let r = params.r.unwrap_or(DEFAULT_R);
            gen_sphere_family(SphereKind::UnifSphere { r }, n, p, stream)
        }
        HollowSphere => gen_sphere_family(SphereKind::HollowSphere, n, p, stream),
        GridedSphere => gen_sphere_family(SphereKind::GridedSphere, n, p, stream),
        ClusteredSpheres => {
            let cfg = sphere::ClusteredSpheres {
                n_vec: params.n_vec,
                k_small: params.k_small.unwrap_or(DEFAULT_K_SMALL),
                r_vec: params.r_vec.unwrap_or(DEFAULT_R_VEC),
                spe: params.spe.unwrap_or(DEFAULT_SPE),
            };
            gen_sphere_family(SphereKind::Clustered(cfg), n, p, stream)
        }
        Hemisphere => gen_sphere_family(SphereKind::Hemisphere, n, p, stream),
        SwissRoll => gen_swissroll(n, params.w.unwrap_or(DEFAULT_W), stream),
        Trefoil4d | Trefoil3d => {
            let tk = if kind == Trefoil4d { TrefoilKind::FourD } else { TrefoilKind::ThreeD };
            gen_trefoil(tk, n, params.steps.unwrap_or(DEFAULT_STEPS))
        }
        Crescent => gen_trig(TrigKind::Crescent, n, p, stream),
        CurvyCylinder => gen_trig(TrigKind::CurvyCylinder { h }, n, p, stream),
        SphericalSpiral => {
            let spins = params.spins.unwrap_or(DEFAULT_SPINS);
            gen_trig(TrigKind::SphericalSpiral { spins }, n, p, stream)
        }
        HelicalSpiral => gen_trig(TrigKind::HelicalSpiral, n, p, stream),
        ConicSpiral => {
            let spins = params.spins.unwrap_or(DEFAULT_SPINS);
            gen_trig(TrigKind::ConicSpiral { spins }, n, p, stream)
        }
        Nonlinear => {
            let hc = params.hc.unwrap_or(DEFAULT_HC);
            let non_fac = params.non_fac.unwrap_or(DEFAULT_NON_FAC);
            gen_trig(TrigKind::Nonlinear { hc, non_fac }, n, p, stream)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{gen_nproduct, nproduct_total};
    use crate::rng::make_stream;

    #[test]
    fn every_kind_generates() {
        for &kind in ShapeKind::ALL {
            let params = ShapeParams::with_n(240);
            let ds = generate(kind, &params, &mut make_stream(11)).unwrap_or_else(|e| panic!("{kind}: {e}"));
            let p = kind.output_dim(None);
            assert_eq!(ds.ncols(), p, "{kind}");
            let expected = match kind {
                ShapeKind::GridCube => nproduct_total(&gen_nproduct(240, p)) as usize,
                ShapeKind::GridedSphere => nproduct_total(&gen_nproduct(240, p - 1)) as usize,
                _ => 240,
            };
            assert_eq!(ds.nrows(), expected, "{kind}");
            let again = generate(kind, &params, &mut make_stream(11)).unwrap();
            assert_eq!(ds, again, "{kind}");
        }
    }

    #[test]
    fn dimension_bounds() {
        let params = ShapeParams { p: Some(2), ..ShapeParams::with_n(10) };
        assert!(matches!(generate(ShapeKind::Cone, &params, &mut make_stream(1)), Err(Error::Dimension(_))));
        let params = ShapeParams { p: Some(5), ..ShapeParams::with_n(10) };
        assert!(matches!(generate(ShapeKind::Hemisphere, &params, &mut make_stream(1)), Err(Error::Dimension(_))));
        let params = ShapeParams { p: Some(7), ..ShapeParams::with_n(10) };
        assert_eq!(generate(ShapeKind::Circle, &params, &mut make_stream(1)).unwrap().ncols(), 7);
    }

    #[test]
    fn missing_or_foreign_parameters() {
        assert!(generate(ShapeKind::Cone, &ShapeParams::default(), &mut make_stream(1)).is_err());
        let params = ShapeParams { w: Some([0.0, 1.0]), ..ShapeParams::with_n(10) };
        assert!(matches!(
            generate(ShapeKind::Cone, &params, &mut make_stream(1)),
            Err(Error::RejectedParameter { .. })
        ));
    }

    #[test]
    fn gaussian_dimension_from_covariance() {
        let params = ShapeParams {
            s: Some(gaussian::identity_covariance(6)),
            ..ShapeParams::with_n(10)
        };
        assert_eq!(generate(ShapeKind::Gaussian, &params, &mut make_stream(1)).unwrap().ncols(), 6);
    }
}
