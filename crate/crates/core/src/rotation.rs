//! Plane (Givens) rotations composed into p-dimensional orthogonal matrices.
//!
//! Convention: matrices act on column vectors, `y = R·x`. A plan with steps
//! `s1, s2, ..., sm` realizes `R = G(sm) ⋯ G(s2)·G(s1)`, so `s1` is applied to
//! a point first. Axis indices are 1-based.

use std::f64::consts::PI;

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::dataset::Dataset;
use crate::error::{Error, Result};
use crate::rng::RandomStream;

/// Rotation by `angle` radians in the `(i, j)` coordinate plane, taking
/// axis `i` towards axis `j`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PlaneRotation {
    pub i: usize,
    pub j: usize,
    pub angle: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RotationPlan {
    pub dim: usize,
    #[serde(default)]
    pub steps: Vec<PlaneRotation>,
}

impl RotationPlan {
    pub fn new(dim: usize) -> Self {
        Self {
            dim,
            steps: Vec::new(),
        }
    }

    pub fn then(mut self, i: usize, j: usize, angle: f64) -> Self {
        self.steps.push(PlaneRotation { i, j, angle });
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.dim == 0 {
            return Err(Error::InvalidPlan("dimension must be positive".into()));
        }
        for (n, s) in self.steps.iter().enumerate() {
            if s.i == s.j {
                return Err(Error::InvalidPlan(format!(
                    "step {}: axes coincide ({}, {})",
                    n + 1,
                    s.i,
                    s.j
                )));
            }
            if s.i < 1 || s.j < 1 || s.i > self.dim || s.j > self.dim {
                return Err(Error::InvalidPlan(format!(
                    "step {}: axis pair ({}, {}) outside 1..={}",
                    n + 1,
                    s.i,
                    s.j,
                    self.dim
                )));
            }
            if s.i > s.j {
                return Err(Error::InvalidPlan(format!(
                    "step {}: axis pair ({}, {}) must be ordered i < j",
                    n + 1,
                    s.i,
                    s.j
                )));
            }
            if !s.angle.is_finite() {
                return Err(Error::InvalidPlan(format!("step {}: angle is not finite", n + 1)));
            }
        }
        Ok(())
    }

    /// Plan with `steps` uniformly drawn axis pairs and angles in [0, 2π).
    pub fn random(dim: usize, steps: usize, stream: &mut RandomStream) -> Self {
        let mut plan = Self::new(dim);
        if dim < 2 {
            return plan;
        }
        for _ in 0..steps {
            let a = stream.index(dim) + 1;
            let mut b = stream.index(dim - 1) + 1;
            if b >= a {
                b += 1;
            }
            let angle = stream.uniform(0.0, 2.0 * PI);
            plan.steps.push(PlaneRotation {
                i: a.min(b),
                j: a.max(b),
                angle,
            });
        }
        plan
    }
}

/// Realizes a plan as a `dim × dim` orthogonal matrix with determinant +1.
pub fn gen_rotation(plan: &RotationPlan) -> Result<DMatrix<f64>> {
    plan.validate()?;
    let mut r = DMatrix::<f64>::identity(plan.dim, plan.dim);
    for step in &plan.steps {
        let (i, j) = (step.i - 1, step.j - 1);
        let (s, c) = step.angle.sin_cos();
        // left-multiply by the plane rotation: only rows i and j change
        for col in 0..plan.dim {
            let ri = r[(i, col)];
            let rj = r[(j, col)];
            r[(i, col)] = c * ri - s * rj;
            r[(j, col)] = s * ri + c * rj;
        }
    }
    Ok(r)
}

/// Largest entry of `|RᵀR − I|`.
pub fn orthogonality_error(r: &DMatrix<f64>) -> f64 {
    let n = r.nrows();
    let gram = r.transpose() * r;
    (gram - DMatrix::<f64>::identity(n, n)).amax()
}

/// Checks that `r` is square and orthogonal within `tol`.
pub fn check_orthogonal(r: &DMatrix<f64>, tol: f64) -> Result<()> {
    if r.nrows() != r.ncols() {
        return Err(Error::InvalidRotation(format!(
            "matrix is {}x{}, not square",
            r.nrows(),
            r.ncols()
        )));
    }
    let err = orthogonality_error(r);
    if !(err <= tol) {
        return Err(Error::InvalidRotation(format!(
            "max |RᵀR − I| = {err:.3e} exceeds {tol:.0e}"
        )));
    }
    Ok(())
}

/// Applies `y = R·x` to every row.
pub fn rotate_rows(ds: &Dataset, r: &DMatrix<f64>) -> Result<Dataset> {
    let p = ds.ncols();
    if r.nrows() != p || r.ncols() != p {
        return Err(Error::Shape(format!(
            "{}x{} rotation cannot act on {p}-dimensional rows",
            r.nrows(),
            r.ncols()
        )));
    }
    ds.map_rows(|src, dst| {
        for (a, out) in dst.iter_mut().enumerate() {
            *out = (0..p).map(|b| r[(a, b)] * src[b]).sum();
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::make_stream;

    #[test]
    fn empty_plan_is_identity() {
        let r = gen_rotation(&RotationPlan::new(4)).unwrap();
        assert_eq!(r, DMatrix::identity(4, 4));
    }

    #[test]
    fn quarter_turn() {
        let r = gen_rotation(&RotationPlan::new(2).then(1, 2, PI / 2.0)).unwrap();
        let y = &r * nalgebra::DVector::from_vec(vec![1.0, 0.0]);
        assert!((y[0] - 0.0).abs() < 1e-12);
        assert!((y[1] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn steps_apply_in_order() {
        // rotate (1,2) then (2,3) by a quarter turn each: e1 -> e2 -> e3
        let plan = RotationPlan::new(3)
            .then(1, 2, PI / 2.0)
            .then(2, 3, PI / 2.0);
        let r = gen_rotation(&plan).unwrap();
        let y = &r * nalgebra::DVector::from_vec(vec![1.0, 0.0, 0.0]);
        assert!((y[2] - 1.0).abs() < 1e-12, "{y}");
    }

    #[test]
    fn invalid_plans() {
        assert!(matches!(
            gen_rotation(&RotationPlan::new(3).then(2, 2, 1.0)),
            Err(Error::InvalidPlan(_))
        ));
        assert!(matches!(
            gen_rotation(&RotationPlan::new(3).then(1, 4, 1.0)),
            Err(Error::InvalidPlan(_))
        ));
        assert!(matches!(
            gen_rotation(&RotationPlan::new(3).then(0, 2, 1.0)),
            Err(Error::InvalidPlan(_))
        ));
    }

    #[test]
    fn random_plans_are_orthogonal_with_unit_determinant() {
        let mut s = make_stream(11);
        for p in 2..=10 {
            for _ in 0..12 {
                let plan = RotationPlan::random(p, 10, &mut s);
                let r = gen_rotation(&plan).unwrap();
                assert!(orthogonality_error(&r) < 1e-10);
                assert!((r.determinant() - 1.0).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn rejects_scaled_matrix() {
        let m = DMatrix::<f64>::identity(3, 3) * 1.1;
        assert!(check_orthogonal(&m, 1e-8).is_err());
    }
}
