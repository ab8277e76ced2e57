use std::f64::consts::PI;

use crate::dataset::Dataset;
use crate::error::{param_err, Error, Result};
use crate::rng::RandomStream;

use super::sampling::{append_noise, linspace};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TrigKind {
    Crescent,
    CurvyCylinder { h: f64 },
    SphericalSpiral { spins: usize },
    HelicalSpiral,
    ConicSpiral { spins: usize },
    Nonlinear { hc: f64, non_fac: f64 },
}

/// Trigonometric family. Every kind except the crescent builds four
/// columns and pads to `p` with noise; the crescent ignores `p`.
pub fn gen_trig(kind: TrigKind, n: usize, p: usize, stream: &mut RandomStream) -> Result<Dataset> {
    if !matches!(kind, TrigKind::Crescent) && p < 4 {
        return Err(Error::Dimension(format!("needs p >= 4, got {p}")));
    }
    let core = match kind {
        TrigKind::Crescent => return gen_crescent(n),
        TrigKind::CurvyCylinder { h } => {
            if !(h > 0.0) || !h.is_finite() {
                return Err(param_err("h", "height must be positive"));
            }
            rows(n, |_| {
                let theta = stream.uniform(0.0, 3.0 * PI);
                let z = stream.uniform(0.0, h);
                [theta.cos(), theta.sin(), z, z.sin()]
            })
        }
        TrigKind::SphericalSpiral { spins } => {
            check_spins(spins)?;
            let thetas = linspace(0.0, 2.0 * PI * spins as f64, n);
            let phis = linspace(0.0, PI, n);
            let top = max_or_one(&thetas);
            rows(n, |i| {
                let (theta, phi) = (thetas[i], phis[i]);
                [
                    phi.sin() * theta.cos(),
                    phi.sin() * theta.sin(),
                    phi.cos() + stream.uniform(-0.5, 0.5),
                    theta / top,
                ]
            })
        }
        TrigKind::HelicalSpiral => {
            let thetas = linspace(0.0, 5.0 * PI / 4.0, n);
            rows(n, |i| {
                let t = thetas[i];
                [t.cos(), t.sin(), 0.05 * t + stream.uniform(-0.5, 0.5), 0.1 * t.sin()]
            })
        }
        TrigKind::ConicSpiral { spins } => {
            check_spins(spins)?;
            let thetas = linspace(0.0, 2.0 * PI * spins as f64, n);
            let top = max_or_one(&thetas);
            rows(n, |i| {
                let t = thetas[i];
                let e3 = stream.uniform(-0.1, 0.6);
                let e4 = stream.uniform(-0.1, 0.6);
                [t * t.cos(), t * t.sin(), 2.0 * t / top + e3, t * (2.0 * t).sin() + e4]
            })
        }
        TrigKind::Nonlinear { hc, non_fac } => {
            if !hc.is_finite() || !non_fac.is_finite() {
                return Err(param_err("hc", "coefficients must be finite"));
            }
            rows(n, |_| {
                let x1 = stream.uniform(0.1, 2.0);
                let x3 = stream.uniform(0.1, 0.8);
                let x4 = (PI * x1).cos() + stream.uniform(-0.1, 0.1);
                [x1, hc / x1 + non_fac * x1.sin(), x3, x4]
            })
        }
    }?;
    append_noise(core, p - 4, stream)
}

fn check_spins(spins: usize) -> Result<()> {
    if spins == 0 {
        return Err(param_err("spins", "must be at least 1"));
    }
    Ok(())
}

/// Divisor for `θ / max θ`; a single-point path has `max θ = 0` and maps to 0.
fn max_or_one(thetas: &[f64]) -> f64 {
    match thetas.last() {
        Some(&m) if m > 0.0 => m,
        _ => 1.0,
    }
}

fn rows<F: FnMut(usize) -> [f64; 4]>(n: usize, mut f: F) -> Result<Dataset> {
    let mut values = Vec::with_capacity(4 * n);
    for i in 0..n {
        values.extend(f(i));
    }
    Dataset::from_vec(n, 4, values)
}

/// Unit-circle arc with `n` evenly spaced angles from π/6 to 2π.
pub fn gen_crescent(n: usize) -> Result<Dataset> {
    let mut values = Vec::with_capacity(2 * n);
    for t in linspace(PI / 6.0, 2.0 * PI, n) {
        values.extend([t.cos(), t.sin()]);
    }
    Dataset::from_vec(n, 2, values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::make_stream;

    #[test]
    fn crescent_arc() {
        let ds = gen_crescent(100).unwrap();
        let mut prev = f64::NEG_INFINITY;
        for r in ds.rows() {
            assert!((r[0].powi(2) + r[1].powi(2) - 1.0).abs() < 1e-12);
            let t = r[1].atan2(r[0]).rem_euclid(2.0 * PI);
            let t = if t < PI / 12.0 { t + 2.0 * PI } else { t };
            assert!(t > prev);
            prev = t;
        }
        let first = ds.row(0);
        assert!((first[0] - (PI / 6.0).cos()).abs() < 1e-12);
        let last = ds.row(99);
        assert!((last[0] - 1.0).abs() < 1e-12 && last[1].abs() < 1e-12);
    }

    #[test]
    fn curvycylinder_coupling() {
        let ds = gen_trig(TrigKind::CurvyCylinder { h: 10.0 }, 500, 6, &mut make_stream(1)).unwrap();
        assert_eq!(ds.ncols(), 6);
        for r in ds.rows() {
            assert!((r[3] - r[2].sin()).abs() < 1e-12);
            assert!((r[0].powi(2) + r[1].powi(2) - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn nonlinear_formula() {
        let kind = TrigKind::Nonlinear { hc: 1.0, non_fac: 0.5 };
        let ds = gen_trig(kind, 1000, 4, &mut make_stream(2)).unwrap();
        for r in ds.rows() {
            assert!((r[1] - 1.0 / r[0] - 0.5 * r[0].sin()).abs() < 1e-12);
            let e = r[3] - (PI * r[0]).cos();
            assert!((-0.1..=0.1).contains(&e));
        }
    }

    #[test]
    fn spirals() {
        let ds = gen_trig(TrigKind::SphericalSpiral { spins: 2 }, 200, 4, &mut make_stream(3)).unwrap();
        assert_eq!(ds.get(0, 3), 0.0);
        assert_eq!(ds.get(199, 3), 1.0);
        let ds = gen_trig(TrigKind::ConicSpiral { spins: 1 }, 200, 4, &mut make_stream(4)).unwrap();
        for r in ds.rows() {
            let t = r[0].hypot(r[1]);
            let e4 = r[3] - t * (2.0 * t).sin();
            assert!((-0.1 - 1e-9..=0.6 + 1e-9).contains(&e4));
        }
        let ds = gen_trig(TrigKind::HelicalSpiral, 1, 4, &mut make_stream(5)).unwrap();
        assert_eq!(ds.nrows(), 1);
        let ds = gen_trig(TrigKind::SphericalSpiral { spins: 1 }, 1, 4, &mut make_stream(6)).unwrap();
        assert_eq!(ds.get(0, 3), 0.0);
    }
}
