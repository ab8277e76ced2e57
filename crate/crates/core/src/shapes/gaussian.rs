use nalgebra::DMatrix;

use crate::dataset::Dataset;
use crate::error::{param_err, Result};
use crate::rng::RandomStream;

/// `n` draws from `N_p(0, s)`, through the Cholesky factor of `s`.
pub fn gen_gaussian(n: usize, s: &[Vec<f64>], stream: &mut RandomStream) -> Result<Dataset> {
    let p = s.len();
    if p == 0 || s.iter().any(|row| row.len() != p) {
        return Err(param_err("s", "covariance must be a non-empty square matrix"));
    }
    let cov = DMatrix::from_fn(p, p, |i, j| s[i][j]);
    let asym = (&cov - cov.transpose()).amax();
    if !(asym <= 1e-12 * cov.amax().max(1.0)) {
        return Err(param_err("s", "covariance must be symmetric"));
    }
    let chol = cov
        .cholesky()
        .ok_or_else(|| param_err("s", "covariance must be positive definite"))?;
    let lower = chol.l();
    let mut values = Vec::with_capacity(n * p);
    let mut z = vec![0.0; p];
    for _ in 0..n {
        z.iter_mut().for_each(|v| *v = stream.std_normal());
        for i in 0..p {
            values.push((0..=i).map(|j| lower[(i, j)] * z[j]).sum());
        }
    }
    Dataset::from_vec(n, p, values)
}

pub fn identity_covariance(p: usize) -> Vec<Vec<f64>> {
    (0..p)
        .map(|i| (0..p).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::rng::make_stream;

    fn sample_cov(ds: &Dataset) -> Vec<Vec<f64>> {
        let m = ds.column_means();
        let p = ds.ncols();
        let n = ds.nrows() as f64;
        let mut c = vec![vec![0.0; p]; p];
        for r in ds.rows() {
            for a in 0..p {
                for b in 0..p {
                    c[a][b] += (r[a] - m[a]) * (r[b] - m[b]) / (n - 1.0);
                }
            }
        }
        c
    }

    #[test]
    fn identity_moments() {
        let ds = gen_gaussian(20_000, &identity_covariance(3), &mut make_stream(1)).unwrap();
        let c = sample_cov(&ds);
        for a in 0..3 {
            for b in 0..3 {
                let expect = if a == b { 1.0 } else { 0.0 };
                assert!((c[a][b] - expect).abs() < 0.05, "{c:?}");
            }
        }
    }

    #[test]
    fn variance_ratio() {
        let s = vec![vec![1.0, 0.0], vec![0.0, 4.0]];
        let ds = gen_gaussian(20_000, &s, &mut make_stream(2)).unwrap();
        let c = sample_cov(&ds);
        let ratio = c[1][1] / c[0][0];
        assert!((3.4..=4.6).contains(&ratio), "{ratio}");
    }

    #[test]
    fn single_row_and_errors() {
        let mut st = make_stream(3);
        let one = gen_gaussian(1, &identity_covariance(5), &mut st).unwrap();
        assert_eq!((one.nrows(), one.ncols()), (1, 5));
        let not_pd = vec![vec![1.0, 2.0], vec![2.0, 1.0]];
        assert!(matches!(gen_gaussian(5, &not_pd, &mut st), Err(Error::Parameter { .. })));
        let asym = vec![vec![1.0, 0.5], vec![0.0, 1.0]];
        assert!(matches!(gen_gaussian(5, &asym, &mut st), Err(Error::Parameter { .. })));
    }
}
