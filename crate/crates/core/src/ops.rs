//! Dataset-level helpers: normalization, row shuffling, cluster relocation
//! and background noise.

use std::collections::BTreeMap;

use crate::dataset::Dataset;
use crate::error::{param_err, Error, Result};
use crate::rng::RandomStream;

/// Rescales every column to [0, 1] via `(x − min) / (max − min)`.
/// Constant columns map to 0. Labels are kept.
pub fn normalize_data(ds: &Dataset) -> Result<Dataset> {
    if ds.is_empty() || ds.ncols() == 0 {
        return Err(Error::EmptyInput("cannot normalize an empty dataset".into()));
    }
    let p = ds.ncols();
    let mut lo = vec![f64::INFINITY; p];
    let mut hi = vec![f64::NEG_INFINITY; p];
    for row in ds.rows() {
        for j in 0..p {
            lo[j] = lo[j].min(row[j]);
            hi[j] = hi[j].max(row[j]);
        }
    }
    ds.map_rows(|src, dst| {
        for j in 0..p {
            let range = hi[j] - lo[j];
            dst[j] = if range > 0.0 { (src[j] - lo[j]) / range } else { 0.0 };
        }
    })
}

/// Random row permutation; labels travel with their rows.
pub fn randomize_rows(ds: &Dataset, stream: &mut RandomStream) -> Dataset {
    let perm = stream.permutation(ds.nrows());
    ds.select_rows(&perm)
}

/// Distinct labels in lexicographic order.
pub fn sorted_labels(ds: &Dataset) -> Result<Vec<String>> {
    let labels = ds
        .labels()
        .ok_or_else(|| Error::Shape("dataset has no labels".into()))?;
    let mut distinct: Vec<String> = labels.to_vec();
    distinct.sort();
    distinct.dedup();
    Ok(distinct)
}

/// Moves every cluster so its centroid lands on the matching `loc` row.
///
/// Row `c` of `loc` belongs to the `c`-th distinct label in lexicographic
/// order.
pub fn relocate_clusters(ds: &Dataset, loc: &[Vec<f64>]) -> Result<Dataset> {
    let names = sorted_labels(ds)?;
    if names.len() != loc.len() {
        return Err(Error::Shape(format!(
            "{} clusters but {} location rows",
            names.len(),
            loc.len()
        )));
    }
    let p = ds.ncols();
    if let Some(bad) = loc.iter().position(|r| r.len() != p) {
        return Err(Error::Shape(format!(
            "location row {} has {} entries, expected {p}",
            bad + 1,
            loc[bad].len()
        )));
    }
    let labels = ds.labels().unwrap();
    let mut sums: BTreeMap<&str, (Vec<f64>, usize)> = BTreeMap::new();
    for (row, label) in ds.rows().zip(labels) {
        let entry = sums.entry(label).or_insert_with(|| (vec![0.0; p], 0));
        entry.0.iter_mut().zip(row).for_each(|(s, v)| *s += v);
        entry.1 += 1;
    }
    let shifts: BTreeMap<&str, Vec<f64>> = sums
        .into_iter()
        .zip(loc)
        .map(|((name, (sum, count)), target)| {
            let shift = sum
                .iter()
                .zip(target)
                .map(|(s, t)| t - s / count as f64)
                .collect();
            (name, shift)
        })
        .collect();
    let mut values = ds.values().to_vec();
    for (i, label) in labels.iter().enumerate() {
        let shift = &shifts[label.as_str()];
        for j in 0..p {
            values[i * p + j] += shift[j];
        }
    }
    Dataset::from_vec(ds.nrows(), p, values)?.with_labels(labels.to_vec())
}

/// `n × p` independent normal draws, column `j` from `N(mean[j], sd[j]²)`.
pub fn gen_bkgnoise(
    n: usize,
    p: usize,
    mean: &[f64],
    sd: &[f64],
    stream: &mut RandomStream,
) -> Result<Dataset> {
    if n == 0 || p == 0 {
        return Err(Error::EmptyInput("background noise needs n >= 1 and p >= 1".into()));
    }
    if mean.len() != p || sd.len() != p {
        return Err(Error::Shape(format!(
            "mean has {} and sd has {} entries, expected {p}",
            mean.len(),
            sd.len()
        )));
    }
    if let Some(s) = sd.iter().find(|s| !(**s > 0.0) || !s.is_finite()) {
        return Err(param_err("s", format!("standard deviations must be positive, got {s}")));
    }
    let mut values = Vec::with_capacity(n * p);
    for _ in 0..n {
        for j in 0..p {
            values.push(stream.normal(mean[j], sd[j]));
        }
    }
    Dataset::from_vec(n, p, values)
}
