//! The n×p point matrix shared by every generator.

use crate::error::{Error, Result};

/// Dense row-major point matrix with canonical `x1..xp` columns and optional
/// per-row labels.
///
/// Every entry is finite; this is checked on construction.
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    nrows: usize,
    ncols: usize,
    values: Vec<f64>,
    labels: Option<Vec<String>>,
}

impl Dataset {
    /// Builds a dataset from row-major values.
    pub fn from_vec(nrows: usize, ncols: usize, values: Vec<f64>) -> Result<Self> {
        if values.len() != nrows * ncols {
            return Err(Error::Shape(format!(
                "{} values cannot fill a {nrows}x{ncols} matrix",
                values.len()
            )));
        }
        if let Some(pos) = values.iter().position(|v| !v.is_finite()) {
            let (row, col) = pos.checked_div(ncols).map_or((0, 0), |row| (row, pos % ncols));
            return Err(Error::NonFinite { row, col });
        }
        Ok(Self {
            nrows,
            ncols,
            values,
            labels: None,
        })
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::Shape("rows have unequal lengths".into()));
        }
        Self::from_vec(rows.len(), ncols, rows.concat())
    }

    /// Builds a dataset from equal-length columns.
    pub fn from_columns(columns: &[Vec<f64>]) -> Result<Self> {
        let nrows = columns.first().map_or(0, Vec::len);
        if columns.iter().any(|c| c.len() != nrows) {
            return Err(Error::Shape("columns have unequal lengths".into()));
        }
        let ncols = columns.len();
        let mut values = Vec::with_capacity(nrows * ncols);
        for i in 0..nrows {
            values.extend(columns.iter().map(|c| c[i]));
        }
        Self::from_vec(nrows, ncols, values)
    }

    pub fn empty(ncols: usize) -> Self {
        Self {
            nrows: 0,
            ncols,
            values: Vec::new(),
            labels: None,
        }
    }

    /// Attaches labels, one per row.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.nrows {
            return Err(Error::Shape(format!(
                "{} labels for {} rows",
                labels.len(),
                self.nrows
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    /// Labels every row with the same tag.
    pub fn with_label(self, label: &str) -> Self {
        let labels = vec![label.to_string(); self.nrows];
        Self {
            labels: Some(labels),
            ..self
        }
    }

    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn is_empty(&self) -> bool {
        self.nrows == 0
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// `x1`, `x2`, ... `xp`.
    pub fn column_names(&self) -> Vec<String> {
        (1..=self.ncols).map(|j| format!("x{j}")).collect()
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.values[i * self.ncols..(i + 1) * self.ncols]
    }

    pub fn rows(&self) -> impl ExactSizeIterator<Item = &[f64]> + '_ {
        // chunks_exact panics on a zero chunk size
        let width = self.ncols.max(1);
        let take = if self.ncols == 0 { 0 } else { self.nrows };
        self.values.chunks_exact(width).take(take)
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.values[i * self.ncols + j]
    }

    pub fn column(&self, j: usize) -> Vec<f64> {
        self.rows().map(|r| r[j]).collect()
    }

    pub fn column_means(&self) -> Vec<f64> {
        let mut means = vec![0.0; self.ncols];
        for row in self.rows() {
            for (m, v) in means.iter_mut().zip(row) {
                *m += v;
            }
        }
        let n = self.nrows as f64;
        means.iter_mut().for_each(|m| *m /= n);
        means
    }

    /// Sample standard deviations (n − 1 denominator); zero for a single row.
    pub fn column_sds(&self) -> Vec<f64> {
        let means = self.column_means();
        let mut ss = vec![0.0; self.ncols];
        for row in self.rows() {
            for ((s, v), m) in ss.iter_mut().zip(row).zip(&means) {
                *s += (v - m).powi(2);
            }
        }
        let denom = (self.nrows.saturating_sub(1)).max(1) as f64;
        ss.into_iter().map(|s| (s / denom).sqrt()).collect()
    }

    /// Mean over every entry of the matrix.
    pub fn grand_mean(&self) -> f64 {
        if self.values.is_empty() {
            return 0.0;
        }
        self.values.iter().sum::<f64>() / self.values.len() as f64
    }

    /// Applies `f` to every row in place. Non-finite results are rejected.
    pub fn map_rows<F>(&self, mut f: F) -> Result<Self>
    where
        F: FnMut(&[f64], &mut [f64]),
    {
        let mut values = self.values.clone();
        for (src, dst) in self
            .values
            .chunks_exact(self.ncols.max(1))
            .zip(values.chunks_exact_mut(self.ncols.max(1)))
        {
            f(src, dst);
        }
        let mut out = Self::from_vec(self.nrows, self.ncols, values)?;
        out.labels = self.labels.clone();
        Ok(out)
    }

    /// Keeps the given rows, in the given order.
    pub fn select_rows(&self, idx: &[usize]) -> Self {
        let mut values = Vec::with_capacity(idx.len() * self.ncols);
        for &i in idx {
            values.extend_from_slice(self.row(i));
        }
        let labels = self
            .labels
            .as_ref()
            .map(|l| idx.iter().map(|&i| l[i].clone()).collect());
        Self {
            nrows: idx.len(),
            ncols: self.ncols,
            values,
            labels,
        }
    }

    /// Keeps the first `ncols` columns.
    pub fn select_columns(&self, ncols: usize) -> Self {
        let ncols = ncols.min(self.ncols);
        let mut values = Vec::with_capacity(self.nrows * ncols);
        for row in self.rows() {
            values.extend_from_slice(&row[..ncols]);
        }
        Self {
            nrows: self.nrows,
            ncols,
            values,
            labels: self.labels.clone(),
        }
    }

    /// Appends the columns of `other` to the right. Labels of `self` are kept.
    pub fn hcat(&self, other: &Dataset) -> Result<Self> {
        if other.nrows != self.nrows {
            return Err(Error::Shape(format!(
                "cannot append {} rows to {} rows",
                other.nrows, self.nrows
            )));
        }
        let ncols = self.ncols + other.ncols;
        let mut values = Vec::with_capacity(self.nrows * ncols);
        for i in 0..self.nrows {
            values.extend_from_slice(self.row(i));
            values.extend_from_slice(other.row(i));
        }
        Ok(Self {
            nrows: self.nrows,
            ncols,
            values,
            labels: self.labels.clone(),
        })
    }

    /// Stacks datasets vertically. Either all parts carry labels or none do.
    pub fn vcat(parts: &[Dataset]) -> Result<Self> {
        let Some(first) = parts.first() else {
            return Err(Error::EmptyInput("nothing to concatenate".into()));
        };
        let ncols = first.ncols;
        if parts.iter().any(|d| d.ncols != ncols) {
            return Err(Error::Shape("parts have different column counts".into()));
        }
        let labelled = parts.iter().filter(|d| d.labels.is_some()).count();
        if labelled != 0 && labelled != parts.len() {
            return Err(Error::Shape("cannot mix labelled and unlabelled parts".into()));
        }
        let values: Vec<f64> = parts.iter().flat_map(|d| d.values.iter().copied()).collect();
        let labels = (labelled > 0).then(|| {
            parts
                .iter()
                .flat_map(|d| d.labels.as_ref().unwrap().iter().cloned())
                .collect()
        });
        Ok(Self {
            nrows: parts.iter().map(|d| d.nrows).sum(),
            ncols,
            values,
            labels,
        })
    }
}
