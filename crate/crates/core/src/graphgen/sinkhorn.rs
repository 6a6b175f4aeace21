use super::Graph;
use crate::{Error, Result};

pub const DEFAULT_TOL: f64 = 1e-9;
pub const DEFAULT_MAX_ITER: usize = 1000;

/// Sparse symmetric doubly stochastic influence weights.
///
/// Row `i` lists `(j, w_ij)` with ascending `j`; the diagonal entry, when
/// present, is the agent's self-weight. Stored weights are strictly positive.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightMatrix {
    rows: Vec<Vec<(usize, f64)>>,
}

impl WeightMatrix {
    /// Wraps explicit rows. Rows are sorted; symmetry and positivity are checked,
    /// row sums are not.
    pub fn from_rows(mut rows: Vec<Vec<(usize, f64)>>) -> Result<Self> {
        let n = rows.len();
        for row in &mut rows {
            row.sort_by_key(|&(j, _)| j);
        }
        let m = WeightMatrix { rows };
        for (i, row) in m.rows.iter().enumerate() {
            for w in row.windows(2) {
                if w[0].0 == w[1].0 {
                    return Err(Error::Dimension(format!(
                        "duplicate entry ({i},{})",
                        w[0].0
                    )));
                }
            }
            for &(j, w) in row {
                if j >= n {
                    return Err(Error::Dimension(format!("column {j} outside [0,{n})")));
                }
                if w.is_nan() || w <= 0.0 {
                    return Err(Error::Dimension(format!(
                        "non-positive weight at ({i},{j})"
                    )));
                }
                if m.get(j, i) != w {
                    return Err(Error::Dimension(format!("asymmetric entry ({i},{j})")));
                }
            }
        }
        Ok(m)
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn row(&self, i: usize) -> &[(usize, f64)] {
        &self.rows[i]
    }

    /// `w_ij`, zero when absent.
    pub fn get(&self, i: usize, j: usize) -> f64 {
        let row = &self.rows[i];
        row.binary_search_by_key(&j, |&(c, _)| c)
            .map_or(0.0, |idx| row[idx].1)
    }

    pub fn self_weight(&self, i: usize) -> f64 {
        self.get(i, i)
    }

    /// Off-diagonal entries of row `i`.
    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = (usize, f64)> + '_ {
        self.rows[i].iter().copied().filter(move |&(j, _)| j != i)
    }

    /// Upper triangle including the diagonal, as `(i, j, w)` with `i <= j`.
    pub fn upper_entries(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        self.rows.iter().enumerate().flat_map(|(i, row)| {
            row.iter()
                .filter(move |&&(j, _)| j >= i)
                .map(move |&(j, w)| (i, j, w))
        })
    }

    pub fn row_sums(&self) -> Vec<f64> {
        self.rows
            .iter()
            .map(|row| row.iter().map(|&(_, w)| w).sum())
            .collect()
    }

    pub fn col_sums(&self) -> Vec<f64> {
        let mut sums = vec![0.0; self.n()];
        for row in &self.rows {
            for &(j, w) in row {
                sums[j] += w;
            }
        }
        sums
    }

    /// Largest `|sum - 1|` over all rows and columns.
    pub fn stochastic_residual(&self) -> f64 {
        self.row_sums()
            .into_iter()
            .chain(self.col_sums())
            .map(|s| (s - 1.0).abs())
            .fold(0.0, f64::max)
    }

    pub fn to_dense(&self) -> Vec<Vec<f64>> {
        let n = self.n();
        let mut dense = vec![vec![0.0; n]; n];
        for (i, row) in self.rows.iter().enumerate() {
            for &(j, w) in row {
                dense[i][j] = w;
            }
        }
        dense
    }
}

/// Scales the adjacency of `g` to a symmetric doubly stochastic matrix.
///
/// The binary adjacency (with a unit diagonal when `add_self_loops`) is
/// balanced as `D A D` by the symmetric Sinkhorn-Knopp update
/// `d_i <- d_i / sqrt((D A D 1)_i)` until every row sum is within `tol` of 1.
/// Nodes without any entry keep `w_ii = 1` and are left out of the scaling.
pub fn sinkhorn_normalize(
    g: &Graph,
    add_self_loops: bool,
    tol: f64,
    max_iter: usize,
) -> Result<WeightMatrix> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::config("sinkhorn_tol", "must be positive"));
    }
    if max_iter == 0 {
        return Err(Error::config("sinkhorn_max_iter", "must be at least 1"));
    }
    let n = g.n();
    let mut pattern = g.adjacency();
    if add_self_loops {
        for (i, row) in pattern.iter_mut().enumerate() {
            let pos = row.partition_point(|&j| j < i);
            row.insert(pos, i);
        }
    }
    let isolated: Vec<bool> = pattern.iter().map(Vec::is_empty).collect();

    let mut scale = vec![1.0_f64; n];
    let mut sums = vec![0.0_f64; n];
    let row_sums = |scale: &[f64], sums: &mut [f64]| -> f64 {
        let mut residual = 0.0_f64;
        for i in 0..n {
            if isolated[i] {
                continue;
            }
            let s: f64 = pattern[i].iter().map(|&j| scale[i] * scale[j]).sum();
            sums[i] = s;
            residual = residual.max((s - 1.0).abs());
        }
        residual
    };

    let mut residual = row_sums(&scale, &mut sums);
    let mut iterations = 0;
    while residual > tol {
        if iterations == max_iter || !residual.is_finite() {
            return Err(Error::NotScalable {
                graph: format!(
                    "(n={}, edges={}, self_loops={})",
                    n,
                    g.edges().len(),
                    add_self_loops
                ),
                iterations,
                residual,
            });
        }
        for i in 0..n {
            if !isolated[i] {
                scale[i] /= sums[i].sqrt();
            }
        }
        residual = row_sums(&scale, &mut sums);
        iterations += 1;
    }

    let rows = pattern
        .iter()
        .enumerate()
        .map(|(i, cols)| {
            if isolated[i] {
                vec![(i, 1.0)]
            } else {
                cols.iter().map(|&j| (j, scale[i] * scale[j])).collect()
            }
        })
        .collect();
    Ok(WeightMatrix { rows })
}
