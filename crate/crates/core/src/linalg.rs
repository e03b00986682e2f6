//! Dense matrices over `K = F_p(t)` with exact Gauss-Jordan elimination.

use rayon::prelude::*;
use thiserror::Error;

use crate::localfield::{LocalScalar, PrimeConfig};

/// Default bound on the polynomial degree of any intermediate entry.
pub const DEFAULT_DEGREE_CAP: usize = 4096;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("matrix is singular (rank {rank} of {dim})")]
    Singular { rank: usize, dim: usize },
    #[error("intermediate degree {found} exceeds the cap {cap}")]
    DegreeCapExceeded { cap: usize, found: usize },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
}

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    cfg: PrimeConfig,
    rows: usize,
    cols: usize,
    data: Vec<LocalScalar>,
}

impl Matrix {
    pub fn zeros(cfg: PrimeConfig, rows: usize, cols: usize) -> Self {
        Matrix {
            cfg,
            rows,
            cols,
            data: vec![LocalScalar::zero(cfg); rows * cols],
        }
    }

    pub fn identity(cfg: PrimeConfig, n: usize) -> Self {
        let mut m = Self::zeros(cfg, n, n);
        for i in 0..n {
            m.set(i, i, LocalScalar::one(cfg));
        }
        m
    }

    pub fn from_rows(cfg: PrimeConfig, rows: Vec<Vec<LocalScalar>>) -> Result<Self, LinalgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(LinalgError::Dimension("ragged rows".into()));
        }
        Ok(Matrix {
            cfg,
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cfg: PrimeConfig, cols: &[Vec<LocalScalar>]) -> Result<Self, LinalgError> {
        let c = cols.len();
        let r = cols.first().map_or(0, Vec::len);
        if cols.iter().any(|col| col.len() != r) {
            return Err(LinalgError::Dimension("ragged columns".into()));
        }
        let mut m = Self::zeros(cfg, r, c);
        for (j, col) in cols.iter().enumerate() {
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        Ok(m)
    }

    pub fn cfg(&self) -> PrimeConfig {
        self.cfg
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &LocalScalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: LocalScalar) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[LocalScalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<LocalScalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cfg, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let cols = other.cols;
        let data: Vec<LocalScalar> = (0..self.rows)
            .into_par_iter()
            .flat_map_iter(|i| {
                let mut row = vec![LocalScalar::zero(self.cfg); cols];
                for (k, a) in self.row(i).iter().enumerate() {
                    if a.is_zero() {
                        continue;
                    }
                    for (j, b) in other.row(k).iter().enumerate() {
                        if !b.is_zero() {
                            row[j] = &row[j] + &(a * b);
                        }
                    }
                }
                row
            })
            .collect();
        Ok(Matrix {
            cfg: self.cfg,
            rows: self.rows,
            cols,
            data,
        })
    }

    pub fn mul_vec(&self, v: &[LocalScalar]) -> Result<Vec<LocalScalar>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::Dimension(format!(
                "{}x{} times vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows).map(|i| dot(self.cfg, self.row(i), v)).collect())
    }

    pub fn is_integral(&self) -> bool {
        self.data.iter().all(LocalScalar::is_integral)
    }

    pub fn max_degree(&self) -> usize {
        self.data.iter().map(LocalScalar::degree_measure).max().unwrap_or(0)
    }

    /// Exact inverse of a square matrix.
    pub fn inverse(&self, cap: usize) -> Result<Self, LinalgError> {
        self.require_square()?;
        let n = self.rows;
        let mut aug = Self::zeros(self.cfg, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, LocalScalar::one(self.cfg));
        }
        let elim = aug.eliminate(n, cap, true)?;
        if elim.rank < n {
            return Err(LinalgError::Singular {
                rank: elim.rank,
                dim: n,
            });
        }
        let mut inv = Self::zeros(self.cfg, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, elim.matrix.get(i, n + j).clone());
            }
        }
        Ok(inv)
    }

    pub fn determinant(&self, cap: usize) -> Result<LocalScalar, LinalgError> {
        self.require_square()?;
        let elim = self.clone().eliminate(self.cols, cap, false)?;
        if elim.rank < self.rows {
            return Ok(LocalScalar::zero(self.cfg));
        }
        let diag = (0..self.rows).fold(LocalScalar::one(self.cfg), |acc, i| &acc * elim.matrix.get(i, i));
        Ok(if elim.swaps % 2 == 1 { -&diag } else { diag })
    }

    pub fn rank(&self, cap: usize) -> Result<usize, LinalgError> {
        Ok(self.clone().eliminate(self.cols, cap, false)?.rank)
    }

    fn require_square(&self) -> Result<(), LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::Dimension(format!(
                "{}x{} is not square",
                self.rows, self.cols
            )));
        }
        Ok(())
    }

    /// Row reduction over the first `pivot_cols` columns. Pivots are the
    /// lowest-degree nonzero entries, which keeps intermediate growth down.
    /// With `full` the pivot rows are normalised and cleared above as well.
    fn eliminate(mut self, pivot_cols: usize, cap: usize, full: bool) -> Result<Elimination, LinalgError> {
        let mut rank = 0;
        let mut swaps = 0;
        for col in 0..pivot_cols {
            if rank == self.rows {
                break;
            }
            let pivot = (rank..self.rows)
                .filter(|&r| !self.get(r, col).is_zero())
                .min_by_key(|&r| (self.get(r, col).degree_measure(), r));
            let Some(pivot) = pivot else { continue };
            if pivot != rank {
                for j in 0..self.cols {
                    self.data.swap(pivot * self.cols + j, rank * self.cols + j);
                }
                swaps += 1;
            }
            let start = if full { 0 } else { col };
            if full {
                let inv = self.get(rank, col).inv().expect("pivot is nonzero");
                for j in start..self.cols {
                    let x = self.get(rank, j);
                    if !x.is_zero() {
                        let y = x * &inv;
                        self.set(rank, j, y);
                    }
                }
            }
            let pivot_row: Vec<LocalScalar> = self.row(rank).to_vec();
            let pivot_val = pivot_row[col].clone();
            let cols = self.cols;
            let targets: Vec<usize> = (0..self.rows)
                .filter(|&r| r != rank && (full || r > rank) && !self.get(r, col).is_zero())
                .collect();
            let updates: Vec<(usize, Vec<LocalScalar>)> = targets
                .par_iter()
                .map(|&r| {
                    let row = &self.data[r * cols..(r + 1) * cols];
                    let factor = if full { row[col].clone() } else { &row[col] / &pivot_val };
                    let mut out = row.to_vec();
                    for j in start..cols {
                        if !pivot_row[j].is_zero() {
                            out[j] = &out[j] - &(&factor * &pivot_row[j]);
                        }
                    }
                    (r, out)
                })
                .collect();
            for (r, out) in updates {
                let found = out.iter().map(LocalScalar::degree_measure).max().unwrap_or(0);
                if found > cap {
                    return Err(LinalgError::DegreeCapExceeded { cap, found });
                }
                self.data[r * cols..(r + 1) * cols].clone_from_slice(&out);
            }
            rank += 1;
        }
        Ok(Elimination {
            matrix: self,
            rank,
            swaps,
        })
    }
}

struct Elimination {
    matrix: Matrix,
    rank: usize,
    swaps: usize,
}

pub fn dot(cfg: PrimeConfig, a: &[LocalScalar], b: &[LocalScalar]) -> LocalScalar {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(LocalScalar::zero(cfg), |acc, (x, y)| &acc + &(x * y))
}

/// Degree cap from `HOPFORGE_DEGREE_CAP`, else the default.
pub fn degree_cap_from_env() -> usize {
    std::env::var("HOPFORGE_DEGREE_CAP")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_DEGREE_CAP)
}
