use serde::{Deserialize, Serialize};

use super::poly::Coefficient;
use super::Rational;
use crate::error::{Error, Result};

/// Dense matrix over an exact field, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct ExactMatrix<C: Coefficient> {
    rows: usize,
    cols: usize,
    ctx: C::Ctx,
    entries: Vec<C>,
}

impl<C: Coefficient> ExactMatrix<C> {
    pub fn zeros(rows: usize, cols: usize, ctx: C::Ctx) -> Self {
        let entries = vec![C::zero(&ctx); rows * cols];
        ExactMatrix {
            rows,
            cols,
            ctx,
            entries,
        }
    }

    pub fn identity(n: usize, ctx: C::Ctx) -> Self {
        let mut m = Self::zeros(n, n, ctx);
        for i in 0..n {
            m.entries[i * n + i] = C::one(&m.ctx);
        }
        m
    }

    /// Builds a matrix from rows of equal length. `cols` is needed for the
    /// zero-row case.
    pub fn from_rows(rows: Vec<Vec<C>>, cols: usize, ctx: C::Ctx) -> Result<Self> {
        let nrows = rows.len();
        let mut entries = Vec::with_capacity(nrows * cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(Error::InvalidInput(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            entries.extend(row);
        }
        Ok(ExactMatrix {
            rows: nrows,
            cols,
            ctx,
            entries,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &C {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: C) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[C] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows, self.ctx.clone());
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.entries[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    fn row_reduce(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..self.cols {
                    self.entries.swap(p * self.cols + j, r * self.cols + j);
                }
            }
            let inv = self.get(r, c).inverse().expect("pivot is nonzero");
            for j in c..self.cols {
                let v = self.get(r, j).times(&inv);
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r || self.get(i, c).is_zero() {
                    continue;
                }
                let factor = self.get(i, c).clone();
                for j in c..self.cols {
                    let v = self.get(i, j).minus(&factor.times(self.get(r, j)));
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    /// Exact rank by Gauss–Jordan elimination.
    pub fn rank(&self) -> usize {
        self.clone().row_reduce().len()
    }

    /// Solves `self * x = rhs` for square invertible `self`.
    pub fn solve(&self, rhs: &[C]) -> Result<Vec<C>> {
        if self.rows != self.cols || rhs.len() != self.rows {
            return Err(Error::InvalidInput("solve needs a square system".into()));
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, n + 1, self.ctx.clone());
        for (i, b) in rhs.iter().enumerate() {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n, b.clone());
        }
        let pivots = aug.row_reduce();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::InvalidInput("singular system".into()));
        }
        Ok((0..n).map(|i| aug.get(i, n).clone()).collect())
    }
}

impl ExactMatrix<Rational> {
    pub fn from_rational_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        Self::from_rows(rows, cols, ())
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Determinant of a square matrix.
    pub fn determinant(&self) -> Result<Rational> {
        if self.rows != self.cols {
            return Err(Error::InvalidInput(
                "determinant of a non-square matrix".into(),
            ));
        }
        let mut m = self.clone();
        let n = self.rows;
        let mut det = Rational::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.get(i, c).is_zero()) else {
                return Ok(Rational::zero());
            };
            if p != c {
                for j in 0..n {
                    m.entries.swap(p * n + j, c * n + j);
                }
                det = -det;
            }
            let pivot = m.get(c, c).clone();
            det = &det * &pivot;
            for i in c + 1..n {
                let factor = m.get(i, c) / &pivot;
                for j in c..n {
                    let v = m.get(i, j) - &(&factor * m.get(c, j));
                    m.set(i, j, v);
                }
            }
        }
        Ok(det)
    }
}

impl Serialize for ExactMatrix<Rational> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_rows().serialize(s)
    }
}

impl<'de> Deserialize<'de> for ExactMatrix<Rational> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<Rational>>::deserialize(d)?;
        ExactMatrix::from_rational_rows(rows).map_err(serde::de::Error::custom)
    }
}
