use std::fmt;

use crate::algebra::field::Field;
use crate::error::AlgebraError;

/// A dense matrix over an exact field, stored row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix<F> {
    rows: usize,
    cols: usize,
    entries: Vec<F>,
}

/// Row echelon form: nonzero rows only, with the pivot column of each.
#[derive(Debug, Clone)]
pub struct Echelon<F> {
    pub rows: Vec<Vec<F>>,
    pub pivots: Vec<usize>,
    pub cols: usize,
}

impl<F: Field> ExactMatrix<F> {
    pub fn new(rows: usize, cols: usize, entries: Vec<F>) -> Result<Self, AlgebraError> {
        if entries.len() != rows * cols {
            return Err(AlgebraError::DimensionMismatch {
                expected: rows * cols,
                found: entries.len(),
            });
        }
        Ok(ExactMatrix { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix { rows, cols, entries: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = F::one();
        }
        m
    }

    /// Builds a matrix from rows; `cols` is needed when there are no rows.
    pub fn from_rows(rows: Vec<Vec<F>>, cols: usize) -> Result<Self, AlgebraError> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for row in rows {
            if row.len() != cols {
                return Err(AlgebraError::DimensionMismatch { expected: cols, found: row.len() });
            }
            entries.extend(row);
        }
        Ok(ExactMatrix { rows: n, cols, entries })
    }

    pub fn num_rows(&self) -> usize {
        self.rows
    }

    pub fn num_cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.entries[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    /// Submatrix made of the selected rows, in the given order.
    pub fn select_rows(&self, indices: &[usize]) -> Self {
        let mut entries = Vec::with_capacity(indices.len() * self.cols);
        for &i in indices {
            entries.extend_from_slice(self.row(i));
        }
        ExactMatrix { rows: indices.len(), cols: self.cols, entries }
    }

    pub fn mul_vec(&self, v: &[F]) -> Result<Vec<F>, AlgebraError> {
        if v.len() != self.cols {
            return Err(AlgebraError::DimensionMismatch { expected: self.cols, found: v.len() });
        }
        Ok((0..self.rows).map(|i| dot(self.row(i), v)).collect())
    }

    pub fn echelon(&self) -> Echelon<F> {
        let mut rows = self.to_rows();
        let pivots = F::echelonize(&mut rows);
        Echelon { rows, pivots, cols: self.cols }
    }

    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    /// Basis of the right null space `{x : Mx = 0}`, one vector per free
    /// column, in column order.
    pub fn kernel_basis(&self) -> Vec<Vec<F>> {
        let ech = self.echelon();
        ech.free_columns().map(|f| ech.kernel_vector(f)).collect()
    }

    /// Some `x` with `Mx = b`, or `None` when the system is inconsistent.
    /// Free variables are set to zero.
    pub fn solve_affine(&self, b: &[F]) -> Result<Option<Vec<F>>, AlgebraError> {
        if b.len() != self.rows {
            return Err(AlgebraError::DimensionMismatch { expected: self.rows, found: b.len() });
        }
        let mut rows: Vec<Vec<F>> = (0..self.rows)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.push(b[i].clone());
                r
            })
            .collect();
        let pivots = F::echelonize(&mut rows);
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![F::zero(); self.cols];
        for (row, &p) in rows.iter().zip(&pivots).rev() {
            let mut acc = row[self.cols].clone();
            for j in p + 1..self.cols {
                if !x[j].is_zero() {
                    acc -= row[j].clone() * &x[j];
                }
            }
            x[p] = acc.div_exact(&row[p]).expect("pivot is nonzero");
        }
        Ok(Some(x))
    }
}

impl<F: Field> Echelon<F> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn free_columns(&self) -> impl Iterator<Item = usize> + '_ {
        let mut next_pivot = 0;
        (0..self.cols).filter(move |&c| {
            if next_pivot < self.pivots.len() && self.pivots[next_pivot] == c {
                next_pivot += 1;
                false
            } else {
                true
            }
        })
    }

    /// The kernel vector with a 1 in free column `free`, zeros in the other
    /// free columns, solved by back substitution.
    pub fn kernel_vector(&self, free: usize) -> Vec<F> {
        let mut x = vec![F::zero(); self.cols];
        x[free] = F::one();
        for (row, &p) in self.rows.iter().zip(&self.pivots).rev() {
            if p > free {
                continue;
            }
            let mut acc = F::zero();
            for j in p + 1..self.cols {
                if !x[j].is_zero() {
                    acc -= row[j].clone() * &x[j];
                }
            }
            x[p] = acc.div_exact(&row[p]).expect("pivot is nonzero");
        }
        x
    }

    /// Whether `v` lies in the row space.
    pub fn contains_row(&self, v: &[F]) -> bool {
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let factor = v[p].div_exact(&row[p]).expect("pivot is nonzero");
            for j in p..self.cols {
                if !row[j].is_zero() {
                    v[j] -= factor.clone() * &row[j];
                }
            }
        }
        v.iter().all(|x| x.is_zero())
    }
}

pub fn dot<F: Field>(a: &[F], b: &[F]) -> F {
    a.iter().zip(b).fold(F::zero(), |acc, (x, y)| {
        if x.is_zero() || y.is_zero() {
            acc
        } else {
            acc + x.clone() * y
        }
    })
}

/// Plain Gaussian elimination with first-nonzero pivoting. Each pivot row is
/// scaled to a leading 1 and entries below the pivot are cleared.
pub fn gauss_echelon<F: Field>(rows: &mut Vec<Vec<F>>) -> Vec<usize> {
    let n = rows.len();
    let cols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == n {
            break;
        }
        let Some(p) = (r..n).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(p, r);
        let inv = rows[r][c].inv().expect("pivot is nonzero");
        for x in rows[r][c..].iter_mut() {
            *x *= inv.clone();
        }
        let (head, tail) = rows.split_at_mut(r + 1);
        let pivot_row = &head[r];
        for row in tail.iter_mut() {
            if row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for j in c..cols {
                if !pivot_row[j].is_zero() {
                    row[j] -= factor.clone() * &pivot_row[j];
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

impl<F: fmt::Debug> fmt::Debug for ExactMatrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix {}x{} [", self.rows, self.cols)?;
        for row in self.entries.chunks(self.cols.max(1)) {
            writeln!(f, "  {row:?}")?;
        }
        write!(f, "]")
    }
}
