use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rational::{rat, zero_vector, Rational, Vector};
use super::LinAlgError;

/// Dense row-major matrix over the rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

/// Result of [`Matrix::rref`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub reduced: Matrix,
    pub pivot_columns: Vec<usize>,
    pub rank: usize,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn diagonal(diag: &[Rational]) -> Self {
        let mut m = Self::zeros(diag.len(), diag.len());
        for (i, d) in diag.iter().enumerate() {
            m[(i, i)] = d.clone();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, LinAlgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(LinAlgError::RaggedRows);
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds a `dim × columns.len()` matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(dim: usize, columns: &[Vector]) -> Self {
        let mut m = Self::zeros(dim, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), dim, "column {j} has wrong length");
            for (i, x) in col.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    /// Integer literal convenience, mostly for tests and the catalog.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect())
            .expect("ragged integer literal")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn trace(&self) -> Result<Rational, LinAlgError> {
        self.require_square()?;
        Ok((0..self.rows).map(|i| &self[(i, i)]).sum())
    }

    pub fn scale(&self, c: &Rational) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| x * c).collect(),
        }
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vector {
        assert_eq!(v.len(), self.cols, "matrix-vector dimension mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    pub fn pow(&self, k: u32) -> Matrix {
        let mut acc = Matrix::identity(self.rows);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Kronecker product, `self` indexing the outer blocks.
    pub fn kronecker(&self, other: &Matrix) -> Matrix {
        let mut k = Matrix::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for r in 0..other.rows {
                    for c in 0..other.cols {
                        k[(i * other.rows + r, j * other.cols + c)] = a * &other[(r, c)];
                    }
                }
            }
        }
        k
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        let mut s = Matrix::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                s[(a, b)] = self[(i, j)].clone();
            }
        }
        s
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        let mut m = Matrix::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(i, j)] = self[(i, j)].clone();
            }
            for j in 0..other.cols {
                m[(i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        m
    }

    pub(crate) fn require_square(&self) -> Result<(), LinAlgError> {
        if self.is_square() {
            Ok(())
        } else {
            Err(LinAlgError::NonSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.entries.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    /// Reduced row echelon form. Columns are scanned left to right and the
    /// first row at or below the current pivot row with a nonzero entry is
    /// taken as pivot row.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(p, r);
            let inv = m[(r, c)].recip();
            for j in c..m.cols {
                let v = &m[(r, j)] * &inv;
                m[(r, j)] = v;
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let factor = m[(i, c)].clone();
                for j in c..m.cols {
                    if m[(r, j)].is_zero() {
                        continue;
                    }
                    let v = &m[(i, j)] - &factor * &m[(r, j)];
                    m[(i, j)] = v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref {
            rank: pivots.len(),
            reduced: m,
            pivot_columns: pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Null-space basis: one vector per free column of the rref, with that
    /// free variable set to 1 and the other free variables set to 0.
    pub fn kernel_basis(&self) -> Vec<Vector> {
        let Rref {
            reduced,
            pivot_columns,
            ..
        } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivot_columns {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&j| !is_pivot[j])
            .map(|free| {
                let mut v = zero_vector(self.cols);
                v[free] = Rational::one();
                for (row, &p) in pivot_columns.iter().enumerate() {
                    v[p] = -reduced[(row, free)].clone();
                }
                v
            })
            .collect()
    }

    /// Basis of the column space: the pivot columns of `self`.
    pub fn column_space_basis(&self) -> Vec<Vector> {
        self.rref()
            .pivot_columns
            .iter()
            .map(|&j| self.column(j))
            .collect()
    }

    pub fn determinant(&self) -> Result<Rational, LinAlgError> {
        self.require_square()?;
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rational::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return Ok(Rational::zero());
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let pivot = m[(c, c)].clone();
            det *= &pivot;
            for i in c + 1..n {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let factor = &m[(i, c)] / &pivot;
                for j in c..n {
                    let v = &m[(i, j)] - &factor * &m[(c, j)];
                    m[(i, j)] = v;
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Result<Matrix, LinAlgError> {
        self.require_square()?;
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(n)).rref();
        if aug.pivot_columns.iter().take_while(|&&c| c < n).count() < n {
            return Err(LinAlgError::Singular);
        }
        let all: Vec<usize> = (0..n).collect();
        let right: Vec<usize> = (n..2 * n).collect();
        Ok(aug.reduced.submatrix(&all, &right))
    }

    /// Matrix of the `p`-th exterior power on the lexicographically ordered
    /// basis of `p`-subsets; entry `(S, T)` is the minor with rows `S`, columns `T`.
    pub fn exterior_power(&self, p: usize) -> Result<Matrix, LinAlgError> {
        self.require_square()?;
        let n = self.rows;
        if p > n {
            return Err(LinAlgError::DegreeOutOfRange { degree: p, dim: n });
        }
        let subsets = super::subsets(n, p);
        let mut out = Matrix::zeros(subsets.len(), subsets.len());
        for (a, rows) in subsets.iter().enumerate() {
            for (b, cols) in subsets.iter().enumerate() {
                out[(a, b)] = self.submatrix(rows, cols).determinant()?;
            }
        }
        Ok(out)
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Rational;

    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        debug_assert!(i < self.rows && j < self.cols);
        &self.entries[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.entries[i * self.cols + j]
    }
}

impl Mul for &Matrix {
    type Output = Matrix;

    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product dimension mismatch");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out.entries[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl Add for &Matrix {
    type Output = Matrix;

    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "sum shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;

    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "difference shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;

    fn neg(self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| -x).collect(),
        }
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix{}", self)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
        }
        write!(f, "]")
    }
}

/// Coefficients of `target` in terms of `basis`, or `NotInSpan` when the
/// basis is dependent or the target lies outside its span.
pub fn solve_in_span(basis: &[Vector], target: &[Rational]) -> Result<Vector, LinAlgError> {
    let dim = target.len();
    if let Some(bad) = basis.iter().find(|b| b.len() != dim) {
        return Err(LinAlgError::DimensionMismatch {
            expected: dim,
            found: bad.len(),
        });
    }
    let k = basis.len();
    let aug = Matrix::from_columns(dim, basis).hstack(&Matrix::from_columns(dim, &[target.to_vec()]));
    let Rref {
        reduced,
        pivot_columns,
        rank,
    } = aug.rref();
    if rank != k || pivot_columns.contains(&k) {
        return Err(LinAlgError::NotInSpan);
    }
    Ok((0..k).map(|row| reduced[(row, k)].clone()).collect())
}
