//! Lie algebras given by structure constants on a fixed basis, together with
//! Jacobi checks, lower central / derived series and morphism checks.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::ratlin::{is_zero_vector, unit_vector, zero_vector, DisplayVector, Matrix, Rational, Vector};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LieError {
    #[error("Lie algebra must have positive dimension")]
    ZeroDimension,
    #[error("expected {expected} basis labels, found {found}")]
    LabelCount { expected: usize, found: usize },
    #[error("bracket [{left}, {right}] must have left < right < dim")]
    BadBracketIndices { left: usize, right: usize },
    #[error("bracket [{left}, {right}] given twice")]
    DuplicateBracket { left: usize, right: usize },
    #[error("basis index {index} out of range in bracket result")]
    BadResultIndex { index: usize },
    #[error("JacobiViolation({i},{j},{k}): defect {}", DisplayVector(.defect))]
    JacobiViolation {
        i: usize,
        j: usize,
        k: usize,
        defect: Vector,
    },
    #[error("NotAMorphism({i},{j}): defect {}", DisplayVector(.defect))]
    NotAMorphism { i: usize, j: usize, defect: Vector },
    #[error("morphism matrix is {rows}x{cols}, expected {expected_rows}x{expected_cols}")]
    MorphismShape {
        rows: usize,
        cols: usize,
        expected_rows: usize,
        expected_cols: usize,
    },
    #[error("vector has dimension {found}, expected {expected}")]
    DimensionMismatch { expected: usize, found: usize },
}

/// Finite-dimensional Lie algebra presented by structure constants.
///
/// Only brackets `[e_i, e_j]` with `i < j` are stored; `[e_j, e_i]` and
/// `[e_i, e_i]` follow from antisymmetry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    dim: usize,
    labels: Vec<String>,
    brackets: BTreeMap<(usize, usize), Vector>,
}

impl LieAlgebra {
    /// Builds an algebra from sparse brackets `(left, right, [(k, coeff)])`.
    /// Zero results are dropped. The Jacobi identity is not checked here;
    /// see [`LieAlgebra::validate`].
    pub fn new(
        labels: Vec<String>,
        brackets: impl IntoIterator<Item = (usize, usize, Vec<(usize, Rational)>)>,
    ) -> Result<Self, LieError> {
        let dim = labels.len();
        if dim == 0 {
            return Err(LieError::ZeroDimension);
        }
        let mut table = BTreeMap::new();
        for (left, right, terms) in brackets {
            if left >= right || right >= dim {
                return Err(LieError::BadBracketIndices { left, right });
            }
            let mut v = zero_vector(dim);
            for (k, c) in terms {
                if k >= dim {
                    return Err(LieError::BadResultIndex { index: k });
                }
                v[k] += c;
            }
            if table.contains_key(&(left, right)) {
                return Err(LieError::DuplicateBracket { left, right });
            }
            if !is_zero_vector(&v) {
                table.insert((left, right), v);
            }
        }
        Ok(LieAlgebra {
            dim,
            labels,
            brackets: table,
        })
    }

    pub fn abelian(dim: usize) -> Result<Self, LieError> {
        Self::new(default_labels(dim), [])
    }

    /// Algebra whose bracket on basis vectors is given by a dense table
    /// `table[i][j] = [e_i, e_j]` for `i < j`; entries with `i >= j` are ignored.
    pub fn from_dense(labels: Vec<String>, table: impl Fn(usize, usize) -> Vector) -> Result<Self, LieError> {
        let dim = labels.len();
        let mut brackets = Vec::new();
        for i in 0..dim {
            for j in i + 1..dim {
                let v = table(i, j);
                if v.len() != dim {
                    return Err(LieError::DimensionMismatch {
                        expected: dim,
                        found: v.len(),
                    });
                }
                brackets.push((i, j, v.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect()));
            }
        }
        Self::new(labels, brackets)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Nonzero structure constants, keyed by `(i, j)` with `i < j`.
    pub fn brackets(&self) -> &BTreeMap<(usize, usize), Vector> {
        &self.brackets
    }

    /// `[e_i, e_j]` for arbitrary basis indices.
    pub fn basis_bracket(&self, i: usize, j: usize) -> Vector {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Equal => zero_vector(self.dim),
            Less => self
                .brackets
                .get(&(i, j))
                .cloned()
                .unwrap_or_else(|| zero_vector(self.dim)),
            Greater => self
                .brackets
                .get(&(j, i))
                .map(|v| v.iter().map(|c| -c).collect())
                .unwrap_or_else(|| zero_vector(self.dim)),
        }
    }

    fn check_len(&self, v: &[Rational]) -> Result<(), LieError> {
        if v.len() == self.dim {
            Ok(())
        } else {
            Err(LieError::DimensionMismatch {
                expected: self.dim,
                found: v.len(),
            })
        }
    }

    /// Bilinear extension of the structure constants.
    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Result<Vector, LieError> {
        self.check_len(x)?;
        self.check_len(y)?;
        let mut out = zero_vector(self.dim);
        for (&(i, j), v) in &self.brackets {
            let c = &x[i] * &y[j] - &x[j] * &y[i];
            if c.is_zero() {
                continue;
            }
            for (o, b) in out.iter_mut().zip(v) {
                if !b.is_zero() {
                    *o += &c * b;
                }
            }
        }
        Ok(out)
    }

    /// Matrix of `y -> [x, y]`.
    pub fn ad(&self, x: &[Rational]) -> Result<Matrix, LieError> {
        self.check_len(x)?;
        let cols: Vec<Vector> = (0..self.dim)
            .map(|j| self.bracket(x, &unit_vector(self.dim, j)))
            .collect::<Result<_, _>>()?;
        Ok(Matrix::from_columns(self.dim, &cols))
    }

    pub fn ad_basis(&self, i: usize) -> Matrix {
        self.ad(&unit_vector(self.dim, i)).expect("basis vector has the right length")
    }

    /// Checks the Jacobi identity on every triple `i < j < k`; the first
    /// failing triple is reported with its defect
    /// `[[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]`.
    pub fn validate(&self) -> Result<(), LieError> {
        let n = self.dim;
        let e = |i| unit_vector(n, i);
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let mut defect = self.bracket(&self.basis_bracket(i, j), &e(k))?;
                    let b = self.bracket(&self.basis_bracket(j, k), &e(i))?;
                    let c = self.bracket(&self.basis_bracket(k, i), &e(j))?;
                    for ((d, b), c) in defect.iter_mut().zip(b).zip(c) {
                        *d += b + c;
                    }
                    if !is_zero_vector(&defect) {
                        return Err(LieError::JacobiViolation { i, j, k, defect });
                    }
                }
            }
        }
        Ok(())
    }

    /// Structure-constant subalgebra on a subset of basis indices, which
    /// must be closed under the bracket; returns `None` otherwise.
    pub fn restrict(&self, indices: &[usize]) -> Option<LieAlgebra> {
        let pos: BTreeMap<usize, usize> = indices.iter().enumerate().map(|(a, &i)| (i, a)).collect();
        let mut brackets = Vec::new();
        for (a, &i) in indices.iter().enumerate() {
            for (b, &j) in indices.iter().enumerate().skip(a + 1) {
                let v = self.basis_bracket(i, j);
                let mut terms = Vec::new();
                for (k, c) in v.into_iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                    terms.push((*pos.get(&k)?, c));
                }
                brackets.push((a, b, terms));
            }
        }
        let labels = indices.iter().map(|&i| self.labels[i].clone()).collect();
        LieAlgebra::new(labels, brackets).ok()
    }

    pub fn series(&self, kind: SeriesKind) -> SeriesReport {
        let n = self.dim;
        let mut current = Subspace::full(n);
        let mut dims = vec![n];
        loop {
            let left = match kind {
                SeriesKind::LowerCentral => Subspace::full(n),
                SeriesKind::Derived => current.clone(),
            };
            let mut spanning = Vec::new();
            for x in &left.basis {
                for y in &current.basis {
                    spanning.push(self.bracket(x, y).expect("dimensions match"));
                }
            }
            let next = Subspace::span(n, &spanning);
            if next.dim() == current.dim() {
                break;
            }
            dims.push(next.dim());
            if next.dim() == 0 {
                break;
            }
            current = next;
        }
        SeriesReport { kind, dims }
    }

    pub fn is_nilpotent(&self) -> bool {
        self.series(SeriesKind::LowerCentral).reaches_zero()
    }

    pub fn is_solvable(&self) -> bool {
        self.series(SeriesKind::Derived).reaches_zero()
    }

    /// Dense copy of the brackets, indexed `[i][j]` for all ordered pairs.
    pub fn dense_table(&self) -> Vec<Vec<Vector>> {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.basis_bracket(i, j)).collect())
            .collect()
    }
}

pub fn default_labels(dim: usize) -> Vec<String> {
    (0..dim).map(|i| format!("e{i}")).collect()
}

impl fmt::Display for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "dim {}", self.dim)?;
        for (&(i, j), v) in &self.brackets {
            write!(f, "; [{},{}] = ", self.labels[i], self.labels[j])?;
            let mut first = true;
            for (k, c) in v.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                if !first {
                    write!(f, " + ")?;
                }
                first = false;
                write!(f, "{c}*{}", self.labels[k])?;
            }
        }
        Ok(())
    }
}

/// Subspace of `Q^n` stored as the nonzero rows of a reduced echelon form.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Subspace {
    basis: Vec<Vector>,
}

impl Subspace {
    fn full(n: usize) -> Self {
        Subspace {
            basis: (0..n).map(|i| unit_vector(n, i)).collect(),
        }
    }

    fn span(n: usize, vectors: &[Vector]) -> Self {
        if vectors.is_empty() {
            return Subspace { basis: vec![] };
        }
        let m = Matrix::from_columns(n, vectors).transpose();
        let r = m.rref();
        Subspace {
            basis: (0..r.rank).map(|i| r.reduced.row(i).to_vec()).collect(),
        }
    }

    fn dim(&self) -> usize {
        self.basis.len()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesKind {
    LowerCentral,
    Derived,
}

/// Dimensions of a descending series. The list starts at `dim` and stops
/// either at 0 or at the first term that equals its predecessor (the
/// repeated value is not listed again).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesReport {
    pub kind: SeriesKind,
    pub dims: Vec<usize>,
}

impl SeriesReport {
    pub fn reaches_zero(&self) -> bool {
        self.dims.last() == Some(&0)
    }
}

/// Linear map between Lie algebras; column `j` holds the image of `e_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieMorphism {
    pub source: LieAlgebra,
    pub target: LieAlgebra,
    pub matrix: Matrix,
}

impl LieMorphism {
    pub fn new(source: LieAlgebra, target: LieAlgebra, matrix: Matrix) -> Result<Self, LieError> {
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(LieError::MorphismShape {
                rows: matrix.rows(),
                cols: matrix.cols(),
                expected_rows: target.dim(),
                expected_cols: source.dim(),
            });
        }
        Ok(LieMorphism { source, target, matrix })
    }

    pub fn endomorphism(algebra: LieAlgebra, matrix: Matrix) -> Result<Self, LieError> {
        Self::new(algebra.clone(), algebra, matrix)
    }

    pub fn identity(algebra: LieAlgebra) -> Self {
        let n = algebra.dim();
        Self::endomorphism(algebra, Matrix::identity(n)).expect("square identity")
    }

    pub fn is_endomorphism(&self) -> bool {
        self.source == self.target
    }

    /// `self` after `inner`, i.e. the map `x -> self(inner(x))`.
    pub fn compose(&self, inner: &LieMorphism) -> Result<LieMorphism, LieError> {
        LieMorphism::new(inner.source.clone(), self.target.clone(), &self.matrix * &inner.matrix)
    }

    /// Bracket preservation on basis pairs; the defect reported for the
    /// first failing pair is `[f e_i, f e_j] - f [e_i, e_j]`.
    pub fn check(&self) -> Result<(), LieError> {
        let n = self.source.dim();
        let images: Vec<Vector> = (0..n).map(|j| self.matrix.column(j)).collect();
        for i in 0..n {
            for j in i + 1..n {
                let lhs = self.target.bracket(&images[i], &images[j])?;
                let rhs = self.matrix.mul_vec(&self.source.basis_bracket(i, j));
                let defect: Vector = lhs.iter().zip(&rhs).map(|(a, b)| a - b).collect();
                if !is_zero_vector(&defect) {
                    return Err(LieError::NotAMorphism { i, j, defect });
                }
            }
        }
        Ok(())
    }
}
