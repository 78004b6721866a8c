//! Finite-dimensional representations of a Lie algebra (coefficient modules)
//! and intertwiners `xi: f*V -> V`.

use num_traits::Zero;

use crate::liealg::{LieAlgebra, LieMorphism};
use crate::ratlin::{LinAlgError, Matrix, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RepError {
    #[error("module dimension must be positive")]
    ZeroModule,
    #[error("expected {expected} action matrices, found {found}")]
    ActionCount { expected: usize, found: usize },
    #[error("action {index} is {rows}x{cols}, expected {dim}x{dim}")]
    ActionShape {
        index: usize,
        rows: usize,
        cols: usize,
        dim: usize,
    },
    #[error("NotARepresentation({i},{j}): rho([e{i},e{j}]) differs from the commutator")]
    NotARepresentation { i: usize, j: usize },
    #[error("NotEquivariant({i}): xi * rho(f e{i}) differs from rho(e{i}) * xi")]
    NotEquivariant { i: usize },
    #[error("map is not an endomorphism of the module's algebra")]
    AlgebraMismatch,
    #[error("intertwiner is {rows}x{cols}, expected {dim}x{dim}")]
    IntertwinerShape { rows: usize, cols: usize, dim: usize },
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
}

/// Left action of `algebra` on `Q^dim`; `actions[i]` is `rho(e_i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    algebra: LieAlgebra,
    dim: usize,
    actions: Vec<Matrix>,
}

impl Representation {
    /// Checks shapes only; call [`Representation::validate`] for compatibility.
    pub fn new(algebra: LieAlgebra, dim: usize, actions: Vec<Matrix>) -> Result<Self, RepError> {
        if dim == 0 {
            return Err(RepError::ZeroModule);
        }
        if actions.len() != algebra.dim() {
            return Err(RepError::ActionCount {
                expected: algebra.dim(),
                found: actions.len(),
            });
        }
        for (index, a) in actions.iter().enumerate() {
            if a.rows() != dim || a.cols() != dim {
                return Err(RepError::ActionShape {
                    index,
                    rows: a.rows(),
                    cols: a.cols(),
                    dim,
                });
            }
        }
        Ok(Representation { algebra, dim, actions })
    }

    /// One-dimensional module with zero action.
    pub fn trivial(algebra: LieAlgebra) -> Self {
        let actions = vec![Matrix::zeros(1, 1); algebra.dim()];
        Representation {
            algebra,
            dim: 1,
            actions,
        }
    }

    pub fn adjoint(algebra: LieAlgebra) -> Self {
        let actions = (0..algebra.dim()).map(|i| algebra.ad_basis(i)).collect();
        Representation {
            dim: algebra.dim(),
            algebra,
            actions,
        }
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn actions(&self) -> &[Matrix] {
        &self.actions
    }

    pub fn is_trivial(&self) -> bool {
        self.actions.iter().all(Matrix::is_zero)
    }

    /// `rho(x)` for an arbitrary algebra element.
    pub fn action_of(&self, x: &[Rational]) -> Matrix {
        assert_eq!(x.len(), self.algebra.dim(), "element has wrong dimension");
        let mut acc = Matrix::zeros(self.dim, self.dim);
        for (c, a) in x.iter().zip(&self.actions) {
            if !c.is_zero() {
                acc = &acc + &a.scale(c);
            }
        }
        acc
    }

    /// Checks `rho([e_i,e_j]) = [rho(e_i), rho(e_j)]` for all `i < j`.
    pub fn validate(&self) -> Result<(), RepError> {
        let n = self.algebra.dim();
        for i in 0..n {
            for j in i + 1..n {
                let lhs = self.action_of(&self.algebra.basis_bracket(i, j));
                let (a, b) = (&self.actions[i], &self.actions[j]);
                if lhs != &(a * b) - &(b * a) {
                    return Err(RepError::NotARepresentation { i, j });
                }
            }
        }
        Ok(())
    }

    /// The module `f*V`: `actions'[i] = rho(f e_i) = sum_j F[j][i] rho(e_j)`.
    pub fn pullback(&self, f: &LieMorphism) -> Result<Representation, RepError> {
        if f.target != self.algebra {
            return Err(RepError::AlgebraMismatch);
        }
        let actions = (0..f.source.dim())
            .map(|i| self.action_of(&f.matrix.column(i)))
            .collect();
        Representation::new(f.source.clone(), self.dim, actions)
    }

    pub fn direct_sum(&self, other: &Representation) -> Result<Representation, RepError> {
        if self.algebra != other.algebra {
            return Err(RepError::AlgebraMismatch);
        }
        let dim = self.dim + other.dim;
        let actions = self
            .actions
            .iter()
            .zip(&other.actions)
            .map(|(a, b)| {
                let mut m = Matrix::zeros(dim, dim);
                for r in 0..self.dim {
                    for c in 0..self.dim {
                        m[(r, c)] = a[(r, c)].clone();
                    }
                }
                for r in 0..other.dim {
                    for c in 0..other.dim {
                        m[(self.dim + r, self.dim + c)] = b[(r, c)].clone();
                    }
                }
                m
            })
            .collect();
        Representation::new(self.algebra.clone(), dim, actions)
    }

    /// `rho(x) (x) 1 + 1 (x) sigma(x)` on `V (x) W`.
    pub fn tensor(&self, other: &Representation) -> Result<Representation, RepError> {
        if self.algebra != other.algebra {
            return Err(RepError::AlgebraMismatch);
        }
        let (ia, ib) = (Matrix::identity(self.dim), Matrix::identity(other.dim));
        let actions = self
            .actions
            .iter()
            .zip(&other.actions)
            .map(|(a, b)| &a.kronecker(&ib) + &ia.kronecker(b))
            .collect();
        Representation::new(self.algebra.clone(), self.dim * other.dim, actions)
    }

    /// The isomorphic module `P rho P^-1`.
    pub fn conjugate(&self, p: &Matrix) -> Result<Representation, RepError> {
        let p_inv = p.inverse()?;
        let actions = self.actions.iter().map(|a| &(p * a) * &p_inv).collect();
        Representation::new(self.algebra.clone(), self.dim, actions)
    }
}

/// Module map `xi: f*V -> V` for an endomorphism `f` of the algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Intertwiner {
    pub map: LieMorphism,
    pub module: Representation,
    pub matrix: Matrix,
}

impl Intertwiner {
    pub fn new(map: LieMorphism, module: Representation, matrix: Matrix) -> Result<Self, RepError> {
        if !map.is_endomorphism() || map.source != *module.algebra() {
            return Err(RepError::AlgebraMismatch);
        }
        let m = module.dim();
        if matrix.rows() != m || matrix.cols() != m {
            return Err(RepError::IntertwinerShape {
                rows: matrix.rows(),
                cols: matrix.cols(),
                dim: m,
            });
        }
        Ok(Intertwiner { map, module, matrix })
    }

    pub fn identity(map: LieMorphism, module: Representation) -> Result<Self, RepError> {
        let m = module.dim();
        Self::new(map, module, Matrix::identity(m))
    }

    /// Checks `xi * rho(f e_i) = rho(e_i) * xi` on every basis vector.
    pub fn validate(&self) -> Result<(), RepError> {
        let pulled = self.module.pullback(&self.map)?;
        for (i, (pf, p)) in pulled.actions().iter().zip(self.module.actions()).enumerate() {
            if &self.matrix * pf != p * &self.matrix {
                return Err(RepError::NotEquivariant { i });
            }
        }
        Ok(())
    }
}

/// Basis of the space of all intertwiners `f*V -> V`, as the kernel of the
/// linear system `X rho(f e_i) - rho(e_i) X = 0` in the row-major entries of `X`.
pub fn intertwiner_basis(f: &LieMorphism, v: &Representation) -> Result<Vec<Matrix>, RepError> {
    let pulled = v.pullback(f)?;
    let m = v.dim();
    let n = v.algebra().dim();
    let mut system = Matrix::zeros(n * m * m, m * m);
    for (i, (pf, p)) in pulled.actions().iter().zip(v.actions()).enumerate() {
        // (X pf)[r][c] = sum_k X[r][k] pf[k][c];  (p X)[r][c] = sum_k p[r][k] X[k][c]
        for r in 0..m {
            for c in 0..m {
                let eq = i * m * m + r * m + c;
                for k in 0..m {
                    system[(eq, r * m + k)] += &pf[(k, c)];
                    system[(eq, k * m + c)] -= &p[(r, k)];
                }
            }
        }
    }
    Ok(system
        .kernel_basis()
        .into_iter()
        .map(|x| Matrix::from_rows(x.chunks(m).map(<[Rational]>::to_vec).collect()).expect("square chunks"))
        .collect())
}
