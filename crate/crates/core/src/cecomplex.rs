//! Chevalley-Eilenberg cochain complex `C^p = Lambda^p g* (x) V`, its
//! cohomology, and the maps induced by a pair `(f, xi)`.
//!
//! Basis of `C^p`: pairs `(S, k)` with `S` a `p`-subset of the algebra basis
//! in lexicographic order and `k` a module index, ordered subset-major, so
//! that `(S, k)` sits at `index(S) * m + k`. The cochain `e^S (x) v_k`
//! evaluates to `v_k` on `(e_{s_1}, ..., e_{s_p})` for `S = {s_1 < ... < s_p}`.
//!
//! Differential:
//! `(d w)(x_1..x_{p+1}) = sum_i (-1)^(i+1) rho(x_i) w(..^x_i..)
//!                      + sum_{i<j} (-1)^(i+j) w([x_i,x_j], ..^x_i..^x_j..)`.

use std::collections::HashMap;

use num_traits::Zero;

use crate::liealg::{LieAlgebra, LieMorphism};
use crate::ratlin::{solve_in_span, subsets, unit_vector, Matrix, Rational, Vector};
use crate::repn::{Intertwiner, Representation};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CeError {
    #[error("module is a representation of a different algebra")]
    ModuleAlgebraMismatch,
    #[error("map or intertwiner does not match the complex")]
    MapMismatch,
    #[error("internal error: d_{} d_{p} is nonzero", p + 1)]
    InternalDSquareNonzero { p: usize },
    #[error("ChainMapViolation({p}): F_{} d_{p} differs from d_{p} F_{p}", p + 1)]
    ChainMapViolation { p: usize },
    #[error("internal consistency failure: induced map on H^{degree} is not well defined")]
    InternalConsistencyFailure { degree: usize },
}

fn mask(set: &[usize]) -> u64 {
    set.iter().fold(0, |m, &i| m | (1 << i))
}

#[derive(Debug, Clone)]
pub struct CochainComplex {
    algebra: LieAlgebra,
    module: Representation,
    subsets: Vec<Vec<Vec<usize>>>,
    differentials: Vec<Matrix>,
}

impl CochainComplex {
    pub fn build(algebra: &LieAlgebra, module: &Representation) -> Result<Self, CeError> {
        if module.algebra() != algebra {
            return Err(CeError::ModuleAlgebraMismatch);
        }
        let n = algebra.dim();
        assert!(n < 64, "dimension too large for subset masks");
        let m = module.dim();
        let subsets: Vec<Vec<Vec<usize>>> = (0..=n).map(|p| subsets(n, p)).collect();
        let index: Vec<HashMap<u64, usize>> = subsets
            .iter()
            .map(|level| level.iter().enumerate().map(|(i, s)| (mask(s), i)).collect())
            .collect();
        let table = algebra.dense_table();
        let sign = |e: usize| if e % 2 == 0 { Rational::from_integer(1.into()) } else { Rational::from_integer((-1).into()) };

        let mut differentials = Vec::with_capacity(n);
        for p in 0..n {
            let mut d = Matrix::zeros(subsets[p + 1].len() * m, subsets[p].len() * m);
            for (t_idx, t) in subsets[p + 1].iter().enumerate() {
                let t_mask = mask(t);
                // module action terms
                for (i, &ti) in t.iter().enumerate() {
                    let s_idx = index[p][&(t_mask & !(1 << ti))];
                    let rho = &module.actions()[ti];
                    let sg = sign(i);
                    for r in 0..m {
                        for c in 0..m {
                            if !rho[(r, c)].is_zero() {
                                d[(t_idx * m + r, s_idx * m + c)] += &sg * &rho[(r, c)];
                            }
                        }
                    }
                }
                // bracket terms
                for (i, &ti) in t.iter().enumerate() {
                    for (j, &tj) in t.iter().enumerate().skip(i + 1) {
                        let rest = t_mask & !(1 << ti) & !(1 << tj);
                        for (l, c) in table[ti][tj].iter().enumerate() {
                            if c.is_zero() || rest & (1 << l) != 0 {
                                continue;
                            }
                            let below = (rest & ((1u64 << l) - 1)).count_ones() as usize;
                            let s_idx = index[p][&(rest | (1 << l))];
                            let coeff = &sign(i + j + below) * c;
                            for k in 0..m {
                                d[(t_idx * m + k, s_idx * m + k)] += &coeff;
                            }
                        }
                    }
                }
            }
            differentials.push(d);
        }
        for p in 0..n.saturating_sub(1) {
            if !(&differentials[p + 1] * &differentials[p]).is_zero() {
                return Err(CeError::InternalDSquareNonzero { p });
            }
        }
        Ok(CochainComplex {
            algebra: algebra.clone(),
            module: module.clone(),
            subsets,
            differentials,
        })
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn module(&self) -> &Representation {
        &self.module
    }

    /// Top degree `n = dim g`.
    pub fn top_degree(&self) -> usize {
        self.algebra.dim()
    }

    /// `dims[p] = C(n, p) * m` for `p = 0..=n`.
    pub fn dims(&self) -> Vec<usize> {
        self.subsets.iter().map(|s| s.len() * self.module.dim()).collect()
    }

    /// `d_p: C^p -> C^{p+1}` for `p = 0..n-1`.
    pub fn differentials(&self) -> &[Matrix] {
        &self.differentials
    }

    /// Lexicographic `p`-subsets labelling the exterior factor of `C^p`.
    pub fn subsets(&self, p: usize) -> &[Vec<usize>] {
        &self.subsets[p]
    }

    pub fn cohomology(&self) -> CohomologyData {
        let dims = self.dims();
        let n = self.top_degree();
        let degrees = (0..=n)
            .map(|p| {
                let cocycles = if p < n {
                    self.differentials[p].kernel_basis()
                } else {
                    (0..dims[n]).map(|i| unit_vector(dims[n], i)).collect()
                };
                let coboundaries = if p == 0 {
                    Vec::new()
                } else {
                    self.differentials[p - 1].column_space_basis()
                };
                let combined = Matrix::from_columns(dims[p], &coboundaries)
                    .hstack(&Matrix::from_columns(dims[p], &cocycles));
                let representatives = combined
                    .rref()
                    .pivot_columns
                    .into_iter()
                    .filter(|&c| c >= coboundaries.len())
                    .map(|c| cocycles[c - coboundaries.len()].clone())
                    .collect();
                DegreeCohomology {
                    cocycles,
                    coboundaries,
                    representatives,
                }
            })
            .collect();
        CohomologyData { degrees }
    }

    /// `F_p = Lambda^p(f^T) (x) xi` on every degree, checked against the differentials.
    pub fn induced_chain_map(&self, f: &LieMorphism, xi: &Intertwiner) -> Result<ChainMap, CeError> {
        if f.source != self.algebra || f.target != self.algebra || xi.map != *f || xi.module != self.module {
            return Err(CeError::MapMismatch);
        }
        let ft = f.matrix.transpose();
        let maps: Vec<Matrix> = (0..=self.top_degree())
            .map(|p| {
                ft.exterior_power(p)
                    .expect("degree within range")
                    .kronecker(&xi.matrix)
            })
            .collect();
        for (p, d) in self.differentials.iter().enumerate() {
            if &maps[p + 1] * d != d * &maps[p] {
                return Err(CeError::ChainMapViolation { p });
            }
        }
        Ok(ChainMap { maps })
    }

    /// Matrices of the induced maps on `H^p` in the representative bases.
    pub fn induced_cohomology_map(
        &self,
        cohomology: &CohomologyData,
        chain_map: &ChainMap,
    ) -> Result<Vec<Matrix>, CeError> {
        cohomology
            .degrees
            .iter()
            .zip(&chain_map.maps)
            .enumerate()
            .map(|(p, (h, fp))| {
                let k = h.representatives.len();
                let basis: Vec<Vector> = h
                    .representatives
                    .iter()
                    .chain(&h.coboundaries)
                    .cloned()
                    .collect();
                let columns = h
                    .representatives
                    .iter()
                    .map(|rep| {
                        solve_in_span(&basis, &fp.mul_vec(rep))
                            .map(|coeffs| coeffs[..k].to_vec())
                            .map_err(|_| CeError::InternalConsistencyFailure { degree: p })
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(Matrix::from_columns(k, &columns))
            })
            .collect()
    }
}

/// Kernel, image and chosen representatives in one degree. Vectors are
/// coordinate columns in the basis of `C^p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeCohomology {
    pub cocycles: Vec<Vector>,
    pub coboundaries: Vec<Vector>,
    /// Cocycle-basis columns completing `coboundaries` to a basis of the
    /// cocycles, chosen by the rref pivot rule on `[coboundaries | cocycles]`.
    pub representatives: Vec<Vector>,
}

impl DegreeCohomology {
    pub fn betti(&self) -> usize {
        self.cocycles.len() - self.coboundaries.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologyData {
    pub degrees: Vec<DegreeCohomology>,
}

impl CohomologyData {
    pub fn betti(&self) -> Vec<usize> {
        self.degrees.iter().map(DegreeCohomology::betti).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.betti()
            .iter()
            .enumerate()
            .map(|(p, &b)| if p % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }
}

/// Per-degree cochain maps `F_p: C^p -> C^p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainMap {
    pub maps: Vec<Matrix>,
}

impl ChainMap {
    pub fn traces(&self) -> Vec<Rational> {
        self.maps.iter().map(|m| m.trace().expect("square")).collect()
    }
}
