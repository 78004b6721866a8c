//! Nilshadow of a split solvable Lie algebra `g = a + n`: the semisimple
//! parts of `ad(a)` on the nilpotent ideal `n` are removed, leaving a
//! nilpotent algebra on the same underlying vector space.

use num_traits::Zero;

use crate::lefschetz::{linearization, twisted_lefschetz, LefschetzError, LefschetzReport};
use crate::liealg::{LieAlgebra, LieError, LieMorphism};
use crate::ratlin::{Matrix, Rational};
use crate::repn::{Intertwiner, Representation};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ShadowError {
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error("nil_ideal and complement must partition 0..{dim} without repeats")]
    BadPartition { dim: usize },
    #[error("NotAnIdeal: [e{i}, e{j}] leaves the ideal")]
    NotAnIdeal { i: usize, j: usize },
    #[error("IdealNotNilpotent: lower central series of the ideal stops at {dims:?}")]
    IdealNotNilpotent { dims: Vec<usize> },
    #[error("ComplementNotAbelian: [e{i}, e{j}] is nonzero")]
    ComplementNotAbelian { i: usize, j: usize },
    #[error("SemisimplePartsDoNotCommute: parts for e{i} and e{j}")]
    SemisimplePartsDoNotCommute { i: usize, j: usize },
    #[error("SplitNotPreserved({index}): image of ideal generator has a complement component")]
    SplitNotPreserved { index: usize },
    #[error("map is not an endomorphism of the split algebra")]
    NotEndomorphism,
    #[error("internal error: shadow algebra invalid: {0}")]
    InternalShadowInvalid(String),
    #[error("internal error: det(I - S) = {shadow} differs from det(I - T) = {original}")]
    InternalDeterminantMismatch { shadow: Rational, original: Rational },
    #[error(transparent)]
    Lefschetz(#[from] LefschetzError),
}

impl ShadowError {
    pub fn is_internal(&self) -> bool {
        match self {
            ShadowError::InternalShadowInvalid(_) | ShadowError::InternalDeterminantMismatch { .. } => true,
            ShadowError::Lefschetz(e) => e.is_internal(),
            _ => false,
        }
    }
}

/// A solvable algebra with a chosen nilpotent ideal and abelian complement,
/// both spanned by subsets of the basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitPresentation {
    pub algebra: LieAlgebra,
    pub nil_ideal: Vec<usize>,
    pub complement: Vec<usize>,
}

/// Semisimple part of `ad(e_c)` restricted to the ideal, embedded as an
/// `n x n` matrix that vanishes on the complement.
#[derive(Debug, Clone, PartialEq, Eq)]
struct AdParts {
    generator: usize,
    semisimple: Matrix,
}

impl SplitPresentation {
    pub fn new(algebra: LieAlgebra, nil_ideal: Vec<usize>, complement: Vec<usize>) -> Result<Self, ShadowError> {
        let n = algebra.dim();
        let mut seen = vec![false; n];
        for &i in nil_ideal.iter().chain(&complement) {
            if i >= n || seen[i] {
                return Err(ShadowError::BadPartition { dim: n });
            }
            seen[i] = true;
        }
        if seen.contains(&false) {
            return Err(ShadowError::BadPartition { dim: n });
        }
        Ok(SplitPresentation {
            algebra,
            nil_ideal,
            complement,
        })
    }

    /// Split with an empty complement; valid exactly when the algebra is nilpotent.
    pub fn nilpotent(algebra: LieAlgebra) -> Self {
        let n = algebra.dim();
        SplitPresentation {
            algebra,
            nil_ideal: (0..n).collect(),
            complement: Vec::new(),
        }
    }

    fn in_ideal(&self) -> Vec<bool> {
        let mut mask = vec![false; self.algebra.dim()];
        for &i in &self.nil_ideal {
            mask[i] = true;
        }
        mask
    }

    /// Checks every precondition of [`build_shadow`] and returns the
    /// semisimple parts of the complement's adjoint actions.
    fn check(&self) -> Result<Vec<AdParts>, ShadowError> {
        self.algebra.validate()?;
        let in_ideal = self.in_ideal();
        for (a, &i) in self.complement.iter().enumerate() {
            for &j in &self.complement[a + 1..] {
                if self.algebra.basis_bracket(i, j).iter().any(|c| !c.is_zero()) {
                    return Err(ShadowError::ComplementNotAbelian { i: i.min(j), j: i.max(j) });
                }
            }
        }
        for i in 0..self.algebra.dim() {
            for &j in &self.nil_ideal {
                let v = self.algebra.basis_bracket(i, j);
                if v.iter().enumerate().any(|(k, c)| !c.is_zero() && !in_ideal[k]) {
                    return Err(ShadowError::NotAnIdeal { i, j });
                }
            }
        }
        let ideal = self
            .algebra
            .restrict(&self.nil_ideal)
            .expect("an ideal is closed under the bracket");
        let lcs = ideal.series(crate::liealg::SeriesKind::LowerCentral);
        if !lcs.reaches_zero() {
            return Err(ShadowError::IdealNotNilpotent { dims: lcs.dims });
        }

        let n = self.algebra.dim();
        let parts: Vec<AdParts> = self
            .complement
            .iter()
            .map(|&c| {
                let ad = self.algebra.ad_basis(c).submatrix(&self.nil_ideal, &self.nil_ideal);
                let jc = ad.jordan_chevalley().expect("square restriction");
                let embed = |m: &Matrix| {
                    let mut out = Matrix::zeros(n, n);
                    for (a, &r) in self.nil_ideal.iter().enumerate() {
                        for (b, &s) in self.nil_ideal.iter().enumerate() {
                            out[(r, s)] = m[(a, b)].clone();
                        }
                    }
                    out
                };
                AdParts {
                    generator: c,
                    semisimple: embed(&jc.semisimple),
                }
            })
            .collect();
        for (a, p) in parts.iter().enumerate() {
            for q in &parts[a + 1..] {
                if &p.semisimple * &q.semisimple != &q.semisimple * &p.semisimple {
                    return Err(ShadowError::SemisimplePartsDoNotCommute {
                        i: p.generator,
                        j: q.generator,
                    });
                }
            }
        }
        Ok(parts)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShadowResult {
    /// Nilpotent algebra on the same basis as the input.
    pub shadow: LieAlgebra,
    /// `(complement generator, semisimple part of its adjoint action)`,
    /// each part an `n x n` matrix vanishing on the complement.
    pub semisimple_parts: Vec<(usize, Matrix)>,
}

/// Shadow bracket `[a1 + n1, a2 + n2] = [n1, n2] + N(a1) n2 - N(a2) n1`,
/// where `N(a)` is the nilpotent part of `ad(a)` on the ideal. Equivalently
/// the original bracket minus the semisimple parts `s(a1) n2 - s(a2) n1`.
/// The basis is shared with the input, so the identification of the two
/// underlying vector spaces is the identity.
pub fn build_shadow(split: &SplitPresentation) -> Result<ShadowResult, ShadowError> {
    let parts = split.check()?;
    let n = split.algebra.dim();
    let mut semisimple_of: Vec<Option<&Matrix>> = vec![None; n];
    for p in &parts {
        semisimple_of[p.generator] = Some(&p.semisimple);
    }
    let shadow = LieAlgebra::from_dense(split.algebra.labels().to_vec(), |i, j| {
        let mut v = split.algebra.basis_bracket(i, j);
        if let Some(s) = semisimple_of[i] {
            for (x, y) in v.iter_mut().zip(s.column(j)) {
                *x -= y;
            }
        }
        if let Some(s) = semisimple_of[j] {
            for (x, y) in v.iter_mut().zip(s.column(i)) {
                *x += y;
            }
        }
        v
    })?;
    shadow
        .validate()
        .map_err(|e| ShadowError::InternalShadowInvalid(e.to_string()))?;
    if !shadow.is_nilpotent() {
        return Err(ShadowError::InternalShadowInvalid("shadow is not nilpotent".into()));
    }
    Ok(ShadowResult {
        shadow,
        semisimple_parts: parts.into_iter().map(|p| (p.generator, p.semisimple)).collect(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShadowMapReport {
    /// The induced map on the shadow; equal to `T` under the identity identification.
    pub s: Matrix,
    /// `None` when `S` preserves the shadow bracket, else the first violation.
    pub shadow_morphism_violation: Option<LieError>,
    pub det_shadow: Rational,
    pub det_original: Rational,
}

impl ShadowMapReport {
    pub fn is_shadow_morphism(&self) -> bool {
        self.shadow_morphism_violation.is_none()
    }
}

/// Induced map `S` on the shadow for an endomorphism `T` preserving the split.
pub fn induced_shadow_map(
    split: &SplitPresentation,
    shadow: &ShadowResult,
    t: &LieMorphism,
) -> Result<ShadowMapReport, ShadowError> {
    if t.source != split.algebra || t.target != split.algebra {
        return Err(ShadowError::NotEndomorphism);
    }
    t.check()?;
    let in_ideal = split.in_ideal();
    for &j in &split.nil_ideal {
        if t.matrix.column(j).iter().enumerate().any(|(k, c)| !c.is_zero() && !in_ideal[k]) {
            return Err(ShadowError::SplitNotPreserved { index: j });
        }
    }
    let s = t.matrix.clone();
    let as_shadow = LieMorphism::endomorphism(shadow.shadow.clone(), s.clone())?;
    let det_shadow = linearization(&s).expect("square");
    let det_original = linearization(&t.matrix).expect("square");
    if det_shadow != det_original {
        return Err(ShadowError::InternalDeterminantMismatch {
            shadow: det_shadow,
            original: det_original,
        });
    }
    Ok(ShadowMapReport {
        shadow_morphism_violation: as_shadow.check().err(),
        s,
        det_shadow,
        det_original,
    })
}

/// End-to-end check that the twisted Lefschetz number of `S` on the shadow
/// (trivial coefficients) equals `det(I - T)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShadowLefschetz {
    pub shadow: ShadowResult,
    pub map: ShadowMapReport,
    /// Present only when `S` is a morphism of the shadow bracket.
    pub shadow_report: Option<LefschetzReport>,
}

impl ShadowLefschetz {
    /// `Some(true)` when the shadow Lefschetz number equals `det(I - T)`,
    /// `None` when it could not be computed because `S` is not a shadow morphism.
    pub fn verdict(&self) -> Option<bool> {
        self.shadow_report
            .as_ref()
            .map(|r| r.lefschetz == self.map.det_original)
    }
}

pub fn shadow_lefschetz(split: &SplitPresentation, t: &LieMorphism) -> Result<ShadowLefschetz, ShadowError> {
    let shadow = build_shadow(split)?;
    let map = induced_shadow_map(split, &shadow, t)?;
    let shadow_report = if map.is_shadow_morphism() {
        let alg = &shadow.shadow;
        let module = Representation::trivial(alg.clone());
        let s = LieMorphism::endomorphism(alg.clone(), map.s.clone())?;
        let xi = Intertwiner::identity(s.clone(), module.clone()).map_err(LefschetzError::from)?;
        Some(twisted_lefschetz(alg, &module, &s, &xi)?)
    } else {
        None
    };
    Ok(ShadowLefschetz {
        shadow,
        map,
        shadow_report,
    })
}
