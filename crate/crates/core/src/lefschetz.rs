//! Twisted Lefschetz numbers `L(f, V, xi) = sum_p (-1)^p tr(xi o f* | H^p)`,
//! the cochain-level Hopf trace, and the linearization `det(I - A)`.

use num_traits::Zero;

use crate::cecomplex::{CeError, CochainComplex};
use crate::liealg::{LieAlgebra, LieError, LieMorphism};
use crate::ratlin::{LinAlgError, Matrix, Rational};
use crate::repn::{Intertwiner, RepError, Representation};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LefschetzError {
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Complex(#[from] CeError),
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
    #[error("map is not an endomorphism of the algebra")]
    NotEndomorphism,
    #[error("designated matrix is {rows}x{cols}, expected {dim}x{dim}")]
    DesignatedShape { rows: usize, cols: usize, dim: usize },
    #[error("internal error: cochain trace {cochain} differs from cohomology trace {cohomology}")]
    HopfMismatch { cochain: Rational, cohomology: Rational },
}

impl LefschetzError {
    /// Errors that can only come from a bug, never from bad input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            LefschetzError::HopfMismatch { .. }
                | LefschetzError::Complex(
                    CeError::InternalDSquareNonzero { .. } | CeError::InternalConsistencyFailure { .. }
                )
        )
    }
}

/// `det(I - a)`.
pub fn linearization(a: &Matrix) -> Result<Rational, LinAlgError> {
    if !a.is_square() {
        return Err(LinAlgError::NonSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    (&Matrix::identity(a.rows()) - a).determinant()
}

pub(crate) fn alternating_sum<'a>(xs: impl IntoIterator<Item = &'a Rational>) -> Rational {
    xs.into_iter()
        .enumerate()
        .fold(Rational::zero(), |acc, (p, x)| if p % 2 == 0 { acc + x } else { acc - x })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LefschetzReport {
    pub betti: Vec<usize>,
    pub dims: Vec<usize>,
    /// Induced maps on `H^p` in the representative bases.
    pub cohomology_maps: Vec<Matrix>,
    /// `tr(xi o f* | H^p)` per degree.
    pub traces: Vec<Rational>,
    /// `tr(F_p)` per cochain degree.
    pub cochain_traces: Vec<Rational>,
    pub lefschetz: Rational,
    pub hopf: Rational,
    /// `det(I - A)` for the designated matrix `A`.
    pub linearization: Rational,
    /// `lefschetz == linearization`.
    pub agree: bool,
    /// Whether the linearization formula is guaranteed for this input
    /// (nilpotent algebra, trivial one-dimensional coefficients). When false
    /// a disagreement is a legitimate outcome, not an error.
    pub formula_guaranteed: bool,
}

fn validate_inputs(
    algebra: &LieAlgebra,
    module: &Representation,
    f: &LieMorphism,
    xi: &Intertwiner,
) -> Result<(), LefschetzError> {
    algebra.validate()?;
    module.validate()?;
    if f.source != *algebra || f.target != *algebra {
        return Err(LefschetzError::NotEndomorphism);
    }
    f.check()?;
    xi.validate()?;
    Ok(())
}

/// Twisted Lefschetz number with `A = f.matrix`.
pub fn twisted_lefschetz(
    algebra: &LieAlgebra,
    module: &Representation,
    f: &LieMorphism,
    xi: &Intertwiner,
) -> Result<LefschetzReport, LefschetzError> {
    twisted_lefschetz_with(algebra, module, f, xi, &f.matrix)
}

/// Twisted Lefschetz number compared against `det(I - designated)`.
pub fn twisted_lefschetz_with(
    algebra: &LieAlgebra,
    module: &Representation,
    f: &LieMorphism,
    xi: &Intertwiner,
    designated: &Matrix,
) -> Result<LefschetzReport, LefschetzError> {
    validate_inputs(algebra, module, f, xi)?;
    let n = algebra.dim();
    if designated.rows() != n || designated.cols() != n {
        return Err(LefschetzError::DesignatedShape {
            rows: designated.rows(),
            cols: designated.cols(),
            dim: n,
        });
    }
    let complex = CochainComplex::build(algebra, module)?;
    let cohomology = complex.cohomology();
    let chain_map = complex.induced_chain_map(f, xi)?;
    let cohomology_maps = complex.induced_cohomology_map(&cohomology, &chain_map)?;
    let traces: Vec<Rational> = cohomology_maps.iter().map(|m| m.trace().expect("square")).collect();
    let cochain_traces = chain_map.traces();
    let lefschetz = alternating_sum(&traces);
    let hopf = alternating_sum(&cochain_traces);
    if lefschetz != hopf {
        return Err(LefschetzError::HopfMismatch {
            cochain: hopf,
            cohomology: lefschetz,
        });
    }
    let linearization = linearization(designated)?;
    Ok(LefschetzReport {
        betti: cohomology.betti(),
        dims: complex.dims(),
        cohomology_maps,
        traces,
        cochain_traces,
        agree: lefschetz == linearization,
        formula_guaranteed: algebra.is_nilpotent() && module.dim() == 1 && module.is_trivial(),
        lefschetz,
        hopf,
        linearization,
    })
}

/// The three numbers compared by [`hopf_trace_identity_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HopfCheck {
    /// `sum_p (-1)^p tr(F_p)`.
    pub cochain: Rational,
    /// `sum_p (-1)^p tr(H^p map)`.
    pub cohomology: Rational,
    /// `det(I - f) * tr(xi)`.
    pub product: Rational,
    pub product_matches: bool,
}

/// Compares the cochain and cohomology alternating traces (which must agree)
/// and reports whether `det(I - f) tr(xi)` coincides with them. For the
/// product chain map `Lambda^p f^T (x) xi` on the full complex it always does.
pub fn hopf_trace_identity_check(
    f: &LieMorphism,
    xi: &Intertwiner,
    complex: &CochainComplex,
) -> Result<HopfCheck, LefschetzError> {
    let chain_map = complex.induced_chain_map(f, xi)?;
    let cohomology = complex.cohomology();
    let maps = complex.induced_cohomology_map(&cohomology, &chain_map)?;
    let traces: Vec<Rational> = maps.iter().map(|m| m.trace().expect("square")).collect();
    let cochain = alternating_sum(&chain_map.traces());
    let cohomology = alternating_sum(&traces);
    if cochain != cohomology {
        return Err(LefschetzError::HopfMismatch { cochain, cohomology });
    }
    let product = linearization(&f.matrix)? * xi.matrix.trace()?;
    Ok(HopfCheck {
        product_matches: product == cochain,
        cochain,
        cohomology,
        product,
    })
}
