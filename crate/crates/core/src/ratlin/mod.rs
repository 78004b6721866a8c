//! Exact rational linear algebra: scalars, dense matrices, echelon forms,
//! kernels, determinants, compound matrices and Jordan-Chevalley splitting.

mod jordan;
mod matrix;
mod poly;
mod rational;

pub use jordan::{is_semisimple, squarefree_annihilator, JordanParts};
pub use matrix::{solve_in_span, Matrix, Rref};
pub use poly::{characteristic_polynomial, Poly};
pub use rational::{
    format_rational, is_zero_vector, parse_rational, rat, ratio, unit_vector, zero_vector,
    DisplayVector, ParseRationalError, Rational, Vector,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinAlgError {
    #[error("matrix is {rows}x{cols}, expected square")]
    NonSquare { rows: usize, cols: usize },
    #[error("exterior degree {degree} out of range for dimension {dim}")]
    DegreeOutOfRange { degree: usize, dim: usize },
    #[error("vector has dimension {found}, expected {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("target is not in the span of the basis")]
    NotInSpan,
    #[error("matrix is singular")]
    Singular,
    #[error("rows have different lengths")]
    RaggedRows,
}

/// All `p`-element subsets of `{0..n-1}` in lexicographic order.
pub fn subsets(n: usize, p: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, p: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == p {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < p - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if p <= n {
        go(0, n, p, &mut Vec::with_capacity(p), &mut out);
    }
    out
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
