//! Fixed points of linear self-maps of the torus `R^n / Z^n`, counted by
//! brute-force enumeration and compared with `|det(A - I)|` and with the
//! Chevalley-Eilenberg Lefschetz number of the abelian Lie algebra.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::lefschetz::{twisted_lefschetz, LefschetzError};
use crate::liealg::{LieAlgebra, LieMorphism};
use crate::ratlin::{rat, Matrix, Rational};
use crate::repn::{Intertwiner, Representation};

/// Upper bound on enumerated candidate lattice vectors.
pub const MAX_CANDIDATES: u128 = 50_000_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TorusError {
    #[error("torus map matrix must be square and nonempty")]
    Shape,
    #[error("invalid matrix literal: {0}")]
    Literal(String),
    #[error("DegenerateMap: det(A - I) = 0, the fixed point set is positive-dimensional")]
    DegenerateMap,
    #[error("enumeration box of {0} candidates exceeds the limit")]
    EnumerationTooLarge(u128),
    #[error("internal error: enumerated {enumerated} fixed points but |det(A - I)| = {expected}")]
    InternalCountMismatch { enumerated: u64, expected: BigInt },
    #[error(transparent)]
    Lefschetz(#[from] LefschetzError),
}

/// Linear self-map of `T^n` given by its integer action on `Z^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusMap {
    rows: Vec<Vec<i64>>,
}

impl TorusMap {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self, TorusError> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(TorusError::Shape);
        }
        Ok(TorusMap { rows })
    }

    /// Parses `"2,1;1,1"`: rows separated by `;`, entries by `,`.
    pub fn parse(literal: &str) -> Result<Self, TorusError> {
        let rows = literal
            .split(';')
            .map(|row| {
                row.split(',')
                    .map(|e| {
                        e.trim()
                            .parse::<i64>()
                            .map_err(|_| TorusError::Literal(format!("{:?} is not an integer", e.trim())))
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(rows)
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn matrix(&self) -> Matrix {
        Matrix::from_rows(self.rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect())
            .expect("square by construction")
    }

    pub fn transpose(&self) -> TorusMap {
        let n = self.dim();
        TorusMap {
            rows: (0..n).map(|i| (0..n).map(|j| self.rows[j][i]).collect()).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedPointReport {
    pub nondegenerate: bool,
    pub count: u64,
    /// Fixed-point index shared by every fixed point: the sign of `det(I - A)`.
    pub index_each: i8,
    /// `det(I - A)`.
    pub lefschetz: BigInt,
    /// Fixed points in `[0,1)^n`, in enumeration order.
    pub points: Vec<Vec<Rational>>,
}

fn to_int(q: &Rational) -> BigInt {
    debug_assert!(q.is_integer());
    q.to_integer()
}

/// Counts fixed points of `x -> A x` on `R^n / Z^n`.
///
/// `x` is fixed iff `(A - I) x = k` for an integer vector `k`. With
/// `x in [0,1)^n` every such `k` satisfies `|k_i| <= sum_j |(A - I)_ij|`, so
/// the candidates `x = (A - I)^-1 k` over that box are enumerated and kept
/// when they lie in `[0,1)^n`. The count is asserted to equal `|det(A - I)|`.
pub fn count_fixed_points(t: &TorusMap) -> Result<FixedPointReport, TorusError> {
    let n = t.dim();
    let b = &t.matrix() - &Matrix::identity(n);
    let det_b = b.determinant().expect("square");
    if det_b.is_zero() {
        return Err(TorusError::DegenerateMap);
    }
    let det_int = to_int(&det_b);
    let lefschetz = if n % 2 == 0 { det_int.clone() } else { -det_int.clone() };

    // adj(B) = det(B) * B^-1 is integral; x = adj(B) k / det(B)
    let adj = b.inverse().expect("nonsingular").scale(&det_b);
    let overflow = || TorusError::EnumerationTooLarge(u128::MAX);
    let adj: Vec<Vec<i128>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| to_int(&adj[(i, j)]).to_i128().ok_or_else(overflow))
                .collect()
        })
        .collect::<Result<_, _>>()?;
    let det = det_int.to_i128().ok_or_else(overflow)?;
    let bounds: Vec<i128> = t
        .rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            r.iter()
                .enumerate()
                .map(|(j, &x)| (x as i128 - i128::from(i == j)).abs())
                .sum()
        })
        .collect();
    let total = bounds
        .iter()
        .try_fold(1u128, |acc, &b| acc.checked_mul(2 * b as u128 + 1))
        .ok_or_else(overflow)?;
    if total > MAX_CANDIDATES {
        return Err(TorusError::EnumerationTooLarge(total));
    }

    let inside = |y: i128| if det > 0 { 0 <= y && y < det } else { det < y && y <= 0 };
    let mut points = Vec::new();
    let mut k: Vec<i128> = bounds.iter().map(|b| -b).collect();
    'outer: loop {
        let y: Vec<i128> = adj
            .iter()
            .map(|row| row.iter().zip(&k).map(|(a, x)| a * x).sum())
            .collect();
        if y.iter().all(|&yi| inside(yi)) {
            points.push(
                y.iter()
                    .map(|&yi| Rational::new(BigInt::from(yi), BigInt::from(det)))
                    .collect(),
            );
        }
        for i in (0..n).rev() {
            if k[i] < bounds[i] {
                k[i] += 1;
                continue 'outer;
            }
            k[i] = -bounds[i];
        }
        break;
    }

    let expected = det_int.abs();
    let count = points.len() as u64;
    if BigInt::from(count) != expected {
        return Err(TorusError::InternalCountMismatch {
            enumerated: count,
            expected,
        });
    }
    Ok(FixedPointReport {
        nondegenerate: true,
        count,
        index_each: if lefschetz.is_positive() { 1 } else { -1 },
        lefschetz,
        points,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusCheck {
    pub fixed_points: FixedPointReport,
    /// Lefschetz number of the induced map on `H*(R^n)` with trivial coefficients.
    pub ce_lefschetz: Rational,
    pub pass: bool,
}

/// Compares the fixed-point count with the Lefschetz number computed from
/// the cohomology of the abelian Lie algebra.
pub fn cross_check_with_ce(t: &TorusMap) -> Result<TorusCheck, TorusError> {
    let fixed_points = count_fixed_points(t)?;
    let algebra = LieAlgebra::abelian(t.dim()).expect("positive dimension");
    let module = Representation::trivial(algebra.clone());
    let f = LieMorphism::endomorphism(algebra.clone(), t.matrix()).expect("square");
    let xi = Intertwiner::identity(f.clone(), module.clone()).map_err(LefschetzError::from)?;
    let report = twisted_lefschetz(&algebra, &module, &f, &xi)?;
    let signed_count = BigInt::from(fixed_points.count) * BigInt::from(fixed_points.index_each);
    let pass = report.lefschetz == Rational::from_integer(fixed_points.lefschetz.clone())
        && signed_count == fixed_points.lefschetz;
    Ok(TorusCheck {
        fixed_points,
        ce_lefschetz: report.lefschetz,
        pass,
    })
}
