//! Seeded random inputs: rational matrices, valid modules and intertwiners.

use num_bigint::BigInt;
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::liealg::{LieAlgebra, LieMorphism};
use crate::ratlin::{Matrix, Rational, Vector};
use crate::repn::{intertwiner_basis, Intertwiner, Representation};

/// `p/q` with `|p| <= bound`, `1 <= q <= den_max`.
pub fn rational<R: Rng>(rng: &mut R, bound: i64, den_max: i64) -> Rational {
    let p = rng.gen_range(-bound..=bound);
    let q = rng.gen_range(1..=den_max.max(1));
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize, bound: i64, den_max: i64) -> Matrix {
    Matrix::from_rows(
        (0..rows)
            .map(|_| (0..cols).map(|_| rational(rng, bound, den_max)).collect())
            .collect(),
    )
    .expect("rectangular")
}

/// Mostly-sparse integer matrix; keeps random products small.
pub fn sparse_integer_matrix<R: Rng>(rng: &mut R, n: usize, bound: i64, density: f64) -> Matrix {
    let mut m = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            if rng.gen_bool(density) {
                m[(i, j)] = Rational::from_integer(BigInt::from(rng.gen_range(-bound..=bound)));
            }
        }
    }
    m
}

pub fn invertible<R: Rng>(rng: &mut R, n: usize) -> Matrix {
    loop {
        let mut m = sparse_integer_matrix(rng, n, 2, 0.4);
        for i in 0..n {
            if rng.gen_bool(0.8) {
                m[(i, i)] = Rational::from_integer(BigInt::from(1));
            }
        }
        if !m.determinant().expect("square").is_zero() {
            return m;
        }
    }
}

/// Basis of the characters `g -> Q`: linear forms vanishing on `[g, g]`.
pub fn character_basis(algebra: &LieAlgebra) -> Vec<Vector> {
    let derived: Vec<Vector> = algebra.brackets().values().cloned().collect();
    if derived.is_empty() {
        return (0..algebra.dim()).map(|i| crate::ratlin::unit_vector(algebra.dim(), i)).collect();
    }
    Matrix::from_columns(algebra.dim(), &derived).transpose().kernel_basis()
}

/// One-dimensional module `x -> lambda(x)`.
pub fn character(algebra: &LieAlgebra, lambda: &[Rational]) -> Representation {
    let actions = lambda.iter().map(|l| Matrix::diagonal(std::slice::from_ref(l))).collect();
    Representation::new(algebra.clone(), 1, actions).expect("one action per basis vector")
}

fn random_character<R: Rng>(rng: &mut R, algebra: &LieAlgebra) -> Representation {
    let basis = character_basis(algebra);
    let mut lambda = vec![Rational::zero(); algebra.dim()];
    for b in &basis {
        let c = rational(rng, 2, 2);
        for (l, x) in lambda.iter_mut().zip(b) {
            *l += &c * x;
        }
    }
    character(algebra, &lambda)
}

/// A random validated module of dimension at most `max_dim`, assembled from
/// characters, the adjoint module, pullbacks along `maps`, direct sums,
/// tensor products and changes of basis.
pub fn module<R: Rng>(rng: &mut R, algebra: &LieAlgebra, maps: &[LieMorphism], max_dim: usize) -> Representation {
    let n = algebra.dim();
    let leaf = |rng: &mut R| -> Representation {
        if n <= max_dim && rng.gen_bool(0.35) {
            Representation::adjoint(algebra.clone())
        } else {
            random_character(rng, algebra)
        }
    };
    let mut v = leaf(rng);
    for _ in 0..rng.gen_range(0..3) {
        let candidate = match rng.gen_range(0..4) {
            0 => v.direct_sum(&leaf(rng)),
            1 => v.tensor(&leaf(rng)),
            2 => match maps.choose(rng) {
                Some(f) => v.pullback(f),
                None => continue,
            },
            _ => v.conjugate(&invertible(rng, v.dim())),
        };
        if let Ok(c) = candidate {
            if c.dim() <= max_dim {
                v = c;
            }
        }
    }
    debug_assert!(v.validate().is_ok());
    v
}

/// A random element of the space of intertwiners `f*V -> V` (possibly zero).
pub fn intertwiner<R: Rng>(rng: &mut R, f: &LieMorphism, v: &Representation) -> Intertwiner {
    let basis = intertwiner_basis(f, v).expect("endomorphism of the module's algebra");
    let m = v.dim();
    let mut x = Matrix::zeros(m, m);
    for b in &basis {
        x = &x + &b.scale(&rational(rng, 3, 2));
    }
    Intertwiner::new(f.clone(), v.clone(), x).expect("shape")
}
