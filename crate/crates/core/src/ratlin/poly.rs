//! Dense univariate polynomials over the rationals, coefficients stored
//! lowest degree first. Only what the Jordan-Chevalley iteration needs.

use num_traits::{One, Zero};

use super::matrix::Matrix;
use super::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly(pub Vec<Rational>);

impl Poly {
    fn trimmed(mut coeffs: Vec<Rational>) -> Poly {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn derivative(&self) -> Poly {
        Poly::trimmed(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from_integer(k.into()))
                .collect(),
        )
    }

    pub fn monic(&self) -> Poly {
        match self.0.last() {
            Some(lead) => Poly(self.0.iter().map(|c| c / lead).collect()),
            None => self.clone(),
        }
    }

    /// Euclidean division, returning (quotient, remainder).
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lead = divisor.0[dd].clone();
        let mut rem = self.0.clone();
        let mut quot = vec![Rational::zero(); self.0.len().saturating_sub(dd)];
        while rem.len() > dd {
            let top = rem.len() - 1;
            let c = &rem[top] / &lead;
            if !c.is_zero() {
                for (k, d) in divisor.0.iter().enumerate() {
                    rem[top - dd + k] -= &c * d;
                }
            }
            quot[top - dd] = c;
            rem.pop();
        }
        (Poly::trimmed(quot), Poly::trimmed(rem))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Squarefree part `p / gcd(p, p')`, monic.
    pub fn squarefree_part(&self) -> Poly {
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    /// Horner evaluation at a square matrix.
    pub fn eval_matrix(&self, m: &Matrix) -> Matrix {
        let n = m.rows();
        let mut acc = Matrix::zeros(n, n);
        for c in self.0.iter().rev() {
            acc = &(&acc * m) + &Matrix::identity(n).scale(c);
        }
        acc
    }
}

/// Characteristic polynomial `det(xI - m)` by the Faddeev-LeVerrier recurrence.
pub fn characteristic_polynomial(m: &Matrix) -> Poly {
    let n = m.rows();
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    let mut aux = Matrix::zeros(n, n);
    for k in 1..=n {
        aux = &(m * &aux) + &Matrix::identity(n).scale(&coeffs[n + 1 - k]);
        let t = (m * &aux).trace().expect("square");
        coeffs[n - k] = -t / Rational::from_integer(k.into());
    }
    Poly(coeffs)
}
