use num_traits::Zero;

use super::matrix::Matrix;
use super::poly::{characteristic_polynomial, Poly};
use super::LinAlgError;

/// Additive Jordan-Chevalley decomposition `m = semisimple + nilpotent`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JordanParts {
    pub semisimple: Matrix,
    pub nilpotent: Matrix,
}

impl Matrix {
    /// Jordan-Chevalley decomposition over the rationals.
    ///
    /// With `p` the squarefree part of the characteristic polynomial, the
    /// Newton iteration `s <- s - p(s) p'(s)^-1` started at `m` converges to
    /// the semisimple part in finitely many steps; `p'(s)` stays invertible
    /// because `p` and `p'` are coprime. No eigenvalues are computed.
    pub fn jordan_chevalley(&self) -> Result<JordanParts, LinAlgError> {
        self.require_square()?;
        let sf = characteristic_polynomial(self).squarefree_part();
        let dsf = sf.derivative();
        let mut s = self.clone();
        loop {
            let ps = sf.eval_matrix(&s);
            if ps.is_zero() {
                break;
            }
            let correction = &ps * &dsf.eval_matrix(&s).inverse()?;
            s = &s - &correction;
        }
        Ok(JordanParts {
            nilpotent: self - &s,
            semisimple: s,
        })
    }

    pub fn is_nilpotent(&self) -> bool {
        self.is_square() && self.pow(self.rows() as u32).is_zero()
    }
}

/// Squarefree part of the characteristic polynomial, exposed for callers
/// that want to certify semisimplicity (`p(m) = 0` with `p` squarefree).
pub fn squarefree_annihilator(m: &Matrix) -> Result<Vec<crate::ratlin::Rational>, LinAlgError> {
    m.require_square()?;
    let Poly(coeffs) = characteristic_polynomial(m).squarefree_part();
    Ok(coeffs)
}

pub fn is_semisimple(m: &Matrix) -> bool {
    m.is_square()
        && Poly(squarefree_annihilator(m).expect("square"))
            .eval_matrix(m)
            .entries()
            .iter()
            .all(Zero::is_zero)
}
