//! Brute-force reference computations over the rationals.
//!
//! Everything here is deliberately naive and shares no code with
//! `lefschetz-core`: determinants by permutation expansion, ranks by plain
//! Gaussian elimination on row vectors, minimal polynomials from the first
//! linear dependency among matrix powers.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

pub type Q = BigRational;
pub type Mat = Vec<Vec<Q>>;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qq(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn mat(rows: &[&[i64]]) -> Mat {
    rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()
}

pub fn identity(n: usize) -> Mat {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { q(1) } else { q(0) }).collect())
        .collect()
}

pub fn sub(a: &Mat, b: &Mat) -> Mat {
    a.iter()
        .zip(b)
        .map(|(r, s)| r.iter().zip(s).map(|(x, y)| x - y).collect())
        .collect()
}

pub fn mul(a: &Mat, b: &Mat) -> Mat {
    let k = b.len();
    let m = if k == 0 { 0 } else { b[0].len() };
    a.iter()
        .map(|r| {
            (0..m)
                .map(|j| (0..k).fold(q(0), |acc, t| acc + &r[t] * &b[t][j]))
                .collect()
        })
        .collect()
}

pub fn trace(a: &Mat) -> Q {
    (0..a.len()).fold(q(0), |acc, i| acc + &a[i][i])
}

fn permutations(n: usize) -> Vec<(Vec<usize>, bool)> {
    if n == 0 {
        return vec![(Vec::new(), true)];
    }
    let mut out = Vec::new();
    for (p, even) in permutations(n - 1) {
        // insert n-1 at position k; moving it past (n-1-k) entries
        for k in 0..=p.len() {
            let mut r = p.clone();
            r.insert(k, n - 1);
            let flips = (p.len() - k) % 2 == 1;
            out.push((r, even != flips));
        }
    }
    out
}

/// Leibniz expansion. Fine up to n = 7.
pub fn det(a: &Mat) -> Q {
    let n = a.len();
    permutations(n).into_iter().fold(q(0), |acc, (p, even)| {
        let term = (0..n).fold(q(1), |t, i| t * &a[i][p[i]]);
        if even {
            acc + term
        } else {
            acc - term
        }
    })
}

pub fn combinations(n: usize, p: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, p: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == p {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, p, &mut Vec::new(), &mut out);
    out
}

/// Sum of the principal `p x p` minors, the `p`-th elementary symmetric
/// function of the eigenvalues.
pub fn principal_minor_sum(a: &Mat, p: usize) -> Q {
    combinations(a.len(), p).into_iter().fold(q(0), |acc, s| {
        let m: Mat = s.iter().map(|&i| s.iter().map(|&j| a[i][j].clone()).collect()).collect();
        acc + det(&m)
    })
}

pub fn det_i_minus(a: &Mat) -> Q {
    det(&sub(&identity(a.len()), a))
}

/// Row-echelon rank.
pub fn rank(a: &Mat) -> usize {
    let mut rows: Vec<Vec<Q>> = a.clone();
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, piv);
        for i in r + 1..rows.len() {
            if !rows[i][c].is_zero() {
                let f = &rows[i][c] / &rows[r][c];
                for j in c..cols {
                    let d = &f * &rows[r][j];
                    rows[i][j] -= d;
                }
            }
        }
        r += 1;
    }
    r
}

/// Polynomials as coefficient lists, constant term first.
pub type Poly = Vec<Q>;

fn trim(mut p: Poly) -> Poly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn poly_rem(a: &Poly, b: &Poly) -> Poly {
    let b = trim(b.clone());
    let mut r = trim(a.clone());
    let lead = b.last().expect("nonzero divisor").clone();
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let f = r.last().unwrap() / &lead;
        for (i, c) in b.iter().enumerate() {
            r[i + shift] -= &f * c;
        }
        r = trim(r);
    }
    r
}

pub fn poly_gcd(a: &Poly, b: &Poly) -> Poly {
    let (mut a, mut b) = (trim(a.clone()), trim(b.clone()));
    while !b.is_empty() {
        let r = poly_rem(&a, &b);
        a = b;
        b = r;
    }
    a
}

pub fn derivative(p: &Poly) -> Poly {
    p.iter().enumerate().skip(1).map(|(i, c)| c * q(i as i64)).collect()
}

pub fn is_squarefree(p: &Poly) -> bool {
    poly_gcd(p, &derivative(p)).len() <= 1
}

/// Monic minimal polynomial: the first power `M^k` in the span of the lower ones.
pub fn minimal_polynomial(a: &Mat) -> Poly {
    let n = a.len();
    let flat = |m: &Mat| -> Vec<Q> { m.iter().flatten().cloned().collect() };
    let mut powers = vec![identity(n)];
    loop {
        let k = powers.len();
        let next = mul(powers.last().unwrap(), a);
        // solve sum c_i vec(M^i) = vec(M^k) by elimination on the augmented system
        let mut sys: Mat = (0..n * n)
            .map(|e| {
                let mut row: Vec<Q> = powers.iter().map(|p| flat(p)[e].clone()).collect();
                row.push(flat(&next)[e].clone());
                row
            })
            .collect();
        if let Some(c) = solve(&mut sys, k) {
            let mut poly: Poly = c.into_iter().map(|x| -x).collect();
            poly.push(q(1));
            return poly;
        }
        powers.push(next);
    }
}

fn solve(sys: &mut Mat, unknowns: usize) -> Option<Vec<Q>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..=unknowns {
        let Some(piv) = (r..sys.len()).find(|&i| !sys[i][c].is_zero()) else {
            continue;
        };
        if c == unknowns {
            return None;
        }
        sys.swap(r, piv);
        let lead = sys[r][c].clone();
        for x in sys[r].iter_mut() {
            *x = &*x / &lead;
        }
        for i in 0..sys.len() {
            if i != r && !sys[i][c].is_zero() {
                let f = sys[i][c].clone();
                for j in 0..=unknowns {
                    let d = &f * &sys[r][j];
                    sys[i][j] -= d;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let mut x = vec![q(0); unknowns];
    for (row, &c) in pivots.iter().enumerate() {
        x[c] = sys[row][unknowns].clone();
    }
    Some(x)
}

pub fn is_nilpotent(a: &Mat) -> bool {
    let n = a.len();
    let mut p = identity(n);
    for _ in 0..n {
        p = mul(&p, a);
    }
    p.iter().flatten().all(Zero::is_zero)
}

/// Is `target` a polynomial in `a`?
pub fn is_polynomial_in(target: &Mat, a: &Mat) -> bool {
    let n = a.len();
    let mut powers = vec![identity(n)];
    for _ in 1..n.max(1) {
        powers.push(mul(powers.last().unwrap(), a));
    }
    let mut sys: Mat = (0..n * n)
        .map(|e| {
            let (i, j) = (e / n, e % n);
            let mut row: Vec<Q> = powers.iter().map(|p| p[i][j].clone()).collect();
            row.push(target[i][j].clone());
            row
        })
        .collect();
    solve(&mut sys, powers.len()).is_some()
}

/// Jacobi defect of a dense structure-constant table `c[i][j][k]`, summed
/// over all index triples; zero iff the bracket is a Lie bracket (given
/// antisymmetry).
pub fn jacobi_defect_norm(c: &[Vec<Vec<Q>>]) -> Q {
    let n = c.len();
    let br = |x: &[Q], y: &[Q]| -> Vec<Q> {
        let mut out = vec![q(0); n];
        for i in 0..n {
            for j in 0..n {
                if x[i].is_zero() || y[j].is_zero() {
                    continue;
                }
                for k in 0..n {
                    out[k] += &x[i] * &y[j] * &c[i][j][k];
                }
            }
        }
        out
    };
    let e = |i: usize| -> Vec<Q> { (0..n).map(|k| if k == i { q(1) } else { q(0) }).collect() };
    let mut total = q(0);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let a = br(&e(i), &br(&e(j), &e(k)));
                let b = br(&e(j), &br(&e(k), &e(i)));
                let d = br(&e(k), &br(&e(i), &e(j)));
                for t in 0..n {
                    total += (&a[t] + &b[t] + &d[t]).abs();
                }
            }
        }
    }
    total
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}


#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn leibniz() {
        assert_eq!(det(&mat(&[&[2, 1], &[1, 1]])), q(1));
        assert_eq!(det(&mat(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]])), q(1));
        assert_eq!(det(&mat(&[&[0, 1], &[1, 0]])), q(-1));
        assert_eq!(permutations(4).len(), 24);
        assert_eq!(det(&identity(0)), q(1));
    }

    #[test]
    fn minimal_polynomials() {
        // diag(2,2,3): (x-2)(x-3) = x^2 - 5x + 6
        let d = vec![vec![q(2), q(0), q(0)], vec![q(0), q(2), q(0)], vec![q(0), q(0), q(3)]];
        assert_eq!(minimal_polynomial(&d), vec![q(6), q(-5), q(1)]);
        assert!(is_squarefree(&minimal_polynomial(&d)));
        let jordan = mat(&[&[1, 1], &[0, 1]]);
        assert!(!is_squarefree(&minimal_polynomial(&jordan)));
    }

    #[test]
    fn ranks_and_minors() {
        assert_eq!(rank(&mat(&[&[1, 2], &[2, 4]])), 1);
        let a = mat(&[&[1, 2, 0], &[0, 3, 0], &[4, 0, 5]]);
        assert_eq!(principal_minor_sum(&a, 1), q(9));
        assert_eq!(principal_minor_sum(&a, 3), det(&a));
        assert_eq!(principal_minor_sum(&a, 0), q(1));
    }
}
