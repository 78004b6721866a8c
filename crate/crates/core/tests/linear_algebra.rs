use lefschetz_core::ratlin::{characteristic_polynomial, is_semisimple, Matrix, Rational};
use lefschetz_oracle as oracle;
use num_bigint::BigInt;
use proptest::prelude::*;

fn rational_matrix(max_n: usize) -> impl Strategy<Value = Matrix> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec((-5i64..=5, 1i64..=4), n * n).prop_map(move |xs| {
            let rows = xs
                .chunks(n)
                .map(|r| r.iter().map(|&(p, q)| Rational::new(BigInt::from(p), BigInt::from(q))).collect())
                .collect();
            Matrix::from_rows(rows).unwrap()
        })
    })
}

/// Small integer matrices with repeated eigenvalues are common enough to
/// exercise nontrivial nilpotent parts.
fn integer_matrix(max_n: usize) -> impl Strategy<Value = Matrix> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(prop_oneof![3 => Just(0i64), 1 => -2i64..=2], n * n).prop_map(move |xs| {
            let rows = xs
                .chunks(n)
                .map(|r| r.iter().map(|&x| Rational::from_integer(BigInt::from(x))).collect())
                .collect();
            Matrix::from_rows(rows).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn alternating_exterior_traces_give_det_i_minus(m in rational_matrix(6)) {
        let n = m.rows();
        let mut sum = Rational::from_integer(0.into());
        for p in 0..=n {
            let t = m.exterior_power(p).unwrap().trace().unwrap();
            prop_assert_eq!(&t, &oracle::principal_minor_sum(&m.to_rows(), p));
            if p % 2 == 0 { sum += t } else { sum -= t }
        }
        prop_assert_eq!(sum, oracle::det_i_minus(&m.to_rows()));
    }

    #[test]
    fn determinant_matches_leibniz(m in rational_matrix(6)) {
        prop_assert_eq!(m.determinant().unwrap(), oracle::det(&m.to_rows()));
    }

    #[test]
    fn exterior_power_is_multiplicative(a in rational_matrix(4), seed in any::<u64>()) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let n = a.rows();
        let b = lefschetz_core::samples::matrix(&mut rng, n, n, 3, 2);
        for p in 0..=n {
            prop_assert_eq!(
                (&a * &b).exterior_power(p).unwrap(),
                &a.exterior_power(p).unwrap() * &b.exterior_power(p).unwrap()
            );
        }
    }

    #[test]
    fn kernel_and_rank(m in rational_matrix(5), extra in 0usize..3) {
        let wide = m.hstack(&Matrix::zeros(m.rows(), extra));
        let ker = wide.kernel_basis();
        prop_assert_eq!(wide.rank(), oracle::rank(&wide.to_rows()));
        prop_assert_eq!(ker.len() + wide.rank(), wide.cols());
        for v in &ker {
            prop_assert!(wide.mul_vec(v).iter().all(|x| *x == Rational::from_integer(0.into())));
        }
        let k = Matrix::from_columns(wide.cols(), &ker);
        prop_assert_eq!(oracle::rank(&k.to_rows()), ker.len());
    }

    #[test]
    fn inverse_round_trip(m in rational_matrix(5)) {
        match m.inverse() {
            Ok(inv) => prop_assert_eq!(&m * &inv, Matrix::identity(m.rows())),
            Err(_) => prop_assert_eq!(oracle::det(&m.to_rows()), Rational::from_integer(0.into())),
        }
    }

    #[test]
    fn jordan_chevalley_invariants(m in integer_matrix(5)) {
        let jc = m.jordan_chevalley().unwrap();
        let (s, nil) = (&jc.semisimple, &jc.nilpotent);
        prop_assert_eq!(&(s + nil), &m);
        prop_assert_eq!(s * nil, nil * s);
        prop_assert!(oracle::is_nilpotent(&nil.to_rows()));
        prop_assert!(oracle::is_squarefree(&oracle::minimal_polynomial(&s.to_rows())));
        prop_assert!(oracle::is_polynomial_in(&s.to_rows(), &m.to_rows()));
        prop_assert_eq!(is_semisimple(&m), nil.is_zero());
    }

    #[test]
    fn characteristic_polynomial_constant_term(m in rational_matrix(5)) {
        let n = m.rows();
        let c = characteristic_polynomial(&m);
        let det = oracle::det(&m.to_rows());
        let expected = if n % 2 == 0 { det } else { -det };
        prop_assert_eq!(&c.0[0], &expected);
    }
}
