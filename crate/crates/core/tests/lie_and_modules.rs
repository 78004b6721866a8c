use lefschetz_core::catalog::Catalog;
use lefschetz_core::liealg::{LieAlgebra, LieMorphism};
use lefschetz_core::ratlin::{Rational, Vector};
use lefschetz_core::repn::Representation;
use lefschetz_core::samples;
use lefschetz_oracle as oracle;
use num_traits::Zero;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn catalog() -> Catalog {
    Catalog::builtin().unwrap()
}

fn random_vector(rng: &mut ChaCha8Rng, n: usize) -> Vector {
    (0..n).map(|_| samples::rational(rng, 4, 3)).collect()
}

fn neg(v: &[Rational]) -> Vector {
    v.iter().map(|x| -x).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bracket_is_antisymmetric_and_bilinear(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for e in catalog().entries() {
            let g = &e.algebra;
            let n = g.dim();
            let (x, y, z) = (random_vector(&mut rng, n), random_vector(&mut rng, n), random_vector(&mut rng, n));
            prop_assert_eq!(g.bracket(&x, &y).unwrap(), neg(&g.bracket(&y, &x).unwrap()));
            prop_assert!(g.bracket(&x, &x).unwrap().iter().all(Zero::is_zero));
            let c = samples::rational(&mut rng, 3, 2);
            let xz: Vector = x.iter().zip(&z).map(|(a, b)| &c * a + b).collect();
            let lhs = g.bracket(&xz, &y).unwrap();
            let rhs: Vector = g.bracket(&x, &y).unwrap().iter().zip(g.bracket(&z, &y).unwrap())
                .map(|(a, b)| &c * a + b).collect();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn jacobi_check_agrees_with_brute_force(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let cat = catalog();
        let e = &cat.entries()[rng.gen_range(0..cat.entries().len())];
        let n = e.algebra.dim();
        prop_assume!(n >= 3);
        let mut table = e.algebra.dense_table();
        let i = rng.gen_range(0..n - 1);
        let j = rng.gen_range(i + 1..n);
        let k = rng.gen_range(0..n);
        let delta = samples::rational(&mut rng, 2, 2);
        table[i][j][k] += &delta;
        table[j][i][k] -= &delta;
        let perturbed = LieAlgebra::from_dense(e.algebra.labels().to_vec(), |a, b| table[a][b].clone()).unwrap();
        let brute = oracle::jacobi_defect_norm(&table);
        prop_assert_eq!(perturbed.validate().is_ok(), brute.is_zero());
    }

    #[test]
    fn pullback_composes(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for e in catalog().entries() {
            let maps: Vec<LieMorphism> = e.morphisms.iter().map(|(_, f)| f.clone()).collect();
            let v = samples::module(&mut rng, &e.algebra, &maps, 4);
            let f = &maps[rng.gen_range(0..maps.len())];
            let g = &maps[rng.gen_range(0..maps.len())];
            let lhs = v.pullback(f).unwrap().pullback(g).unwrap();
            let rhs = v.pullback(&f.compose(g).unwrap()).unwrap();
            prop_assert_eq!(&lhs, &rhs);
            prop_assert!(lhs.validate().is_ok());
        }
    }
}

#[test]
fn adjoint_modules_of_catalog_are_valid() {
    for e in catalog().entries() {
        Representation::adjoint(e.algebra.clone()).validate().unwrap();
        assert_eq!(oracle::jacobi_defect_norm(&e.algebra.dense_table()), Rational::zero(), "{}", e.name);
    }
}

#[test]
fn catalog_morphisms_pass_brute_force_check() {
    for e in catalog().entries() {
        let c = e.algebra.dense_table();
        let n = e.algebra.dim();
        for (name, f) in &e.morphisms {
            let m = f.matrix.to_rows();
            for i in 0..n {
                for j in 0..n {
                    // f[e_i, e_j] against [f e_i, f e_j], both expanded in coordinates
                    for k in 0..n {
                        let lhs: Rational = (0..n).map(|t| &m[k][t] * &c[i][j][t]).sum();
                        let mut rhs = Rational::zero();
                        for a in 0..n {
                            for b in 0..n {
                                rhs += &m[a][i] * &m[b][j] * &c[a][b][k];
                            }
                        }
                        assert_eq!(lhs, rhs, "{}: {name} at ({i},{j},{k})", e.name);
                    }
                }
            }
        }
    }
}
