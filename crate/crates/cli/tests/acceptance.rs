//! Acceptance suite: one PASS/FAIL line per criterion. Every comparison is an
//! exact rational equality against an independent reference computation.

use std::process::Command;
use std::time::Instant;

use lefschetz_core::catalog::{Catalog, CatalogEntry};
use lefschetz_core::cecomplex::CochainComplex;
use lefschetz_core::lefschetz::twisted_lefschetz;
use lefschetz_core::liealg::{default_labels, LieAlgebra, LieMorphism};
use lefschetz_core::nilshadow::{build_shadow, shadow_lefschetz, SplitPresentation};
use lefschetz_core::ratlin::{Matrix, Rational};
use lefschetz_core::repn::{Intertwiner, Representation};
use lefschetz_core::samples;
use lefschetz_core::torus::{cross_check_with_ce, TorusMap};
use lefschetz_oracle as oracle;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn catalog() -> Catalog {
    Catalog::builtin().expect("embedded catalog loads")
}

fn trivial_xi(f: &LieMorphism) -> Intertwiner {
    Intertwiner::identity(f.clone(), Representation::trivial(f.source.clone())).expect("1x1 identity")
}

fn maps_of(e: &CatalogEntry, rng: &mut ChaCha8Rng, scalings: usize) -> Vec<LieMorphism> {
    let mut maps: Vec<LieMorphism> = e.morphisms.iter().map(|(_, f)| f.clone()).collect();
    if e.grading.is_some() {
        for _ in 0..scalings {
            maps.push(e.random_graded_endomorphism(rng.gen()).expect("graded"));
        }
    }
    maps
}

fn err<E: std::fmt::Display>(ctx: &str) -> impl FnOnce(E) -> String + '_ {
    move |e| format!("{ctx}: {e}")
}

fn linearization() -> Outcome {
    let cat = catalog();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut cases = 0;
    for e in cat.entries().iter().filter(|e| e.algebra.is_nilpotent()) {
        ensure!(e.grading.is_some(), "{} has no grading", e.name);
        for f in maps_of(e, &mut rng, 100) {
            let r = twisted_lefschetz(&e.algebra, &Representation::trivial(e.algebra.clone()), &f, &trivial_xi(&f))
                .map_err(err(&e.name))?;
            let expected = oracle::det_i_minus(&f.matrix.to_rows());
            ensure!(r.lefschetz == expected, "{}: L = {} but det(I - f) = {}", e.name, r.lefschetz, expected);
            cases += 1;
        }
    }
    Ok(format!("{cases} (algebra, endomorphism) pairs"))
}

fn hopf() -> Outcome {
    let cat = catalog();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut cases = 0;
    for round in 0..8 {
        for e in cat.entries() {
            let maps = maps_of(e, &mut rng, 4);
            let modules = match round {
                0 => vec![Representation::trivial(e.algebra.clone())],
                1 => vec![Representation::adjoint(e.algebra.clone())],
                _ => vec![samples::module(&mut rng, &e.algebra, &maps, 4)],
            };
            for v in &modules {
                for f in &maps {
                    let xi = samples::intertwiner(&mut rng, f, v);
                    let r = twisted_lefschetz(&e.algebra, v, f, &xi).map_err(err(&e.name))?;
                    ensure!(r.hopf == r.lefschetz, "{}: cochain {} vs cohomology {}", e.name, r.hopf, r.lefschetz);
                    let expected = oracle::det_i_minus(&f.matrix.to_rows()) * oracle::trace(&xi.matrix.to_rows());
                    ensure!(r.hopf == expected, "{}: cochain trace {} vs reference {}", e.name, r.hopf, expected);
                    cases += 1;
                }
            }
        }
    }
    ensure!(cases >= 500, "only {cases} cases");
    Ok(format!("{cases} validated (algebra, module, f, xi) cases"))
}

fn characteristic_identity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for case in 0..200 {
        let n = rng.gen_range(1..=6);
        let m = samples::matrix(&mut rng, n, n, 5, 4);
        let mut sum = Rational::zero();
        for p in 0..=n {
            let t = m.exterior_power(p).map_err(err("exterior power"))?.trace().map_err(err("trace"))?;
            if p % 2 == 0 {
                sum += t;
            } else {
                sum -= t;
            }
        }
        let expected = oracle::det_i_minus(&m.to_rows());
        ensure!(sum == expected, "case {case}: {sum} vs {expected}");
    }
    Ok("200 random rational matrices, n <= 6".into())
}

fn complex_soundness() -> Outcome {
    let cat = catalog();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut complexes = 0;
    for e in cat.entries() {
        let maps = maps_of(e, &mut rng, 2);
        let mut modules = vec![
            Representation::trivial(e.algebra.clone()),
            Representation::adjoint(e.algebra.clone()),
        ];
        for _ in 0..50 {
            modules.push(samples::module(&mut rng, &e.algebra, &maps, 4));
        }
        for v in &modules {
            v.validate().map_err(err(&e.name))?;
            let c = CochainComplex::build(&e.algebra, v).map_err(err(&e.name))?;
            for (p, w) in c.differentials().windows(2).enumerate() {
                ensure!((&w[1] * &w[0]).is_zero(), "{}: d{} d{} != 0", e.name, p + 1, p);
            }
            complexes += 1;
        }
    }
    Ok(format!("{complexes} complexes"))
}

fn betti_regression() -> Outcome {
    let cat = catalog();
    let betti = |name: &str| -> Result<(Vec<usize>, CochainComplex), String> {
        let e = cat.get(name).map_err(err(name))?;
        let c = CochainComplex::build(&e.algebra, &Representation::trivial(e.algebra.clone())).map_err(err(name))?;
        Ok((c.cohomology().betti(), c))
    };
    for n in 1..=4 {
        let (b, _) = betti(&format!("abelian_{n}"))?;
        let expected: Vec<usize> = (0..=n).map(|p| oracle::binomial(n, p)).collect();
        ensure!(b == expected, "abelian_{n}: {b:?}");
    }
    // heisenberg3: d e^2 = -e^01, so rank d1 = 1 and d2 = 0, betti (1,2,2,1)
    let (b, c) = betti("heisenberg3")?;
    ensure!(b == [1, 2, 2, 1], "heisenberg3: {b:?}");
    ensure!(
        c.differentials()[1].to_rows() == oracle::mat(&[&[0, 0, -1], &[0, 0, 0], &[0, 0, 0]]),
        "heisenberg3 d1 differs from the hand computation"
    );
    // sol3: d e^1 = -e^01, d e^2 = e^02, so rank d1 = 2 and d2 = 0, betti (1,1,1,1)
    let (b, c) = betti("sol3")?;
    ensure!(b == [1, 1, 1, 1], "sol3: {b:?}");
    ensure!(
        c.differentials()[1].to_rows() == oracle::mat(&[&[0, -1, 0], &[0, 0, 1], &[0, 0, 0]]),
        "sol3 d1 differs from the hand computation"
    );
    ensure!(c.differentials()[2].is_zero(), "sol3 d2 is not zero");
    Ok("abelian_1..4, heisenberg3, sol3".into())
}

fn torus() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut done = 0;
    while done < 100 {
        let n = rng.gen_range(2..=3);
        let rows: Vec<Vec<i64>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(-3..=3)).collect()).collect();
        let a: oracle::Mat = rows.iter().map(|r| r.iter().map(|&x| oracle::q(x)).collect()).collect();
        let det_a_minus_i = oracle::det(&oracle::sub(&a, &oracle::identity(n)));
        if det_a_minus_i.is_zero() {
            continue;
        }
        let t = TorusMap::new(rows.clone()).map_err(err("torus"))?;
        let c = cross_check_with_ce(&t).map_err(err(&format!("{rows:?}")))?;
        ensure!(
            Rational::from_integer(c.fixed_points.count.into()) == det_a_minus_i.abs(),
            "{rows:?}: {} fixed points, |det(A - I)| = {}",
            c.fixed_points.count,
            det_a_minus_i.abs()
        );
        let expected = oracle::det_i_minus(&a);
        ensure!(c.ce_lefschetz == expected, "{rows:?}: CE Lefschetz {} vs {}", c.ce_lefschetz, expected);
        done += 1;
    }
    Ok("100 random integer matrices, n in {2,3}".into())
}

fn diagonal_family(rng: &mut ChaCha8Rng) -> (SplitPresentation, LieMorphism) {
    let k = rng.gen_range(1..=3);
    let lambda: Vec<Rational> = (0..k).map(|_| samples::rational(rng, 3, 3)).collect();
    let alg = LieAlgebra::new(
        default_labels(k + 1),
        (0..k).map(|i| (0, i + 1, vec![(i + 1, lambda[i].clone())])),
    )
    .expect("valid table");
    let split = SplitPresentation::new(alg.clone(), (1..=k).collect(), vec![0]).expect("valid split");
    let s = if rng.gen_bool(0.5) { Rational::one() } else { samples::rational(rng, 2, 2) };
    let mut diag = vec![s.clone()];
    for l in &lambda {
        diag.push(if s.is_one() || l.is_zero() { samples::rational(rng, 3, 2) } else { Rational::zero() });
    }
    (split, LieMorphism::endomorphism(alg, Matrix::diagonal(&diag)).expect("square"))
}

fn nilshadow() -> Outcome {
    let cat = catalog();
    let sol3 = cat.get("sol3").map_err(err("sol3"))?;
    let r = build_shadow(sol3.split.as_ref().ok_or("sol3 has no split")?).map_err(err("sol3"))?;
    ensure!(r.shadow.brackets().is_empty(), "shadow(sol3) is not abelian");
    for e in cat.entries().iter().filter(|e| e.algebra.is_nilpotent()) {
        let r = build_shadow(&SplitPresentation::nilpotent(e.algebra.clone())).map_err(err(&e.name))?;
        ensure!(r.shadow == e.algebra, "shadow({}) differs from itself", e.name);
    }

    let mut pairs: Vec<(String, SplitPresentation, LieMorphism)> = Vec::new();
    for e in cat.entries() {
        if let Some(split) = &e.split {
            for (name, t) in &e.morphisms {
                pairs.push((format!("{}/{name}", e.name), split.clone(), t.clone()));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for i in 0..100 {
        let (split, t) = diagonal_family(&mut rng);
        pairs.push((format!("diagonal #{i}"), split, t));
    }
    let mut accepted = 0;
    for (label, split, t) in &pairs {
        let Ok(out) = shadow_lefschetz(split, t) else {
            continue;
        };
        let Some(report) = &out.shadow_report else {
            continue;
        };
        let expected = oracle::det_i_minus(&t.matrix.to_rows());
        ensure!(report.lefschetz == expected, "{label}: L(shadow) = {} vs det(I - T) = {expected}", report.lefschetz);
        accepted += 1;
    }
    ensure!(accepted > 0, "no accepted pairs");
    Ok(format!("{accepted} accepted (split, T) pairs of {}", pairs.len()))
}

fn jordan_chevalley() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for case in 0..100 {
        let n = rng.gen_range(1..=5);
        let m = if case % 2 == 0 {
            samples::sparse_integer_matrix(&mut rng, n, 2, 0.35)
        } else {
            samples::matrix(&mut rng, n, n, 3, 2)
        };
        let jc = m.jordan_chevalley().map_err(err("jordan_chevalley"))?;
        let (s, nil) = (&jc.semisimple, &jc.nilpotent);
        ensure!((s + nil) == m, "case {case}: S + N != M");
        ensure!(s * nil == nil * s, "case {case}: SN != NS");
        ensure!(oracle::is_nilpotent(&nil.to_rows()), "case {case}: N not nilpotent");
        ensure!(
            oracle::is_squarefree(&oracle::minimal_polynomial(&s.to_rows())),
            "case {case}: S not semisimple"
        );
    }
    Ok("100 random matrices, n <= 5".into())
}

fn euler_characteristic() -> Outcome {
    let cat = catalog();
    for e in cat.entries() {
        let c = CochainComplex::build(&e.algebra, &Representation::trivial(e.algebra.clone())).map_err(err(&e.name))?;
        let chi = c.cohomology().euler_characteristic();
        ensure!(chi == 0, "{}: chi = {chi}", e.name);
    }
    Ok(format!("{} catalog algebras", cat.entries().len()))
}

fn determinism() -> Outcome {
    let dir = tempfile::tempdir().map_err(err("tempdir"))?;
    let docs = [
        r#"{ "algebra": "heisenberg3", "map": { "matrix": [["2","0","0"],["0","3","0"],["0","0","6"]] } }"#,
        r#"{ "algebra": "sol3", "map": "scale_3_2", "module": "adjoint",
             "intertwiner": { "matrix": [["1","0","0"],["0","2/3","0"],["0","0","3/2"]] },
             "linearization": "map" }"#,
    ];
    for (i, doc) in docs.iter().enumerate() {
        let path = dir.path().join(format!("task{i}.json"));
        std::fs::write(&path, doc).map_err(err("write"))?;
        let run = || {
            Command::new(env!("CARGO_BIN_EXE_lefschetz"))
                .arg("lefschetz")
                .arg(&path)
                .arg("--json")
                .env_remove("LEFSCHETZ_CATALOG_DIR")
                .output()
                .map_err(err("spawn"))
        };
        let (a, b) = (run()?, run()?);
        ensure!(a.status.code() == b.status.code(), "task {i}: exit codes differ");
        ensure!(a.status.code() != Some(2) && a.status.code() != Some(3), "task {i}: {}", String::from_utf8_lossy(&a.stderr));
        ensure!(!a.stdout.is_empty() && a.stdout == b.stdout, "task {i}: outputs differ");
        if i == 0 {
            let v: serde_json::Value = serde_json::from_slice(&a.stdout).map_err(err("json"))?;
            ensure!(v["lefschetz"] == "-10" && v["agree"] == true, "heisenberg3: {v}");
        }
    }
    Ok(format!("{} documents, two runs each", docs.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("linearization on nilpotent catalog algebras", linearization),
        ("Hopf trace identity", hopf),
        ("characteristic identity", characteristic_identity),
        ("complex soundness d^2 = 0", complex_soundness),
        ("Betti regression", betti_regression),
        ("torus fixed points", torus),
        ("nilshadow", nilshadow),
        ("Jordan-Chevalley", jordan_chevalley),
        ("Euler characteristic", euler_characteristic),
        ("determinism of lefschetz --json", determinism),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS  {:>2}. {name}: {detail} ({secs:.1}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL  {:>2}. {name}: {why} ({secs:.1}s)", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed in {:.1}s", criteria.len() - failed, criteria.len(), start.elapsed().as_secs_f64());
    if failed > 0 {
        std::process::exit(1);
    }
}
