//! Acceptance checks, one line per criterion. Runs without the libtest
//! harness so the lines are always printed; exits nonzero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_rational::BigRational;
use quasialg::classify::{coboundary_search, cohomology_classes, enumerate_cocycles, CoboundarySearch, SearchConfig, SearchSpace};
use quasialg::cocycle::{
    check_cocycle, coboundary, z3_twist_cochain, identity_suite, octonion_cocycle, qxyz_cocycle, trilinear_cocycle,
    z3_extract_params, z3_from_params, z3_is_coboundary, z3_noncoboundary, z3_symmetric, CocycleTable, Z3Params,
};
use quasialg::group::{GroupSpec, TrilinearForm};
use quasialg::quasialg::{octonion_algebra, twisted_group_algebra};
use quasialg::quasimatrix::{qmat_mul, CycloMatrix, QuasimatrixAlgebra};
use quasialg::scalar::{Cyclotomic, Embedding, GeneratorSpec, UnitScalar};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn zeta(n: u32, k: i64) -> UnitScalar {
    UnitScalar::root_power(&GeneratorSpec::root_of_unity(n), k)
}

fn cfg() -> SearchConfig {
    SearchConfig::default()
}

fn z(n: u32) -> GroupSpec {
    GroupSpec::cyclic(n).unwrap()
}

fn z3_image() -> Vec<CocycleTable> {
    let mut out = Vec::new();
    for a in 0..3 {
        for b in 0..3 {
            for o in 0..3 {
                out.push(z3_from_params(&zeta(3, a), &zeta(3, b), &zeta(3, o)).unwrap());
            }
        }
    }
    out
}

fn z2_classification() -> Outcome {
    let all = enumerate_cocycles(&z(2), 2, &cfg()).map_err(|e| e.to_string())?;
    ensure(all.len() == 2, || format!("{} cocycles", all.len()))?;
    let sign = qxyz_cocycle(2, &zeta(2, 1)).unwrap();
    ensure(all[0].is_trivial() && all[1] == sign, || "tables are not {1, (-1)^xyz}".into())?;
    let r = coboundary_search(&all[1], 2, &cfg()).map_err(|e| e.to_string())?;
    ensure(r == CoboundarySearch::NotFound { checked: 2 }, || format!("search gave {r:?}"))?;
    Ok("2 cocycles, (-1)^xyz not a coboundary after 2 cochains".into())
}

fn z3_parametrization() -> Outcome {
    let space = SearchSpace::cocycles(&z(3), 3, &cfg()).map_err(|e| e.to_string())?;
    ensure(space.cardinality == 6561, || format!("{} candidates", space.cardinality))?;
    let all = enumerate_cocycles(&z(3), 3, &cfg()).map_err(|e| e.to_string())?;
    ensure(all.len() == 27, || format!("{} cocycles", all.len()))?;
    let image = z3_image();
    ensure(image.iter().all(|t| all.contains(t)) && all.iter().all(|t| image.contains(t)), || "sets differ".into())?;
    Ok("6561 candidates, 27 cocycles, equal to the parameter image".into())
}

fn coboundary_criterion() -> Outcome {
    let all = enumerate_cocycles(&z(3), 3, &cfg()).map_err(|e| e.to_string())?;
    let mut found = 0;
    for t in &all {
        let omega_one = z3_extract_params(t).map_err(|e| e.to_string())?.omega.is_one();
        let r = coboundary_search(t, 3, &cfg()).map_err(|e| e.to_string())?;
        match &r {
            CoboundarySearch::Found(f) => ensure(&coboundary(f) == t, || "witness does not verify".into())?,
            CoboundarySearch::NotFound { checked } => ensure(*checked == 81, || format!("{checked} cochains"))?,
        }
        ensure(r.is_found() == omega_one, || "search disagrees with omega".into())?;
        ensure(z3_is_coboundary(t).unwrap() == r.is_found(), || "z3_is_coboundary disagrees".into())?;
        found += r.is_found() as usize;
    }
    ensure(found == 9, || format!("{found} coboundaries"))?;
    Ok("9 of 27 are coboundaries, exactly those with omega = 1".into())
}

fn qxyz_family() -> Outcome {
    for n in 2..=6 {
        let t = qxyz_cocycle(n, &zeta(n, 1)).map_err(|e| e.to_string())?;
        ensure(check_cocycle(&t).passed(), || format!("n = {n} fails"))?;
    }
    let q = zeta(3, 1);
    let p = z3_extract_params(&qxyz_cocycle(3, &q).unwrap()).map_err(|e| e.to_string())?;
    ensure(p == Z3Params { alpha: q.clone(), beta: q.pow(2), omega: zeta(3, 0) }, || format!("{p:?}"))?;
    Ok("n = 2..6 pass, n = 3 has (q, q^2, 1)".into())
}

fn twisted_z3() -> Outcome {
    let q = zeta(3, 1);
    let f = z3_twist_cochain(&q).map_err(|e| e.to_string())?;
    ensure(coboundary(&f) == qxyz_cocycle(3, &q).unwrap(), || "dF is not q^xyz".into())?;
    let a = twisted_group_algebra(&f).map_err(|e| e.to_string())?;
    let r = a.check_quasiassociativity();
    ensure(r.passed() && r.checked_triples == 27, || format!("{r:?}"))?;
    Ok("dF = q^xyz, 27 triples pass".into())
}

fn quasimatrix_coefficients() -> Outcome {
    for n in 2..=5u32 {
        let q = zeta(n, 1);
        let m = QuasimatrixAlgebra::new(&qxyz_cocycle(n, &q).unwrap()).map_err(|e| e.to_string())?;
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    let (a, b, c) = (i as i64, j as i64, l as i64);
                    let want = q.pow(a * b * c - b * b * (a + c));
                    ensure(*m.structure_constant(i, j, l) == want, || format!("n = {n} at ({i},{j},{l})"))?;
                }
            }
        }
    }
    let w = zeta(3, 1);
    let m = QuasimatrixAlgebra::new(&z3_noncoboundary(&w).unwrap()).map_err(|e| e.to_string())?;
    let mut checked = 0;
    for i in 0..3u32 {
        for j in 0..3u32 {
            for l in 0..3u32 {
                let want = if (i == 0 && j != 0) || (i == 1 && j == 2) { w.pow(l as i64) } else { w.pow(j as i64) };
                ensure(*m.structure_constant(i, j, l) == want, || format!("M_3 at ({i},{j},{l})"))?;
                checked += 1;
            }
        }
    }
    Ok(format!("closed form for n = 2..5, M_3 case split on {checked} triples"))
}

fn m2_product() -> Outcome {
    let phi = qxyz_cocycle(2, &zeta(2, 1)).unwrap();
    let emb = Embedding::automatic(phi.gens()).map_err(|e| e.to_string())?;
    let rat = |p: i64, q: i64| Cyclotomic::from_rational(2, BigRational::new(p.into(), q.into())).unwrap();
    let mut cases = 0;
    for s in 0..25i64 {
        let entry = |k: i64| rat((s * 7 + k * 13) % 23 - 11, 1 + (s + k) % 5);
        let a = CycloMatrix::new(2, vec![vec![entry(0), entry(1)], vec![entry(2), entry(3)]]).unwrap();
        let b = CycloMatrix::new(2, vec![vec![entry(4), entry(5)], vec![entry(6), entry(7)]]).unwrap();
        let p = qmat_mul(&a, &b, &phi, &emb).map_err(|e| e.to_string())?;
        let (x, y) = (|i, j| a.get(i, j), |i, j| b.get(i, j));
        let t = |i, k, j| x(i, k) * y(k, j);
        let want = [
            [&t(0, 0, 0) + &t(0, 1, 0), &t(0, 0, 1) - &t(0, 1, 1)],
            [&t(1, 0, 0) - &t(1, 1, 0), &t(1, 0, 1) - &t(1, 1, 1)],
        ];
        for i in 0..2 {
            for l in 0..2 {
                ensure(p.get(i, l) == &want[i][l], || format!("case {s} entry ({i},{l})"))?;
            }
        }
        cases += 1;
    }
    Ok(format!("{cases} rational matrix pairs match the signed product"))
}

fn octonions() -> Outcome {
    let o = octonion_algebra();
    ensure(o.phi() == &octonion_cocycle(), || "wrong cocycle".into())?;
    let a = o.check_quasiassociativity();
    ensure(a.passed() && a.checked_triples == 512, || format!("{} associator violations", a.violations.len()))?;
    let c = o.check_quasicommutativity(o.bicharacter().unwrap()).map_err(|e| e.to_string())?;
    ensure(c.passed() && c.checked_pairs == 64, || format!("{} commutator violations", c.violations.len()))?;
    Ok("512 triples and 64 pairs pass".into())
}

fn identity_suites() -> Outcome {
    let mut tables = enumerate_cocycles(&z(2), 2, &cfg()).map_err(|e| e.to_string())?;
    tables.extend(enumerate_cocycles(&z(3), 3, &cfg()).map_err(|e| e.to_string())?);
    tables.push(octonion_cocycle());
    tables.push(trilinear_cocycle(&TrilinearForm::cross_product(), &zeta(2, 1)).unwrap());
    let forms = [(2, 2, vec![1, 0, 1, 1, 0, 1, 1, 0]), (3, 2, vec![1, 2, 0, 1, 1, 0, 2, 2]), (4, 1, vec![1])];
    for (n, m, coeffs) in forms {
        let form = TrilinearForm::new(n, m, coeffs).unwrap();
        tables.push(trilinear_cocycle(&form, &zeta(n, 1)).unwrap());
    }
    for t in &tables {
        let r = identity_suite(t);
        ensure(r.passed(), || format!("suite fails on {}", t.group()))?;
        if t.group().orders() == [3] {
            let rows = r.row_triviality.as_ref().unwrap();
            ensure(rows.trivial_rows.is_empty() != t.is_trivial(), || "row triviality".into())?;
        }
    }
    Ok(format!("{} tables pass every applicable identity", tables.len()))
}

fn cohomological_equivalence() -> Outcome {
    let mu3 = GeneratorSpec::root_of_unity(3);
    let one = UnitScalar::one(&mu3);
    for k in 1..3 {
        let w = UnitScalar::root_power(&mu3, k);
        let pair = [z3_symmetric(&w).unwrap(), z3_from_params(&one, &one, &w).unwrap()];
        let classes = cohomology_classes(&pair, 3, &cfg()).map_err(|e| e.to_string())?;
        ensure(classes.len() == 1, || format!("omega = zeta_3^{k}: {} classes", classes.len()))?;
    }
    let all = enumerate_cocycles(&z(3), 3, &cfg()).map_err(|e| e.to_string())?;
    let classes = cohomology_classes(&all, 3, &cfg()).map_err(|e| e.to_string())?;
    let sizes: Vec<usize> = classes.iter().map(|c| c.members.len()).collect();
    ensure(sizes == [9, 9, 9], || format!("class sizes {sizes:?}"))?;
    Ok("symmetric form joins (1, 1, omega); 27 = 3 x 9".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, Duration, fn() -> Outcome); 10] = [
        ("Z_2 classification", Duration::from_secs(1), z2_classification),
        ("Z_3 parametrization", Duration::from_secs(10), z3_parametrization),
        ("coboundary criterion", Duration::from_secs(10), coboundary_criterion),
        ("q^xyz family", Duration::from_secs(5), qxyz_family),
        ("twisted kZ_3", Duration::from_secs(1), twisted_z3),
        ("quasimatrix coefficients", Duration::from_secs(5), quasimatrix_coefficients),
        ("M_2 signed product", Duration::from_secs(1), m2_product),
        ("octonions", Duration::from_secs(1), octonions),
        ("identity suites", Duration::from_secs(10), identity_suites),
        ("cohomological equivalence", Duration::from_secs(10), cohomological_equivalence),
    ];
    let mut failed = 0;
    for (k, (name, budget, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(msg) if took > budget => Err(format!("{msg}, but took {took:.2?} > {budget:?}")),
            other => other,
        };
        match outcome {
            Ok(msg) => println!("PASS {:>2} {name}: {msg} ({took:.2?})", k + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {msg} ({took:.2?})", k + 1);
            }
        }
    }
    println!("{} of 10 criteria passed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
