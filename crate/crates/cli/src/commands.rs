use std::fmt::Write as _;
use std::path::Path;
use std::sync::Arc;

use quasialg::classify::{self, SearchConfig};
use quasialg::cocycle::{
    check_cocycle, identity_suite, octonion_cocycle, qxyz_cocycle, trilinear_cocycle, z3_extract_params,
    z3_from_params, z3_noncoboundary, z3_symmetric, CocycleViolation,
};
use quasialg::group::TrilinearForm;
use quasialg::quasialg::{multiplication_table, octonion_algebra, z3_twisted_algebra};
use quasialg::quasimatrix::{qmat_mul, CycloMatrix, QuasimatrixAlgebra};
use quasialg::scalar::{Cyclotomic, Embedding, GeneratorSpec};
use quasialg::{CocycleTable, GroupSpec};
use serde_json::json;

use crate::{input, pretty, ClassifyArgs, CliError, FamilyArgs, FamilyName, Outcome, PhiName, QmatmulArgs, Status, TableArgs, TableName};

fn status(ok: bool) -> Status {
    if ok {
        Status::Ok
    } else {
        Status::Violations
    }
}

fn describe(v: &CocycleViolation) -> String {
    match v {
        CocycleViolation::Normalization { slot, x, y, z, value } => {
            format!("normalization ({slot:?} slot) at ({x}, {y}, {z}): value {value}").to_lowercase()
        }
        CocycleViolation::Condition { x, y, z, w, lhs, rhs } => {
            format!("condition at ({x}, {y}, {z}, {w}): {lhs} != {rhs}")
        }
    }
}

pub fn verify(path: &Path) -> Result<Outcome, CliError> {
    let t = input::cocycle_file(path)?;
    let report = check_cocycle(&t);
    let ids = identity_suite(&t);
    let ok = report.passed() && ids.passed();
    let failed_ids = ids.checks.iter().filter(|c| !c.passed()).count();
    let summary = if ok {
        format!(
            "ok: cocycle on {}, {} quadruples checked, {} identities hold",
            t.group(),
            report.checked_quadruples,
            ids.checks.iter().filter(|c| c.applicable).count()
        )
    } else {
        format!(
            "violations: {} cocycle violations and {failed_ids} failed identities on {}",
            report.violations.len(),
            t.group()
        )
    };
    let mut text = format!("{summary}\n");
    for v in &report.violations {
        writeln!(text, "  {}", describe(v)).unwrap();
    }
    for c in &ids.checks {
        let verdict = if !c.applicable {
            "n/a".to_string()
        } else if c.failures.is_empty() {
            "ok".to_string()
        } else {
            let at: Vec<String> = c.failures.iter().map(|g| g.to_string()).collect();
            format!("FAIL at {}", at.join(" "))
        };
        writeln!(text, "  {:<16} {verdict:<6} {}", c.name, c.statement).unwrap();
    }
    if let Some(rows) = &ids.row_triviality {
        let verdict = if rows.consistent() { "ok" } else { "FAIL" };
        writeln!(text, "  {:<16} {verdict:<6} a trivial row forces a trivial table", "z3_rows").unwrap();
    }
    let payload = json!({"group": t.group(), "cocycle": report, "identities": ids});
    Ok(Outcome { status: status(ok), summary, payload, text })
}

pub fn classify(a: &ClassifyArgs) -> Result<Outcome, CliError> {
    let group = input::group(&a.group)?;
    let cfg = SearchConfig::from_env()?;
    let c = classify::classify(&group, a.values, &cfg)?;
    let summary = format!(
        "{group} over mu_{}: {} cocycles in {} classes",
        a.values,
        c.cocycles.len(),
        c.classes.len()
    );
    let mut text = format!("{summary}\n");
    for (i, class) in c.classes.iter().enumerate() {
        let rep = &class.representative;
        let desc = if rep.is_trivial() {
            "trivial".to_string()
        } else if let (Some(3), Ok(p)) = (group.cyclic_order(), z3_extract_params(rep)) {
            format!("(alpha, beta, omega) = ({}, {}, {})", p.alpha, p.beta, p.omega)
        } else {
            "nontrivial".to_string()
        };
        let size = class.members.len();
        let noun = if size == 1 { "cocycle" } else { "cocycles" };
        writeln!(text, "  class {}: {size} {noun}, representative {desc}", i + 1).unwrap();
    }
    Ok(Outcome { status: Status::Ok, summary, payload: c.to_json(), text })
}

fn reject_unused(name: &str, given: &[(&str, bool)], allowed: &[&str]) -> Result<(), CliError> {
    match given.iter().find(|(flag, present)| *present && !allowed.contains(flag)) {
        Some((flag, _)) => Err(CliError::usage(format!("--{flag} does not apply to {name}"))),
        None => Ok(()),
    }
}

fn family_table(a: &FamilyArgs) -> Result<(&'static str, CocycleTable), CliError> {
    let given = [
        ("group", a.group.is_some()),
        ("n", a.n.is_some()),
        ("rank", a.rank.is_some()),
        ("tensor", a.tensor.is_some()),
        ("q", a.q.is_some()),
        ("alpha", a.alpha.is_some()),
        ("beta", a.beta.is_some()),
        ("omega", a.omega.is_some()),
    ];
    let omega = || input::unit(a.omega.as_deref().unwrap_or("zeta_3"));
    Ok(match a.name {
        FamilyName::Trivial => {
            reject_unused("trivial", &given, &["group"])?;
            let group = input::group(a.group.as_deref().ok_or_else(|| CliError::usage("trivial needs --group"))?)?;
            let none: Vec<(String, u32)> = Vec::new();
            let gens = Arc::new(GeneratorSpec::new(none)?);
            ("trivial", CocycleTable::trivial(group, &gens)?)
        }
        FamilyName::Qxyz => {
            reject_unused("qxyz", &given, &["n", "q"])?;
            let n = a.n.ok_or_else(|| CliError::usage("qxyz needs --n"))?;
            let q = input::unit(a.q.as_deref().unwrap_or(&format!("zeta_{n}")))?;
            ("qxyz", qxyz_cocycle(n, &q)?)
        }
        FamilyName::Noncoboundary => {
            reject_unused("noncoboundary", &given, &["omega"])?;
            ("noncoboundary", z3_noncoboundary(&omega()?)?)
        }
        FamilyName::Symmetric => {
            reject_unused("symmetric", &given, &["omega"])?;
            ("symmetric", z3_symmetric(&omega()?)?)
        }
        FamilyName::Octonion => {
            reject_unused("octonion", &given, &[])?;
            ("octonion", octonion_cocycle())
        }
        FamilyName::Trilinear => {
            reject_unused("trilinear", &given, &["n", "rank", "tensor", "q"])?;
            let n = a.n.unwrap_or(2);
            let rank = a.rank.unwrap_or(3);
            let form = match &a.tensor {
                Some(t) => {
                    let coeffs = t
                        .split(',')
                        .map(|c| c.trim().parse::<u32>())
                        .collect::<Result<Vec<_>, _>>()
                        .map_err(|_| CliError::usage(format!("cannot read --tensor {t:?}")))?;
                    TrilinearForm::new(n, rank, coeffs)?
                }
                None if n == 2 && rank == 3 => TrilinearForm::cross_product(),
                None => return Err(CliError::usage("trilinear needs --tensor unless n = 2 and rank = 3")),
            };
            let q = input::unit(a.q.as_deref().unwrap_or(&format!("zeta_{n}")))?;
            ("trilinear", trilinear_cocycle(&form, &q)?)
        }
        FamilyName::Z3params => {
            reject_unused("z3params", &given, &["alpha", "beta", "omega"])?;
            let tokens = [a.alpha.as_deref(), a.beta.as_deref(), a.omega.as_deref()].map(|t| t.unwrap_or("1"));
            let v = input::units(&tokens)?;
            ("z3params", z3_from_params(&v[0], &v[1], &v[2])?)
        }
    })
}

pub fn family(a: &FamilyArgs) -> Result<Outcome, CliError> {
    let (name, t) = family_table(a)?;
    let table = t.to_json();
    let summary = format!("{name} cocycle on {}", t.group());
    let text = match &a.out {
        Some(path) => {
            std::fs::write(path, pretty(&table) + "\n")
                .map_err(|e| CliError::usage(format!("cannot write {}: {e}", path.display())))?;
            format!("wrote {summary} to {}\n", path.display())
        }
        None => pretty(&table) + "\n",
    };
    Ok(Outcome { status: Status::Ok, summary, payload: table, text })
}

fn quasimatrix_phi(a: &TableArgs, n: u32) -> Result<CocycleTable, CliError> {
    if let Some(path) = &a.phi_file {
        return input::cocycle_file(path);
    }
    let omega = || input::unit(a.omega.as_deref().unwrap_or("zeta_3"));
    Ok(match a.phi.unwrap_or(PhiName::Qxyz) {
        PhiName::Trivial => {
            let none: Vec<(String, u32)> = Vec::new();
            CocycleTable::trivial(GroupSpec::cyclic(n)?, &Arc::new(GeneratorSpec::new(none)?))?
        }
        PhiName::Qxyz => qxyz_cocycle(n, &input::unit(a.q.as_deref().unwrap_or(&format!("zeta_{n}")))?)?,
        PhiName::Noncoboundary => z3_noncoboundary(&omega()?)?,
        PhiName::Symmetric => z3_symmetric(&omega()?)?,
    })
}

pub fn table(a: &TableArgs) -> Result<Outcome, CliError> {
    let quasimatrix_only = [("n", a.n.is_some()), ("phi", a.phi.is_some()), ("phi-file", a.phi_file.is_some())];
    match a.name {
        TableName::Octonions => {
            reject_unused("octonions", &quasimatrix_only, &[])?;
            if a.q.is_some() || a.omega.is_some() {
                return Err(CliError::usage("octonions take no parameters"));
            }
            let o = octonion_algebra();
            let assoc = o.check_quasiassociativity();
            let comm = o.check_quasicommutativity(o.bicharacter().expect("octonions carry R"))?;
            let ok = assoc.passed() && comm.passed();
            let summary = format!(
                "octonions over {}: {} triples quasiassociative, {} pairs quasicommutative",
                o.basis().group(),
                assoc.checked_triples - assoc.violations.len(),
                comm.checked_pairs - comm.violations.len()
            );
            let text = format!("{}\n{summary}\n", multiplication_table(&o));
            let payload = json!({
                "algebra": o.to_json(),
                "quasiassociativity": assoc,
                "quasicommutativity": comm,
            });
            Ok(Outcome { status: status(ok), summary, payload, text })
        }
        TableName::TwistedZ3 => {
            reject_unused("twisted-z3", &quasimatrix_only, &[])?;
            if a.omega.is_some() {
                return Err(CliError::usage("--omega does not apply to twisted-z3"));
            }
            let q = input::unit(a.q.as_deref().unwrap_or("zeta_3"))?;
            let alg = z3_twisted_algebra(&q)?;
            let assoc = alg.check_quasiassociativity();
            let summary = format!(
                "twisted group algebra of Z_3 with q = {q}: {} of {} triples quasiassociative",
                assoc.checked_triples - assoc.violations.len(),
                assoc.checked_triples
            );
            let text = format!("{}\n{summary}\n", multiplication_table(&alg));
            let payload = json!({"algebra": alg.to_json(), "quasiassociativity": assoc});
            Ok(Outcome { status: status(assoc.passed()), summary, payload, text })
        }
        TableName::Quasimatrix => {
            let n = match (a.n, &a.phi_file) {
                (Some(n), _) => n,
                (None, Some(_)) => 0,
                (None, None) => return Err(CliError::usage("quasimatrix needs --n or --phi-file")),
            };
            let phi = quasimatrix_phi(a, n)?;
            let m = QuasimatrixAlgebra::new(&phi)?;
            if a.n.is_some_and(|n| n != m.n()) {
                return Err(CliError::usage(format!("--n {n} but the cocycle lives on Z_{}", m.n())));
            }
            let n = m.n();
            let law = m.check_law();
            let unit = m.unit_diagnostic();
            let mut text = format!("{}\nstructure constants c(i,j,l):\n", multiplication_table(m.algebra()));
            let mut constants = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    for l in 0..n {
                        let c = m.structure_constant(i, j, l);
                        writeln!(text, "  c({i},{j},{l}) = {c}").unwrap();
                        constants.push(json!({"i": i, "j": j, "l": l, "value": c}));
                    }
                }
            }
            let summary = format!(
                "M_{n} over {}: {} of {} triples satisfy the product law, unit {}",
                phi.group(),
                law.checked_triples - law.violations.len(),
                law.checked_triples,
                if unit.two_sided { "two-sided" } else { "not two-sided" }
            );
            writeln!(text, "{summary}").unwrap();
            let payload = json!({
                "algebra": m.algebra().to_json(),
                "structure_constants": constants,
                "law": law,
                "unit": unit,
            });
            Ok(Outcome { status: status(law.passed()), summary, payload, text })
        }
    }
}

fn render(m: &CycloMatrix) -> String {
    let cells: Vec<Vec<String>> = m.rows().iter().map(|r| r.iter().map(Cyclotomic::to_string).collect()).collect();
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
    cells
        .iter()
        .map(|r| r.iter().map(|c| format!("{c:>width$}")).collect::<Vec<_>>().join("  ") + "\n")
        .collect()
}

pub fn qmatmul(a: &QmatmulArgs) -> Result<Outcome, CliError> {
    let phi = input::cocycle_file(&a.phi)?;
    let (va, vb) = (input::json_file(&a.a)?, input::json_file(&a.b)?);
    let pairs = a
        .embed
        .iter()
        .map(|e| {
            e.split_once('=')
                .map(|(k, v)| (k.trim().to_string(), v.trim().to_string()))
                .ok_or_else(|| CliError::usage(format!("--embed {e:?} is not name=value")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let declared = [&va, &vb].into_iter().filter_map(input::declared_root_order).fold(1, input::lcm);
    let n = match a.field {
        Some(n) => n,
        None if pairs.is_empty() => input::lcm(Embedding::automatic(phi.gens())?.root_order(), declared),
        None => pairs.iter().try_fold(declared, |acc, (_, v)| Ok::<_, CliError>(input::lcm(acc, input::root_order_of(v)?)))?,
    };
    let emb = if pairs.is_empty() {
        Embedding::canonical(phi.gens(), n)?
    } else {
        pairs.iter().try_fold(Embedding::new(n)?, |emb, (k, v)| emb.assign(k.clone(), Cyclotomic::parse_root(v, n)?))?
    };
    let ma = input::matrix(&va, n)?;
    let mb = input::matrix(&vb, n)?;
    let p = qmat_mul(&ma, &mb, &phi, &emb)?;
    let summary = format!("product of two {0}x{0} matrices over Q(zeta_{n}) twisted by a cocycle on {1}", p.n(), phi.group());
    let text = format!("{summary}\n{}", render(&p));
    let payload = serde_json::to_value(&p).expect("matrices serialize");
    Ok(Outcome { status: Status::Ok, summary, payload, text })
}
