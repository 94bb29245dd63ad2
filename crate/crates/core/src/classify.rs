//! Brute-force classification of `mu_N`-valued 3-cocycles on small groups.
//!
//! Identity-slot values are fixed to 1 and only the `(|G|-1)^3` slots with
//! nonzero arguments are searched, as exponents mod `N`. Candidates are
//! filtered with an integer version of the cocycle identity and every
//! survivor is confirmed with [`check_cocycle`]. Two cocycles are
//! equivalent when a search over normalized cochains finds `F` with
//! `dF = t1 / t2`.

use std::collections::BTreeSet;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::cocycle::{check_cocycle, coboundary, z3_from_params, CochainTable, CocycleTable};
use crate::group::{Cayley, GroupSpec};
use crate::scalar::{GeneratorSpec, UnitScalar};
use crate::{Error, Result};

pub const DEFAULT_SEARCH_LIMIT: u64 = 10_000_000;

/// Environment variable overriding [`DEFAULT_SEARCH_LIMIT`].
pub const SEARCH_LIMIT_VAR: &str = "QUASI_SEARCH_LIMIT";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    /// Largest number of candidates a single search may visit.
    pub limit: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { limit: DEFAULT_SEARCH_LIMIT }
    }
}

impl SearchConfig {
    /// The default, or the value of `QUASI_SEARCH_LIMIT` when set.
    pub fn from_env() -> Result<Self> {
        match std::env::var(SEARCH_LIMIT_VAR) {
            Ok(v) => v
                .trim()
                .parse()
                .map(|limit| SearchConfig { limit })
                .map_err(|_| Error::Format(format!("{SEARCH_LIMIT_VAR}={v:?} is not a nonnegative integer"))),
            Err(_) => Ok(SearchConfig::default()),
        }
    }
}

/// Which slots a search varies and how many candidates that makes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchSpace {
    pub group: GroupSpec,
    pub value_group: u32,
    pub free_slots: usize,
    /// `N^free_slots`, saturating at `u128::MAX`.
    pub cardinality: u128,
}

fn saturating_pow(base: u32, exp: usize) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base as u128);
    }
    acc
}

impl SearchSpace {
    fn new(group: &GroupSpec, value_group: u32, arity: u32, cfg: &SearchConfig) -> Result<Self> {
        if value_group == 0 {
            return Err(Error::Format("value group order must be positive".into()));
        }
        if group.size() > crate::cocycle::MAX_TABLE_GROUP {
            return Err(crate::group::GroupError::TooLarge { size: group.size(), bound: crate::cocycle::MAX_TABLE_GROUP }.into());
        }
        let free_slots = (group.size() - 1).pow(arity);
        let cardinality = saturating_pow(value_group, free_slots);
        if cardinality > cfg.limit as u128 {
            return Err(Error::LimitExceeded { required: cardinality, limit: cfg.limit });
        }
        Ok(SearchSpace { group: group.clone(), value_group, free_slots, cardinality })
    }

    /// Normalized `mu_N`-valued 3-cochains.
    pub fn cocycles(group: &GroupSpec, value_group: u32, cfg: &SearchConfig) -> Result<Self> {
        Self::new(group, value_group, 3, cfg)
    }

    /// Normalized `mu_N`-valued 2-cochains.
    pub fn cochains(group: &GroupSpec, value_group: u32, cfg: &SearchConfig) -> Result<Self> {
        Self::new(group, value_group, 2, cfg)
    }
}

/// Writes candidate `c` as base-`N` digits over `slots`, most significant
/// first, into a dense exponent array.
fn decode(mut c: u64, base: u64, slots: &[usize], dense: &mut [u32]) {
    for &s in slots.iter().rev() {
        dense[s] = (c % base) as u32;
        c /= base;
    }
}

/// The cocycle identity on exponents mod `N`.
fn exps_are_cocycle(e: &[u32], cay: &Cayley, big_n: u32) -> bool {
    let n = cay.size;
    let at = |x: usize, y: usize, z: usize| e[(x * n + y) * n + z];
    for x in 1..n {
        for y in 1..n {
            let xy = cay.add(x, y);
            for z in 1..n {
                let yz = cay.add(y, z);
                let pxyz = at(x, y, z);
                for w in 1..n {
                    let lhs = at(y, z, w) + at(x, yz, w) + pxyz;
                    let rhs = at(x, y, cay.add(z, w)) + at(xy, z, w);
                    if lhs % big_n != rhs % big_n {
                        return false;
                    }
                }
            }
        }
    }
    true
}

fn nonzero_slots(n: usize, arity: u32) -> Vec<usize> {
    (0..n.pow(arity))
        .filter(|&i| {
            let mut k = i;
            (0..arity).all(|_| {
                let nz = k % n != 0;
                k /= n;
                nz
            })
        })
        .collect()
}

fn table_from_exps(group: &GroupSpec, gens: &Arc<GeneratorSpec>, e: &[u32]) -> CocycleTable {
    let values = e.iter().map(|&k| UnitScalar::root_power(gens, k as i64)).collect();
    CocycleTable::from_values(group.clone(), gens.clone(), values)
}

/// Every normalized `mu_N`-valued cocycle on `group`, valued in the generator set
/// `zeta_N`, in lexicographic order of their nonzero-argument exponents.
pub fn enumerate_cocycles(group: &GroupSpec, value_group: u32, cfg: &SearchConfig) -> Result<Vec<CocycleTable>> {
    let space = SearchSpace::cocycles(group, value_group, cfg)?;
    let cay = group.cayley()?;
    let n = cay.size;
    let slots = nonzero_slots(n, 3);
    let base = value_group as u64;
    let survivors: Vec<u64> = (0..space.cardinality as u64)
        .into_par_iter()
        .map_init(
            || vec![0u32; n.pow(3)],
            |dense, c| {
                decode(c, base, &slots, dense);
                exps_are_cocycle(dense, &cay, value_group).then_some(c)
            },
        )
        .flatten()
        .collect();
    let gens = GeneratorSpec::root_of_unity(value_group);
    let mut out = Vec::with_capacity(survivors.len());
    for c in survivors {
        let mut dense = vec![0u32; n.pow(3)];
        decode(c, base, &slots, &mut dense);
        let t = table_from_exps(group, &gens, &dense);
        let report = check_cocycle(&t);
        if !report.passed() {
            return Err(Error::NotCocycle { violations: report.violations.len() });
        }
        out.push(t);
    }
    Ok(out)
}

/// Exponents mod `N` of every value, reading a generator of order `d` as
/// `zeta_N^(N/d)`.
fn exponents_mod(t: &CocycleTable, big_n: u32) -> Result<Vec<u32>> {
    let gens = t.gens();
    let mut scale = Vec::with_capacity(gens.len());
    for (name, &d) in gens.names().iter().zip(gens.orders()) {
        if d == 0 || big_n % d != 0 {
            return Err(Error::MalformedCocycle(format!(
                "generator {name} (order {d}) does not lie in mu_{big_n}"
            )));
        }
        scale.push((big_n / d) as i64);
    }
    Ok(t.values()
        .iter()
        .map(|v| {
            let e: i64 = v.exponents().iter().zip(&scale).map(|(e, s)| e * s).sum();
            e.rem_euclid(big_n as i64) as u32
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoboundarySearch {
    /// `dF` equals the target.
    Found(CochainTable),
    /// All `checked` normalized cochains were tried and none fits.
    NotFound { checked: u128 },
}

impl CoboundarySearch {
    pub fn is_found(&self) -> bool {
        matches!(self, CoboundarySearch::Found(_))
    }
}

/// First candidate (in base-`N` order) whose coboundary has exponents `target`.
fn search_exps(group: &GroupSpec, target: &[u32], big_n: u32, cfg: &SearchConfig) -> Result<Result<Vec<u32>, u128>> {
    let space = SearchSpace::cochains(group, big_n, cfg)?;
    let cay = group.cayley()?;
    let n = cay.size;
    // dF vanishes on identity slots, so a target that does not cannot be hit
    let normalized = (0..n).all(|a| {
        (0..n).all(|b| target[a * n + b] == 0 && target[(a * n) * n + b] == 0 && target[(a * n + b) * n] == 0)
    });
    if !normalized {
        return Ok(Err(space.cardinality));
    }
    let slots = nonzero_slots(n, 2);
    let base = big_n as u64;
    let fits = |f: &[u32]| {
        for x in 1..n {
            for y in 1..n {
                let xy = cay.add(x, y);
                for z in 1..n {
                    let num = f[x * n + y] + f[xy * n + z];
                    let den = f[y * n + z] + f[x * n + cay.add(y, z)];
                    if (num + 2 * big_n - den) % big_n != target[(x * n + y) * n + z] {
                        return false;
                    }
                }
            }
        }
        true
    };
    let hit = (0..space.cardinality as u64).into_par_iter().map_init(|| vec![0u32; n * n], |f, c| {
        decode(c, base, &slots, f);
        fits(f).then_some(c)
    });
    match hit.flatten().find_first(|_| true) {
        Some(c) => {
            let mut f = vec![0u32; n * n];
            decode(c, base, &slots, &mut f);
            Ok(Ok(f))
        }
        None => Ok(Err(space.cardinality)),
    }
}

/// Looks for a normalized `mu_N`-valued cochain `F` with `dF = t`.
///
/// The witness is valued in `zeta_N` and verified before it is returned.
pub fn coboundary_search(t: &CocycleTable, value_group: u32, cfg: &SearchConfig) -> Result<CoboundarySearch> {
    let target = exponents_mod(t, value_group)?;
    match search_exps(t.group(), &target, value_group, cfg)? {
        Ok(f) => {
            let gens = GeneratorSpec::root_of_unity(value_group);
            let n = t.group().size();
            let witness = CochainTable::from_fn(t.group().clone(), &gens, |x, y| {
                let (i, j) = (t.group().index_of(x)?, t.group().index_of(y)?);
                Ok(UnitScalar::root_power(&gens, f[i * n + j] as i64))
            })?;
            if exponents_mod(&coboundary(&witness), value_group)? != target {
                return Err(Error::MalformedCocycle("coboundary witness failed verification".into()));
            }
            Ok(CoboundarySearch::Found(witness))
        }
        Err(checked) => Ok(CoboundarySearch::NotFound { checked }),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologyClass {
    /// The member first in enumeration order.
    pub representative: CocycleTable,
    /// All members, in enumeration order.
    pub members: Vec<CocycleTable>,
}

/// Partitions `tables` into cohomology classes over `mu_N`.
///
/// Tables are compared by searching for a coboundary of their quotient;
/// classes and their members come out in enumeration order whatever the
/// input order.
pub fn cohomology_classes(tables: &[CocycleTable], value_group: u32, cfg: &SearchConfig) -> Result<Vec<CohomologyClass>> {
    let Some(first) = tables.first() else { return Ok(Vec::new()) };
    let group = first.group();
    if let Some(t) = tables.iter().find(|t| t.group() != group) {
        return Err(Error::WrongGroup { expected: group.to_string(), found: t.group().clone() });
    }
    let n = group.size();
    let slots = nonzero_slots(n, 3);
    let mut keyed: Vec<(Vec<u32>, &CocycleTable)> = tables
        .iter()
        .map(|t| {
            let e = exponents_mod(t, value_group)?;
            Ok((slots.iter().map(|&s| e[s]).chain(e.iter().copied()).collect(), t))
        })
        .collect::<Result<_>>()?;
    keyed.sort_by(|a, b| a.0.cmp(&b.0));

    let mut reps: Vec<Vec<u32>> = Vec::new();
    let mut classes: Vec<CohomologyClass> = Vec::new();
    for (key, t) in keyed {
        let e = &key[slots.len()..];
        let mut home = None;
        for (k, r) in reps.iter().enumerate() {
            let quotient: Vec<u32> = e.iter().zip(r).map(|(a, b)| (a + value_group - b) % value_group).collect();
            if search_exps(group, &quotient, value_group, cfg)?.is_ok() {
                home = Some(k);
                break;
            }
        }
        match home {
            Some(k) => classes[k].members.push(t.clone()),
            None => {
                reps.push(e.to_vec());
                classes.push(CohomologyClass { representative: t.clone(), members: vec![t.clone()] });
            }
        }
    }
    Ok(classes)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub group: GroupSpec,
    pub value_group: u32,
    pub cocycles: Vec<CocycleTable>,
    pub classes: Vec<CohomologyClass>,
}

impl Classification {
    pub fn to_json(&self) -> serde_json::Value {
        let classes: Vec<_> = self
            .classes
            .iter()
            .map(|c| {
                serde_json::json!({
                    "representative": c.representative.to_json(),
                    "size": c.members.len(),
                    "members": c.members.iter().map(CocycleTable::to_json).collect::<Vec<_>>(),
                })
            })
            .collect();
        serde_json::json!({
            "group": self.group,
            "value_group": self.value_group,
            "cocycle_count": self.cocycles.len(),
            "classes": classes,
        })
    }
}

impl Serialize for Classification {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

/// [`enumerate_cocycles`] followed by [`cohomology_classes`].
pub fn classify(group: &GroupSpec, value_group: u32, cfg: &SearchConfig) -> Result<Classification> {
    let cocycles = enumerate_cocycles(group, value_group, cfg)?;
    let classes = cohomology_classes(&cocycles, value_group, cfg)?;
    Ok(Classification { group: group.clone(), value_group, cocycles, classes })
}

/// Enumeration against the three-parameter family on `Z_3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompletenessReport {
    pub value_group: u32,
    pub enumerated: usize,
    pub parametrized: usize,
    /// Enumerated cocycles no parameter choice produces.
    pub unexplained: Vec<CocycleTable>,
    /// Parametrized tables the enumeration did not find.
    pub unmatched: Vec<CocycleTable>,
}

impl CompletenessReport {
    pub fn passed(&self) -> bool {
        self.unexplained.is_empty() && self.unmatched.is_empty()
    }
}

/// Compares every `mu_N`-valued cocycle on `Z_3` against
/// `z3_from_params(a, b, w)` for `a, b` in `mu_N` and `w^3 = 1` in `mu_N`.
pub fn verify_z3_completeness(value_group: u32, cfg: &SearchConfig) -> Result<CompletenessReport> {
    if !(1..=6).contains(&value_group) {
        return Err(Error::Format(format!("value group order {value_group} is outside 1..=6")));
    }
    let z3 = GroupSpec::cyclic(3)?;
    let found = enumerate_cocycles(&z3, value_group, cfg)?;
    let gens = GeneratorSpec::root_of_unity(value_group);
    let w = |k: u32| UnitScalar::root_power(&gens, k as i64);
    let mut image: Vec<CocycleTable> = Vec::new();
    for a in 0..value_group {
        for b in 0..value_group {
            for o in (0..value_group).filter(|o| w(*o).pow(3).is_one()) {
                let t = z3_from_params(&w(a), &w(b), &w(o))?;
                if !image.contains(&t) {
                    image.push(t);
                }
            }
        }
    }
    let key = |t: &CocycleTable| t.values().iter().map(|v| v.exponents().to_vec()).collect::<Vec<_>>();
    let found_keys: BTreeSet<_> = found.iter().map(key).collect();
    let image_keys: BTreeSet<_> = image.iter().map(key).collect();
    Ok(CompletenessReport {
        value_group,
        enumerated: found.len(),
        parametrized: image.len(),
        unexplained: found.iter().filter(|t| !image_keys.contains(&key(t))).cloned().collect(),
        unmatched: image.iter().filter(|t| !found_keys.contains(&key(t))).cloned().collect(),
    })
}
