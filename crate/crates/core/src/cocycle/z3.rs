//! The three-parameter description of cocycles on `Z_3`.
//!
//! Every normalized cocycle on `Z_3` is fixed by `alpha = phi(1,1,1)`,
//! `beta = phi(1,1,2)` and `omega = phi(1,1,1) phi(2,2,2)`, where
//! `omega^3 = 1`; the remaining six nonzero-argument values are monomials
//! in these. Its class in cohomology is trivial exactly when `omega = 1`.

use serde::Serialize;

use super::{CochainTable, CocycleTable};
use crate::group::GroupSpec;
use crate::scalar::{GeneratorSpec, ScalarError, UnitScalar};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Z3Params {
    pub alpha: UnitScalar,
    pub beta: UnitScalar,
    pub omega: UnitScalar,
}

fn same_specs(xs: &[&UnitScalar]) -> Result<()> {
    if xs.windows(2).all(|w| w[0].same_spec(w[1])) {
        Ok(())
    } else {
        Err(ScalarError::SpecMismatch.into())
    }
}

fn z3_from_entries(gens: &std::sync::Arc<GeneratorSpec>, entry: impl Fn(i64, i64, i64) -> UnitScalar) -> Result<CocycleTable> {
    CocycleTable::from_fn(GroupSpec::cyclic(3)?, gens, |x, y, z| {
        let (x, y, z) = (x.components()[0] as i64, y.components()[0] as i64, z.components()[0] as i64);
        Ok(if x == 0 || y == 0 || z == 0 { UnitScalar::one(gens) } else { entry(x, y, z) })
    })
}

/// The normalized `Z_3` table with
/// `phi_111 = a, phi_112 = b, phi_121 = 1/(w a), phi_122 = w/b,
/// phi_211 = a/(b w), phi_212 = a w, phi_221 = b/(w a), phi_222 = w/a`.
pub fn z3_from_params(alpha: &UnitScalar, beta: &UnitScalar, omega: &UnitScalar) -> Result<CocycleTable> {
    same_specs(&[alpha, beta, omega])?;
    if !omega.pow(3).is_one() {
        return Err(Error::OrderMismatch { expected: 3 });
    }
    let (a, b, w) = (alpha, beta, omega);
    let table = [
        a.clone(),
        b.clone(),
        (w * a).inv(),
        w / b,
        a / &(b * w),
        a * w,
        b / &(w * a),
        w / a,
    ];
    z3_from_entries(alpha.gens(), |x, y, z| table[((x - 1) * 4 + (y - 1) * 2 + (z - 1)) as usize].clone())
}

/// The same family through the two-case exponent formula
/// `(a^((-1)^z + x - xz) b^(x - z))^((-1)^y)` times `1` if `x = y = 1`,
/// else `w^z`.
///
/// This equals `z3_from_params(a, b, w^-1)`: the formula and the table
/// label `omega` inversely to each other. Kept as a cross-check.
pub fn z3_closed_form(alpha: &UnitScalar, beta: &UnitScalar, omega: &UnitScalar) -> Result<CocycleTable> {
    same_specs(&[alpha, beta, omega])?;
    if !omega.pow(3).is_one() {
        return Err(Error::OrderMismatch { expected: 3 });
    }
    z3_from_entries(alpha.gens(), |x, y, z| {
        let sign = |k: i64| if k % 2 == 0 { 1 } else { -1 };
        let inner = &alpha.pow(sign(z) + x - x * z) * &beta.pow(x - z);
        let tail = if x == 1 && y == 1 { UnitScalar::one(alpha.gens()) } else { omega.pow(z) };
        &inner.pow(sign(y)) * &tail
    })
}

/// Reads `(alpha, beta, omega)` back from a `Z_3` cocycle and checks that
/// the table is exactly what they generate.
pub fn z3_extract_params(t: &CocycleTable) -> Result<Z3Params> {
    if t.group().orders() != [3] {
        return Err(Error::WrongGroup { expected: "Z_3".into(), found: t.group().clone() });
    }
    let alpha = t.get_cyclic(1, 1, 1)?.clone();
    let beta = t.get_cyclic(1, 1, 2)?.clone();
    let omega = &alpha * t.get_cyclic(2, 2, 2)?;
    if !omega.pow(3).is_one() {
        return Err(Error::MalformedCocycle(format!("phi(1,1,1) phi(2,2,2) = {omega} is not a cube root of unity")));
    }
    let rebuilt = z3_from_params(&alpha, &beta, &omega)?;
    if let Some(((x, y, z, want), got)) = rebuilt.entries().zip(t.values()).find(|((_, _, _, want), got)| want != got) {
        return Err(Error::MalformedCocycle(format!("phi({x},{y},{z}) = {got}, expected {want}")));
    }
    Ok(Z3Params { alpha, beta, omega })
}

/// Whether a `Z_3` cocycle is a coboundary, read off `omega`.
pub fn z3_is_coboundary(t: &CocycleTable) -> Result<bool> {
    Ok(z3_extract_params(t)?.omega.is_one())
}

/// A cochain whose coboundary is `z3_from_params(alpha, beta, 1)`:
/// `F_11 = F_12 = 1, F_21 = alpha, F_22 = beta`.
pub fn z3_coboundary_witness(alpha: &UnitScalar, beta: &UnitScalar) -> Result<CochainTable> {
    same_specs(&[alpha, beta])?;
    let gens = alpha.gens();
    CochainTable::from_fn(GroupSpec::cyclic(3)?, gens, |x, y| {
        Ok(match (x.components()[0], y.components()[0]) {
            (2, 1) => alpha.clone(),
            (2, 2) => beta.clone(),
            _ => UnitScalar::one(gens),
        })
    })
}
