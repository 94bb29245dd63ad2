//! Named cocycle families.

use super::{BicharacterTable, CochainTable, CocycleTable};
use crate::group::{cross_dot, GroupSpec, TrilinearForm};
use crate::scalar::{GeneratorSpec, UnitScalar};
use crate::{Error, Result};

fn require_order(q: &UnitScalar, n: u32) -> Result<()> {
    if q.pow(n as i64).is_one() {
        Ok(())
    } else {
        Err(Error::OrderMismatch { expected: n })
    }
}

/// `phi(x, y, z) = q^(xyz)` on `Z_n`; needs `q^n = 1`.
pub fn qxyz_cocycle(n: u32, q: &UnitScalar) -> Result<CocycleTable> {
    require_order(q, n)?;
    let group = GroupSpec::cyclic(n)?;
    CocycleTable::from_fn(group, q.gens(), |x, y, z| {
        let e = x.components()[0] as u64 * y.components()[0] as u64 % n as u64 * z.components()[0] as u64 % n as u64;
        Ok(q.pow(e as i64))
    })
}

/// `phi(x, y, z) = q^(x, y, z)` for a trilinear form on `(Z_n)^m`.
pub fn trilinear_cocycle(form: &TrilinearForm, q: &UnitScalar) -> Result<CocycleTable> {
    require_order(q, form.modulus())?;
    let group = form.group();
    CocycleTable::from_fn(group.clone(), q.gens(), |x, y, z| Ok(q.pow(form.evaluate(&group, x, y, z)? as i64)))
}

/// `(-1)^((x * y) . z)` on `(Z_2)^3`, valued in the sign generator.
pub fn octonion_cocycle() -> CocycleTable {
    let group = GroupSpec::power(2, 3).expect("valid");
    let s = GeneratorSpec::sign();
    CocycleTable::from_fn(group.clone(), &s, |x, y, z| Ok(UnitScalar::root_power(&s, cross_dot(&group, x, y, z)? as i64)))
        .expect("(Z_2)^3 is small")
}

/// `R(x, y) = 1` if `x = 0`, `y = 0` or `x = y`, and `-1` otherwise.
pub fn octonion_bicharacter() -> BicharacterTable {
    let group = GroupSpec::power(2, 3).expect("valid");
    let s = GeneratorSpec::sign();
    BicharacterTable::from_fn(group, &s, |x, y| {
        let plus = x.is_zero() || y.is_zero() || x == y;
        Ok(UnitScalar::root_power(&s, if plus { 0 } else { 1 }))
    })
    .expect("normalized")
}

fn z3_nonzero(
    omega: &UnitScalar,
    f: impl Fn(i64, i64, i64) -> UnitScalar,
) -> Result<CocycleTable> {
    require_order(omega, 3)?;
    let gens = omega.gens();
    CocycleTable::from_fn(GroupSpec::cyclic(3)?, gens, |x, y, z| {
        let (x, y, z) = (x.components()[0] as i64, y.components()[0] as i64, z.components()[0] as i64);
        Ok(if x == 0 || y == 0 || z == 0 { UnitScalar::one(gens) } else { f(x, y, z) })
    })
}

/// The representative `phi(x, y, z) = 1` if `x = y = 1`, else `omega^z`
/// (nonzero arguments), on `Z_3`; a coboundary only for `omega = 1`.
pub fn z3_noncoboundary(omega: &UnitScalar) -> Result<CocycleTable> {
    z3_nonzero(omega, |x, y, z| if x == 1 && y == 1 { UnitScalar::one(omega.gens()) } else { omega.pow(z) })
}

/// The symmetric representative `omega^(xz - xy - yz)` (nonzero arguments)
/// on `Z_3`.
pub fn z3_symmetric(omega: &UnitScalar) -> Result<CocycleTable> {
    z3_nonzero(omega, |x, y, z| omega.pow(x * z - x * y - y * z))
}

/// `F(x, y) = q^(y - x)` for nonzero `x, y` on `Z_3`, with `q^3 = 1`.
pub fn z3_twist_cochain(q: &UnitScalar) -> Result<CochainTable> {
    require_order(q, 3)?;
    let gens = q.gens();
    CochainTable::from_fn(GroupSpec::cyclic(3)?, gens, |x, y| {
        Ok(if x.is_zero() || y.is_zero() {
            UnitScalar::one(gens)
        } else {
            q.pow(y.components()[0] as i64 - x.components()[0] as i64)
        })
    })
}
