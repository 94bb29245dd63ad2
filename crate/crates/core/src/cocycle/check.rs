use serde::Serialize;

use super::{CochainTable, CocycleTable};
use crate::group::GroupElem;
use crate::scalar::UnitScalar;
use crate::{Error, Result};

/// Which argument of `phi` sits at the identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Slot {
    First,
    Middle,
    Last,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum CocycleViolation {
    /// `phi(x, y, z) != 1` although the argument at `slot` is the identity.
    Normalization { slot: Slot, x: GroupElem, y: GroupElem, z: GroupElem, value: UnitScalar },
    /// `phi(y,z,w) phi(x,y+z,w) phi(x,y,z) != phi(x,y,z+w) phi(x+y,z,w)`.
    Condition { x: GroupElem, y: GroupElem, z: GroupElem, w: GroupElem, lhs: UnitScalar, rhs: UnitScalar },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CocycleReport {
    pub checked_quadruples: usize,
    pub violations: Vec<CocycleViolation>,
}

impl CocycleReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn condition_failures(&self) -> usize {
        self.violations.iter().filter(|v| matches!(v, CocycleViolation::Condition { .. })).count()
    }
}

/// Checks the cocycle identity on all `|G|^4` quadruples and the three
/// identity-slot normalizations, collecting every violation.
///
/// Only the middle-slot normalization is part of the definition; the other
/// two follow from it and the cocycle identity, so they only ever show up
/// alongside condition failures.
pub fn check_cocycle(t: &CocycleTable) -> CocycleReport {
    let g = t.group();
    let cay = g.cayley().expect("table groups are within the enumeration bound");
    let n = cay.size;
    let el = |i: usize| g.element(i);
    let mut violations = Vec::new();

    for a in 0..n {
        for b in 0..n {
            for (slot, (x, y, z)) in [(Slot::First, (0, a, b)), (Slot::Middle, (a, 0, b)), (Slot::Last, (a, b, 0))] {
                let v = t.at(x, y, z);
                if !v.is_one() {
                    violations.push(CocycleViolation::Normalization { slot, x: el(x), y: el(y), z: el(z), value: v.clone() });
                }
            }
        }
    }

    for x in 0..n {
        for y in 0..n {
            let xy = cay.add(x, y);
            for z in 0..n {
                let yz = cay.add(y, z);
                let pxyz = t.at(x, y, z);
                for w in 0..n {
                    let lhs = t.at(y, z, w).mul_unchecked(t.at(x, yz, w)).mul_unchecked(pxyz);
                    let rhs = t.at(x, y, cay.add(z, w)).mul_unchecked(t.at(xy, z, w));
                    if lhs != rhs {
                        violations.push(CocycleViolation::Condition { x: el(x), y: el(y), z: el(z), w: el(w), lhs, rhs });
                    }
                }
            }
        }
    }

    CocycleReport { checked_quadruples: n.pow(4), violations }
}

/// Same question as [`check_cocycle`], stopping at the first failure.
pub fn is_cocycle(t: &CocycleTable) -> bool {
    let cay = t.group().cayley().expect("table groups are within the enumeration bound");
    let n = cay.size;
    for a in 0..n {
        for b in 0..n {
            if !(t.at(0, a, b).is_one() && t.at(a, 0, b).is_one() && t.at(a, b, 0).is_one()) {
                return false;
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                for w in 0..n {
                    let lhs = t.at(y, z, w).mul_unchecked(t.at(x, cay.add(y, z), w)).mul_unchecked(t.at(x, y, z));
                    let rhs = t.at(x, y, cay.add(z, w)).mul_unchecked(t.at(cay.add(x, y), z, w));
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Fails with [`Error::NotCocycle`] unless `t` passes [`check_cocycle`].
pub(crate) fn require_cocycle(t: &CocycleTable) -> Result<()> {
    if is_cocycle(t) {
        Ok(())
    } else {
        Err(Error::NotCocycle { violations: check_cocycle(t).violations.len() })
    }
}

/// `dF(x, y, z) = F(x, y) F(x+y, z) / (F(y, z) F(x, y+z))`.
pub fn coboundary(f: &CochainTable) -> CocycleTable {
    let g = f.group();
    let cay = g.cayley().expect("table groups are within the enumeration bound");
    let n = cay.size;
    let mut values = Vec::with_capacity(n.pow(3));
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let num = f.at(x, y).mul_unchecked(f.at(cay.add(x, y), z));
                let den = f.at(y, z).mul_unchecked(f.at(x, cay.add(y, z)));
                values.push(num.mul_unchecked(&den.inv()));
            }
        }
    }
    CocycleTable::from_values(g.clone(), f.gens().clone(), values)
}
