//! Identities every cocycle must satisfy, evaluated pointwise.
//!
//! Each check is a consequence of the cocycle condition plus torsion in the
//! group, so a verified table must pass all that apply. The suite is a
//! second, independent witness for [`check_cocycle`](super::check_cocycle)
//! and documents the low-order relations the `Z_3` parametrisation rests on.

use serde::Serialize;

use super::CocycleTable;
use crate::group::{Cayley, GroupElem};
use crate::scalar::UnitScalar;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub statement: &'static str,
    /// `false` when the group has the wrong shape for this identity.
    pub applicable: bool,
    /// Elements `x` at which the identity fails.
    pub failures: Vec<GroupElem>,
}

impl IdentityCheck {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Row triviality on `Z_3`: the table is trivial exactly when some row
/// `phi(x, -, -)` with `x != 0` is identically 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RowTriviality {
    pub trivial_rows: Vec<GroupElem>,
    pub table_trivial: bool,
}

impl RowTriviality {
    pub fn consistent(&self) -> bool {
        self.trivial_rows.is_empty() != self.table_trivial
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub checks: Vec<IdentityCheck>,
    /// `phi(x, x, x)` for every element of order two.
    pub order_two_values: Vec<(GroupElem, UnitScalar)>,
    pub row_triviality: Option<RowTriviality>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(IdentityCheck::passed) && self.row_triviality.as_ref().map_or(true, RowTriviality::consistent)
    }

    pub fn get(&self, name: &str) -> Option<&IdentityCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

struct Suite<'a> {
    t: &'a CocycleTable,
    cay: Cayley,
    checks: Vec<IdentityCheck>,
}

impl Suite<'_> {
    fn phi(&self, x: usize, y: usize, z: usize) -> &UnitScalar {
        self.t.at(x, y, z)
    }

    fn mul(&self, k: i64, x: usize) -> usize {
        let g = self.t.group();
        g.index_of(&g.scale(k, &g.element(x)).expect("valid element")).expect("reduced")
    }

    fn run(
        &mut self,
        name: &'static str,
        statement: &'static str,
        applicable: bool,
        domain: &[usize],
        holds: impl Fn(&Self, usize) -> bool,
    ) {
        let failures = if applicable {
            domain.iter().copied().filter(|&x| !holds(self, x)).map(|x| self.t.group().element(x)).collect()
        } else {
            Vec::new()
        };
        self.checks.push(IdentityCheck { name, statement, applicable, failures });
    }
}

/// Evaluates every applicable identity at every relevant `x`.
///
/// * at each element of order two, `w = phi(x,x,x)` has `w^2 = 1` and
///   `phi(x,x,y) = w phi(x,x,x+y)` for all `y` (on `Z_n`, `n` even, the only
///   such `x` is `n/2`);
/// * for all `x`, the two relations from `nx = 0` written with `-x`;
/// * on `Z_3`, the five relations among `phi(x,..)` and `phi(2x,..)` and the
///   row-triviality criterion.
pub fn identity_suite(t: &CocycleTable) -> IdentityReport {
    let g = t.group();
    let cay = g.cayley().expect("table groups are within the enumeration bound");
    let n = cay.size;
    let all: Vec<usize> = (0..n).collect();
    let order_two: Vec<usize> = (1..n).filter(|&x| cay.add(x, x) == 0).collect();
    let is_z3 = g.orders() == [3];
    let mut s = Suite { t, cay, checks: Vec::new() };

    s.run("order_two_cube", "phi(x,x,x)^2 = 1 when 2x = 0", !order_two.is_empty(), &order_two, |s, x| {
        s.phi(x, x, x).pow(2).is_one()
    });
    s.run("order_two_shift", "phi(x,x,y) = phi(x,x,x) phi(x,x,x+y) when 2x = 0", !order_two.is_empty(), &order_two, |s, x| {
        let w = s.phi(x, x, x);
        (0..n).all(|y| *s.phi(x, x, y) == w.mul_unchecked(s.phi(x, x, s.cay.add(x, y))))
    });
    s.run("inverse_sandwich", "phi(-x,x,-x) phi(x,-x,x) = 1", true, &all, |s, x| {
        let m = s.cay.neg(x);
        s.phi(m, x, m).mul_unchecked(s.phi(x, m, x)).is_one()
    });
    s.run("inverse_double", "phi(-x,x,x) phi(x,x,-x) = 1 / phi(-x,2x,-x)", true, &all, |s, x| {
        let (m, d) = (s.cay.neg(x), s.cay.add(x, x));
        s.phi(m, x, x).mul_unchecked(s.phi(x, x, m)).mul_unchecked(s.phi(m, d, m)).is_one()
    });
    s.run("z3_sandwich", "phi(2x,x,2x) phi(x,2x,x) = 1", is_z3, &all, |s, x| {
        let d = s.mul(2, x);
        s.phi(d, x, d).mul_unchecked(s.phi(x, d, x)).is_one()
    });
    s.run("z3_double", "phi(2x,x,x) phi(x,x,2x) = 1 / phi(2x,2x,2x)", is_z3, &all, |s, x| {
        let d = s.mul(2, x);
        s.phi(d, x, x).mul_unchecked(s.phi(x, x, d)).mul_unchecked(s.phi(d, d, d)).is_one()
    });
    s.run("z3_cube_root", "(phi(x,x,x) phi(2x,2x,2x))^3 = 1", is_z3, &all, |s, x| {
        let d = s.mul(2, x);
        s.phi(x, x, x).mul_unchecked(s.phi(d, d, d)).pow(3).is_one()
    });
    s.run("z3_swap", "phi(2x,2x,x) phi(2x,x,2x) = phi(x,x,2x)", is_z3, &all, |s, x| {
        let d = s.mul(2, x);
        s.phi(d, d, x).mul_unchecked(s.phi(d, x, d)) == *s.phi(x, x, d)
    });
    s.run("z3_ratio", "phi(x,x,x) phi(x,x,2x) = phi(2x,x,2x) / phi(x,2x,2x)", is_z3, &all, |s, x| {
        let d = s.mul(2, x);
        s.phi(x, x, x).mul_unchecked(s.phi(x, x, d)).mul_unchecked(s.phi(x, d, d)) == *s.phi(d, x, d)
    });

    let row_triviality = is_z3.then(|| RowTriviality {
        trivial_rows: (1..n)
            .filter(|&x| (0..n).all(|y| (0..n).all(|z| t.at(x, y, z).is_one())))
            .map(|x| g.element(x))
            .collect(),
        table_trivial: t.is_trivial(),
    });

    IdentityReport {
        checks: s.checks,
        order_two_values: order_two.iter().map(|&x| (g.element(x), t.at(x, x, x).clone())).collect(),
        row_triviality,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cocycle::{octonion_cocycle, qxyz_cocycle, z3_from_params};
    use crate::group::GroupSpec;
    use crate::scalar::GeneratorSpec;

    #[test]
    fn z2_sign_cocycle_has_minus_one_at_the_half_element() {
        let t = qxyz_cocycle(2, &UnitScalar::root_power(&GeneratorSpec::sign(), 1)).unwrap();
        let r = identity_suite(&t);
        assert!(r.passed());
        assert_eq!(r.order_two_values.len(), 1);
        assert_eq!(r.order_two_values[0].1.to_string(), "-1");
        assert!(r.get("order_two_cube").unwrap().applicable);
        assert!(!r.get("z3_swap").unwrap().applicable);
        assert!(r.row_triviality.is_none());
    }

    #[test]
    fn trivial_z3_table_is_detected_by_rows() {
        let t = CocycleTable::trivial(GroupSpec::cyclic(3).unwrap(), &GeneratorSpec::root_of_unity(3)).unwrap();
        let r = identity_suite(&t);
        assert!(r.passed());
        let rows = r.row_triviality.clone().unwrap();
        assert!(rows.table_trivial && rows.trivial_rows.len() == 2);
        assert!(!r.get("order_two_cube").unwrap().applicable);
    }

    #[test]
    fn every_mu3_table_passes() {
        let w = |k| UnitScalar::root_power(&GeneratorSpec::root_of_unity(3), k);
        for a in 0..3 {
            for b in 0..3 {
                for o in 0..3 {
                    let r = identity_suite(&z3_from_params(&w(a), &w(b), &w(o)).unwrap());
                    assert!(r.passed(), "{a} {b} {o}: {r:?}");
                    assert!(r.checks.iter().all(|c| c.applicable || c.name.starts_with("order_two")));
                }
            }
        }
    }

    #[test]
    fn octonion_cocycle_at_all_seven_involutions() {
        let r = identity_suite(&octonion_cocycle());
        assert!(r.passed());
        assert_eq!(r.order_two_values.len(), 7);
        assert!(r.order_two_values.iter().all(|(_, v)| v.is_one()));
    }

    #[test]
    fn corrupted_table_fails_somewhere() {
        let w = |k| UnitScalar::root_power(&GeneratorSpec::root_of_unity(3), k);
        let t = z3_from_params(&w(1), &w(1), &w(1)).unwrap();
        let g = t.group().clone();
        let e = |k| g.elem(&[k]).unwrap();
        let bad = t.with_value(&e(2), &e(1), &e(2), w(0)).unwrap();
        let r = identity_suite(&bad);
        assert!(!r.passed());
        assert!(!r.get("z3_sandwich").unwrap().passed());
    }
}
