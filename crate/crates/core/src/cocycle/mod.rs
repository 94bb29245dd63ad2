//! Dense 3-cocycle and 2-cochain tables on a finite abelian group.
//!
//! Tables cover every argument tuple, identity slots included, laid out in
//! the group's lexicographic element order. Nothing is normalized behind
//! the caller's back: a cocycle table may hold any values and
//! [`check_cocycle`] reports what is wrong with it. Cochains and
//! bicharacters are rejected at construction unless normalized.

mod check;
mod families;
mod identities;
mod json;
mod z3;

use std::sync::Arc;

use crate::group::{GroupElem, GroupError, GroupSpec};
use crate::scalar::{GeneratorSpec, ScalarError, UnitScalar};
use crate::{Error, Result};

pub(crate) use check::require_cocycle;
pub use check::{check_cocycle, coboundary, is_cocycle, CocycleReport, CocycleViolation, Slot};
pub use families::{
    z3_twist_cochain, octonion_bicharacter, octonion_cocycle, qxyz_cocycle, trilinear_cocycle, z3_noncoboundary,
    z3_symmetric,
};
pub use identities::{identity_suite, IdentityCheck, IdentityReport, RowTriviality};
pub use z3::{z3_closed_form, z3_coboundary_witness, z3_extract_params, z3_from_params, z3_is_coboundary, Z3Params};

/// Largest group order for which dense tables are built.
pub const MAX_TABLE_GROUP: usize = 64;

fn check_group(group: &GroupSpec) -> Result<()> {
    if group.size() > MAX_TABLE_GROUP {
        return Err(GroupError::TooLarge { size: group.size(), bound: MAX_TABLE_GROUP }.into());
    }
    Ok(())
}

fn check_value(gens: &Arc<GeneratorSpec>, v: UnitScalar) -> Result<UnitScalar> {
    if GeneratorSpec::same(gens, v.gens()) {
        Ok(v)
    } else {
        Err(ScalarError::SpecMismatch.into())
    }
}

/// A function `G x G x G -> k*`, stored densely.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CocycleTable {
    group: GroupSpec,
    gens: Arc<GeneratorSpec>,
    values: Vec<UnitScalar>,
}

impl CocycleTable {
    pub fn from_fn(
        group: GroupSpec,
        gens: &Arc<GeneratorSpec>,
        mut f: impl FnMut(&GroupElem, &GroupElem, &GroupElem) -> Result<UnitScalar>,
    ) -> Result<Self> {
        check_group(&group)?;
        let elems: Vec<GroupElem> = (0..group.size()).map(|i| group.element(i)).collect();
        let mut values = Vec::with_capacity(elems.len().pow(3));
        for x in &elems {
            for y in &elems {
                for z in &elems {
                    values.push(check_value(gens, f(x, y, z)?)?);
                }
            }
        }
        Ok(CocycleTable { group, gens: gens.clone(), values })
    }

    pub fn trivial(group: GroupSpec, gens: &Arc<GeneratorSpec>) -> Result<Self> {
        Self::from_fn(group, gens, |_, _, _| Ok(UnitScalar::one(gens)))
    }

    pub(crate) fn from_values(group: GroupSpec, gens: Arc<GeneratorSpec>, values: Vec<UnitScalar>) -> Self {
        debug_assert_eq!(values.len(), group.size().pow(3));
        CocycleTable { group, gens, values }
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    pub fn gens(&self) -> &Arc<GeneratorSpec> {
        &self.gens
    }

    pub fn values(&self) -> &[UnitScalar] {
        &self.values
    }

    /// Value at element indices (see [`GroupSpec::index_of`]).
    pub fn at(&self, x: usize, y: usize, z: usize) -> &UnitScalar {
        let n = self.group.size();
        &self.values[(x * n + y) * n + z]
    }

    pub fn get(&self, x: &GroupElem, y: &GroupElem, z: &GroupElem) -> Result<&UnitScalar> {
        let g = &self.group;
        Ok(self.at(g.index_of(x)?, g.index_of(y)?, g.index_of(z)?))
    }

    /// Shorthand for cyclic groups: `phi(x, y, z)` with integer arguments.
    pub fn get_cyclic(&self, x: i64, y: i64, z: i64) -> Result<&UnitScalar> {
        let g = &self.group;
        self.get(&g.elem(&[x])?, &g.elem(&[y])?, &g.elem(&[z])?)
    }

    /// A copy with one entry replaced.
    pub fn with_value(&self, x: &GroupElem, y: &GroupElem, z: &GroupElem, value: UnitScalar) -> Result<Self> {
        let value = check_value(&self.gens, value)?;
        let g = &self.group;
        let n = g.size();
        let i = (g.index_of(x)? * n + g.index_of(y)?) * n + g.index_of(z)?;
        let mut out = self.clone();
        out.values[i] = value;
        Ok(out)
    }

    /// Entries with their arguments, in lexicographic `(x, y, z)` order.
    pub fn entries(&self) -> impl Iterator<Item = (GroupElem, GroupElem, GroupElem, &UnitScalar)> + '_ {
        let n = self.group.size();
        self.values.iter().enumerate().map(move |(i, v)| {
            (self.group.element(i / (n * n)), self.group.element(i / n % n), self.group.element(i % n), v)
        })
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(UnitScalar::is_one)
    }

    fn compatible(&self, other: &Self) -> Result<()> {
        if self.group != other.group {
            return Err(Error::WrongGroup { expected: self.group.to_string(), found: other.group.clone() });
        }
        if !GeneratorSpec::same(&self.gens, &other.gens) {
            return Err(ScalarError::SpecMismatch.into());
        }
        Ok(())
    }

    /// Pointwise product.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a.mul_unchecked(b)).collect();
        Ok(CocycleTable { group: self.group.clone(), gens: self.gens.clone(), values })
    }

    /// Pointwise inverse.
    pub fn inv(&self) -> Self {
        CocycleTable {
            group: self.group.clone(),
            gens: self.gens.clone(),
            values: self.values.iter().map(UnitScalar::inv).collect(),
        }
    }

    /// `self / other`, the table whose triviality in cohomology decides
    /// whether the two are equivalent.
    pub fn quotient(&self, other: &Self) -> Result<Self> {
        self.try_mul(&other.inv())
    }

    /// Re-expresses every value over a larger generator spec.
    pub fn lift(&self, gens: &Arc<GeneratorSpec>) -> Result<Self> {
        let values = self.values.iter().map(|v| v.lift(gens)).collect::<Result<_, _>>()?;
        Ok(CocycleTable { group: self.group.clone(), gens: gens.clone(), values })
    }
}

/// Shared storage for the two-argument tables.
#[derive(Debug, Clone, PartialEq, Eq)]
struct PairTable {
    group: GroupSpec,
    gens: Arc<GeneratorSpec>,
    values: Vec<UnitScalar>,
}

impl PairTable {
    fn build(
        group: GroupSpec,
        gens: &Arc<GeneratorSpec>,
        mut f: impl FnMut(&GroupElem, &GroupElem) -> Result<UnitScalar>,
        what: &str,
    ) -> Result<Self> {
        check_group(&group)?;
        let elems: Vec<GroupElem> = (0..group.size()).map(|i| group.element(i)).collect();
        let mut values = Vec::with_capacity(elems.len().pow(2));
        for x in &elems {
            for y in &elems {
                let v = check_value(gens, f(x, y)?)?;
                if (x.is_zero() || y.is_zero()) && !v.is_one() {
                    return Err(Error::NotNormalized(format!("{what}({x}, {y}) = {v}")));
                }
                values.push(v);
            }
        }
        Ok(PairTable { group, gens: gens.clone(), values })
    }

    fn at(&self, x: usize, y: usize) -> &UnitScalar {
        &self.values[x * self.group.size() + y]
    }

    fn get(&self, x: &GroupElem, y: &GroupElem) -> Result<&UnitScalar> {
        Ok(self.at(self.group.index_of(x)?, self.group.index_of(y)?))
    }
}

macro_rules! pair_table {
    ($(#[$doc:meta])* $name:ident, $label:literal) => {
        $(#[$doc])*
        #[derive(Debug, Clone, PartialEq, Eq)]
        pub struct $name(PairTable);

        impl $name {
            /// Fails unless the value is 1 whenever an argument is the identity.
            pub fn from_fn(
                group: GroupSpec,
                gens: &Arc<GeneratorSpec>,
                f: impl FnMut(&GroupElem, &GroupElem) -> Result<UnitScalar>,
            ) -> Result<Self> {
                PairTable::build(group, gens, f, $label).map($name)
            }

            pub fn trivial(group: GroupSpec, gens: &Arc<GeneratorSpec>) -> Result<Self> {
                Self::from_fn(group, gens, |_, _| Ok(UnitScalar::one(gens)))
            }

            pub fn group(&self) -> &GroupSpec {
                &self.0.group
            }

            pub fn gens(&self) -> &Arc<GeneratorSpec> {
                &self.0.gens
            }

            pub fn values(&self) -> &[UnitScalar] {
                &self.0.values
            }

            pub fn at(&self, x: usize, y: usize) -> &UnitScalar {
                self.0.at(x, y)
            }

            pub fn get(&self, x: &GroupElem, y: &GroupElem) -> Result<&UnitScalar> {
                self.0.get(x, y)
            }
        }
    };
}

pair_table!(
    /// A normalized 2-cochain `F: G x G -> k*`.
    CochainTable,
    "F"
);

pair_table!(
    /// The braiding scalars `R: G x G -> k*` of a quasicommutative algebra.
    BicharacterTable,
    "R"
);

impl CochainTable {
    /// Pointwise product.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.group() != other.group() {
            return Err(Error::WrongGroup { expected: self.group().to_string(), found: other.group().clone() });
        }
        let mut values = Vec::with_capacity(self.values().len());
        for (a, b) in self.values().iter().zip(other.values()) {
            values.push(a.try_mul(b)?);
        }
        Ok(CochainTable(PairTable { group: self.group().clone(), gens: self.gens().clone(), values }))
    }
}
