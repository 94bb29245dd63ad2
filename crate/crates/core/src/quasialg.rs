//! Graded monomial quasialgebras.
//!
//! A [`QuasiAlgebra`] has a basis of homogeneous elements and a product
//! that sends each ordered pair of basis elements to zero or to a unit
//! multiple of a single basis element. It carries a 3-cocycle `phi` and is
//! checked against `(ab)c = a(bc) phi(|a|,|b|,|c|)` on every basis triple.

use std::fmt::Write as _;
use std::sync::Arc;

use serde::Serialize;
use serde_json::{json, Value};

use crate::cocycle::{coboundary, octonion_bicharacter, octonion_cocycle, require_cocycle, BicharacterTable, CochainTable, CocycleTable};
use crate::group::{GroupElem, GroupSpec};
use crate::scalar::{GeneratorSpec, ScalarError, UnitScalar};
use crate::{Error, Result};

/// Labels `e0, e1, ..` on cyclic groups, `e110` on groups with all orders
/// at most 10, and `e(3,11)` otherwise.
pub fn degree_label(prefix: &str, x: &GroupElem) -> String {
    let c = x.components();
    if c.len() == 1 {
        format!("{prefix}{}", c[0])
    } else if c.iter().all(|&k| k < 10) {
        format!("{prefix}{}", c.iter().map(u32::to_string).collect::<String>())
    } else {
        format!("{prefix}{x}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedBasis {
    group: GroupSpec,
    labels: Vec<String>,
    degrees: Vec<GroupElem>,
}

impl GradedBasis {
    pub fn new(group: GroupSpec, elems: impl IntoIterator<Item = (String, GroupElem)>) -> Result<Self> {
        let (labels, degrees): (Vec<_>, Vec<_>) = elems.into_iter().unzip();
        if labels.is_empty() {
            return Err(Error::InvalidAlgebra("empty basis".into()));
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::InvalidAlgebra(format!("duplicate basis label {l}")));
            }
        }
        if let Some(d) = degrees.iter().find(|d| !group.contains(d)) {
            return Err(Error::InvalidAlgebra(format!("degree {d} is not an element of {group}")));
        }
        Ok(GradedBasis { group, labels, degrees })
    }

    /// One basis element `e_x` per group element, in enumeration order.
    pub fn group_basis(group: &GroupSpec) -> Result<Self> {
        let elems = group.enumerate()?;
        Self::new(group.clone(), elems.into_iter().map(|x| (degree_label("e", &x), x)))
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn degree(&self, i: usize) -> &GroupElem {
        &self.degrees[i]
    }

    pub fn position(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

/// `coeff * basis[basis]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub basis: usize,
    pub coeff: UnitScalar,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GradingViolation {
    pub left: String,
    pub right: String,
    pub result: String,
    pub expected: GroupElem,
    pub found: GroupElem,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GradingReport {
    pub checked_pairs: usize,
    pub violations: Vec<GradingViolation>,
}

impl GradingReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum AssociatorViolation {
    /// Exactly one of `(ab)c`, `a(bc)` is zero.
    Vanishing { a: String, b: String, c: String, left_zero: bool },
    /// Both are nonzero but land on different basis elements.
    Basis { a: String, b: String, c: String, left: String, right: String },
    /// `(ab)c = lhs e`, `a(bc) phi(|a|,|b|,|c|) = rhs e` with `lhs != rhs`.
    Coefficient { a: String, b: String, c: String, lhs: UnitScalar, rhs: UnitScalar },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AssociativityReport {
    pub checked_triples: usize,
    pub violations: Vec<AssociatorViolation>,
}

impl AssociativityReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CommutatorViolation {
    Vanishing { a: String, b: String, ab_zero: bool },
    Basis { a: String, b: String, ab: String, ba: String },
    /// `ab = lhs e`, `ba R(|a|,|b|) = rhs e` with `lhs != rhs`.
    Coefficient { a: String, b: String, lhs: UnitScalar, rhs: UnitScalar },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CommutativityReport {
    pub checked_pairs: usize,
    pub violations: Vec<CommutatorViolation>,
}

impl CommutativityReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasiAlgebra {
    basis: GradedBasis,
    products: Vec<Option<Term>>,
    phi: CocycleTable,
    unit: Option<usize>,
    bicharacter: Option<BicharacterTable>,
}

impl QuasiAlgebra {
    /// `product(i, j)` gives `b_i b_j`. Fails unless `phi` is a cocycle on
    /// the basis group and every coefficient lives in `phi`'s value group.
    pub fn new(
        basis: GradedBasis,
        phi: CocycleTable,
        mut product: impl FnMut(usize, usize) -> Result<Option<Term>>,
    ) -> Result<Self> {
        if phi.group() != basis.group() {
            return Err(Error::WrongGroup { expected: basis.group().to_string(), found: phi.group().clone() });
        }
        require_cocycle(&phi)?;
        let d = basis.len();
        let mut products = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                products.push(product(i, j)?);
            }
        }
        let a = QuasiAlgebra { basis, products, phi, unit: None, bicharacter: None };
        for t in a.products.iter().flatten() {
            a.check_term(t)?;
        }
        Ok(a)
    }

    fn check_term(&self, t: &Term) -> Result<()> {
        if t.basis >= self.basis.len() {
            return Err(Error::InvalidAlgebra(format!("basis index {} out of range", t.basis)));
        }
        if !GeneratorSpec::same(t.coeff.gens(), self.phi.gens()) {
            return Err(ScalarError::SpecMismatch.into());
        }
        Ok(())
    }

    fn unit_failures(&self, u: usize) -> Option<String> {
        if !self.basis.degree(u).is_zero() {
            return Some(format!("unit {} has nonzero degree", self.basis.label(u)));
        }
        (0..self.dim())
            .find(|&b| {
                let fixes = |p: &Option<Term>| matches!(p, Some(t) if t.basis == b && t.coeff.is_one());
                !(fixes(self.product(u, b)) && fixes(self.product(b, u)))
            })
            .map(|b| format!("{} is not a unit for {}", self.basis.label(u), self.basis.label(b)))
    }

    /// Declares `label` the unit; fails unless `u b = b u = b` for all `b`.
    pub fn with_unit(mut self, label: &str) -> Result<Self> {
        let u = self.basis.position(label).ok_or_else(|| Error::InvalidAlgebra(format!("no basis element {label}")))?;
        if let Some(msg) = self.unit_failures(u) {
            return Err(Error::InvalidAlgebra(msg));
        }
        self.unit = Some(u);
        Ok(self)
    }

    pub fn with_bicharacter(mut self, r: BicharacterTable) -> Result<Self> {
        if r.group() != self.basis.group() {
            return Err(Error::WrongGroup { expected: self.basis.group().to_string(), found: r.group().clone() });
        }
        self.bicharacter = Some(r);
        Ok(self)
    }

    /// A copy with `b_i b_j` replaced; the unit, if any, must survive.
    pub fn with_product(&self, i: usize, j: usize, term: Option<Term>) -> Result<Self> {
        let d = self.dim();
        if i >= d || j >= d {
            return Err(Error::InvalidAlgebra(format!("basis pair ({i}, {j}) out of range")));
        }
        if let Some(t) = &term {
            self.check_term(t)?;
        }
        let mut out = self.clone();
        out.products[i * d + j] = term;
        if let Some(msg) = out.unit.and_then(|u| out.unit_failures(u)) {
            return Err(Error::InvalidAlgebra(msg));
        }
        Ok(out)
    }

    pub fn basis(&self) -> &GradedBasis {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn phi(&self) -> &CocycleTable {
        &self.phi
    }

    pub fn gens(&self) -> &Arc<GeneratorSpec> {
        self.phi.gens()
    }

    pub fn unit(&self) -> Option<&str> {
        self.unit.map(|u| self.basis.label(u))
    }

    pub fn bicharacter(&self) -> Option<&BicharacterTable> {
        self.bicharacter.as_ref()
    }

    pub fn product(&self, i: usize, j: usize) -> &Option<Term> {
        &self.products[i * self.dim() + j]
    }

    /// `b_i b_j` by label.
    pub fn product_of(&self, left: &str, right: &str) -> Result<Option<(&str, &UnitScalar)>> {
        let idx = |l: &str| self.basis.position(l).ok_or_else(|| Error::InvalidAlgebra(format!("no basis element {l}")));
        Ok(self.product(idx(left)?, idx(right)?).as_ref().map(|t| (self.basis.label(t.basis), &t.coeff)))
    }

    /// `(lambda b_i) b_j`.
    fn times(&self, t: &Option<Term>, j: usize) -> Option<Term> {
        let t = t.as_ref()?;
        let p = self.product(t.basis, j).as_ref()?;
        Some(Term { basis: p.basis, coeff: t.coeff.mul_unchecked(&p.coeff) })
    }

    /// `b_i (lambda b_j)`.
    fn times_left(&self, i: usize, t: &Option<Term>) -> Option<Term> {
        let t = t.as_ref()?;
        let p = self.product(i, t.basis).as_ref()?;
        Some(Term { basis: p.basis, coeff: t.coeff.mul_unchecked(&p.coeff) })
    }

    pub fn check_grading(&self) -> GradingReport {
        let g = self.basis.group();
        let d = self.dim();
        let mut violations = Vec::new();
        for i in 0..d {
            for j in 0..d {
                if let Some(t) = self.product(i, j) {
                    let expected = g.add(self.basis.degree(i), self.basis.degree(j)).expect("degrees are valid");
                    let found = self.basis.degree(t.basis).clone();
                    if found != expected {
                        violations.push(GradingViolation {
                            left: self.basis.label(i).into(),
                            right: self.basis.label(j).into(),
                            result: self.basis.label(t.basis).into(),
                            expected,
                            found,
                        });
                    }
                }
            }
        }
        GradingReport { checked_pairs: d * d, violations }
    }

    /// Compares `(ab)c` with `a(bc) phi(|a|,|b|,|c|)` on all basis triples.
    pub fn check_quasiassociativity(&self) -> AssociativityReport {
        let d = self.dim();
        let g = self.basis.group();
        let idx: Vec<usize> = (0..d).map(|i| g.index_of(self.basis.degree(i)).expect("degrees are valid")).collect();
        let l = |i: usize| self.basis.label(i).to_string();
        let mut violations = Vec::new();
        for a in 0..d {
            for b in 0..d {
                let ab = self.product(a, b);
                for c in 0..d {
                    let left = self.times(ab, c);
                    let right = self.times_left(a, self.product(b, c));
                    match (left, right) {
                        (None, None) => {}
                        (Some(_), None) | (None, Some(_)) => {
                            violations.push(AssociatorViolation::Vanishing { a: l(a), b: l(b), c: l(c), left_zero: self.times(ab, c).is_none() })
                        }
                        (Some(x), Some(y)) if x.basis != y.basis => {
                            violations.push(AssociatorViolation::Basis { a: l(a), b: l(b), c: l(c), left: l(x.basis), right: l(y.basis) })
                        }
                        (Some(x), Some(y)) => {
                            let rhs = y.coeff.mul_unchecked(self.phi.at(idx[a], idx[b], idx[c]));
                            if x.coeff != rhs {
                                violations.push(AssociatorViolation::Coefficient { a: l(a), b: l(b), c: l(c), lhs: x.coeff, rhs });
                            }
                        }
                    }
                }
            }
        }
        AssociativityReport { checked_triples: d.pow(3), violations }
    }

    /// Compares `ab` with `ba R(|a|,|b|)` on all basis pairs.
    pub fn check_quasicommutativity(&self, r: &BicharacterTable) -> Result<CommutativityReport> {
        let g = self.basis.group();
        if r.group() != g {
            return Err(Error::WrongGroup { expected: g.to_string(), found: r.group().clone() });
        }
        if !GeneratorSpec::same(r.gens(), self.gens()) {
            return Err(ScalarError::SpecMismatch.into());
        }
        let d = self.dim();
        let l = |i: usize| self.basis.label(i).to_string();
        let mut violations = Vec::new();
        for a in 0..d {
            for b in 0..d {
                match (self.product(a, b), self.product(b, a)) {
                    (None, None) => {}
                    (x, None) | (None, x) if x.is_some() => {
                        violations.push(CommutatorViolation::Vanishing { a: l(a), b: l(b), ab_zero: self.product(a, b).is_none() })
                    }
                    (Some(x), Some(y)) if x.basis != y.basis => {
                        violations.push(CommutatorViolation::Basis { a: l(a), b: l(b), ab: l(x.basis), ba: l(y.basis) })
                    }
                    (Some(x), Some(y)) => {
                        let rr = r.get(self.basis.degree(a), self.basis.degree(b))?;
                        let rhs = y.coeff.mul_unchecked(rr);
                        if x.coeff != rhs {
                            violations.push(CommutatorViolation::Coefficient { a: l(a), b: l(b), lhs: x.coeff.clone(), rhs });
                        }
                    }
                    _ => unreachable!(),
                }
            }
        }
        Ok(CommutativityReport { checked_pairs: d * d, violations })
    }

    pub fn to_json(&self) -> Value {
        let d = self.dim();
        let basis: Vec<Value> =
            (0..d).map(|i| json!({ "label": self.basis.label(i), "degree": self.basis.degree(i) })).collect();
        let mut products = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                let (result, coeff) = match self.product(i, j) {
                    Some(t) => (json!(self.basis.label(t.basis)), json!(t.coeff)),
                    None => (Value::Null, Value::Null),
                };
                products.push(json!({ "left": self.basis.label(i), "right": self.basis.label(j), "result": result, "coeff": coeff }));
            }
        }
        let mut v = json!({ "group": self.basis.group(), "basis": basis, "products": products, "phi": self.phi.to_json() });
        if let Some(u) = self.unit() {
            v["unit"] = json!(u);
        }
        if let Some(r) = &self.bicharacter {
            v["bicharacter"] = r.to_json();
        }
        v
    }
}

impl Serialize for QuasiAlgebra {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

fn render_term(a: &QuasiAlgebra, t: &Option<Term>) -> String {
    let Some(t) = t else { return "0".into() };
    let label = a.basis().label(t.basis);
    let c = t.coeff.to_string();
    match c.as_str() {
        "1" => format!("+{label}"),
        "-1" => format!("-{label}"),
        _ => format!("{c}*{label}"),
    }
}

/// All products `b_i b_j` as an aligned grid, rows indexed by the left
/// factor, in basis order.
pub fn multiplication_table(a: &QuasiAlgebra) -> String {
    let d = a.dim();
    let mut cells = vec![vec![String::new(); d + 1]; d + 1];
    for i in 0..d {
        cells[0][i + 1] = a.basis().label(i).into();
        cells[i + 1][0] = a.basis().label(i).into();
        for j in 0..d {
            cells[i + 1][j + 1] = render_term(a, a.product(i, j));
        }
    }
    let widths: Vec<usize> = (0..=d).map(|j| cells.iter().map(|r| r[j].len()).max().unwrap_or(0)).collect();
    let mut out = String::new();
    for row in &cells {
        let line: Vec<String> = row.iter().zip(&widths).map(|(c, &w)| format!("{c:>w$}")).collect();
        let _ = writeln!(out, "{}", line.join("  ").trim_end());
    }
    out
}

/// `e_x e_y = F(x, y) e_(x+y)` with `phi = dF`.
pub fn twisted_group_algebra(f: &CochainTable) -> Result<QuasiAlgebra> {
    let basis = GradedBasis::group_basis(f.group())?;
    let cay = f.group().cayley()?;
    QuasiAlgebra::new(basis, coboundary(f), |i, j| Ok(Some(Term { basis: cay.add(i, j), coeff: f.at(i, j).clone() })))?
        .with_unit(&degree_label("e", &f.group().zero()))
}

/// The group algebra `kG`, with values taken in `gens`.
pub fn group_algebra(group: &GroupSpec, gens: &Arc<GeneratorSpec>) -> Result<QuasiAlgebra> {
    twisted_group_algebra(&CochainTable::trivial(group.clone(), gens)?)
}

/// Exponent of the octonion product sign,
/// `sum_(i<=j) x_i y_j + y1 x2 x3 + x1 y2 x3 + x1 x2 y3` mod 2.
fn octonion_sign(x: &GroupElem, y: &GroupElem) -> i64 {
    let (x, y) = (x.components(), y.components());
    let mut e = 0;
    for i in 0..3 {
        for j in i..3 {
            e += x[i] * y[j];
        }
    }
    e += y[0] * x[1] * x[2] + x[0] * y[1] * x[2] + x[0] * x[1] * y[2];
    (e % 2) as i64
}

/// The sign cochain of the octonion product on `(Z_2)^3`.
pub fn octonion_twist() -> CochainTable {
    let s = GeneratorSpec::sign();
    CochainTable::from_fn(GroupSpec::power(2, 3).expect("valid"), &s, |x, y| Ok(UnitScalar::root_power(&s, octonion_sign(x, y))))
        .expect("the sign exponent vanishes when an argument is zero")
}

/// The octonions as a `(Z_2)^3`-graded quasialgebra with unit `e000`,
/// cocycle `(-1)^((x * y) . z)` and the octonion bicharacter.
pub fn octonion_algebra() -> QuasiAlgebra {
    let group = GroupSpec::power(2, 3).expect("valid");
    let basis = GradedBasis::group_basis(&group).expect("small");
    let cay = group.cayley().expect("small");
    let s = GeneratorSpec::sign();
    QuasiAlgebra::new(basis, octonion_cocycle(), |i, j| {
        let coeff = UnitScalar::root_power(&s, octonion_sign(&group.element(i), &group.element(j)));
        Ok(Some(Term { basis: cay.add(i, j), coeff }))
    })
    .and_then(|a| a.with_unit("e000"))
    .and_then(|a| a.with_bicharacter(octonion_bicharacter()))
    .expect("octonion data is consistent")
}

/// `kZ_3` twisted by `F(x, y) = q^(y - x)`: `e_x e_y = q^(y-x) e_(x+y)`.
pub fn z3_twisted_algebra(q: &UnitScalar) -> Result<QuasiAlgebra> {
    twisted_group_algebra(&crate::cocycle::z3_twist_cochain(q)?)
}
