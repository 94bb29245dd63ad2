//! Finite abelian groups `Z_{n_1} x ... x Z_{n_m}` in additive notation.
//!
//! Elements are stored fully reduced, so equality is plain component
//! comparison. Enumeration is lexicographic with the first component most
//! significant; [`GroupSpec::index_of`] and [`GroupSpec::element`] convert
//! between elements and their position in that order, which is also the
//! layout every dense table in this crate uses.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest group the exhaustive machinery will enumerate by default.
pub const DEFAULT_GROUP_BOUND: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("a group needs at least one cyclic factor")]
    Empty,
    #[error("cyclic factor {index} has order 0")]
    ZeroOrder { index: usize },
    #[error("group order overflows")]
    Overflow,
    #[error("element {elem} does not belong to {spec}")]
    NotAnElement { elem: GroupElem, spec: GroupSpec },
    #[error("group of size {size} exceeds the enumeration bound {bound}")]
    TooLarge { size: usize, bound: usize },
    #[error("expected {expected}, found {found}")]
    WrongGroup { expected: String, found: GroupSpec },
    #[error("trilinear form shape mismatch: {0}")]
    Shape(String),
}

/// The orders `(n_1, ..., n_m)` of the cyclic factors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "GroupSpecDoc", into = "GroupSpecDoc")]
pub struct GroupSpec {
    orders: Vec<u32>,
    size: usize,
}

#[derive(Serialize, Deserialize)]
struct GroupSpecDoc {
    orders: Vec<u32>,
}

impl TryFrom<GroupSpecDoc> for GroupSpec {
    type Error = GroupError;
    fn try_from(doc: GroupSpecDoc) -> Result<Self, GroupError> {
        GroupSpec::new(doc.orders)
    }
}

impl From<GroupSpec> for GroupSpecDoc {
    fn from(spec: GroupSpec) -> Self {
        GroupSpecDoc { orders: spec.orders }
    }
}

/// An element of a [`GroupSpec`], one residue per cyclic factor.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GroupElem(Vec<u32>);

impl GroupElem {
    pub fn components(&self) -> &[u32] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for GroupElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let [c] = self.0.as_slice() {
            return write!(f, "{c}");
        }
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, n) in self.orders.iter().enumerate() {
            if i > 0 {
                write!(f, "x")?;
            }
            write!(f, "Z_{n}")?;
        }
        Ok(())
    }
}

impl GroupSpec {
    pub fn new(orders: Vec<u32>) -> Result<Self, GroupError> {
        if orders.is_empty() {
            return Err(GroupError::Empty);
        }
        let mut size: usize = 1;
        for (index, &n) in orders.iter().enumerate() {
            if n == 0 {
                return Err(GroupError::ZeroOrder { index });
            }
            size = size.checked_mul(n as usize).ok_or(GroupError::Overflow)?;
        }
        Ok(GroupSpec { orders, size })
    }

    /// The cyclic group `Z_n`.
    pub fn cyclic(n: u32) -> Result<Self, GroupError> {
        Self::new(vec![n])
    }

    /// `(Z_n)^m`.
    pub fn power(n: u32, m: usize) -> Result<Self, GroupError> {
        Self::new(vec![n; m])
    }

    pub fn orders(&self) -> &[u32] {
        &self.orders
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// `Some(n)` when the group is the single cyclic factor `Z_n`.
    pub fn cyclic_order(&self) -> Option<u32> {
        match self.orders.as_slice() {
            [n] => Some(*n),
            _ => None,
        }
    }

    /// `Some(n)` when the group is `(Z_n)^m` for some `m`.
    pub fn uniform_order(&self) -> Option<u32> {
        let first = self.orders[0];
        self.orders.iter().all(|&n| n == first).then_some(first)
    }

    /// Builds an element from arbitrary integers, reducing each modulo its
    /// factor's order.
    pub fn elem(&self, components: &[i64]) -> Result<GroupElem, GroupError> {
        if components.len() != self.rank() {
            return Err(GroupError::NotAnElement {
                elem: GroupElem(components.iter().map(|&c| c as u32).collect()),
                spec: self.clone(),
            });
        }
        Ok(GroupElem(
            components
                .iter()
                .zip(&self.orders)
                .map(|(&c, &n)| c.rem_euclid(n as i64) as u32)
                .collect(),
        ))
    }

    pub fn zero(&self) -> GroupElem {
        GroupElem(vec![0; self.rank()])
    }

    pub fn contains(&self, a: &GroupElem) -> bool {
        a.0.len() == self.rank() && a.0.iter().zip(&self.orders).all(|(&c, &n)| c < n)
    }

    fn check(&self, a: &GroupElem) -> Result<(), GroupError> {
        if self.contains(a) {
            Ok(())
        } else {
            Err(GroupError::NotAnElement { elem: a.clone(), spec: self.clone() })
        }
    }

    pub fn add(&self, a: &GroupElem, b: &GroupElem) -> Result<GroupElem, GroupError> {
        self.check(a)?;
        self.check(b)?;
        Ok(GroupElem(
            a.0.iter()
                .zip(&b.0)
                .zip(&self.orders)
                .map(|((&x, &y), &n)| ((x as u64 + y as u64) % n as u64) as u32)
                .collect(),
        ))
    }

    pub fn neg(&self, a: &GroupElem) -> Result<GroupElem, GroupError> {
        self.check(a)?;
        Ok(GroupElem(
            a.0.iter().zip(&self.orders).map(|(&x, &n)| (n - x) % n).collect(),
        ))
    }

    pub fn sub(&self, a: &GroupElem, b: &GroupElem) -> Result<GroupElem, GroupError> {
        let nb = self.neg(b)?;
        self.add(a, &nb)
    }

    /// `k * a`, with `k` any integer.
    pub fn scale(&self, k: i64, a: &GroupElem) -> Result<GroupElem, GroupError> {
        self.check(a)?;
        Ok(GroupElem(
            a.0.iter()
                .zip(&self.orders)
                .map(|(&x, &n)| (k.rem_euclid(n as i64) as u64 * x as u64 % n as u64) as u32)
                .collect(),
        ))
    }

    /// All elements in lexicographic order, under [`DEFAULT_GROUP_BOUND`].
    pub fn enumerate(&self) -> Result<Vec<GroupElem>, GroupError> {
        self.enumerate_bounded(DEFAULT_GROUP_BOUND)
    }

    pub fn enumerate_bounded(&self, bound: usize) -> Result<Vec<GroupElem>, GroupError> {
        if self.size > bound {
            return Err(GroupError::TooLarge { size: self.size, bound });
        }
        Ok((0..self.size).map(|i| self.element(i)).collect())
    }

    /// Position of `a` in the enumeration order.
    pub fn index_of(&self, a: &GroupElem) -> Result<usize, GroupError> {
        self.check(a)?;
        Ok(a.0.iter().zip(&self.orders).fold(0, |acc, (&c, &n)| acc * n as usize + c as usize))
    }

    /// The element at position `index` of the enumeration order.
    ///
    /// Panics if `index >= self.size()`.
    pub fn element(&self, mut index: usize) -> GroupElem {
        assert!(index < self.size, "element index {index} out of range for {self}");
        let mut comps = vec![0; self.rank()];
        for (slot, &n) in comps.iter_mut().zip(&self.orders).rev() {
            *slot = (index % n as usize) as u32;
            index /= n as usize;
        }
        GroupElem(comps)
    }

    /// Precomputed index arithmetic for the exhaustive loops.
    pub(crate) fn cayley(&self) -> Result<Cayley, GroupError> {
        if self.size > DEFAULT_GROUP_BOUND {
            return Err(GroupError::TooLarge { size: self.size, bound: DEFAULT_GROUP_BOUND });
        }
        Ok(Cayley::new(self))
    }
}

/// Addition and negation tables on element indices.
#[derive(Debug, Clone)]
pub(crate) struct Cayley {
    pub size: usize,
    add: Vec<u32>,
    neg: Vec<u32>,
}

impl Cayley {
    fn new(spec: &GroupSpec) -> Self {
        let size = spec.size();
        let elems: Vec<GroupElem> = (0..size).map(|i| spec.element(i)).collect();
        let idx = |e: &GroupElem| spec.index_of(e).expect("reduced element") as u32;
        let mut add = Vec::with_capacity(size * size);
        for a in &elems {
            for b in &elems {
                add.push(idx(&spec.add(a, b).expect("same spec")));
            }
        }
        let neg = elems.iter().map(|a| idx(&spec.neg(a).expect("same spec"))).collect();
        Cayley { size, add, neg }
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.size + b] as usize
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }
}

/// `(x * y) . z` over `Z_2`, for `x, y, z` in `(Z_2)^3`.
pub fn cross_dot(spec: &GroupSpec, x: &GroupElem, y: &GroupElem, z: &GroupElem) -> Result<u32, GroupError> {
    if spec.orders() != [2, 2, 2] {
        return Err(GroupError::WrongGroup { expected: "Z_2xZ_2xZ_2".into(), found: spec.clone() });
    }
    for a in [x, y, z] {
        spec.check(a)?;
    }
    let (x, y, z) = (x.components(), y.components(), z.components());
    let cross = [
        x[1] * y[2] + x[2] * y[1],
        x[2] * y[0] + x[0] * y[2],
        x[0] * y[1] + x[1] * y[0],
    ];
    Ok(cross.iter().zip(z).map(|(c, z)| c * z).sum::<u32>() % 2)
}

/// A `Z_n`-trilinear form on `(Z_n)^m`, given by its coefficient tensor
/// `T[a][b][c]`: `(x, y, z) = sum T_abc x_a y_b z_c mod n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrilinearForm {
    modulus: u32,
    rank: usize,
    coeffs: Vec<u32>,
}

impl TrilinearForm {
    /// `coeffs` is the tensor flattened with `c` fastest.
    pub fn new(modulus: u32, rank: usize, coeffs: Vec<u32>) -> Result<Self, GroupError> {
        if modulus == 0 || rank == 0 {
            return Err(GroupError::Shape("modulus and rank must be positive".into()));
        }
        if coeffs.len() != rank * rank * rank {
            return Err(GroupError::Shape(format!(
                "expected {} coefficients for rank {rank}, found {}",
                rank * rank * rank,
                coeffs.len()
            )));
        }
        let coeffs = coeffs.into_iter().map(|c| c % modulus).collect();
        Ok(TrilinearForm { modulus, rank, coeffs })
    }

    pub fn zero(modulus: u32, rank: usize) -> Result<Self, GroupError> {
        Self::new(modulus, rank, vec![0; rank * rank * rank])
    }

    /// The determinant form on `(Z_2)^3`, which is `(x * y) . z`.
    pub fn cross_product() -> Self {
        let mut coeffs = vec![0; 27];
        for (a, b, c) in [(0, 1, 2), (1, 2, 0), (2, 0, 1), (0, 2, 1), (2, 1, 0), (1, 0, 2)] {
            coeffs[a * 9 + b * 3 + c] = 1;
        }
        TrilinearForm { modulus: 2, rank: 3, coeffs }
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    /// The group `(Z_n)^m` this form lives on.
    pub fn group(&self) -> GroupSpec {
        GroupSpec::power(self.modulus, self.rank).expect("positive modulus and rank")
    }

    pub fn evaluate(&self, spec: &GroupSpec, x: &GroupElem, y: &GroupElem, z: &GroupElem) -> Result<u32, GroupError> {
        if spec.rank() != self.rank || spec.uniform_order() != Some(self.modulus) {
            return Err(GroupError::Shape(format!(
                "form of rank {} mod {} evaluated on {spec}",
                self.rank, self.modulus
            )));
        }
        for a in [x, y, z] {
            spec.check(a)?;
        }
        let (x, y, z) = (x.components(), y.components(), z.components());
        let n = self.modulus as u64;
        let m = self.rank;
        let mut acc = 0u64;
        for a in 0..m {
            for b in 0..m {
                for c in 0..m {
                    let t = self.coeffs[a * m * m + b * m + c] as u64;
                    acc = (acc + t * x[a] as u64 % n * y[b] as u64 % n * z[c] as u64) % n;
                }
            }
        }
        Ok(acc as u32)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(spec: &GroupSpec, c: &[i64]) -> GroupElem {
        spec.elem(c).unwrap()
    }

    #[test]
    fn add_examples() {
        let z3 = GroupSpec::cyclic(3).unwrap();
        assert_eq!(z3.add(&e(&z3, &[1]), &e(&z3, &[2])).unwrap(), z3.zero());
        assert_eq!(z3.add(&e(&z3, &[2]), &e(&z3, &[2])).unwrap(), e(&z3, &[1]));
        let v = GroupSpec::power(2, 3).unwrap();
        let a = e(&v, &[1, 0, 0]);
        assert_eq!(v.add(&a, &a).unwrap(), v.zero());
    }

    #[test]
    fn add_rejects_foreign_elements() {
        let z3 = GroupSpec::cyclic(3).unwrap();
        let v = GroupSpec::power(2, 2).unwrap();
        let a = e(&v, &[1, 1]);
        assert!(matches!(z3.add(&a, &z3.zero()), Err(GroupError::NotAnElement { .. })));
    }

    #[test]
    fn neg_examples() {
        let z3 = GroupSpec::cyclic(3).unwrap();
        assert_eq!(z3.neg(&e(&z3, &[1])).unwrap(), e(&z3, &[2]));
        let z5 = GroupSpec::cyclic(5).unwrap();
        assert_eq!(z5.neg(&z5.zero()).unwrap(), z5.zero());
        let v = GroupSpec::power(2, 3).unwrap();
        let a = e(&v, &[1, 1, 0]);
        assert_eq!(v.neg(&a).unwrap(), a);
    }

    #[test]
    fn enumerate_is_lexicographic() {
        let z2 = GroupSpec::cyclic(2).unwrap();
        assert_eq!(z2.enumerate().unwrap(), vec![e(&z2, &[0]), e(&z2, &[1])]);
        let v = GroupSpec::power(2, 2).unwrap();
        let got: Vec<Vec<u32>> = v.enumerate().unwrap().iter().map(|g| g.components().to_vec()).collect();
        assert_eq!(got, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
        let z3 = GroupSpec::cyclic(3).unwrap();
        assert_eq!(z3.enumerate().unwrap().len(), 3);
        for (i, g) in v.enumerate().unwrap().iter().enumerate() {
            assert_eq!(v.index_of(g).unwrap(), i);
        }
    }

    #[test]
    fn enumerate_guard() {
        let big = GroupSpec::cyclic(5000).unwrap();
        assert_eq!(big.enumerate(), Err(GroupError::TooLarge { size: 5000, bound: 4096 }));
        assert_eq!(GroupSpec::new(vec![]), Err(GroupError::Empty));
        assert_eq!(GroupSpec::new(vec![2, 0]), Err(GroupError::ZeroOrder { index: 1 }));
        assert_eq!(GroupSpec::new(vec![u32::MAX; 4]), Err(GroupError::Overflow));
    }

    #[test]
    fn cross_dot_examples() {
        let v = GroupSpec::power(2, 3).unwrap();
        let (x, y, z) = (e(&v, &[1, 0, 0]), e(&v, &[0, 1, 0]), e(&v, &[0, 0, 1]));
        assert_eq!(cross_dot(&v, &x, &y, &z).unwrap(), 1);
        assert_eq!(cross_dot(&v, &x, &y, &x).unwrap(), 0);
        for a in v.enumerate().unwrap() {
            for c in v.enumerate().unwrap() {
                assert_eq!(cross_dot(&v, &a, &a, &c).unwrap(), 0);
            }
        }
        let z3 = GroupSpec::cyclic(3).unwrap();
        assert!(cross_dot(&z3, &z3.zero(), &z3.zero(), &z3.zero()).is_err());
    }

    #[test]
    fn trilinear_examples() {
        let z7 = GroupSpec::cyclic(7).unwrap();
        let zero = TrilinearForm::zero(7, 1).unwrap();
        let prod = TrilinearForm::new(7, 1, vec![1]).unwrap();
        for x in 0..7 {
            for y in 0..7 {
                for z in 0..7 {
                    let (a, b, c) = (e(&z7, &[x]), e(&z7, &[y]), e(&z7, &[z]));
                    assert_eq!(zero.evaluate(&z7, &a, &b, &c).unwrap(), 0);
                    assert_eq!(prod.evaluate(&z7, &a, &b, &c).unwrap(), (x * y * z % 7) as u32);
                }
            }
        }
        let v = GroupSpec::power(2, 3).unwrap();
        let form = TrilinearForm::cross_product();
        let elems = v.enumerate().unwrap();
        let mut count = 0;
        for x in &elems {
            for y in &elems {
                for z in &elems {
                    assert_eq!(form.evaluate(&v, x, y, z).unwrap(), cross_dot(&v, x, y, z).unwrap());
                    count += 1;
                }
            }
        }
        assert_eq!(count, 512);
        assert!(TrilinearForm::new(2, 2, vec![0; 7]).is_err());
        assert!(form.evaluate(&z7, &z7.zero(), &z7.zero(), &z7.zero()).is_err());
    }

    #[test]
    fn trilinear_is_additive_in_each_slot() {
        let cases = [
            (GroupSpec::cyclic(3).unwrap(), TrilinearForm::new(3, 1, vec![2]).unwrap()),
            (GroupSpec::power(2, 3).unwrap(), TrilinearForm::cross_product()),
        ];
        for (spec, form) in cases {
            let n = form.modulus();
            let elems = spec.enumerate().unwrap();
            let f = |x: &GroupElem, y: &GroupElem, z: &GroupElem| form.evaluate(&spec, x, y, z).unwrap();
            for a in &elems {
                for b in &elems {
                    let s = spec.add(a, b).unwrap();
                    for y in &elems {
                        for z in &elems {
                            assert_eq!(f(&s, y, z), (f(a, y, z) + f(b, y, z)) % n);
                            assert_eq!(f(y, &s, z), (f(y, a, z) + f(y, b, z)) % n);
                            assert_eq!(f(y, z, &s), (f(y, z, a) + f(y, z, b)) % n);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn group_laws_exhaustive() {
        for orders in [vec![1], vec![2], vec![3], vec![4], vec![2, 2], vec![2, 3], vec![2, 2, 2], vec![4, 4], vec![16]] {
            let spec = GroupSpec::new(orders).unwrap();
            let elems = spec.enumerate().unwrap();
            for a in &elems {
                assert_eq!(spec.neg(&spec.neg(a).unwrap()).unwrap(), *a);
                assert_eq!(spec.add(a, &spec.neg(a).unwrap()).unwrap(), spec.zero());
                for b in &elems {
                    assert_eq!(spec.add(a, b).unwrap(), spec.add(b, a).unwrap());
                    for c in &elems {
                        let l = spec.add(&spec.add(a, b).unwrap(), c).unwrap();
                        let r = spec.add(a, &spec.add(b, c).unwrap()).unwrap();
                        assert_eq!(l, r);
                    }
                }
            }
            let cayley = spec.cayley().unwrap();
            for i in 0..spec.size() {
                for j in 0..spec.size() {
                    let s = spec.add(&spec.element(i), &spec.element(j)).unwrap();
                    assert_eq!(cayley.add(i, j), spec.index_of(&s).unwrap());
                }
            }
        }
    }

    #[test]
    fn json_shapes() {
        let spec = GroupSpec::new(vec![2, 3]).unwrap();
        assert_eq!(serde_json::to_string(&spec).unwrap(), r#"{"orders":[2,3]}"#);
        assert_eq!(serde_json::to_string(&spec.elem(&[1, 5]).unwrap()).unwrap(), "[1,2]");
        let back: GroupSpec = serde_json::from_str(r#"{"orders":[2,3]}"#).unwrap();
        assert_eq!(back, spec);
        assert!(serde_json::from_str::<GroupSpec>(r#"{"orders":[]}"#).is_err());
    }
}
