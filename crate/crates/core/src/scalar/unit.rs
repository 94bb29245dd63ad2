use std::fmt;
use std::ops::{Div, Mul};
use std::sync::Arc;

use num_integer::Integer;
use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize, Serializer};

use super::ScalarError;

/// Name of the order-2 generator used for signs.
pub const SIGN: &str = "zeta_2";

/// The value group: named generators, each of finite order or free.
///
/// A generator of order `d > 0` satisfies `g^d = 1`; order `0` means the
/// generator is free (a nonzero field element with no relation).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<GeneratorDoc>", into = "Vec<GeneratorDoc>")]
pub struct GeneratorSpec {
    names: Vec<String>,
    orders: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
pub(crate) struct GeneratorDoc {
    name: String,
    order: u32,
}

impl TryFrom<Vec<GeneratorDoc>> for GeneratorSpec {
    type Error = ScalarError;
    fn try_from(docs: Vec<GeneratorDoc>) -> Result<Self, ScalarError> {
        GeneratorSpec::new(docs.into_iter().map(|d| (d.name, d.order)))
    }
}

impl From<GeneratorSpec> for Vec<GeneratorDoc> {
    fn from(spec: GeneratorSpec) -> Self {
        spec.names
            .into_iter()
            .zip(spec.orders)
            .map(|(name, order)| GeneratorDoc { name, order })
            .collect()
    }
}

impl GeneratorSpec {
    pub fn new<S: Into<String>>(gens: impl IntoIterator<Item = (S, u32)>) -> Result<Self, ScalarError> {
        let mut names = Vec::new();
        let mut orders = Vec::new();
        for (name, order) in gens {
            let name = name.into();
            if name.is_empty() {
                return Err(ScalarError::Generator("empty generator name".into()));
            }
            if names.contains(&name) {
                return Err(ScalarError::Generator(format!("duplicate generator {name}")));
            }
            names.push(name);
            orders.push(order);
        }
        Ok(GeneratorSpec { names, orders })
    }

    /// A single primitive `n`-th root of unity named `zeta_n`.
    pub fn root_of_unity(n: u32) -> Arc<Self> {
        assert!(n > 0, "root of unity of order 0");
        Arc::new(GeneratorSpec { names: vec![format!("zeta_{n}")], orders: vec![n] })
    }

    /// `{-1}` as the generator `zeta_2`.
    pub fn sign() -> Arc<Self> {
        Self::root_of_unity(2)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn orders(&self) -> &[u32] {
        &self.orders
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub(crate) fn same(a: &Arc<Self>, b: &Arc<Self>) -> bool {
        Arc::ptr_eq(a, b) || a == b
    }
}

/// An exact invertible scalar: a monomial in the generators of a
/// [`GeneratorSpec`], with torsion exponents kept in `[0, d)`.
///
/// The arithmetic operators panic when the operands come from different
/// generator specs; the `try_*` methods report that as an error instead.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UnitScalar {
    gens: Arc<GeneratorSpec>,
    exps: Vec<i64>,
}

fn reduce(order: u32, e: i64) -> i64 {
    if order == 0 {
        e
    } else {
        e.rem_euclid(order as i64)
    }
}

impl UnitScalar {
    pub fn one(gens: &Arc<GeneratorSpec>) -> Self {
        UnitScalar { gens: gens.clone(), exps: vec![0; gens.len()] }
    }

    pub fn generator(gens: &Arc<GeneratorSpec>, name: &str) -> Result<Self, ScalarError> {
        let i = gens.position(name).ok_or_else(|| ScalarError::UnknownGenerator(name.into()))?;
        let mut exps = vec![0; gens.len()];
        exps[i] = reduce(gens.orders[i], 1);
        Ok(UnitScalar { gens: gens.clone(), exps })
    }

    pub fn from_exponents(gens: &Arc<GeneratorSpec>, exps: Vec<i64>) -> Result<Self, ScalarError> {
        if exps.len() != gens.len() {
            return Err(ScalarError::Generator(format!(
                "expected {} exponents, found {}",
                gens.len(),
                exps.len()
            )));
        }
        let exps = exps.into_iter().zip(&gens.orders).map(|(e, &d)| reduce(d, e)).collect();
        Ok(UnitScalar { gens: gens.clone(), exps })
    }

    /// `zeta_n^k` over [`GeneratorSpec::root_of_unity`]`(n)`.
    pub fn root_power(gens: &Arc<GeneratorSpec>, k: i64) -> Self {
        assert_eq!(gens.len(), 1, "root_power needs a single-generator spec");
        UnitScalar { gens: gens.clone(), exps: vec![reduce(gens.orders[0], k)] }
    }

    pub fn gens(&self) -> &Arc<GeneratorSpec> {
        &self.gens
    }

    pub fn exponents(&self) -> &[i64] {
        &self.exps
    }

    pub fn exponent(&self, name: &str) -> Option<i64> {
        self.gens.position(name).map(|i| self.exps[i])
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn same_spec(&self, other: &Self) -> bool {
        GeneratorSpec::same(&self.gens, &other.gens)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, ScalarError> {
        if !self.same_spec(other) {
            return Err(ScalarError::SpecMismatch);
        }
        Ok(self.mul_unchecked(other))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self, ScalarError> {
        self.try_mul(&other.inv())
    }

    pub(crate) fn mul_unchecked(&self, other: &Self) -> Self {
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .zip(&self.gens.orders)
            .map(|((&a, &b), &d)| reduce(d, a + b))
            .collect();
        UnitScalar { gens: self.gens.clone(), exps }
    }

    pub fn inv(&self) -> Self {
        self.pow(-1)
    }

    pub fn pow(&self, k: i64) -> Self {
        let exps = self.exps.iter().zip(&self.gens.orders).map(|(&e, &d)| reduce(d, e * k)).collect();
        UnitScalar { gens: self.gens.clone(), exps }
    }

    /// Multiplicative order, or `None` when a free generator appears.
    pub fn order(&self) -> Option<u64> {
        let mut acc = 1u64;
        for (&e, &d) in self.exps.iter().zip(&self.gens.orders) {
            if e == 0 {
                continue;
            }
            if d == 0 {
                return None;
            }
            let d = d as u64;
            acc = acc.lcm(&(d / d.gcd(&(e as u64))));
        }
        Some(acc)
    }

    /// Re-expresses the scalar over a larger spec that contains every
    /// generator of this one with the same order.
    pub fn lift(&self, target: &Arc<GeneratorSpec>) -> Result<Self, ScalarError> {
        let mut exps = vec![0; target.len()];
        for (i, name) in self.gens.names.iter().enumerate() {
            let j = target.position(name).ok_or_else(|| ScalarError::UnknownGenerator(name.clone()))?;
            if target.orders[j] != self.gens.orders[i] {
                return Err(ScalarError::Generator(format!("generator {name} changes order")));
            }
            exps[j] = self.exps[i];
        }
        Ok(UnitScalar { gens: target.clone(), exps })
    }
}

impl Mul for &UnitScalar {
    type Output = UnitScalar;
    fn mul(self, rhs: &UnitScalar) -> UnitScalar {
        self.try_mul(rhs).expect("unit scalars from different generator specs")
    }
}

impl Mul for UnitScalar {
    type Output = UnitScalar;
    fn mul(self, rhs: UnitScalar) -> UnitScalar {
        &self * &rhs
    }
}

impl Div for &UnitScalar {
    type Output = UnitScalar;
    fn div(self, rhs: &UnitScalar) -> UnitScalar {
        self.try_div(rhs).expect("unit scalars from different generator specs")
    }
}

impl Div for UnitScalar {
    type Output = UnitScalar;
    fn div(self, rhs: UnitScalar) -> UnitScalar {
        &self / &rhs
    }
}

/// Renders as a `*`-separated product; the sign generator shows as a
/// leading `-`.
impl fmt::Display for UnitScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut negative = false;
        let mut factors = Vec::new();
        for ((name, &d), &e) in self.gens.names.iter().zip(&self.gens.orders).zip(&self.exps) {
            if e == 0 {
                continue;
            }
            if name == SIGN && d == 2 {
                negative = true;
            } else if e == 1 {
                factors.push(name.clone());
            } else {
                factors.push(format!("{name}^{e}"));
            }
        }
        match (negative, factors.is_empty()) {
            (false, true) => write!(f, "1"),
            (true, true) => write!(f, "-1"),
            (neg, false) => write!(f, "{}{}", if neg { "-" } else { "" }, factors.join("*")),
        }
    }
}

/// Serialized as `{generator name: exponent}`, nonzero exponents only.
impl Serialize for UnitScalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let nonzero: Vec<_> = self.gens.names.iter().zip(&self.exps).filter(|(_, &e)| e != 0).collect();
        let mut map = serializer.serialize_map(Some(nonzero.len()))?;
        for (name, e) in nonzero {
            map.serialize_entry(name, e)?;
        }
        map.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mixed() -> Arc<GeneratorSpec> {
        Arc::new(GeneratorSpec::new([("alpha", 0), ("beta", 0), ("omega", 3)]).unwrap())
    }

    #[test]
    fn torsion_and_free_products() {
        let g = mixed();
        let a = UnitScalar::generator(&g, "alpha").unwrap();
        let b = UnitScalar::generator(&g, "beta").unwrap();
        let w = UnitScalar::generator(&g, "omega").unwrap();
        assert!((&(&w * &w) * &w).is_one());
        assert!((&a * &a.inv()).is_one());
        let lhs = &(&a * &w) * &(&b * &w);
        assert_eq!(lhs.exponents(), &[1, 1, 2]);
    }

    #[test]
    fn inverses() {
        let g = mixed();
        let w = UnitScalar::generator(&g, "omega").unwrap();
        assert_eq!(w.inv(), w.pow(2));
        assert!(UnitScalar::one(&g).inv().is_one());
        let x = UnitScalar::from_exponents(&g, vec![1, -2, 0]).unwrap();
        assert_eq!(x.inv().exponents(), &[-1, 2, 0]);
    }

    #[test]
    fn spec_mismatch_is_an_error() {
        let w3 = UnitScalar::generator(&GeneratorSpec::root_of_unity(3), "zeta_3").unwrap();
        let w6 = UnitScalar::generator(&GeneratorSpec::root_of_unity(6), "zeta_6").unwrap();
        assert_eq!(w3.try_mul(&w6), Err(ScalarError::SpecMismatch));
        assert!(UnitScalar::generator(&mixed(), "gamma").is_err());
        assert!(GeneratorSpec::new([("a", 2), ("a", 3)]).is_err());
    }

    #[test]
    fn structurally_equal_specs_interoperate() {
        let a = UnitScalar::root_power(&GeneratorSpec::root_of_unity(3), 1);
        let b = UnitScalar::root_power(&GeneratorSpec::root_of_unity(3), 2);
        assert!((&a * &b).is_one());
    }

    #[test]
    fn order_and_display() {
        let g = mixed();
        let w = UnitScalar::generator(&g, "omega").unwrap();
        assert_eq!(w.order(), Some(3));
        assert_eq!(UnitScalar::one(&g).order(), Some(1));
        assert_eq!(UnitScalar::generator(&g, "alpha").unwrap().order(), None);
        assert_eq!(UnitScalar::from_exponents(&g, vec![1, -2, 2]).unwrap().to_string(), "alpha*beta^-2*omega^2");
        let s = GeneratorSpec::sign();
        assert_eq!(UnitScalar::root_power(&s, 1).to_string(), "-1");
        assert_eq!(UnitScalar::one(&s).to_string(), "1");
        assert_eq!(serde_json::to_string(&w).unwrap(), r#"{"omega":1}"#);
        assert_eq!(serde_json::to_string(&UnitScalar::one(&g)).unwrap(), "{}");
    }
}
