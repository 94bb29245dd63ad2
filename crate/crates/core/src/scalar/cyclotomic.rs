use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::{GeneratorSpec, ScalarError, UnitScalar};

/// Largest root order for which cyclotomic polynomials are computed.
pub const MAX_ROOT_ORDER: u32 = 4096;

fn poly_cache() -> &'static Mutex<HashMap<u32, Arc<Vec<BigInt>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<BigInt>>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn field_cache() -> &'static Mutex<HashMap<u32, Arc<Field>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Field>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Divides an integer polynomial by a monic one, both low degree first.
/// Panics if the division is not exact.
fn exact_div_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dd = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![BigInt::zero(); num.len() - dd];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (k, d) in den.iter().enumerate() {
            rem[i + k] -= &c * d;
        }
        quot[i] = c;
    }
    assert!(rem.iter().all(Zero::is_zero), "inexact cyclotomic division");
    quot
}

fn cyclotomic_arc(n: u32) -> Arc<Vec<BigInt>> {
    if let Some(p) = poly_cache().lock().expect("cache poisoned").get(&n) {
        return p.clone();
    }
    let mut poly = vec![BigInt::zero(); n as usize + 1];
    poly[0] = -BigInt::one();
    poly[n as usize] = BigInt::one();
    for d in (1..n).filter(|d| n % d == 0) {
        poly = exact_div_monic(&poly, &cyclotomic_arc(d));
    }
    let poly = Arc::new(poly);
    poly_cache().lock().expect("cache poisoned").insert(n, poly.clone());
    poly
}

/// Coefficients of the `n`-th cyclotomic polynomial, constant term first.
///
/// Computed as `x^n - 1` divided by `Phi_d` for every proper divisor `d`.
pub fn cyclotomic_polynomial(n: u32) -> Result<Vec<BigInt>, ScalarError> {
    check_root_order(n)?;
    Ok(cyclotomic_arc(n).as_ref().clone())
}

fn check_root_order(n: u32) -> Result<(), ScalarError> {
    if n == 0 {
        Err(ScalarError::ZeroRootOrder)
    } else if n > MAX_ROOT_ORDER {
        Err(ScalarError::RootOrderTooLarge { n, bound: MAX_ROOT_ORDER })
    } else {
        Ok(())
    }
}

#[derive(Debug)]
struct Field {
    n: u32,
    modulus: Arc<Vec<BigInt>>,
}

impl Field {
    fn get(n: u32) -> Result<Arc<Field>, ScalarError> {
        check_root_order(n)?;
        if let Some(f) = field_cache().lock().expect("cache poisoned").get(&n) {
            return Ok(f.clone());
        }
        let field = Arc::new(Field { n, modulus: cyclotomic_arc(n) });
        field_cache().lock().expect("cache poisoned").insert(n, field.clone());
        Ok(field)
    }

    fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    fn reduce(&self, mut poly: Vec<BigRational>) -> Vec<BigRational> {
        let deg = self.degree();
        for i in (deg..poly.len()).rev() {
            let c = std::mem::replace(&mut poly[i], BigRational::zero());
            if c.is_zero() {
                continue;
            }
            for (k, m) in self.modulus[..deg].iter().enumerate() {
                poly[i - deg + k] -= &c * BigRational::from_integer(m.clone());
            }
        }
        poly.resize(deg, BigRational::zero());
        poly
    }
}

/// An element of `Q(zeta_N) = Q[x] / Phi_N(x)`, stored as its unique
/// representative of degree below `deg Phi_N`.
#[derive(Clone)]
pub struct Cyclotomic {
    field: Arc<Field>,
    coeffs: Vec<BigRational>,
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        self.field.n == other.field.n && self.coeffs == other.coeffs
    }
}

impl Eq for Cyclotomic {}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic({}; {})", self.field.n, self)
    }
}

impl Cyclotomic {
    pub fn zero(n: u32) -> Result<Self, ScalarError> {
        let field = Field::get(n)?;
        let coeffs = vec![BigRational::zero(); field.degree()];
        Ok(Cyclotomic { field, coeffs })
    }

    pub fn one(n: u32) -> Result<Self, ScalarError> {
        Self::from_rational(n, BigRational::one())
    }

    pub fn from_rational(n: u32, q: BigRational) -> Result<Self, ScalarError> {
        Self::from_coeffs(n, vec![q])
    }

    pub fn from_integer(n: u32, k: i64) -> Result<Self, ScalarError> {
        Self::from_rational(n, BigRational::from_integer(k.into()))
    }

    /// Any polynomial in `x`, reduced modulo `Phi_n`.
    pub fn from_coeffs(n: u32, coeffs: Vec<BigRational>) -> Result<Self, ScalarError> {
        let field = Field::get(n)?;
        let coeffs = field.reduce(coeffs);
        Ok(Cyclotomic { field, coeffs })
    }

    /// `zeta_n^k`.
    pub fn root_power(n: u32, k: i64) -> Result<Self, ScalarError> {
        let k = k.rem_euclid(n.max(1) as i64) as usize;
        let mut coeffs = vec![BigRational::zero(); k + 1];
        coeffs[k] = BigRational::one();
        Self::from_coeffs(n, coeffs)
    }

    pub fn root_order(&self) -> u32 {
        self.field.n
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.iter().enumerate().all(|(i, c)| if i == 0 { c.is_one() } else { c.is_zero() })
    }

    fn check(&self, other: &Self) -> Result<(), ScalarError> {
        if self.field.n == other.field.n {
            Ok(())
        } else {
            Err(ScalarError::RootOrderMismatch { left: self.field.n, right: other.field.n })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, ScalarError> {
        self.check(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(Cyclotomic { field: self.field.clone(), coeffs })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, ScalarError> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, ScalarError> {
        self.check(other)?;
        let deg = self.field.degree();
        let mut prod = vec![BigRational::zero(); (2 * deg).saturating_sub(1).max(1)];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        Ok(Cyclotomic { field: self.field.clone(), coeffs: self.field.reduce(prod) })
    }

    pub fn pow(&self, mut k: u64) -> Self {
        let mut acc = Cyclotomic::one(self.field.n).expect("field exists");
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        acc
    }

    /// The order of this element as a root of unity, if it is one.
    ///
    /// Roots of unity in `Q(zeta_N)` are `+-zeta_N^k`, so their orders
    /// divide `lcm(2, N)`.
    pub fn root_of_unity_order(&self) -> Option<u32> {
        let bound = (self.field.n as u64).lcm(&2) as u32;
        let mut p = self.clone();
        for k in 1..=bound {
            if p.is_one() {
                return Some(k);
            }
            p = &p * self;
        }
        None
    }

    /// Inverse of a root of unity.
    pub fn inv_root_of_unity(&self) -> Result<Self, ScalarError> {
        let k = self.root_of_unity_order().ok_or(ScalarError::NotRootOfUnity)?;
        Ok(self.pow(k as u64 - 1))
    }

    /// Numeric value at `exp(2 pi i root_choice / N)`.
    pub fn to_complex(&self, root_choice: u32) -> Result<Complex64, ScalarError> {
        let n = self.field.n;
        if root_choice.gcd(&n) != 1 {
            return Err(ScalarError::NonCoprimeRoot { n, k: root_choice });
        }
        let z = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * root_choice as f64 / n as f64);
        let mut acc = Complex64::new(0.0, 0.0);
        let mut power = Complex64::new(1.0, 0.0);
        for c in &self.coeffs {
            acc += power * c.to_f64().unwrap_or(f64::NAN);
            power *= z;
        }
        Ok(acc)
    }

    /// Parses `1`, `-1`, `zeta_d` or `zeta_d^k` (`d` dividing `n`) as an
    /// element of `Q(zeta_n)`.
    pub fn parse_root(token: &str, n: u32) -> Result<Self, ScalarError> {
        let bad = || ScalarError::Parse(format!("cannot read {token:?} as a root of unity"));
        let token = token.trim();
        match token {
            "1" => return Self::one(n),
            "-1" => return Self::from_integer(n, -1),
            _ => {}
        }
        let rest = token.strip_prefix("zeta_").ok_or_else(bad)?;
        let (d, k) = match rest.split_once('^') {
            Some((d, k)) => (d, k.parse::<i64>().map_err(|_| bad())?),
            None => (rest, 1),
        };
        let d: u32 = d.parse().map_err(|_| bad())?;
        if d == 0 || n % d != 0 {
            return Err(ScalarError::Parse(format!("zeta_{d} is not in Q(zeta_{n})")));
        }
        Self::root_power(n, k * (n / d) as i64)
    }
}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.try_add(rhs).expect("cyclotomic root orders differ")
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.try_sub(rhs).expect("cyclotomic root orders differ")
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.try_mul(rhs).expect("cyclotomic root orders differ")
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic { field: self.field.clone(), coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else if wrote { "+" } else { "" };
            let mag = c.abs();
            let var = match i {
                0 => String::new(),
                1 => format!("zeta_{}", self.field.n),
                _ => format!("zeta_{}^{i}", self.field.n),
            };
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{sign}{mag}")?,
                (_, true) => write!(f, "{sign}{var}")?,
                (_, false) => write!(f, "{sign}{mag}*{var}")?,
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct CyclotomicDoc {
    n: u32,
    coeffs: Vec<[String; 2]>,
}

impl Serialize for Cyclotomic {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        CyclotomicDoc {
            n: self.field.n,
            coeffs: self.coeffs.iter().map(|c| [c.numer().to_string(), c.denom().to_string()]).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Cyclotomic {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error as _;
        let doc = CyclotomicDoc::deserialize(deserializer)?;
        let coeffs = doc
            .coeffs
            .iter()
            .map(|[p, q]| {
                let p: BigInt = p.parse().map_err(|_| D::Error::custom(format!("bad numerator {p:?}")))?;
                let q: BigInt = q.parse().map_err(|_| D::Error::custom(format!("bad denominator {q:?}")))?;
                if q.is_zero() {
                    return Err(D::Error::custom("zero denominator"));
                }
                Ok(BigRational::new(p, q))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Cyclotomic::from_coeffs(doc.n, coeffs).map_err(D::Error::custom)
    }
}

/// An assignment of generators to roots of unity in `Q(zeta_N)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Embedding {
    root_order: u32,
    values: BTreeMap<String, Cyclotomic>,
}

impl Embedding {
    pub fn new(root_order: u32) -> Result<Self, ScalarError> {
        check_root_order(root_order)?;
        Ok(Embedding { root_order, values: BTreeMap::new() })
    }

    pub fn assign(mut self, name: impl Into<String>, value: Cyclotomic) -> Result<Self, ScalarError> {
        if value.root_order() != self.root_order {
            return Err(ScalarError::RootOrderMismatch { left: self.root_order, right: value.root_order() });
        }
        self.values.insert(name.into(), value);
        Ok(self)
    }

    /// Sends each torsion generator of order `d` to `zeta_N^(N/d)`.
    pub fn canonical(gens: &GeneratorSpec, root_order: u32) -> Result<Self, ScalarError> {
        let mut emb = Self::new(root_order)?;
        for (name, &d) in gens.names().iter().zip(gens.orders()) {
            if d == 0 {
                return Err(ScalarError::MissingAssignment(name.clone()));
            }
            if root_order % d != 0 {
                return Err(ScalarError::OrderIncompatible { name: name.clone(), order: d });
            }
            emb = emb.assign(name.clone(), Cyclotomic::root_power(root_order, (root_order / d) as i64)?)?;
        }
        Ok(emb)
    }

    /// [`Embedding::canonical`] into the smallest field holding every
    /// torsion generator. Fails on free generators.
    pub fn automatic(gens: &GeneratorSpec) -> Result<Self, ScalarError> {
        let mut n = 1u32;
        for (name, &d) in gens.names().iter().zip(gens.orders()) {
            if d == 0 {
                return Err(ScalarError::MissingAssignment(name.clone()));
            }
            n = n.lcm(&d);
        }
        Self::canonical(gens, n)
    }

    pub fn root_order(&self) -> u32 {
        self.root_order
    }

    pub fn get(&self, name: &str) -> Option<&Cyclotomic> {
        self.values.get(name)
    }

    /// Validates the assignment against `gens`: every generator needs a
    /// value, a torsion generator of order `d` needs `value^d = 1`, and a
    /// free one needs a root of unity so that negative powers exist.
    pub fn bind(&self, gens: &Arc<GeneratorSpec>) -> Result<BoundEmbedding, ScalarError> {
        let mut values = Vec::with_capacity(gens.len());
        for (name, &d) in gens.names().iter().zip(gens.orders()) {
            let v = self.values.get(name).ok_or_else(|| ScalarError::MissingAssignment(name.clone()))?;
            if d > 0 && !v.pow(d as u64).is_one() {
                return Err(ScalarError::OrderIncompatible { name: name.clone(), order: d });
            }
            let inv = v.inv_root_of_unity()?;
            values.push((v.clone(), inv));
        }
        Ok(BoundEmbedding { gens: gens.clone(), root_order: self.root_order, values })
    }

    pub fn embed(&self, u: &UnitScalar) -> Result<Cyclotomic, ScalarError> {
        self.bind(u.gens())?.apply(u)
    }
}

/// An [`Embedding`] checked against one generator spec.
#[derive(Debug, Clone)]
pub struct BoundEmbedding {
    gens: Arc<GeneratorSpec>,
    root_order: u32,
    values: Vec<(Cyclotomic, Cyclotomic)>,
}

impl BoundEmbedding {
    pub fn root_order(&self) -> u32 {
        self.root_order
    }

    pub fn apply(&self, u: &UnitScalar) -> Result<Cyclotomic, ScalarError> {
        if !GeneratorSpec::same(&self.gens, u.gens()) {
            return Err(ScalarError::SpecMismatch);
        }
        let mut acc = Cyclotomic::one(self.root_order)?;
        for (&e, (v, inv)) in u.exponents().iter().zip(&self.values) {
            match e.signum() {
                1 => acc = &acc * &v.pow(e as u64),
                -1 => acc = &acc * &inv.pow(e.unsigned_abs()),
                _ => {}
            }
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1).unwrap(), ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2).unwrap(), ints(&[1, 1]));
        assert_eq!(cyclotomic_polynomial(3).unwrap(), ints(&[1, 1, 1]));
        assert_eq!(cyclotomic_polynomial(4).unwrap(), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(6).unwrap(), ints(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(12).unwrap(), ints(&[1, 0, -1, 0, 1]));
        // first order with a coefficient outside {-1, 0, 1}
        assert_eq!(cyclotomic_polynomial(105).unwrap()[7], BigInt::from(-2));
        assert_eq!(cyclotomic_polynomial(0), Err(ScalarError::ZeroRootOrder));
        assert!(matches!(cyclotomic_polynomial(5000), Err(ScalarError::RootOrderTooLarge { .. })));
    }

    /// Independent check: the product of `Phi_d` over all `d | n` is `x^n - 1`.
    #[test]
    fn divisor_product_is_x_n_minus_one() {
        for n in 1..=36u32 {
            let mut prod = ints(&[1]);
            for d in (1..=n).filter(|d| n % d == 0) {
                let p = cyclotomic_polynomial(d).unwrap();
                let mut out = vec![BigInt::zero(); prod.len() + p.len() - 1];
                for (i, a) in prod.iter().enumerate() {
                    for (j, b) in p.iter().enumerate() {
                        out[i + j] += a * b;
                    }
                }
                prod = out;
            }
            let mut want = vec![BigInt::zero(); n as usize + 1];
            want[0] = BigInt::from(-1);
            want[n as usize] = BigInt::one();
            assert_eq!(prod, want, "n = {n}");
        }
    }

    #[test]
    fn ring_examples() {
        let one = Cyclotomic::one(3).unwrap();
        let q = Cyclotomic::root_power(3, 1).unwrap();
        let q2 = Cyclotomic::root_power(3, 2).unwrap();
        assert!((&(&one + &q) + &q2).is_zero());
        let i = Cyclotomic::root_power(4, 1).unwrap();
        assert_eq!(&i * &i, Cyclotomic::from_integer(4, -1).unwrap());
        let z = Cyclotomic::zero(5).unwrap();
        let a = Cyclotomic::root_power(5, 3).unwrap();
        assert_eq!(&a + &z, a);
        assert!(matches!(q.try_add(&i), Err(ScalarError::RootOrderMismatch { left: 3, right: 4 })));
    }

    #[test]
    fn numeric_cross_check() {
        let i = Cyclotomic::root_power(4, 1).unwrap();
        let c = i.to_complex(1).unwrap();
        assert!((c.re - 0.0).abs() < 1e-12 && (c.im - 1.0).abs() < 1e-12);
        let s = &(&Cyclotomic::one(3).unwrap() + &Cyclotomic::root_power(3, 1).unwrap())
            + &Cyclotomic::root_power(3, 2).unwrap();
        assert!(s.to_complex(1).unwrap().norm() < 1e-12);
        let five = Cyclotomic::from_integer(1, 5).unwrap();
        assert_eq!(five.to_complex(1).unwrap(), Complex64::new(5.0, 0.0));
        assert!(matches!(i.to_complex(2), Err(ScalarError::NonCoprimeRoot { n: 4, k: 2 })));
    }

    #[test]
    fn roots_of_unity() {
        assert_eq!(Cyclotomic::root_power(6, 2).unwrap().root_of_unity_order(), Some(3));
        assert_eq!(Cyclotomic::from_integer(3, -1).unwrap().root_of_unity_order(), Some(2));
        assert_eq!(Cyclotomic::from_integer(3, 2).unwrap().root_of_unity_order(), None);
        let w = Cyclotomic::root_power(3, 1).unwrap();
        assert_eq!(w.inv_root_of_unity().unwrap(), Cyclotomic::root_power(3, 2).unwrap());
        assert_eq!(Cyclotomic::parse_root("zeta_3^2", 6).unwrap(), Cyclotomic::root_power(6, 4).unwrap());
        assert!(Cyclotomic::parse_root("zeta_4", 6).is_err());
    }

    #[test]
    fn embedding_examples() {
        let g = GeneratorSpec::root_of_unity(3);
        let emb = Embedding::new(3).unwrap().assign("zeta_3", Cyclotomic::root_power(3, 1).unwrap()).unwrap();
        let w2 = UnitScalar::root_power(&g, 2);
        assert_eq!(emb.embed(&w2).unwrap(), Cyclotomic::root_power(3, 2).unwrap());
        assert!(emb.embed(&UnitScalar::one(&g)).unwrap().is_one());
        let s = GeneratorSpec::sign();
        let sign = Embedding::new(2).unwrap().assign("zeta_2", Cyclotomic::from_integer(2, -1).unwrap()).unwrap();
        let cube = UnitScalar::root_power(&s, 1).pow(3);
        assert_eq!(sign.embed(&cube).unwrap(), Cyclotomic::from_integer(2, -1).unwrap());
        // zeta_3 cannot go to i
        let bad = Embedding::new(4).unwrap().assign("zeta_3", Cyclotomic::root_power(4, 1).unwrap()).unwrap();
        assert!(matches!(bad.embed(&w2), Err(ScalarError::OrderIncompatible { .. })));
        let free = Arc::new(GeneratorSpec::new([("alpha", 0)]).unwrap());
        assert!(matches!(Embedding::automatic(&free), Err(ScalarError::MissingAssignment(_))));
    }

    #[test]
    fn json_round_trip() {
        let x = Cyclotomic::from_coeffs(3, vec![BigRational::new(1.into(), 2.into()), BigRational::from_integer((-3).into())]).unwrap();
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"{"n":3,"coeffs":[["1","2"],["-3","1"]]}"#);
        let back: Cyclotomic = serde_json::from_str(&s).unwrap();
        assert_eq!(back, x);
        assert!(serde_json::from_str::<Cyclotomic>(r#"{"n":3,"coeffs":[["1","0"]]}"#).is_err());
        // x^2 reduces to -1 - x
        let sq: Cyclotomic = serde_json::from_str(r#"{"n":3,"coeffs":[["0","1"],["0","1"],["1","1"]]}"#).unwrap();
        assert_eq!(sq, Cyclotomic::root_power(3, 2).unwrap());
        assert_eq!(sq.to_string(), "-1-zeta_3");
    }
}
