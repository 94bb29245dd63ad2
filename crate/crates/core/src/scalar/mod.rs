//! Exact scalars.
//!
//! Two layers: [`UnitScalar`] is a monomial over named generators and holds
//! every cocycle, cochain and structure-constant value, including free
//! parameters; [`Cyclotomic`] is an element of `Q(zeta_N)` and supplies the
//! sums that matrix products need. An [`Embedding`] maps the first layer
//! into the second.

mod cyclotomic;
mod unit;

use std::sync::Arc;

use thiserror::Error;

pub use cyclotomic::{cyclotomic_polynomial, BoundEmbedding, Cyclotomic, Embedding, MAX_ROOT_ORDER};
pub use unit::{GeneratorSpec, UnitScalar, SIGN};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("scalars belong to different generator specs")]
    SpecMismatch,
    #[error("unknown generator {0}")]
    UnknownGenerator(String),
    #[error("invalid generator spec: {0}")]
    Generator(String),
    #[error("root orders differ: {left} vs {right}")]
    RootOrderMismatch { left: u32, right: u32 },
    #[error("root order {n} exceeds the bound {bound}")]
    RootOrderTooLarge { n: u32, bound: u32 },
    #[error("root order must be positive")]
    ZeroRootOrder,
    #[error("root choice {k} is not coprime to {n}")]
    NonCoprimeRoot { n: u32, k: u32 },
    #[error("no value assigned to generator {0}")]
    MissingAssignment(String),
    #[error("generator {name} of order {order} cannot be sent to that value")]
    OrderIncompatible { name: String, order: u32 },
    #[error("value is not a root of unity")]
    NotRootOfUnity,
    #[error("parse error: {0}")]
    Parse(String),
}

/// One factor of a scalar token: generator name, its order, exponent.
fn parse_factor(factor: &str) -> Result<(String, u32, i64), ScalarError> {
    let bad = || ScalarError::Parse(format!("cannot read scalar factor {factor:?}"));
    let (base, exp) = match factor.split_once('^') {
        Some((b, e)) => (b, e.parse::<i64>().map_err(|_| bad())?),
        None => (factor, 1),
    };
    if base == "-1" {
        return Ok((SIGN.into(), 2, exp));
    }
    if let Some(n) = base.strip_prefix("zeta_") {
        let n: u32 = n.parse().map_err(|_| bad())?;
        if n == 0 {
            return Err(bad());
        }
        return Ok((base.into(), n, exp));
    }
    let ok = base.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
        && base.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
    if !ok {
        return Err(bad());
    }
    Ok((base.into(), 0, exp))
}

/// Splits a token such as `-alpha*zeta_3^2` into its factors.
fn parse_token(token: &str) -> Result<Vec<(String, u32, i64)>, ScalarError> {
    let token = token.trim();
    if token.is_empty() {
        return Err(ScalarError::Parse("empty scalar".into()));
    }
    let mut factors = Vec::new();
    let body = match token.strip_prefix('-') {
        Some(rest) if rest != "1" && !rest.starts_with('1') => {
            factors.push((SIGN.to_string(), 2, 1));
            rest
        }
        _ => token,
    };
    for f in body.split('*') {
        let f = f.trim();
        if f == "1" {
            continue;
        }
        factors.push(parse_factor(f)?);
    }
    Ok(factors)
}

/// Reads scalar tokens into a shared generator spec.
///
/// Accepted forms: `1`, `-1`, `zeta_N`, `zeta_N^k` (a primitive `N`-th
/// root of unity, order `N`), bare names such as `alpha` or `alpha^-2`
/// (free generators), and `*`-products of these. Generators are ordered by
/// first appearance.
pub fn parse_units(tokens: &[&str]) -> Result<(Arc<GeneratorSpec>, Vec<UnitScalar>), ScalarError> {
    let parsed = tokens.iter().map(|t| parse_token(t)).collect::<Result<Vec<_>, _>>()?;
    let mut gens: Vec<(String, u32)> = Vec::new();
    for (name, order, _) in parsed.iter().flatten() {
        match gens.iter().find(|(n, _)| n == name) {
            Some((_, o)) if o != order => {
                return Err(ScalarError::Generator(format!("generator {name} used with two orders")))
            }
            Some(_) => {}
            None => gens.push((name.clone(), *order)),
        }
    }
    let spec = Arc::new(GeneratorSpec::new(gens)?);
    let values = parsed
        .into_iter()
        .map(|factors| {
            let mut acc = UnitScalar::one(&spec);
            for (name, _, e) in factors {
                acc = &acc * &UnitScalar::generator(&spec, &name)?.pow(e);
            }
            Ok(acc)
        })
        .collect::<Result<Vec<_>, ScalarError>>()?;
    Ok((spec, values))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use proptest::prelude::*;

    #[test]
    fn token_parsing() {
        let (spec, v) = parse_units(&["alpha", "beta^-1", "zeta_3^2", "-1", "1", "-alpha*zeta_3"]).unwrap();
        assert_eq!(spec.names(), &["alpha", "beta", "zeta_3", "zeta_2"]);
        assert_eq!(spec.orders(), &[0, 0, 3, 2]);
        assert_eq!(v[0].exponents(), &[1, 0, 0, 0]);
        assert_eq!(v[1].exponents(), &[0, -1, 0, 0]);
        assert_eq!(v[2].exponents(), &[0, 0, 2, 0]);
        assert_eq!(v[3].exponents(), &[0, 0, 0, 1]);
        assert!(v[4].is_one());
        assert_eq!(v[5].exponents(), &[1, 0, 1, 1]);
        assert!(parse_units(&["zeta_0"]).is_err());
        assert!(parse_units(&["3x"]).is_err());
        assert!(parse_units(&[""]).is_err());
    }

    fn mu6() -> Arc<GeneratorSpec> {
        GeneratorSpec::root_of_unity(6)
    }

    fn mixed_scalar() -> impl Strategy<Value = UnitScalar> {
        let spec = Arc::new(GeneratorSpec::new([("alpha", 0), ("beta", 0), ("omega", 3), ("zeta_2", 2)]).unwrap());
        prop::collection::vec(-20i64..20, 4).prop_map(move |e| UnitScalar::from_exponents(&spec, e).unwrap())
    }

    fn cyclo(n: u32) -> impl Strategy<Value = Cyclotomic> {
        prop::collection::vec((-9i64..10, 1i64..5), 0..8).prop_map(move |cs| {
            let cs = cs.into_iter().map(|(p, q)| BigRational::new(p.into(), q.into())).collect();
            Cyclotomic::from_coeffs(n, cs).unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn unit_monoid_laws(a in mixed_scalar(), b in mixed_scalar(), c in mixed_scalar()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &UnitScalar::one(a.gens()), a.clone());
            prop_assert!((&a * &a.inv()).is_one());
        }

        #[test]
        fn cyclotomic_ring_laws(a in cyclo(12), b in cyclo(12), c in cyclo(12)) {
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            let exact = &a * &b;
            let (za, zb, zp) = (a.to_complex(5).unwrap(), b.to_complex(5).unwrap(), exact.to_complex(5).unwrap());
            prop_assert!((za * zb - zp).norm() < 1e-9 * (1.0 + zp.norm()));
        }
    }

    #[test]
    fn embedding_is_a_homomorphism_on_roots_of_unity() {
        for n in 1..=6u32 {
            let gens = GeneratorSpec::root_of_unity(n);
            for k in (1..=n).filter(|k| num_integer::Integer::gcd(k, &n) == 1) {
                let emb = Embedding::new(n)
                    .unwrap()
                    .assign(format!("zeta_{n}"), Cyclotomic::root_power(n, k as i64).unwrap())
                    .unwrap();
                for i in 0..n as i64 {
                    for j in 0..n as i64 {
                        let (a, b) = (UnitScalar::root_power(&gens, i), UnitScalar::root_power(&gens, j));
                        let lhs = emb.embed(&(&a * &b)).unwrap();
                        let rhs = &emb.embed(&a).unwrap() * &emb.embed(&b).unwrap();
                        assert_eq!(lhs, rhs);
                        let z = lhs.to_complex(1).unwrap();
                        let angle = 2.0 * std::f64::consts::PI * (k as i64 * (i + j)) as f64 / n as f64;
                        assert!((z.re - angle.cos()).abs() < 1e-9 && (z.im - angle.sin()).abs() < 1e-9);
                    }
                }
            }
        }
        assert!(Embedding::automatic(&mu6()).is_ok());
    }
}
