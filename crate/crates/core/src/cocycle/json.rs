//! JSON documents for cocycle, cochain and bicharacter tables.
//!
//! ```text
//! {"group": {"orders": [3]},
//!  "generators": [{"name": "zeta_3", "order": 3}],
//!  "entries": [{"x": [1], "y": [1], "z": [1], "value": {"zeta_3": 1}}, ...]}
//! ```
//!
//! Output lists every entry in lexicographic order. On input, entries with
//! an identity argument may be left out (they are read as 1), `generators`
//! may be left out (`zeta_N` gets order `N`, every other name is free), and
//! a bare integer is accepted for an element of a cyclic group.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use super::{BicharacterTable, CochainTable, CocycleTable};
use crate::group::{GroupElem, GroupSpec};
use crate::scalar::{GeneratorSpec, UnitScalar};
use crate::{Error, Result};

fn fmt_err(msg: impl Into<String>) -> Error {
    Error::Format(msg.into())
}

fn header(group: &GroupSpec, gens: &GeneratorSpec, entries: Vec<Value>) -> Value {
    json!({ "group": group, "generators": gens, "entries": entries })
}

fn elem_json(e: &GroupElem) -> Value {
    json!(e)
}

fn parse_elem(group: &GroupSpec, v: &Value, what: &str) -> Result<GroupElem> {
    let comps: Vec<i64> = match v {
        Value::Number(_) if group.rank() == 1 => vec![v.as_i64().ok_or_else(|| fmt_err(format!("{what}: not an integer")))?],
        Value::Array(items) => items
            .iter()
            .map(|c| c.as_i64().ok_or_else(|| fmt_err(format!("{what}: components must be integers"))))
            .collect::<Result<_>>()?,
        _ => return Err(fmt_err(format!("{what}: expected an integer array"))),
    };
    if comps.len() != group.rank() {
        return Err(fmt_err(format!("{what}: expected {} components, found {}", group.rank(), comps.len())));
    }
    if comps.iter().zip(group.orders()).any(|(&c, &n)| c < 0 || c >= n as i64) {
        return Err(fmt_err(format!("{what}: {v} is not reduced modulo {group}")));
    }
    Ok(group.elem(&comps)?)
}

fn value_map(v: &Value) -> Result<&Map<String, Value>> {
    v.as_object().ok_or_else(|| fmt_err(format!("value {v} is not an object of exponents")))
}

fn parse_value(gens: &Arc<GeneratorSpec>, v: &Value) -> Result<UnitScalar> {
    let mut exps = vec![0i64; gens.len()];
    for (name, e) in value_map(v)? {
        let i = gens.position(name).ok_or_else(|| fmt_err(format!("value uses undeclared generator {name}")))?;
        exps[i] = e.as_i64().ok_or_else(|| fmt_err(format!("exponent of {name} must be an integer")))?;
    }
    Ok(UnitScalar::from_exponents(gens, exps)?)
}

/// Order implied by a generator name when none is declared.
fn inferred_order(name: &str) -> u32 {
    name.strip_prefix("zeta_").and_then(|n| n.parse::<u32>().ok()).filter(|&n| n > 0).unwrap_or(0)
}

struct Doc<'a> {
    group: GroupSpec,
    gens: Arc<GeneratorSpec>,
    entries: &'a [Value],
}

fn parse_doc(v: &Value) -> Result<Doc<'_>> {
    let obj = v.as_object().ok_or_else(|| fmt_err("table document must be an object"))?;
    let group: GroupSpec = serde_json::from_value(obj.get("group").ok_or_else(|| fmt_err("missing \"group\""))?.clone())
        .map_err(|e| fmt_err(format!("group: {e}")))?;
    let entries = obj
        .get("entries")
        .ok_or_else(|| fmt_err("missing \"entries\""))?
        .as_array()
        .ok_or_else(|| fmt_err("\"entries\" must be an array"))?;
    let gens = match obj.get("generators") {
        Some(g) => serde_json::from_value(g.clone()).map_err(|e| fmt_err(format!("generators: {e}")))?,
        None => {
            let mut names: Vec<String> = Vec::new();
            for entry in entries {
                if let Some(val) = entry.get("value") {
                    for name in value_map(val)?.keys() {
                        if !names.contains(name) {
                            names.push(name.clone());
                        }
                    }
                }
            }
            GeneratorSpec::new(names.into_iter().map(|n| {
                let d = inferred_order(&n);
                (n, d)
            }))?
        }
    };
    Ok(Doc { group, gens: Arc::new(gens), entries })
}

/// Reads `entries` into a dense map keyed by element index tuples.
fn collect<const K: usize>(doc: &Doc, keys: [&str; K]) -> Result<BTreeMap<[usize; K], UnitScalar>> {
    if doc.group.size() > super::MAX_TABLE_GROUP {
        return Err(fmt_err(format!("group {} exceeds the table bound {}", doc.group, super::MAX_TABLE_GROUP)));
    }
    let mut out = BTreeMap::new();
    for entry in doc.entries {
        let mut idx = [0usize; K];
        for (slot, key) in idx.iter_mut().zip(keys) {
            let v = entry.get(key).ok_or_else(|| fmt_err(format!("entry {entry} has no \"{key}\"")))?;
            *slot = doc.group.index_of(&parse_elem(&doc.group, v, key)?)?;
        }
        let value = parse_value(&doc.gens, entry.get("value").ok_or_else(|| fmt_err(format!("entry {entry} has no \"value\"")))?)?;
        if out.insert(idx, value).is_some() {
            let args: Vec<String> = idx.iter().map(|&i| doc.group.element(i).to_string()).collect();
            return Err(fmt_err(format!("duplicate entry at ({})", args.join(","))));
        }
    }
    Ok(out)
}

fn missing<const K: usize>(group: &GroupSpec, idx: [usize; K]) -> Error {
    let args: Vec<String> = idx.iter().map(|&i| group.element(i).to_string()).collect();
    fmt_err(format!("missing entry at ({})", args.join(",")))
}

impl CocycleTable {
    pub fn to_json(&self) -> Value {
        let entries = self
            .entries()
            .map(|(x, y, z, v)| json!({ "x": elem_json(&x), "y": elem_json(&y), "z": elem_json(&z), "value": v }))
            .collect();
        header(self.group(), self.gens(), entries)
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let doc = parse_doc(v)?;
        let mut vals = collect(&doc, ["x", "y", "z"])?;
        let n = doc.group.size();
        let mut values = Vec::with_capacity(n.pow(3));
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let v = match vals.remove(&[x, y, z]) {
                        Some(v) => v,
                        None if x == 0 || y == 0 || z == 0 => UnitScalar::one(&doc.gens),
                        None => return Err(missing(&doc.group, [x, y, z])),
                    };
                    values.push(v);
                }
            }
        }
        Ok(CocycleTable::from_values(doc.group, doc.gens, values))
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(s).map_err(|e| fmt_err(e.to_string()))?;
        Self::from_json(&v)
    }
}

macro_rules! pair_json {
    ($name:ident) => {
        impl $name {
            pub fn to_json(&self) -> Value {
                let g = self.group();
                let n = g.size();
                let entries = (0..n * n)
                    .map(|i| {
                        let (x, y) = (g.element(i / n), g.element(i % n));
                        json!({ "x": elem_json(&x), "y": elem_json(&y), "value": self.at(i / n, i % n) })
                    })
                    .collect();
                header(g, self.gens(), entries)
            }

            /// Missing identity-argument entries are 1; present ones must be.
            pub fn from_json(v: &Value) -> Result<Self> {
                let doc = parse_doc(v)?;
                let vals = collect(&doc, ["x", "y"])?;
                let (g, gens) = (&doc.group, &doc.gens);
                $name::from_fn(g.clone(), gens, |x, y| {
                    let key = [g.index_of(x)?, g.index_of(y)?];
                    match vals.get(&key) {
                        Some(v) => Ok(v.clone()),
                        None if x.is_zero() || y.is_zero() => Ok(UnitScalar::one(gens)),
                        None => Err(missing(g, key)),
                    }
                })
            }

            pub fn from_json_str(s: &str) -> Result<Self> {
                let v: Value = serde_json::from_str(s).map_err(|e| fmt_err(e.to_string()))?;
                Self::from_json(&v)
            }
        }

        impl Serialize for $name {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                self.to_json().serialize(s)
            }
        }

        impl<'de> Deserialize<'de> for $name {
            fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
                $name::from_json(&Value::deserialize(d)?).map_err(de::Error::custom)
            }
        }
    };
}

pair_json!(CochainTable);
pair_json!(BicharacterTable);

impl Serialize for CocycleTable {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for CocycleTable {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        CocycleTable::from_json(&Value::deserialize(d)?).map_err(de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cocycle::{z3_twist_cochain, octonion_bicharacter, octonion_cocycle, z3_from_params};

    fn w(k: i64) -> UnitScalar {
        UnitScalar::root_power(&GeneratorSpec::root_of_unity(3), k)
    }

    #[test]
    fn round_trip() {
        let t = z3_from_params(&w(1), &w(2), &w(1)).unwrap();
        let s = serde_json::to_string(&t).unwrap();
        assert!(s.contains(r#""generators":[{"name":"zeta_3","order":3}],"group":{"orders":[3]}"#));
        assert_eq!(CocycleTable::from_json_str(&s).unwrap(), t);
        let o = octonion_cocycle();
        assert_eq!(serde_json::from_value::<CocycleTable>(o.to_json()).unwrap(), o);
        let r = octonion_bicharacter();
        assert_eq!(BicharacterTable::from_json(&r.to_json()).unwrap(), r);
        let f = z3_twist_cochain(&w(1)).unwrap();
        assert_eq!(CochainTable::from_json(&f.to_json()).unwrap(), f);
    }

    #[test]
    fn entries_are_lexicographic() {
        let v = octonion_cocycle().to_json();
        let e = v["entries"].as_array().unwrap();
        assert_eq!(e.len(), 512);
        assert_eq!(e[1]["z"], json!([0, 0, 1]));
        assert_eq!(e[8]["y"], json!([0, 0, 1]));
        assert_eq!(e[511]["x"], json!([1, 1, 1]));
    }

    #[test]
    fn sparse_input_without_generators() {
        let doc = json!({
            "group": {"orders": [2]},
            "entries": [{"x": 1, "y": [1], "z": [1], "value": {"zeta_2": 1}}]
        });
        let t = CocycleTable::from_json(&doc).unwrap();
        assert_eq!(t.gens().orders(), &[2]);
        assert_eq!(t.get_cyclic(1, 1, 1).unwrap().to_string(), "-1");
        assert_eq!(t.values().iter().filter(|v| !v.is_one()).count(), 1);

        let free = json!({"group": {"orders": [2]}, "entries": [{"x": [1], "y": [1], "z": [1], "value": {"q": -3}}]});
        let t = CocycleTable::from_json(&free).unwrap();
        assert_eq!(t.gens().orders(), &[0]);
        assert_eq!(t.get_cyclic(1, 1, 1).unwrap().exponent("q"), Some(-3));
    }

    #[test]
    fn malformed_documents() {
        let bad = [
            json!([]),
            json!({"group": {"orders": [2]}}),
            json!({"group": {"orders": [2]}, "entries": []}),
            json!({"group": {"orders": [2]}, "entries": [{"x": [2], "y": [1], "z": [1], "value": {}}]}),
            json!({"group": {"orders": [2]}, "entries": [{"x": [1], "y": [1], "value": {}}]}),
            json!({"group": {"orders": [2]}, "generators": [{"name": "a", "order": 0}],
                   "entries": [{"x": [1], "y": [1], "z": [1], "value": {"b": 1}}]}),
            json!({"group": {"orders": [2]}, "entries": [
                {"x": [1], "y": [1], "z": [1], "value": {}}, {"x": [1], "y": [1], "z": [1], "value": {}}]}),
            json!({"group": {"orders": [0]}, "entries": []}),
        ];
        for doc in bad {
            assert!(matches!(CocycleTable::from_json(&doc), Err(Error::Format(_)) | Err(Error::Group(_))), "{doc}");
        }
        assert!(CocycleTable::from_json_str("{not json").is_err());
    }

    #[test]
    fn present_unnormalized_entries_are_kept_for_cocycles() {
        let doc = json!({"group": {"orders": [2]}, "entries": [
            {"x": [1], "y": [0], "z": [1], "value": {"zeta_2": 1}},
            {"x": [1], "y": [1], "z": [1], "value": {}}]});
        let t = CocycleTable::from_json(&doc).unwrap();
        assert!(!t.get_cyclic(1, 0, 1).unwrap().is_one());
        let pair = json!({"group": {"orders": [2]}, "entries": [{"x": [0], "y": [1], "value": {"zeta_2": 1}},
            {"x": [1], "y": [1], "value": {}}]});
        assert!(matches!(CochainTable::from_json(&pair), Err(Error::NotNormalized(_))));
        let gap = json!({"group": {"orders": [2]}, "entries": []});
        assert!(matches!(CochainTable::from_json(&gap), Err(Error::Format(_))));
    }
}
