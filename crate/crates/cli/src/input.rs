use std::path::Path;

use num_integer::Integer;
use num_rational::BigRational;
use quasialg::scalar::parse_units;
use quasialg::{CocycleTable, CycloMatrix, Cyclotomic, GroupSpec, UnitScalar};
use serde_json::Value;

use crate::CliError;

pub fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))
}

pub fn cocycle_file(path: &Path) -> Result<CocycleTable, CliError> {
    CocycleTable::from_json_str(&read(path)?)
        .map_err(|e| CliError::usage(format!("{}: {e}", path.display())))
}

/// `z3`, `Z_3`, `2,2`, `Z2xZ2`, `Z_2xZ_4`.
pub fn group(s: &str) -> Result<GroupSpec, CliError> {
    let bad = || CliError::usage(format!("cannot read {s:?} as a group; try z3 or 2,2"));
    let lower = s.trim().to_ascii_lowercase();
    let orders = lower
        .split([',', 'x', '*'])
        .map(|part| {
            let part = part.trim();
            let digits = part.strip_prefix("z_").or_else(|| part.strip_prefix('z')).unwrap_or(part);
            digits.parse::<u32>().map_err(|_| bad())
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(GroupSpec::new(orders)?)
}

/// Parses scalar tokens into one shared generator spec.
pub fn units(tokens: &[&str]) -> Result<Vec<UnitScalar>, CliError> {
    Ok(parse_units(tokens)?.1)
}

pub fn unit(token: &str) -> Result<UnitScalar, CliError> {
    Ok(units(&[token])?.remove(0))
}

/// Order of the root of unity a `--embed` value names.
pub fn root_order_of(token: &str) -> Result<u32, CliError> {
    let bad = || CliError::usage(format!("cannot read {token:?} as a root of unity"));
    match token.trim() {
        "1" => Ok(1),
        "-1" => Ok(2),
        t => {
            let rest = t.strip_prefix("zeta_").ok_or_else(bad)?;
            rest.split('^').next().unwrap_or("").parse().map_err(|_| bad())
        }
    }
}

pub fn lcm(a: u32, b: u32) -> u32 {
    a.lcm(&b)
}

/// Field order a matrix document asks for, if it names one.
pub fn declared_root_order(v: &Value) -> Option<u32> {
    let declared = v.get("root_order").and_then(Value::as_u64);
    let entries = v.get("rows").or(Some(v)).and_then(Value::as_array).into_iter().flatten();
    let from_entries = entries
        .filter_map(Value::as_array)
        .flatten()
        .filter_map(|e| e.get("n").and_then(Value::as_u64))
        .max();
    declared.or(from_entries).map(|n| n as u32)
}

fn entry(v: &Value, n: u32) -> Result<Cyclotomic, CliError> {
    let bad = || CliError::usage(format!("cannot read matrix entry {v}"));
    match v {
        Value::Number(k) => Ok(Cyclotomic::from_integer(n, k.as_i64().ok_or_else(bad)?)?),
        Value::String(s) => match s.trim().parse::<BigRational>() {
            Ok(q) => Ok(Cyclotomic::from_rational(n, q)?),
            Err(_) => Ok(Cyclotomic::parse_root(s, n)?),
        },
        Value::Object(_) => serde_json::from_value(v.clone()).map_err(|e| CliError::usage(format!("matrix entry: {e}"))),
        _ => Err(bad()),
    }
}

/// A matrix as `[[..], ..]` or `{"rows": [[..], ..]}`; entries are
/// integers, strings `p/q` or `zeta_d^k`, or cyclotomic objects.
pub fn matrix(v: &Value, n: u32) -> Result<CycloMatrix, CliError> {
    let rows = v
        .get("rows")
        .or(Some(v))
        .and_then(Value::as_array)
        .ok_or_else(|| CliError::usage("a matrix is an array of rows"))?;
    let rows = rows
        .iter()
        .map(|r| {
            r.as_array()
                .ok_or_else(|| CliError::usage("a matrix row is an array"))?
                .iter()
                .map(|e| entry(e, n))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    let m = CycloMatrix::new(n, rows)?;
    if let Some(declared) = v.get("n").and_then(Value::as_u64) {
        if declared as usize != m.n() {
            return Err(CliError::usage(format!("\"n\" is {declared} but the matrix is {0}x{0}", m.n())));
        }
    }
    Ok(m)
}

pub fn json_file(path: &Path) -> Result<Value, CliError> {
    serde_json::from_str(&read(path)?).map_err(|e| CliError::usage(format!("{}: {e}", path.display())))
}
