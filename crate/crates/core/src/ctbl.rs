//! Degree tables of finite groups: loading, `cd(G)` and `cd_{p'}(G)`.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use num_traits::Zero;
use serde_json::Value;

use crate::arith;
use crate::error::{Error, Result};

const BUNDLED: [(&str, &str); 3] = [
    ("A5", include_str!("../data/A5.json")),
    ("S5", include_str!("../data/S5.json")),
    ("A6", include_str!("../data/A6.json")),
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Degrees {
    /// degree -> multiplicity
    Multiset(BTreeMap<BigUint, u64>),
    Set(BTreeSet<BigUint>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeTable {
    pub name: String,
    pub order: Option<BigUint>,
    pub complete: bool,
    pub degrees: Degrees,
}

impl DegreeTable {
    pub fn from_set(name: impl Into<String>, degrees: impl IntoIterator<Item = BigUint>) -> Self {
        DegreeTable {
            name: name.into(),
            order: None,
            complete: false,
            degrees: Degrees::Set(degrees.into_iter().collect()),
        }
    }

    /// `cd(G)`.
    pub fn cd(&self) -> BTreeSet<BigUint> {
        match &self.degrees {
            Degrees::Multiset(m) => m.keys().cloned().collect(),
            Degrees::Set(s) => s.clone(),
        }
    }

    /// `Σ mult · d²`, when multiplicities are known.
    pub fn sum_of_squares(&self) -> Option<BigUint> {
        match &self.degrees {
            Degrees::Multiset(m) => Some(m.iter().map(|(d, &k)| d * d * k).sum()),
            Degrees::Set(_) => None,
        }
    }

    /// Runs the order check when the table is complete and carries an order.
    pub fn check_order(&self) -> Result<()> {
        if !self.complete {
            return Ok(());
        }
        if let (Some(order), Some(sum)) = (&self.order, self.sum_of_squares()) {
            if *order != sum {
                return Err(Error::SumOfSquares { expected: order.to_string(), actual: sum.to_string() });
            }
        }
        Ok(())
    }
}

/// `{d ∈ cd(G) : p ∤ d}`.
pub fn cd_pprime(table: &DegreeTable, p: u64) -> BTreeSet<BigUint> {
    table.cd().into_iter().filter(|d| !arith::divides(p, d)).collect()
}

/// `{1, p-1, p, p+1}` for a prime `p > 5`.
pub fn pgl2_degree_set(p: u64) -> Result<DegreeTable> {
    arith::check_prime(p)?;
    if p <= 5 {
        return Err(Error::OutOfRange(format!("PGL2(p) degree set needs p > 5, got {p}")));
    }
    Ok(DegreeTable::from_set(format!("PGL2({p})"), [1, p - 1, p, p + 1].map(BigUint::from)))
}

fn schema(msg: impl Into<String>) -> Error {
    Error::Schema(msg.into())
}

fn parse_natural(v: &Value, what: &str) -> Result<BigUint> {
    let n = match v {
        Value::Number(n) => n.as_u64().map(BigUint::from),
        Value::String(s) if !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit()) => s.parse().ok(),
        _ => None,
    };
    n.ok_or_else(|| schema(format!("{what} must be a natural number, got {v}")))
}

fn parse_positive(v: &Value, what: &str) -> Result<BigUint> {
    let n = parse_natural(v, what)?;
    if n.is_zero() {
        return Err(schema(format!("{what} must be positive")));
    }
    Ok(n)
}

/// Parses and validates a JSON degree table.
///
/// Accepted shapes are
/// `{"name", "order"?, "complete", "degrees": [[d, mult], ...]}` and
/// `{"name"?, "degree_set": [d, ...]}`. Large values may be given as
/// decimal strings.
pub fn load_degree_table(document: &str) -> Result<DegreeTable> {
    let doc: Value = serde_json::from_str(document).map_err(|e| schema(e.to_string()))?;
    let obj = doc.as_object().ok_or_else(|| schema("table must be a JSON object"))?;
    let name = match obj.get("name") {
        Some(Value::String(s)) => s.clone(),
        Some(_) => return Err(schema("name must be a string")),
        None if obj.contains_key("degree_set") => String::new(),
        None => return Err(schema("missing name")),
    };

    let table = match (obj.get("degrees"), obj.get("degree_set")) {
        (Some(_), Some(_)) => return Err(schema("give either degrees or degree_set, not both")),
        (None, None) => return Err(schema("missing degrees")),
        (None, Some(set)) => {
            let items = set.as_array().ok_or_else(|| schema("degree_set must be an array"))?;
            let degrees = items
                .iter()
                .map(|d| parse_positive(d, "degree"))
                .collect::<Result<BTreeSet<_>>>()?;
            DegreeTable { name, order: None, complete: false, degrees: Degrees::Set(degrees) }
        }
        (Some(list), None) => {
            let complete = obj
                .get("complete")
                .and_then(Value::as_bool)
                .ok_or_else(|| schema("complete must be a boolean"))?;
            let order = obj.get("order").map(|o| parse_positive(o, "order")).transpose()?;
            let rows = list.as_array().ok_or_else(|| schema("degrees must be an array"))?;
            let mut degrees = BTreeMap::new();
            for row in rows {
                let pair = row
                    .as_array()
                    .filter(|a| a.len() == 2)
                    .ok_or_else(|| schema(format!("degree entry must be [d, mult], got {row}")))?;
                let d = parse_positive(&pair[0], "degree")?;
                let mult = pair[1]
                    .as_u64()
                    .filter(|&m| m > 0)
                    .ok_or_else(|| schema(format!("multiplicity must be a positive integer, got {}", pair[1])))?;
                if degrees.insert(d.clone(), mult).is_some() {
                    return Err(schema(format!("degree {d} listed twice")));
                }
            }
            DegreeTable { name, order, complete, degrees: Degrees::Multiset(degrees) }
        }
    };
    table.check_order()?;
    Ok(table)
}

/// Names of the tables shipped with the crate.
pub fn bundled_names() -> impl Iterator<Item = &'static str> {
    BUNDLED.iter().map(|(name, _)| *name)
}

pub fn bundled_table(name: &str) -> Result<DegreeTable> {
    let (_, doc) = BUNDLED
        .iter()
        .find(|(n, _)| n.eq_ignore_ascii_case(name))
        .ok_or_else(|| Error::Unsupported(format!("no bundled table named {name:?}")))?;
    load_degree_table(doc)
}
