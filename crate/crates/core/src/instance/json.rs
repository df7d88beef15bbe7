//! JSON documents for instances and allocations.
//!
//! ```json
//! { "n": 2, "m": 3, "goods": ["x", "y", "z"],
//!   "valuations": [ { "kind": "additive", "weights": [1, "1/2", 0],
//!                     "declared_class": "additive" }, ... ] }
//! ```
//!
//! Rationals are bare integers or `"p/q"` strings. Tabular values are keyed by
//! the bundle's bitmask written in decimal (`"5"` is goods 0 and 2); `"0b101"`
//! is accepted on input.

use std::collections::BTreeSet;
use std::fmt;

use serde::de::{MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Allocation, Instance};
use crate::bundle::{bundle_from_list, Bundle, GoodId, MAX_GOODS};
use crate::error::{Error, Result};
use crate::valuation::{
    ConditionalRule, Coverage, Kind, ValuationClass, ValuationFn, EXHAUSTIVE_LIMIT,
};
use crate::value::Value;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InstanceDoc {
    pub n: usize,
    pub m: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub goods: Option<Vec<String>>,
    pub valuations: Vec<ValuationDoc>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ValuationDoc {
    #[serde(flatten)]
    pub kind: KindDoc,
    pub declared_class: ValuationClass,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum KindDoc {
    Additive {
        weights: Vec<Value>,
    },
    Xos {
        clauses: Vec<Vec<Value>>,
    },
    Tabular {
        values: TabularValues,
    },
    Coverage {
        element_weights: Vec<Value>,
        covers: Vec<Vec<usize>>,
    },
    ConcaveCardinality {
        g: Vec<Value>,
    },
    Sum {
        parts: Vec<KindDoc>,
    },
    MarginalRule {
        base: Vec<Value>,
        trigger: GoodId,
        default: Value,
        condition: Vec<GoodId>,
        conditioned: Value,
    },
}

/// `(bitmask, value)` entries in the order they were read or, when written, in mask order.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct TabularValues(pub Vec<(String, Value)>);

impl Serialize for TabularValues {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for TabularValues {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct EntriesVisitor;

        impl<'de> Visitor<'de> for EntriesVisitor {
            type Value = TabularValues;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a map from bitmask strings to values")
            }

            fn visit_map<A: MapAccess<'de>>(
                self,
                mut access: A,
            ) -> std::result::Result<TabularValues, A::Error> {
                let mut entries = Vec::new();
                while let Some((k, v)) = access.next_entry::<String, Value>()? {
                    entries.push((k, v));
                }
                Ok(TabularValues(entries))
            }
        }

        deserializer.deserialize_map(EntriesVisitor)
    }
}

fn parse_mask(key: &str) -> Option<u64> {
    match key.strip_prefix("0b") {
        Some(bin) => u64::from_str_radix(bin, 2).ok(),
        None => key.parse().ok(),
    }
}

impl KindDoc {
    fn into_kind(self, m: usize, at: &str) -> Result<Kind> {
        let kind = match self {
            KindDoc::Additive { weights } => Kind::Additive(weights),
            KindDoc::Xos { clauses } => Kind::Xos(clauses),
            KindDoc::Tabular { values } => {
                if m > EXHAUSTIVE_LIMIT {
                    return Err(Error::parse(
                        at,
                        format!("tabular valuation over {m} goods exceeds {EXHAUSTIVE_LIMIT}"),
                    ));
                }
                let size = 1usize << m;
                let mut table = vec![None; size];
                for (key, v) in values.0 {
                    let here = format!("{at}.values[\"{key}\"]");
                    let mask = parse_mask(&key)
                        .filter(|&mask| (mask as usize) < size)
                        .ok_or_else(|| Error::parse(&here, "not a bundle bitmask over m goods"))?;
                    if v.is_negative() {
                        return Err(Error::parse(&here, format!("negative tabular value {v}")));
                    }
                    if mask == 0 && !v.is_zero() {
                        return Err(Error::parse(&here, format!("not normalized: v(∅) = {v}")));
                    }
                    if table[mask as usize].replace(v).is_some() {
                        return Err(Error::parse(&here, "bundle listed twice"));
                    }
                }
                let table = table
                    .into_iter()
                    .enumerate()
                    .map(|(mask, v)| {
                        v.ok_or_else(|| {
                            Error::parse(format!("{at}.values"), format!("missing bundle {mask}"))
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                Kind::Tabular(table)
            }
            KindDoc::Coverage {
                element_weights,
                covers,
            } => Kind::Coverage(
                Coverage::new(element_weights, &covers)
                    .map_err(|e| Error::parse(at, e.to_string()))?,
            ),
            KindDoc::ConcaveCardinality { g } => Kind::ConcaveCardinality(g),
            KindDoc::Sum { parts } => Kind::Sum(
                parts
                    .into_iter()
                    .enumerate()
                    .map(|(k, p)| p.into_kind(m, &format!("{at}.parts[{k}]")))
                    .collect::<Result<Vec<_>>>()?,
            ),
            KindDoc::MarginalRule {
                base,
                trigger,
                default,
                condition,
                conditioned,
            } => Kind::MarginalRule(ConditionalRule {
                base,
                trigger,
                default,
                condition: bundle_from_list(&condition)
                    .map_err(|e| Error::parse(at, e.to_string()))?,
                conditioned,
            }),
        };
        let goods = kind.goods().map_err(|e| Error::parse(at, e.to_string()))?;
        if goods != m {
            return Err(Error::parse(
                at,
                format!("valuation is defined over {goods} goods but m = {m}"),
            ));
        }
        Ok(kind)
    }

    fn from_kind(kind: &Kind) -> Self {
        match kind {
            Kind::Additive(w) => KindDoc::Additive { weights: w.clone() },
            Kind::Xos(c) => KindDoc::Xos { clauses: c.clone() },
            Kind::Tabular(t) => KindDoc::Tabular {
                values: TabularValues(
                    t.iter()
                        .enumerate()
                        .map(|(mask, v)| (mask.to_string(), *v))
                        .collect(),
                ),
            },
            Kind::Coverage(c) => KindDoc::Coverage {
                element_weights: c.element_weights().to_vec(),
                covers: c.covers(),
            },
            Kind::ConcaveCardinality(g) => KindDoc::ConcaveCardinality { g: g.clone() },
            Kind::Sum(parts) => KindDoc::Sum {
                parts: parts.iter().map(KindDoc::from_kind).collect(),
            },
            Kind::MarginalRule(r) => KindDoc::MarginalRule {
                base: r.base.clone(),
                trigger: r.trigger,
                default: r.default,
                condition: r.condition.iter().collect(),
                conditioned: r.conditioned,
            },
        }
    }
}

impl InstanceDoc {
    pub fn into_instance(self) -> Result<Instance> {
        if self.n == 0 {
            return Err(Error::parse("n", "an instance needs at least one agent"));
        }
        if self.m > MAX_GOODS {
            return Err(Error::parse(
                "m",
                format!("{} goods exceeds {MAX_GOODS}", self.m),
            ));
        }
        if self.valuations.len() != self.n {
            return Err(Error::parse(
                "valuations",
                format!("{} valuations for n = {}", self.valuations.len(), self.n),
            ));
        }
        if let Some(goods) = &self.goods {
            if goods.len() != self.m {
                return Err(Error::parse(
                    "goods",
                    format!("{} labels for m = {}", goods.len(), self.m),
                ));
            }
            let distinct: BTreeSet<_> = goods.iter().collect();
            if distinct.len() != goods.len() {
                return Err(Error::parse("goods", "labels are not distinct"));
            }
        }
        let m = self.m;
        let valuations = self
            .valuations
            .into_iter()
            .enumerate()
            .map(|(i, doc)| {
                let at = format!("valuations[{i}]");
                let kind = doc.kind.into_kind(m, &at)?;
                ValuationFn::new(kind, doc.declared_class)
                    .map_err(|e| Error::parse(&at, e.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Instance::new(valuations, self.goods)
    }
}

impl From<&Instance> for InstanceDoc {
    fn from(inst: &Instance) -> Self {
        InstanceDoc {
            n: inst.n(),
            m: inst.m(),
            goods: inst.labels().map(<[String]>::to_vec),
            valuations: inst
                .valuations()
                .iter()
                .map(|v| ValuationDoc {
                    kind: KindDoc::from_kind(v.kind()),
                    declared_class: v.class(),
                })
                .collect(),
        }
    }
}

fn syntax_error(e: serde_json::Error) -> Error {
    Error::parse(
        format!("line {} column {}", e.line(), e.column()),
        e.to_string(),
    )
}

pub fn parse_instance(bytes: &[u8]) -> Result<Instance> {
    let doc: InstanceDoc = serde_json::from_slice(bytes).map_err(syntax_error)?;
    doc.into_instance()
}

/// Pretty-printed JSON with a trailing newline; byte-identical for equal instances.
pub fn serialize_instance(inst: &Instance) -> Vec<u8> {
    let mut out = serde_json::to_vec_pretty(&InstanceDoc::from(inst))
        .expect("instance documents always serialize");
    out.push(b'\n');
    out
}

#[derive(Deserialize)]
struct AllocationDoc {
    bundles: Vec<Vec<GoodId>>,
    #[serde(default)]
    pool: Vec<GoodId>,
}

/// Reads `{ "bundles": [[...], ...], "pool": [...] }`. Duplicates inside a single
/// list are rejected here; cross-bundle problems are left to `validate_allocation`.
pub fn parse_allocation(bytes: &[u8]) -> Result<Allocation> {
    let doc: AllocationDoc = serde_json::from_slice(bytes).map_err(syntax_error)?;
    let bundles = doc
        .bundles
        .iter()
        .enumerate()
        .map(|(i, b)| {
            bundle_from_list(b).map_err(|e| Error::parse(format!("bundles[{i}]"), e.to_string()))
        })
        .collect::<Result<Vec<Bundle>>>()?;
    let pool = bundle_from_list(&doc.pool).map_err(|e| Error::parse("pool", e.to_string()))?;
    Ok(Allocation { bundles, pool })
}

pub fn serialize_allocation(alloc: &Allocation) -> Vec<u8> {
    let mut out = serde_json::to_vec(alloc).expect("allocations always serialize");
    out.push(b'\n');
    out
}
