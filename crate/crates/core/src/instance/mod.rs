//! Allocation instances, allocations, named fixtures and random generators.

mod fixtures;
mod generate;
mod json;

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

pub use fixtures::{fixture, Fixture, FixtureId, FIXTURE_NAMES};
pub use generate::{generate, subadditive_cover, GenSpec, SUBADDITIVE_GEN_LIMIT};
pub use json::{parse_allocation, parse_instance, serialize_allocation, serialize_instance};
pub use json::{InstanceDoc, KindDoc, ValuationDoc};

use crate::bundle::{AgentId, Bundle, GoodId, MAX_GOODS};
use crate::error::{Error, Result};
use crate::valuation::{ValuationFn, EXHAUSTIVE_LIMIT};
use crate::value::Value;

/// Instances with at most this many goods keep a full value table per agent.
pub const TABULATE_LIMIT: usize = 16;

/// `n` agents with valuations over the same `m` goods. Immutable once built.
#[derive(Clone)]
pub struct Instance {
    valuations: Vec<ValuationFn>,
    m: usize,
    labels: Option<Vec<String>>,
    grand: Vec<Value>,
    tables: Option<Arc<Vec<Vec<Value>>>>,
}

impl Instance {
    pub fn new(valuations: Vec<ValuationFn>, labels: Option<Vec<String>>) -> Result<Self> {
        let first = valuations
            .first()
            .ok_or_else(|| Error::Domain("an instance needs at least one agent".into()))?;
        let m = first.goods();
        if let Some((i, v)) = valuations.iter().enumerate().find(|(_, v)| v.goods() != m) {
            return Err(Error::Domain(format!(
                "agent {i} values {} goods, agent 0 values {m}",
                v.goods()
            )));
        }
        if let Some(labels) = &labels {
            if labels.len() != m {
                return Err(Error::Domain(format!(
                    "{} good labels for {m} goods",
                    labels.len()
                )));
            }
        }
        let tables = if m <= TABULATE_LIMIT {
            let tables = valuations
                .iter()
                .map(ValuationFn::table)
                .collect::<Result<Vec<_>>>()?;
            Some(Arc::new(tables))
        } else {
            None
        };
        let full = Bundle::full(m);
        let grand = valuations.iter().map(|v| v.eval(full)).collect();
        Ok(Instance {
            valuations,
            m,
            labels,
            grand,
            tables,
        })
    }

    /// Instance where every agent has the same additive weights.
    pub fn additive(weights: &[Vec<i64>]) -> Result<Self> {
        let valuations = weights
            .iter()
            .map(|w| ValuationFn::additive(w.iter().map(|&x| Value::from(x)).collect()))
            .collect::<Result<Vec<_>>>()?;
        Instance::new(valuations, None)
    }

    pub fn n(&self) -> usize {
        self.valuations.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn goods(&self) -> Bundle {
        Bundle::full(self.m)
    }

    pub fn valuations(&self) -> &[ValuationFn] {
        &self.valuations
    }

    pub fn valuation(&self, agent: AgentId) -> &ValuationFn {
        &self.valuations[agent]
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, g: GoodId) -> String {
        match &self.labels {
            Some(labels) => labels[g].clone(),
            None => g.to_string(),
        }
    }

    /// Looks a good up by label, falling back to its decimal index.
    pub fn good_by_label(&self, label: &str) -> Option<GoodId> {
        self.labels
            .as_ref()
            .and_then(|ls| ls.iter().position(|l| l == label))
            .or_else(|| label.parse().ok().filter(|&g| g < self.m))
    }

    /// `v_agent(s)`. Panics if `s` holds a good outside `0..m`.
    pub fn value(&self, agent: AgentId, s: Bundle) -> Value {
        assert!(s.fits(self.m), "bundle {s:?} outside {} goods", self.m);
        match &self.tables {
            Some(t) => t[agent][s.index()],
            None => self.valuations[agent].eval(s),
        }
    }

    /// `v_agent(t ∪ s) − v_agent(s)`; `t` and `s` must be disjoint.
    pub fn marginal(&self, agent: AgentId, t: Bundle, s: Bundle) -> Value {
        debug_assert!(t.is_disjoint(s));
        self.value(agent, t.union(s)) - self.value(agent, s)
    }

    /// `v_agent(M)`.
    pub fn grand_value(&self, agent: AgentId) -> Value {
        self.grand[agent]
    }

    /// Full value table for one agent, shared when the instance keeps tables.
    pub fn table(&self, agent: AgentId) -> Result<std::borrow::Cow<'_, [Value]>> {
        match &self.tables {
            Some(t) => Ok(std::borrow::Cow::Borrowed(&t[agent])),
            None => self.valuations[agent].table().map(std::borrow::Cow::Owned),
        }
    }

    /// Per-agent verdict of the declared-class verifier.
    pub fn verify_classes(&self) -> Result<Vec<bool>> {
        if self.m > EXHAUSTIVE_LIMIT {
            return Err(Error::Size(format!(
                "class verification over {} goods exceeds {EXHAUSTIVE_LIMIT}",
                self.m
            )));
        }
        (0..self.n())
            .map(|i| {
                let table = self.table(i)?;
                Ok(self.valuations[i].class().verify_table(&table, self.m))
            })
            .collect()
    }
}

impl PartialEq for Instance {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m && self.valuations == other.valuations && self.labels == other.labels
    }
}

impl Eq for Instance {}

impl fmt::Debug for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Instance")
            .field("n", &self.n())
            .field("m", &self.m)
            .field("labels", &self.labels)
            .field("valuations", &self.valuations)
            .finish()
    }
}

impl Serialize for Instance {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        InstanceDoc::from(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Instance {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        InstanceDoc::deserialize(deserializer)?
            .into_instance()
            .map_err(serde::de::Error::custom)
    }
}

/// Disjoint bundles per agent plus a pool of unallocated goods.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Allocation {
    pub bundles: Vec<Bundle>,
    #[serde(default)]
    pub pool: Bundle,
}

impl Allocation {
    /// Nothing allocated: every good sits in the pool.
    pub fn empty(n: usize, m: usize) -> Self {
        Allocation {
            bundles: vec![Bundle::EMPTY; n],
            pool: Bundle::full(m),
        }
    }

    /// Bundles as given; whatever they leave out of `0..m` goes to the pool.
    pub fn with_pool(m: usize, bundles: Vec<Bundle>) -> Self {
        let held = bundles.iter().fold(Bundle::EMPTY, |a, &b| a.union(b));
        Allocation {
            pool: Bundle::full(m).difference(held),
            bundles,
        }
    }

    pub fn from_lists(m: usize, lists: &[&[GoodId]]) -> Self {
        Allocation::with_pool(
            m,
            lists
                .iter()
                .map(|l| Bundle::from_goods(l.iter().copied()))
                .collect(),
        )
    }

    pub fn n(&self) -> usize {
        self.bundles.len()
    }

    pub fn is_complete(&self) -> bool {
        self.pool.is_empty()
    }

    pub fn bundle(&self, agent: AgentId) -> Bundle {
        self.bundles[agent]
    }

    pub fn owner(&self, g: GoodId) -> Option<AgentId> {
        self.bundles.iter().position(|b| b.contains(g))
    }

    /// Every good held by some agent.
    pub fn allocated(&self) -> Bundle {
        self.bundles.iter().fold(Bundle::EMPTY, |a, &b| a.union(b))
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.bundles.iter().map(|b| b.len()).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "violation", rename_all = "snake_case")]
pub enum Violation {
    WrongBundleCount { expected: usize, found: usize },
    GoodOutOfRange { good: GoodId },
    DuplicateGood { good: GoodId },
    MissingGood { good: GoodId },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::WrongBundleCount { expected, found } => {
                write!(f, "expected {expected} bundles, found {found}")
            }
            Violation::GoodOutOfRange { good } => write!(f, "good {good} out of range"),
            Violation::DuplicateGood { good } => write!(f, "duplicate good {good}"),
            Violation::MissingGood { good } => write!(f, "missing good {good}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AllocationCheck {
    pub violations: Vec<Violation>,
    pub partial: bool,
}

impl AllocationCheck {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks bundle count, index ranges, disjointness and coverage of `0..m`.
pub fn validate_allocation(inst: &Instance, alloc: &Allocation) -> AllocationCheck {
    let mut violations = Vec::new();
    if alloc.n() != inst.n() {
        violations.push(Violation::WrongBundleCount {
            expected: inst.n(),
            found: alloc.n(),
        });
    }
    let goods = inst.goods();
    let mut seen = Bundle::EMPTY;
    let mut duplicated = Bundle::EMPTY;
    for b in alloc.bundles.iter().chain(std::iter::once(&alloc.pool)) {
        duplicated = duplicated.union(seen.intersection(*b));
        seen = seen.union(*b);
    }
    for g in seen.difference(goods) {
        violations.push(Violation::GoodOutOfRange { good: g });
    }
    for g in duplicated.intersection(goods) {
        violations.push(Violation::DuplicateGood { good: g });
    }
    for g in goods.difference(seen) {
        violations.push(Violation::MissingGood { good: g });
    }
    debug_assert!(inst.m() <= MAX_GOODS);
    AllocationCheck {
        violations,
        partial: !alloc.pool.is_empty(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn three_goods() -> Instance {
        Instance::additive(&[vec![1, 2, 3], vec![3, 2, 1]]).unwrap()
    }

    #[test]
    fn complete_partition_is_ok() {
        let inst = three_goods();
        let a = Allocation::from_lists(3, &[&[0, 2], &[1]]);
        let check = validate_allocation(&inst, &a);
        assert!(check.is_ok());
        assert!(!check.partial);
    }

    #[test]
    fn duplicate_good_is_reported() {
        let inst = three_goods();
        let a = Allocation {
            bundles: vec![Bundle::from_goods([0, 1]), Bundle::from_goods([1, 2])],
            pool: Bundle::EMPTY,
        };
        let check = validate_allocation(&inst, &a);
        assert_eq!(check.violations, vec![Violation::DuplicateGood { good: 1 }]);
        assert_eq!(check.violations[0].to_string(), "duplicate good 1");
    }

    #[test]
    fn pooled_goods_are_partial_not_violations() {
        let inst = three_goods();
        let a = Allocation::from_lists(3, &[&[0], &[]]);
        let check = validate_allocation(&inst, &a);
        assert!(check.is_ok());
        assert!(check.partial);
    }

    #[test]
    fn range_count_and_missing() {
        let inst = three_goods();
        let a = Allocation {
            bundles: vec![Bundle::from_goods([0, 5])],
            pool: Bundle::EMPTY,
        };
        let check = validate_allocation(&inst, &a);
        assert!(check.violations.contains(&Violation::WrongBundleCount {
            expected: 2,
            found: 1
        }));
        assert!(check
            .violations
            .contains(&Violation::GoodOutOfRange { good: 5 }));
        assert!(check
            .violations
            .contains(&Violation::MissingGood { good: 1 }));
    }

    #[test]
    fn instance_rejects_mismatched_goods() {
        let a = ValuationFn::additive(vec![Value::ONE; 2]).unwrap();
        let b = ValuationFn::additive(vec![Value::ONE; 3]).unwrap();
        assert!(Instance::new(vec![a, b], None).is_err());
        assert!(Instance::new(vec![], None).is_err());
    }

    #[test]
    fn tables_match_direct_evaluation() {
        let inst = three_goods();
        for s in inst.goods().subsets() {
            for i in 0..2 {
                assert_eq!(inst.value(i, s), inst.valuation(i).value(s).unwrap());
            }
        }
        assert_eq!(inst.grand_value(0), Value::int(6));
    }
}
