//! Valuation oracles over satiating goods.
//!
//! A [`ValuationFn`] is a normalized, non-negative set function over `m` goods
//! built from one of a handful of constructive [`Kind`]s. Marginal values may be
//! negative. The exhaustive verifiers at the bottom of this module decide
//! monotonicity, submodularity, subadditivity and additivity from a full value
//! table and are limited to [`EXHAUSTIVE_LIMIT`] goods.

use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::bundle::{Bundle, GoodId, MAX_GOODS};
use crate::error::{Error, Result};
use crate::value::Value;

/// Largest `m` for which tables and exhaustive verifiers are available.
pub const EXHAUSTIVE_LIMIT: usize = 20;

/// Largest coverage universe.
pub const MAX_ELEMENTS: usize = 128;

/// The valuation class an instance author claims for a valuation.
///
/// `MonotoneXos` is only ever checked as monotone and subadditive; XOS
/// membership itself holds by construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ValuationClass {
    Additive,
    MonotoneSubmodular,
    MonotoneXos,
    MonotoneSubadditive,
    SatiatingSubmodular,
    SatiatingSubadditive,
    MonotoneGeneral,
}

impl ValuationClass {
    pub const ALL: [ValuationClass; 7] = [
        ValuationClass::Additive,
        ValuationClass::MonotoneSubmodular,
        ValuationClass::MonotoneXos,
        ValuationClass::MonotoneSubadditive,
        ValuationClass::SatiatingSubmodular,
        ValuationClass::SatiatingSubadditive,
        ValuationClass::MonotoneGeneral,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ValuationClass::Additive => "additive",
            ValuationClass::MonotoneSubmodular => "monotone-submodular",
            ValuationClass::MonotoneXos => "monotone-XOS",
            ValuationClass::MonotoneSubadditive => "monotone-subadditive",
            ValuationClass::SatiatingSubmodular => "satiating-submodular",
            ValuationClass::SatiatingSubadditive => "satiating-subadditive",
            ValuationClass::MonotoneGeneral => "monotone-general",
        }
    }

    /// Additive valuations here always have non-negative weights, so they are monotone.
    pub fn is_monotone(self) -> bool {
        !matches!(
            self,
            ValuationClass::SatiatingSubmodular | ValuationClass::SatiatingSubadditive
        )
    }

    pub fn is_submodular(self) -> bool {
        matches!(
            self,
            ValuationClass::Additive
                | ValuationClass::MonotoneSubmodular
                | ValuationClass::SatiatingSubmodular
        )
    }

    pub fn is_subadditive(self) -> bool {
        !matches!(self, ValuationClass::MonotoneGeneral)
    }

    /// Checks a full value table against the properties this class promises.
    pub fn verify_table(self, table: &[Value], m: usize) -> bool {
        let monotone = || is_monotone_table(table, m);
        let submodular = || is_submodular_table(table, m);
        let subadditive = || is_subadditive_table(table, m);
        match self {
            ValuationClass::Additive => is_additive_table(table, m) && monotone(),
            ValuationClass::MonotoneSubmodular => monotone() && submodular(),
            ValuationClass::MonotoneXos | ValuationClass::MonotoneSubadditive => {
                monotone() && subadditive()
            }
            ValuationClass::SatiatingSubmodular => submodular(),
            ValuationClass::SatiatingSubadditive => subadditive(),
            ValuationClass::MonotoneGeneral => monotone(),
        }
    }
}

impl fmt::Display for ValuationClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for ValuationClass {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

impl<'de> Deserialize<'de> for ValuationClass {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(D::Error::custom)
    }
}

impl FromStr for ValuationClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ValuationClass::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownClass(s.to_string()))
    }
}

/// Weighted coverage: a bundle is worth the total weight of the elements its goods cover.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coverage {
    element_weights: Vec<Value>,
    covers: Vec<u128>,
}

impl Coverage {
    pub fn new(element_weights: Vec<Value>, covers: &[Vec<usize>]) -> Result<Self> {
        let universe = element_weights.len();
        if universe > MAX_ELEMENTS {
            return Err(Error::Domain(format!(
                "coverage universe of {universe} elements exceeds {MAX_ELEMENTS}"
            )));
        }
        if let Some(w) = element_weights.iter().find(|w| w.is_negative()) {
            return Err(Error::Domain(format!("negative element weight {w}")));
        }
        let covers = covers
            .iter()
            .enumerate()
            .map(|(g, elems)| {
                elems.iter().try_fold(0u128, |mask, &e| {
                    if e >= universe {
                        Err(Error::Domain(format!(
                            "good {g} covers element {e} outside a universe of {universe}"
                        )))
                    } else {
                        Ok(mask | 1u128 << e)
                    }
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Coverage {
            element_weights,
            covers,
        })
    }

    pub fn element_weights(&self) -> &[Value] {
        &self.element_weights
    }

    /// Covered element indices per good.
    pub fn covers(&self) -> Vec<Vec<usize>> {
        self.covers
            .iter()
            .map(|&mask| (0..MAX_ELEMENTS).filter(|e| mask >> e & 1 == 1).collect())
            .collect()
    }

    fn eval(&self, s: Bundle) -> Value {
        let covered = s.iter().fold(0u128, |acc, g| acc | self.covers[g]);
        (0..self.element_weights.len())
            .filter(|e| covered >> e & 1 == 1)
            .map(|e| self.element_weights[e])
            .sum()
    }
}

/// A marginal-value rule table with one conditional good.
///
/// Every good other than `trigger` contributes its `base` weight. The trigger
/// contributes `conditioned` when the bundle contains all of `condition`, and
/// `default` otherwise. Read as marginals: the trigger's marginal is
/// `conditioned` on top of any bundle containing `condition`, `default` on top of
/// any other bundle; a non-trigger good's marginal is its base weight, shifted by
/// `conditioned - default` when it is the good that completes `condition` while
/// the trigger is already present.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionalRule {
    pub base: Vec<Value>,
    pub trigger: GoodId,
    pub default: Value,
    pub condition: Bundle,
    pub conditioned: Value,
}

impl ConditionalRule {
    fn check(&self) -> Result<()> {
        let m = self.base.len();
        if self.trigger >= m {
            return Err(Error::Domain(format!(
                "rule trigger {} outside {m} goods",
                self.trigger
            )));
        }
        if !self.condition.fits(m) || self.condition.contains(self.trigger) {
            return Err(Error::Domain(
                "rule condition must be a set of non-trigger goods".into(),
            ));
        }
        Ok(())
    }

    /// Closed-form value.
    pub fn value(&self, s: Bundle) -> Value {
        let base: Value = s.without(self.trigger).iter().map(|g| self.base[g]).sum();
        if !s.contains(self.trigger) {
            base
        } else if self.condition.is_subset_of(s) {
            base + self.conditioned
        } else {
            base + self.default
        }
    }

    /// Marginal of adding `o` to `s`, read straight off the rule table.
    pub fn rule_marginal(&self, o: GoodId, s: Bundle) -> Value {
        debug_assert!(!s.contains(o));
        if o == self.trigger {
            return if self.condition.is_subset_of(s) {
                self.conditioned
            } else {
                self.default
            };
        }
        let completes = s.contains(self.trigger)
            && self.condition.contains(o)
            && self.condition.is_subset_of(s.with(o));
        if completes {
            self.base[o] + self.conditioned - self.default
        } else {
            self.base[o]
        }
    }

    /// Value obtained by adding goods one at a time in `order` and summing rule marginals.
    pub fn fold_value(&self, order: &[GoodId]) -> Value {
        let mut held = Bundle::EMPTY;
        let mut total = Value::ZERO;
        for &o in order {
            total += self.rule_marginal(o, held);
            held.insert(o);
        }
        total
    }
}

/// The constructive forms a valuation can take.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Kind {
    /// One weight per good.
    Additive(Vec<Value>),
    /// Maximum over additive clauses.
    Xos(Vec<Vec<Value>>),
    /// One value per bundle, indexed by bitmask; length `2^m`.
    Tabular(Vec<Value>),
    Coverage(Coverage),
    /// `g(|S|)` for `g` given on `0..=m`.
    ConcaveCardinality(Vec<Value>),
    Sum(Vec<Kind>),
    MarginalRule(ConditionalRule),
}

impl Kind {
    /// Number of goods the kind is defined over.
    pub fn goods(&self) -> Result<usize> {
        let m = match self {
            Kind::Additive(w) => w.len(),
            Kind::Xos(clauses) => {
                let first = clauses
                    .first()
                    .ok_or_else(|| Error::Domain("XOS valuation needs a clause".into()))?;
                if clauses.iter().any(|c| c.len() != first.len()) {
                    return Err(Error::Domain("XOS clauses differ in length".into()));
                }
                first.len()
            }
            Kind::Tabular(values) => {
                let len = values.len();
                if !len.is_power_of_two() {
                    return Err(Error::Domain(format!(
                        "tabular valuation has {len} entries, not a power of two"
                    )));
                }
                let m = len.trailing_zeros() as usize;
                if m > EXHAUSTIVE_LIMIT {
                    return Err(Error::Size(format!(
                        "tabular valuation over {m} goods exceeds {EXHAUSTIVE_LIMIT}"
                    )));
                }
                m
            }
            Kind::Coverage(c) => c.covers.len(),
            Kind::ConcaveCardinality(g) => {
                if g.is_empty() {
                    return Err(Error::Domain("cardinality table needs g(0)".into()));
                }
                g.len() - 1
            }
            Kind::Sum(parts) => {
                let first = parts
                    .first()
                    .ok_or_else(|| Error::Domain("sum valuation needs a part".into()))?
                    .goods()?;
                for p in &parts[1..] {
                    if p.goods()? != first {
                        return Err(Error::Domain("sum parts differ in good count".into()));
                    }
                }
                first
            }
            Kind::MarginalRule(rule) => {
                rule.check()?;
                rule.base.len()
            }
        };
        if m > MAX_GOODS {
            return Err(Error::Size(format!("{m} goods exceeds {MAX_GOODS}")));
        }
        Ok(m)
    }

    fn eval(&self, s: Bundle) -> Value {
        match self {
            Kind::Additive(w) => s.iter().map(|g| w[g]).sum(),
            Kind::Xos(clauses) => clauses
                .iter()
                .map(|c| s.iter().map(|g| c[g]).sum::<Value>())
                .max()
                .unwrap_or(Value::ZERO),
            Kind::Tabular(values) => values[s.index()],
            Kind::Coverage(c) => c.eval(s),
            Kind::ConcaveCardinality(g) => g[s.len()],
            Kind::Sum(parts) => parts.iter().map(|p| p.eval(s)).sum(),
            Kind::MarginalRule(rule) => rule.value(s),
        }
    }

    /// Sufficient structural condition for non-negativity, used beyond the exhaustive limit.
    fn structurally_nonnegative(&self) -> bool {
        let nonneg = |w: &[Value]| w.iter().all(|v| !v.is_negative());
        match self {
            Kind::Additive(w) => nonneg(w),
            Kind::Xos(clauses) => clauses.iter().any(|c| nonneg(c)),
            Kind::Tabular(values) => nonneg(values),
            Kind::Coverage(_) => true,
            Kind::ConcaveCardinality(g) => nonneg(g),
            Kind::Sum(parts) => parts.iter().all(Kind::structurally_nonnegative),
            Kind::MarginalRule(rule) => {
                nonneg(&rule.base) && !rule.default.is_negative() && !rule.conditioned.is_negative()
            }
        }
    }
}

/// A normalized non-negative valuation together with its declared class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValuationFn {
    kind: Kind,
    class: ValuationClass,
    m: usize,
}

impl ValuationFn {
    /// Validates shape, normalization and non-negativity. Non-negativity is
    /// checked exhaustively up to [`EXHAUSTIVE_LIMIT`] goods and structurally
    /// beyond it. The declared class is not verified here; see [`Self::verify_class`].
    pub fn new(kind: Kind, class: ValuationClass) -> Result<Self> {
        let m = kind.goods()?;
        let v = ValuationFn { kind, class, m };
        let empty = v.kind.eval(Bundle::EMPTY);
        if !empty.is_zero() {
            return Err(Error::Domain(format!(
                "not normalized: value of the empty bundle is {empty}"
            )));
        }
        if m <= EXHAUSTIVE_LIMIT {
            if let Some(s) = Bundle::full(m)
                .subsets()
                .find(|&s| v.kind.eval(s).is_negative())
            {
                return Err(Error::Domain(format!(
                    "negative value {} on bundle {s:?}",
                    v.kind.eval(s)
                )));
            }
        } else if !v.kind.structurally_nonnegative() {
            return Err(Error::Domain(format!(
                "cannot establish non-negativity over {m} goods"
            )));
        }
        Ok(v)
    }

    pub fn additive(weights: Vec<Value>) -> Result<Self> {
        ValuationFn::new(Kind::Additive(weights), ValuationClass::Additive)
    }

    pub fn kind(&self) -> &Kind {
        &self.kind
    }

    pub fn class(&self) -> ValuationClass {
        self.class
    }

    pub fn goods(&self) -> usize {
        self.m
    }

    fn check_bundle(&self, s: Bundle) -> Result<()> {
        if s.fits(self.m) {
            Ok(())
        } else {
            Err(Error::Domain(format!(
                "bundle {s:?} has goods outside 0..{}",
                self.m
            )))
        }
    }

    pub fn value(&self, s: Bundle) -> Result<Value> {
        self.check_bundle(s)?;
        Ok(self.kind.eval(s))
    }

    /// `v(T ∪ S) − v(S)` for disjoint `T` and `S`.
    pub fn marginal(&self, t: Bundle, s: Bundle) -> Result<Value> {
        self.check_bundle(t)?;
        self.check_bundle(s)?;
        if !t.is_disjoint(s) {
            return Err(Error::Contract(format!(
                "marginal of {t:?} on top of overlapping {s:?}"
            )));
        }
        Ok(self.kind.eval(t.union(s)) - self.kind.eval(s))
    }

    /// Unchecked evaluation for callers that already validated `s`.
    pub(crate) fn eval(&self, s: Bundle) -> Value {
        debug_assert!(s.fits(self.m));
        self.kind.eval(s)
    }

    /// Values of all `2^m` bundles indexed by bitmask.
    pub fn table(&self) -> Result<Vec<Value>> {
        if self.m > EXHAUSTIVE_LIMIT {
            return Err(Error::Size(format!(
                "tabulating {} goods exceeds {EXHAUSTIVE_LIMIT}",
                self.m
            )));
        }
        Ok((0..1u64 << self.m)
            .map(|bits| self.kind.eval(Bundle::from_bits(bits)))
            .collect())
    }

    pub fn is_monotone(&self) -> Result<bool> {
        Ok(is_monotone_table(&self.table()?, self.m))
    }

    pub fn is_submodular(&self) -> Result<bool> {
        Ok(is_submodular_table(&self.table()?, self.m))
    }

    pub fn is_subadditive(&self) -> Result<bool> {
        Ok(is_subadditive_table(&self.table()?, self.m))
    }

    pub fn is_additive(&self) -> Result<bool> {
        Ok(is_additive_table(&self.table()?, self.m))
    }

    /// Whether the valuation has every property its declared class promises.
    pub fn verify_class(&self) -> Result<bool> {
        Ok(self.class.verify_table(&self.table()?, self.m))
    }
}

/// `v(S ∪ {o}) ≥ v(S)` for all `S` and `o ∉ S`.
pub fn is_monotone_table(table: &[Value], m: usize) -> bool {
    debug_assert_eq!(table.len(), 1 << m);
    (0..table.len()).all(|s| {
        (0..m)
            .filter(|o| s >> o & 1 == 0)
            .all(|o| table[s | 1 << o] >= table[s])
    })
}

/// Local diminishing-returns test: `v(o₁|S) ≥ v(o₁|S ∪ {o₂})` for all `S` and distinct `o₁, o₂ ∉ S`.
pub fn is_submodular_table(table: &[Value], m: usize) -> bool {
    debug_assert_eq!(table.len(), 1 << m);
    (0..table.len()).all(|s| {
        (0..m).filter(|o1| s >> o1 & 1 == 0).all(|o1| {
            let gain = table[s | 1 << o1] - table[s];
            (0..m)
                .filter(|&o2| o2 != o1 && s >> o2 & 1 == 0)
                .all(|o2| gain >= table[s | 1 << o1 | 1 << o2] - table[s | 1 << o2])
        })
    })
}

/// `v(S ∪ T) ≤ v(S) + v(T)` for all disjoint `S`, `T`.
pub fn is_subadditive_table(table: &[Value], m: usize) -> bool {
    debug_assert_eq!(table.len(), 1 << m);
    let full = Bundle::full(m);
    (1..table.len()).all(|s| {
        let rest = full.difference(Bundle::from_bits(s as u64));
        rest.subsets()
            .map(Bundle::index)
            .filter(|&t| t != 0)
            .all(|t| table[s | t] <= table[s] + table[t])
    })
}

/// `v(S) = Σ_{o ∈ S} v({o})` for all `S`.
pub fn is_additive_table(table: &[Value], m: usize) -> bool {
    debug_assert_eq!(table.len(), 1 << m);
    (0..table.len()).all(|s| {
        let sum: Value = (0..m)
            .filter(|o| s >> o & 1 == 1)
            .map(|o| table[1 << o])
            .sum();
        table[s] == sum
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(xs: &[i64]) -> Vec<Value> {
        xs.iter().map(|&x| Value::from(x)).collect()
    }

    /// Value depends only on |S|: 2,2,3,4,5,6,7 for sizes 1..7.
    fn cardinality_table_xos7() -> ValuationFn {
        let mut clauses = vec![ints(&[1; 7])];
        for g in 0..7 {
            let mut c = vec![Value::ZERO; 7];
            c[g] = Value::int(2);
            clauses.push(c);
        }
        ValuationFn::new(Kind::Xos(clauses), ValuationClass::MonotoneXos).unwrap()
    }

    fn table2() -> ValuationFn {
        // a, b, c, d, g1, g2
        let rule = ConditionalRule {
            base: ints(&[2, 2, 2, 0, 3, 3]),
            trigger: 3,
            default: Value::int(2),
            condition: Bundle::from_goods([4, 5]),
            conditioned: Value::int(-5),
        };
        ValuationFn::new(
            Kind::MarginalRule(rule),
            ValuationClass::SatiatingSubmodular,
        )
        .unwrap()
    }

    fn intro() -> ValuationFn {
        let mut t = vec![Value::ZERO; 8];
        t[7] = Value::int(2);
        ValuationFn::new(Kind::Tabular(t), ValuationClass::MonotoneGeneral).unwrap()
    }

    #[test]
    fn xos7_values_follow_cardinality() {
        let v = cardinality_table_xos7();
        let expected = [0, 2, 2, 3, 4, 5, 6, 7];
        for s in Bundle::full(7).subsets() {
            assert_eq!(v.value(s).unwrap(), Value::from(expected[s.len()]));
        }
    }

    #[test]
    fn empty_bundle_is_zero() {
        for v in [cardinality_table_xos7(), table2(), intro()] {
            assert_eq!(v.value(Bundle::EMPTY).unwrap(), Value::ZERO);
        }
    }

    #[test]
    fn table2_values_and_marginals() {
        let v = table2();
        let s = Bundle::from_goods([4, 5, 3, 0]);
        assert_eq!(v.value(s).unwrap(), Value::int(3));
        assert_eq!(v.value(Bundle::full(6)).unwrap(), Value::int(7));
        let d = Bundle::singleton(3);
        assert_eq!(
            v.marginal(d, Bundle::from_goods([4, 5])).unwrap(),
            Value::int(-5)
        );
        assert_eq!(v.marginal(Bundle::EMPTY, s).unwrap(), Value::ZERO);
    }

    #[test]
    fn marginal_rejects_overlap_and_range() {
        let v = table2();
        let s = Bundle::from_goods([0, 1]);
        assert!(matches!(
            v.marginal(Bundle::singleton(1), s),
            Err(Error::Contract(_))
        ));
        assert!(matches!(
            v.value(Bundle::singleton(6)),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn class_verdicts_on_named_valuations() {
        let xos = cardinality_table_xos7();
        assert!(xos.is_monotone().unwrap());
        assert!(!xos.is_submodular().unwrap());
        assert!(xos.is_subadditive().unwrap());

        let t2 = table2();
        assert!(!t2.is_monotone().unwrap());
        assert!(t2.is_submodular().unwrap());

        let i = intro();
        assert!(i.is_monotone().unwrap());
        assert!(!i.is_subadditive().unwrap());

        let zero = ValuationFn::additive(vec![Value::ZERO; 4]).unwrap();
        assert!(zero.is_monotone().unwrap());
        assert!(zero.is_submodular().unwrap());
        assert!(zero.is_subadditive().unwrap());
        assert!(zero.verify_class().unwrap());
    }

    #[test]
    fn rule_folds_agree_with_closed_form() {
        let v = table2();
        let Kind::MarginalRule(rule) = v.kind() else {
            unreachable!()
        };
        for s in Bundle::full(6).subsets() {
            let forward: Vec<_> = s.iter().collect();
            let backward: Vec<_> = forward.iter().rev().copied().collect();
            assert_eq!(rule.fold_value(&forward), rule.value(s));
            assert_eq!(rule.fold_value(&backward), rule.value(s));
        }
    }

    #[test]
    fn rejects_unnormalized_and_negative() {
        let mut t = vec![Value::ZERO; 4];
        t[0] = Value::ONE;
        assert!(ValuationFn::new(Kind::Tabular(t), ValuationClass::MonotoneGeneral).is_err());
        let mut t = vec![Value::ZERO; 4];
        t[3] = Value::int(-1);
        assert!(ValuationFn::new(Kind::Tabular(t), ValuationClass::MonotoneGeneral).is_err());
        assert!(ValuationFn::new(
            Kind::Tabular(vec![Value::ZERO; 3]),
            ValuationClass::MonotoneGeneral
        )
        .is_err());
    }

    #[test]
    fn coverage_counts_union_once() {
        let c = Coverage::new(ints(&[1, 10, 100]), &[vec![0, 1], vec![1, 2], vec![]]).unwrap();
        let v = ValuationFn::new(Kind::Coverage(c), ValuationClass::MonotoneSubmodular).unwrap();
        assert_eq!(
            v.value(Bundle::from_goods([0, 1])).unwrap(),
            Value::int(111)
        );
        assert_eq!(v.value(Bundle::singleton(2)).unwrap(), Value::ZERO);
        assert!(v.verify_class().unwrap());
        assert!(Coverage::new(ints(&[1]), &[vec![1]]).is_err());
    }

    #[test]
    fn concave_cardinality_goes_negative_past_half() {
        // g(k) = k·(m+1−k), m = 4
        let g = ints(&[0, 4, 6, 6, 4]);
        let v = ValuationFn::new(
            Kind::ConcaveCardinality(g),
            ValuationClass::SatiatingSubmodular,
        )
        .unwrap();
        let three = Bundle::from_goods([0, 1, 2]);
        assert_eq!(
            v.marginal(Bundle::singleton(3), three).unwrap(),
            Value::int(-2)
        );
        assert!(v.is_submodular().unwrap());
        assert!(!v.is_monotone().unwrap());
    }

    #[test]
    fn class_names_round_trip() {
        for c in ValuationClass::ALL {
            assert_eq!(c.name().parse::<ValuationClass>().unwrap(), c);
            let json = serde_json::to_string(&c).unwrap();
            assert_eq!(serde_json::from_str::<ValuationClass>(&json).unwrap(), c);
        }
        assert!("gross-substitutes".parse::<ValuationClass>().is_err());
    }
}
