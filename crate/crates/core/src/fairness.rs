//! Exact fairness and efficiency checkers.
//!
//! Proportionality tests are done in cleared form, `n·v_i(A_i) ≥ v_i(M)`, so
//! integral inputs never leave the integers. All witnesses are the lowest-index
//! good that works.

use std::cmp::Ordering;

use serde::Serialize;

use crate::bundle::{AgentId, Bundle, GoodId};
use crate::error::{Error, Result};
use crate::instance::{Allocation, Instance};
use crate::oracle;
use crate::value::Value;

/// How agent `i` meets (or misses) PROP1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "good", rename_all = "snake_case")]
pub enum Prop1Witness {
    AlreadyProportional,
    /// Adding this good, which `i` does not hold, lifts `i` to its share.
    WithGood(GoodId),
    Unsatisfied,
}

impl Prop1Witness {
    pub fn is_satisfied(self) -> bool {
        self != Prop1Witness::Unsatisfied
    }
}

/// Verdict for one ordered pair `(i, j)` under EF1 or MEF1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "good", rename_all = "snake_case")]
pub enum PairVerdict {
    /// EF1: `i` does not envy `j` at all. MEF1: `A_j` is empty.
    Holds,
    /// The condition holds once this good leaves `A_j`.
    UpToGood(GoodId),
    Violated,
}

impl PairVerdict {
    pub fn is_satisfied(self) -> bool {
        self != PairVerdict::Violated
    }
}

/// `n·v_i(A_i) ≥ v_i(M)`, with no completeness check.
pub(crate) fn meets_share(inst: &Instance, i: AgentId, bundle: Bundle) -> bool {
    inst.value(i, bundle).scale(inst.n()) >= inst.grand_value(i)
}

pub fn is_proportional_for(inst: &Instance, alloc: &Allocation, i: AgentId) -> Result<bool> {
    if !alloc.is_complete() {
        return Err(Error::Contract(
            "proportionality is only defined on complete allocations".into(),
        ));
    }
    Ok(meets_share(inst, i, alloc.bundle(i)))
}

/// PROP1 for one agent. Works on partial allocations too: candidate goods range
/// over everything the agent does not hold, pooled goods included.
pub fn is_prop1_for(inst: &Instance, alloc: &Allocation, i: AgentId) -> Prop1Witness {
    let own = alloc.bundle(i);
    if meets_share(inst, i, own) {
        return Prop1Witness::AlreadyProportional;
    }
    inst.goods()
        .difference(own)
        .iter()
        .find(|&g| meets_share(inst, i, own.with(g)))
        .map_or(Prop1Witness::Unsatisfied, Prop1Witness::WithGood)
}

pub fn is_prop1(inst: &Instance, alloc: &Allocation) -> bool {
    (0..inst.n()).all(|i| is_prop1_for(inst, alloc, i).is_satisfied())
}

/// Agents meeting their proportional share.
pub fn proportional_set(inst: &Instance, alloc: &Allocation) -> Vec<AgentId> {
    (0..inst.n())
        .filter(|&i| meets_share(inst, i, alloc.bundle(i)))
        .collect()
}

/// Agents meeting PROP1.
pub fn prop1_set(inst: &Instance, alloc: &Allocation) -> Vec<AgentId> {
    (0..inst.n())
        .filter(|&i| is_prop1_for(inst, alloc, i).is_satisfied())
        .collect()
}

/// `v_i(A_i) ≥ v_i(A_j)`, or the same after dropping one good from `A_j`.
pub fn ef1_pair(inst: &Instance, alloc: &Allocation, i: AgentId, j: AgentId) -> PairVerdict {
    let own = inst.value(i, alloc.bundle(i));
    let other = alloc.bundle(j);
    if own >= inst.value(i, other) {
        return PairVerdict::Holds;
    }
    other
        .iter()
        .find(|&g| own >= inst.value(i, other.without(g)))
        .map_or(PairVerdict::Violated, PairVerdict::UpToGood)
}

pub fn is_ef1(inst: &Instance, alloc: &Allocation) -> bool {
    ordered_pairs(inst.n()).all(|(i, j)| ef1_pair(inst, alloc, i, j).is_satisfied())
}

/// `v_i(A_i) ≥ v_i(A_j ∖ {g} | A_i)` for some `g ∈ A_j`; vacuous when `A_j` is empty.
///
/// Meaningful for monotone instances only.
pub fn mef1_pair(inst: &Instance, alloc: &Allocation, i: AgentId, j: AgentId) -> PairVerdict {
    let own = alloc.bundle(i);
    let other = alloc.bundle(j);
    if other.is_empty() {
        return PairVerdict::Holds;
    }
    let own_value = inst.value(i, own);
    other
        .iter()
        .find(|&g| own_value >= inst.marginal(i, other.without(g), own))
        .map_or(PairVerdict::Violated, PairVerdict::UpToGood)
}

pub fn is_mef1(inst: &Instance, alloc: &Allocation) -> bool {
    ordered_pairs(inst.n()).all(|(i, j)| mef1_pair(inst, alloc, i, j).is_satisfied())
}

fn ordered_pairs(n: usize) -> impl Iterator<Item = (AgentId, AgentId)> {
    (0..n).flat_map(move |i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
}

/// Number of agents with positive value, then the product of those values.
/// Ordered lexicographically, so `max` picks the Nash welfare maximizer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct NashScore {
    pub count_positive: usize,
    pub product_positive: Value,
}

impl Ord for NashScore {
    fn cmp(&self, other: &Self) -> Ordering {
        self.count_positive
            .cmp(&other.count_positive)
            .then_with(|| self.product_positive.cmp(&other.product_positive))
    }
}

impl PartialOrd for NashScore {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub fn nash_score(inst: &Instance, alloc: &Allocation) -> NashScore {
    let positive: Vec<Value> = (0..inst.n())
        .map(|i| inst.value(i, alloc.bundle(i)))
        .filter(Value::is_positive)
        .collect();
    NashScore {
        count_positive: positive.len(),
        product_positive: positive.iter().fold(Value::ONE, |acc, &v| acc * v),
    }
}

/// Every agent weakly prefers `a` to `b` and one strictly does.
pub fn dominates(inst: &Instance, a: &Allocation, b: &Allocation) -> bool {
    let mut strict = false;
    for i in 0..inst.n() {
        match inst.value(i, a.bundle(i)).cmp(&inst.value(i, b.bundle(i))) {
            Ordering::Less => return false,
            Ordering::Greater => strict = true,
            Ordering::Equal => {}
        }
    }
    strict
}

/// No complete allocation dominates `alloc`. Exhaustive over all `n^m` allocations.
pub fn is_pareto_optimal(inst: &Instance, alloc: &Allocation) -> Result<bool> {
    if !alloc.is_complete() {
        return Err(Error::Contract(
            "Pareto optimality is checked against complete allocations only".into(),
        ));
    }
    Ok(!oracle::enumerate_allocations(inst.n(), inst.m())?.any(|b| dominates(inst, &b, alloc)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AgentReport {
    pub agent: AgentId,
    pub value: Value,
    /// `v_i(M) / n`.
    pub share: Value,
    /// `None` on partial allocations.
    pub proportional: Option<bool>,
    pub prop1: Prop1Witness,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairReport {
    pub envier: AgentId,
    pub other: AgentId,
    pub ef1: PairVerdict,
    pub mef1: PairVerdict,
}

/// All per-agent and per-pair verdicts for one allocation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FairnessReport {
    pub complete: bool,
    pub agents: Vec<AgentReport>,
    pub pairs: Vec<PairReport>,
    pub is_proportional: Option<bool>,
    pub is_prop1: bool,
    pub is_ef1: bool,
    pub is_mef1: bool,
    pub nash: NashScore,
}

impl FairnessReport {
    pub fn new(inst: &Instance, alloc: &Allocation) -> Self {
        let complete = alloc.is_complete();
        let n = inst.n();
        let agents: Vec<AgentReport> = (0..n)
            .map(|i| AgentReport {
                agent: i,
                value: inst.value(i, alloc.bundle(i)),
                share: inst.grand_value(i) * Value::new(1, n as i128).expect("n ≥ 1"),
                proportional: complete.then(|| meets_share(inst, i, alloc.bundle(i))),
                prop1: is_prop1_for(inst, alloc, i),
            })
            .collect();
        let pairs: Vec<PairReport> = ordered_pairs(n)
            .map(|(i, j)| PairReport {
                envier: i,
                other: j,
                ef1: ef1_pair(inst, alloc, i, j),
                mef1: mef1_pair(inst, alloc, i, j),
            })
            .collect();
        FairnessReport {
            complete,
            is_proportional: complete.then(|| agents.iter().all(|a| a.proportional == Some(true))),
            is_prop1: agents.iter().all(|a| a.prop1.is_satisfied()),
            is_ef1: pairs.iter().all(|p| p.ef1.is_satisfied()),
            is_mef1: pairs.iter().all(|p| p.mef1.is_satisfied()),
            nash: nash_score(inst, alloc),
            agents,
            pairs,
        }
    }
}
