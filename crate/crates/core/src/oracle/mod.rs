//! Exhaustive ground truth over all complete allocations.
//!
//! Allocations of `m` goods to `n` agents are numbered `0..n^m` in radix order:
//! the owner of good `g` is digit `g` of the index in base `n`, so good 0 varies
//! fastest.

mod claims;

pub use claims::{verify_all, verify_claim, ClaimId, Counterexample, TheoremSuiteResult};

use std::collections::HashSet;

use serde::Serialize;

use crate::bundle::Bundle;
use crate::error::{Error, Result};
use crate::fairness;
use crate::instance::{Allocation, Instance};
use crate::value::Value;

/// Environment variable overriding [`DEFAULT_ENUM_CAP`].
pub const ENUM_CAP_VAR: &str = "PROPONE_ENUM_CAP";
pub const DEFAULT_ENUM_CAP: u64 = 10_000_000;

/// The enumeration cap in effect. Unparseable overrides fall back to the default.
pub fn enum_cap() -> u64 {
    std::env::var(ENUM_CAP_VAR)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_ENUM_CAP)
}

/// `n^m`, or a size error when it overflows or exceeds the cap.
pub fn allocation_count(n: usize, m: usize) -> Result<u64> {
    let cap = enum_cap();
    (n as u64)
        .checked_pow(m as u32)
        .filter(|&c| c <= cap)
        .ok_or_else(|| {
            Error::Size(format!(
                "{n}^{m} allocations exceed the enumeration cap {cap}"
            ))
        })
}

/// The allocation with radix index `index`.
pub fn allocation_at(n: usize, m: usize, mut index: u64) -> Allocation {
    let mut bundles = vec![Bundle::EMPTY; n];
    for g in 0..m {
        let owner = (index % n as u64) as usize;
        index /= n as u64;
        bundles[owner].insert(g);
    }
    Allocation::with_pool(m, bundles)
}

/// Every complete allocation exactly once, in radix order.
pub fn enumerate_allocations(n: usize, m: usize) -> Result<impl Iterator<Item = Allocation>> {
    let count = allocation_count(n, m)?;
    Ok((0..count).map(move |k| allocation_at(n, m, k)))
}

/// Indices (into the radix order) of the allocations in each class.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct FairnessSets {
    pub total: u64,
    pub ef1: Vec<u64>,
    pub prop1: Vec<u64>,
    pub mef1: Vec<u64>,
    pub pareto_optimal: Vec<u64>,
}

pub fn fairness_sets(inst: &Instance) -> Result<FairnessSets> {
    let (n, m) = (inst.n(), inst.m());
    let total = allocation_count(n, m)?;
    let mut sets = FairnessSets {
        total,
        ..FairnessSets::default()
    };
    let mut values: Vec<Vec<Value>> = Vec::with_capacity(total as usize);
    for k in 0..total {
        let a = allocation_at(n, m, k);
        if fairness::is_ef1(inst, &a) {
            sets.ef1.push(k);
        }
        if fairness::is_prop1(inst, &a) {
            sets.prop1.push(k);
        }
        if fairness::is_mef1(inst, &a) {
            sets.mef1.push(k);
        }
        values.push((0..n).map(|i| inst.value(i, a.bundle(i))).collect());
    }
    // Dominance only depends on value vectors, so compare the distinct ones.
    let distinct: Vec<&Vec<Value>> = {
        let mut seen = HashSet::new();
        values.iter().filter(|v| seen.insert(*v)).collect()
    };
    let undominated: HashSet<&Vec<Value>> = distinct
        .iter()
        .filter(|v| !distinct.iter().any(|w| dominates_vec(w, v)))
        .copied()
        .collect();
    sets.pareto_optimal = (0..total)
        .filter(|&k| undominated.contains(&values[k as usize]))
        .collect();
    Ok(sets)
}

fn dominates_vec(a: &[Value], b: &[Value]) -> bool {
    a.iter().zip(b).all(|(x, y)| x >= y) && a != b
}

/// Bundle sizes, sorted descending; equal for allocations that differ by an agent permutation.
pub fn size_profile(alloc: &Allocation) -> Vec<usize> {
    let mut sizes = alloc.sizes();
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    sizes
}
