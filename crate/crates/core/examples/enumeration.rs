//! Exhaustive enumeration: fairness sets and the Pareto frontier of xos7.

use std::collections::BTreeMap;

use propone::instance::fixture;
use propone::oracle::{allocation_at, allocation_count, fairness_sets, size_profile};

fn main() -> propone::error::Result<()> {
    println!("3 agents, 7 goods: {} allocations", allocation_count(3, 7)?);
    println!("index 5 -> {:?}", allocation_at(3, 7, 5).sizes());

    let inst = fixture("xos7")?.instance;
    let sets = fairness_sets(&inst)?;
    println!(
        "EF1 {}, PROP1 {}, MEF1 {}, Pareto-optimal {}",
        sets.ef1.len(),
        sets.prop1.len(),
        sets.mef1.len(),
        sets.pareto_optimal.len()
    );
    let mut shapes: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    for &k in &sets.pareto_optimal {
        *shapes
            .entry(size_profile(&allocation_at(3, 7, k)))
            .or_default() += 1;
    }
    for (shape, count) in shapes {
        println!("  Pareto-optimal with sizes {shape:?}: {count}");
    }
    Ok(())
}
