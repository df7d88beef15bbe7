use crate::bundle::Bundle;
use crate::error::{Error, Result};
use crate::fairness::{prop1_set, proportional_set};
use crate::instance::{Allocation, Instance};

use super::envy::improve;
use super::round_robin::{round_robin, Stop};
use super::trace::{RunTrace, TraceEvent};

/// PROP1 for satiating subadditive goods.
///
/// Starts with every good on agent 0, then repeatedly moves the lowest-index
/// good of the lowest-index proportional agent to the lowest-index agent that
/// is not PROP1, re-running [`improve`] after each move. At most `n·m`
/// iterations on subadditive inputs.
pub fn prop1_subadditive(inst: &Instance) -> Result<(Allocation, RunTrace)> {
    let (n, m) = (inst.n(), inst.m());
    let mut alloc = Allocation::empty(n, m);
    let mut trace = RunTrace::default();
    for good in 0..m {
        give(&mut alloc, &mut trace, 0, good);
    }
    let alloc = repair(inst, alloc, &mut trace)?;
    Ok((alloc, trace))
}

/// PROP1 for satiating submodular goods with `O(m)` item moves.
///
/// Round-robin in agent order up to the second-to-last round, the rest of the
/// goods to agent 0, then the same repair loop as [`prop1_subadditive`]. At
/// most `m` loop iterations on submodular inputs.
pub fn prop1_submodular_fast(inst: &Instance) -> Result<(Allocation, RunTrace)> {
    let order: Vec<_> = (0..inst.n()).collect();
    let (mut alloc, mut trace) = round_robin(inst, &order, Stop::SecondToLast)?;
    for good in alloc.pool.iter().collect::<Vec<_>>() {
        give(&mut alloc, &mut trace, 0, good);
    }
    let alloc = repair(inst, alloc, &mut trace)?;
    Ok((alloc, trace))
}

fn give(alloc: &mut Allocation, trace: &mut RunTrace, agent: usize, good: usize) {
    alloc.pool.remove(good);
    alloc.bundles[agent].insert(good);
    trace.push(TraceEvent::Assign { agent, good });
}

fn improve_logged(
    inst: &Instance,
    alloc: Allocation,
    trace: &mut RunTrace,
    loop_index: usize,
) -> (Allocation, Vec<usize>) {
    let (alloc, cycle) = improve(inst, &alloc);
    if !cycle.is_empty() {
        trace.push(TraceEvent::Rotate {
            cycle: cycle.clone(),
        });
    }
    let p1 = prop1_set(inst, &alloc);
    let mut reassigned = cycle;
    reassigned.sort_unstable();
    trace.push(TraceEvent::Checkpoint {
        loop_index,
        reassigned,
        proportional: proportional_set(inst, &alloc),
        prop1: p1.clone(),
    });
    (alloc, p1)
}

fn repair(inst: &Instance, alloc: Allocation, trace: &mut RunTrace) -> Result<Allocation> {
    let (n, m) = (inst.n(), inst.m());
    // Far above the proven bound; only reached when the class assumption fails.
    let cap = (n + 1) * (m + 1);
    let (mut alloc, mut p1) = improve_logged(inst, alloc, trace, 0);
    let mut loops = 0;
    while p1.len() < n {
        if loops == cap {
            return Err(Error::Invariant(format!(
                "no PROP1 allocation after {cap} loop iterations"
            )));
        }
        let i = (0..n)
            .find(|a| p1.binary_search(a).is_err())
            .expect("some agent is not PROP1");
        let j = *proportional_set(inst, &alloc)
            .first()
            .ok_or_else(|| Error::Invariant("no agent is proportional".into()))?;
        let good = alloc.bundles[j]
            .first()
            .ok_or_else(|| Error::Invariant(format!("proportional agent {j} holds nothing")))?;
        alloc.bundles[j].remove(good);
        alloc.bundles[i] = alloc.bundles[i].union(Bundle::singleton(good));
        loops += 1;
        trace.push(TraceEvent::Move {
            loop_index: loops,
            receiver: i,
            donor: j,
            good,
        });
        (alloc, p1) = improve_logged(inst, alloc, trace, loops);
    }
    trace.while_loop_executions = loops;
    Ok(alloc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fairness::is_prop1;
    use crate::instance::{fixture, generate, GenSpec};
    use crate::valuation::ValuationClass;

    #[test]
    fn rr_satiating_both_algorithms() {
        let inst = fixture("rr_satiating").unwrap().instance;
        for run in [prop1_subadditive, prop1_submodular_fast] {
            let (a, trace) = run(&inst).unwrap();
            assert!(a.is_complete());
            assert!(is_prop1(&inst, &a));
            assert!(trace.while_loop_executions <= 6);
            assert_eq!(trace.replay(2, 6).unwrap(), a);
        }
    }

    #[test]
    fn single_agent_takes_everything() {
        let inst = Instance::additive(&[vec![1, 2, 3]]).unwrap();
        let (a, trace) = prop1_subadditive(&inst).unwrap();
        assert_eq!(a.bundle(0), Bundle::full(3));
        assert_eq!(trace.while_loop_executions, 0);
    }

    #[test]
    fn checkpoints_are_monotone_and_bounded() {
        for seed in 0..40 {
            let spec = GenSpec::new(ValuationClass::SatiatingSubadditive, 3, 6, seed);
            let inst = generate(&spec).unwrap();
            let (a, trace) = prop1_subadditive(&inst).unwrap();
            assert!(is_prop1(&inst, &a));
            assert!(trace.while_loop_executions <= 18);
            let mut prev: Option<Vec<usize>> = None;
            for (_, reassigned, p, p1) in trace.checkpoints() {
                assert!(!p.is_empty(), "seed {seed}");
                assert!(reassigned.iter().all(|r| p.contains(r)));
                if let Some(prev) = &prev {
                    assert!(prev.iter().all(|x| p1.contains(x)));
                }
                prev = Some(p1.to_vec());
            }
        }
    }

    #[test]
    fn fast_stays_within_m_moves() {
        for seed in 0..40 {
            let spec = GenSpec::new(ValuationClass::SatiatingSubmodular, 3, 8, seed);
            let inst = generate(&spec).unwrap();
            let (a, trace) = prop1_submodular_fast(&inst).unwrap();
            assert!(is_prop1(&inst, &a));
            assert!(trace.while_loop_executions <= 8);
            assert_eq!(trace.replay(3, 8).unwrap(), a);
        }
    }
}
