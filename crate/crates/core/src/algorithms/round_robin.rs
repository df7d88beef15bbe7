use crate::bundle::{AgentId, Bundle};
use crate::error::{Error, Result};
use crate::instance::{Allocation, Instance};
use crate::value::Value;

use super::trace::{RunTrace, TraceEvent};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Stop {
    /// Run every round; the result is complete.
    #[default]
    Complete,
    /// Stop after round `L − 1`, where `L = ⌈m/n⌉`; unpicked goods stay in the pool.
    SecondToLast,
}

/// Agents take turns in `order`, each picking the available good with the largest
/// marginal value for its current bundle (lowest index on ties), even when that
/// marginal is negative.
///
/// When `n` does not divide `m`, the good set is padded with dummy goods that
/// have zero marginal for everyone. A dummy is chosen only when no real good has
/// a non-negative marginal, and dummies never appear in the output.
pub fn round_robin(
    inst: &Instance,
    order: &[AgentId],
    stop: Stop,
) -> Result<(Allocation, RunTrace)> {
    let n = inst.n();
    let mut seen = vec![false; n];
    if order.len() != n
        || !order
            .iter()
            .all(|&a| a < n && !std::mem::replace(&mut seen[a], true))
    {
        return Err(Error::Contract(format!(
            "agent order {order:?} is not a permutation of 0..{n}"
        )));
    }
    let m = inst.m();
    let rounds = m.div_ceil(n);
    let mut dummies = rounds * n - m;
    let last = match stop {
        Stop::Complete => rounds,
        Stop::SecondToLast => rounds.saturating_sub(1),
    };

    let mut alloc = Allocation::empty(n, m);
    let mut trace = RunTrace::default();
    for round in 1..=last {
        for &agent in order {
            let held = alloc.bundles[agent];
            let best = alloc
                .pool
                .iter()
                .map(|g| (g, inst.marginal(agent, Bundle::singleton(g), held)))
                // Strictly greater keeps the first, i.e. lowest-index, maximizer.
                .fold(None, |acc: Option<(usize, Value)>, (g, v)| match acc {
                    Some((_, bv)) if bv >= v => acc,
                    _ => Some((g, v)),
                });
            let pick = match best {
                Some((g, v)) if !(v.is_negative() && dummies > 0) => Some((g, v)),
                _ if dummies > 0 => None,
                _ => unreachable!("padding leaves a good for every turn"),
            };
            match pick {
                Some((good, marginal)) => {
                    alloc.pool.remove(good);
                    alloc.bundles[agent].insert(good);
                    trace.push(TraceEvent::Pick {
                        round,
                        agent,
                        good: Some(good),
                        marginal,
                    });
                }
                None => {
                    dummies -= 1;
                    trace.push(TraceEvent::Pick {
                        round,
                        agent,
                        good: None,
                        marginal: Value::ZERO,
                    });
                }
            }
        }
    }
    Ok((alloc, trace))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fairness::{is_prop1, is_prop1_for, Prop1Witness};
    use crate::instance::fixture;
    use crate::valuation::{Kind, ValuationClass, ValuationFn};

    #[test]
    fn rr_satiating_complete_strands_agent_two() {
        let inst = fixture("rr_satiating").unwrap().instance;
        let (a, trace) = round_robin(&inst, &[0, 1], Stop::Complete).unwrap();
        assert_eq!(a, Allocation::from_lists(6, &[&[0, 1, 2], &[3, 4, 5]]));
        assert_eq!(is_prop1_for(&inst, &a, 1), Prop1Witness::Unsatisfied);
        // The last pick of agent two is d at marginal −5.
        let last = trace.events.last().unwrap();
        assert_eq!(
            *last,
            TraceEvent::Pick {
                round: 3,
                agent: 1,
                good: Some(3),
                marginal: Value::int(-5)
            }
        );
        assert_eq!(trace.replay(2, 6).unwrap(), a);
    }

    #[test]
    fn rr_satiating_second_to_last_is_prop1() {
        let inst = fixture("rr_satiating").unwrap().instance;
        let (a, _) = round_robin(&inst, &[0, 1], Stop::SecondToLast).unwrap();
        assert_eq!(a, Allocation::from_lists(6, &[&[0, 1], &[4, 5]]));
        assert_eq!(a.pool, Bundle::from_goods([2, 3]));
        assert!(is_prop1(&inst, &a));
    }

    #[test]
    fn rr_xos_either_order() {
        let inst = fixture("rr_xos").unwrap().instance;
        let expect = Allocation::from_lists(6, &[&[0, 1, 2], &[3, 4, 5]]);
        for order in [[0, 1], [1, 0]] {
            let (a, _) = round_robin(&inst, &order, Stop::Complete).unwrap();
            assert_eq!(a, expect, "{order:?}");
            assert!(!is_prop1(&inst, &a));
        }
    }

    fn concave(g: &[i64]) -> ValuationFn {
        let g = g.iter().map(|&x| Value::from(x)).collect();
        ValuationFn::new(
            Kind::ConcaveCardinality(g),
            ValuationClass::SatiatingSubmodular,
        )
        .unwrap()
    }

    #[test]
    fn dummy_beats_negative_goods() {
        // n = 2, m = 3 pads one dummy. Agent 0's third good would be worth −1.
        let inst = Instance::new(
            vec![
                concave(&[0, 3, 2, 0]),
                ValuationFn::additive(vec![Value::ONE; 3]).unwrap(),
            ],
            None,
        )
        .unwrap();
        let (a, trace) = round_robin(&inst, &[0, 1], Stop::Complete).unwrap();
        assert_eq!(a, Allocation::from_lists(3, &[&[0], &[1, 2]]));
        assert!(matches!(
            trace.events[2],
            TraceEvent::Pick {
                agent: 0,
                good: None,
                ..
            }
        ));
        assert_eq!(trace.replay(2, 3).unwrap(), a);
    }

    #[test]
    fn negative_pick_is_forced_without_padding() {
        let inst = Instance::new(vec![concave(&[0, 3, 1])], None).unwrap();
        let (a, trace) = round_robin(&inst, &[0], Stop::Complete).unwrap();
        assert!(a.is_complete());
        assert!(matches!(
            trace.events[1],
            TraceEvent::Pick { marginal, .. } if marginal == Value::int(-2)
        ));
    }

    #[test]
    fn bad_order_and_empty_instance() {
        let inst = Instance::additive(&[vec![1], vec![1]]).unwrap();
        assert!(round_robin(&inst, &[0, 0], Stop::Complete).is_err());
        assert!(round_robin(&inst, &[0], Stop::Complete).is_err());
        let empty = Instance::additive(&[vec![], vec![]]).unwrap();
        let (a, trace) = round_robin(&empty, &[0, 1], Stop::SecondToLast).unwrap();
        assert!(a.is_complete() && trace.events.is_empty());
    }
}
