use serde::{Deserialize, Serialize};

use crate::bundle::{AgentId, GoodId};
use crate::error::{Error, Result};
use crate::instance::Allocation;
use crate::value::Value;

use super::envy::rotate;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "event", rename_all = "snake_case")]
pub enum TraceEvent {
    /// A round-robin turn. `good` is `None` when the agent took a padding dummy.
    Pick {
        round: usize,
        agent: AgentId,
        good: Option<GoodId>,
        marginal: Value,
    },
    /// A pooled good handed to an agent outside of round-robin.
    Assign { agent: AgentId, good: GoodId },
    /// One while-loop iteration moving `good` from `donor` to `receiver`.
    Move {
        loop_index: usize,
        receiver: AgentId,
        donor: AgentId,
        good: GoodId,
    },
    /// `cycle[t]` takes the bundle of `cycle[t + 1]`; the last takes the first's.
    Rotate { cycle: Vec<AgentId> },
    /// State after an improvement step; `loop_index` 0 is before the while-loop.
    Checkpoint {
        loop_index: usize,
        reassigned: Vec<AgentId>,
        proportional: Vec<AgentId>,
        prop1: Vec<AgentId>,
    },
}

/// Ordered log of one algorithm run plus its counters.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunTrace {
    pub events: Vec<TraceEvent>,
    pub while_loop_executions: usize,
    /// Single-good allocations and reallocations (picks, assignments, moves).
    pub item_moves: usize,
    pub rotations: usize,
}

impl RunTrace {
    pub(crate) fn push(&mut self, event: TraceEvent) {
        match &event {
            TraceEvent::Pick { good: Some(_), .. }
            | TraceEvent::Assign { .. }
            | TraceEvent::Move { .. } => self.item_moves += 1,
            TraceEvent::Rotate { .. } => self.rotations += 1,
            _ => {}
        }
        self.events.push(event);
    }

    /// Re-applies the events to an empty allocation.
    pub fn replay(&self, n: usize, m: usize) -> Result<Allocation> {
        let mut alloc = Allocation::empty(n, m);
        let take = |alloc: &mut Allocation, agent: AgentId, good: GoodId| {
            if agent >= n || !alloc.pool.contains(good) {
                return Err(Error::Invariant(format!(
                    "replay: good {good} is not pooled for agent {agent}"
                )));
            }
            alloc.pool.remove(good);
            alloc.bundles[agent].insert(good);
            Ok(())
        };
        for event in &self.events {
            match event {
                TraceEvent::Pick {
                    agent,
                    good: Some(good),
                    ..
                }
                | TraceEvent::Assign { agent, good } => take(&mut alloc, *agent, *good)?,
                TraceEvent::Move {
                    receiver,
                    donor,
                    good,
                    ..
                } => {
                    if !alloc.bundles.get(*donor).is_some_and(|b| b.contains(*good))
                        || *receiver >= n
                    {
                        return Err(Error::Invariant(format!(
                            "replay: agent {donor} does not hold good {good}"
                        )));
                    }
                    alloc.bundles[*donor].remove(*good);
                    alloc.bundles[*receiver].insert(*good);
                }
                TraceEvent::Rotate { cycle } => rotate(&mut alloc, cycle),
                TraceEvent::Pick { good: None, .. } | TraceEvent::Checkpoint { .. } => {}
            }
        }
        Ok(alloc)
    }

    /// One JSON object per event, then a summary line with the counters.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for e in &self.events {
            out.push_str(&serde_json::to_string(e).expect("trace events serialize"));
            out.push('\n');
        }
        let summary = serde_json::json!({
            "event": "summary",
            "while_loop_executions": self.while_loop_executions,
            "item_moves": self.item_moves,
            "rotations": self.rotations,
        });
        out.push_str(&summary.to_string());
        out.push('\n');
        out
    }

    /// `(loop_index, reassigned, proportional, prop1)` for each checkpoint, in order.
    pub fn checkpoints(&self) -> impl Iterator<Item = (usize, &[AgentId], &[AgentId], &[AgentId])> {
        self.events.iter().filter_map(|e| match e {
            TraceEvent::Checkpoint {
                loop_index,
                reassigned,
                proportional,
                prop1,
            } => Some((*loop_index, &reassigned[..], &proportional[..], &prop1[..])),
            _ => None,
        })
    }
}
