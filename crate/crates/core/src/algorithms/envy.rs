use crate::bundle::{AgentId, Bundle};
use crate::error::{Error, Result};
use crate::instance::{Allocation, Instance};

use super::trace::{RunTrace, TraceEvent};

/// Directed graph over agents, stored as sorted successor lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnvyGraph {
    successors: Vec<Vec<AgentId>>,
}

impl EnvyGraph {
    /// One edge per agent, toward the agent whose bundle it values most among
    /// the others (lowest index on ties). Empty when `n = 1`.
    pub fn most_envied(inst: &Instance, alloc: &Allocation) -> Self {
        let n = inst.n();
        let successors = (0..n)
            .map(|i| {
                (0..n)
                    .filter(|&j| j != i)
                    .map(|j| (j, inst.value(i, alloc.bundle(j))))
                    .fold(None, |best: Option<(AgentId, _)>, (j, v)| match best {
                        Some((_, bv)) if bv >= v => best,
                        _ => Some((j, v)),
                    })
                    .map(|(j, _)| j)
                    .into_iter()
                    .collect()
            })
            .collect();
        EnvyGraph { successors }
    }

    /// Edge `(i, j)` iff `v_i(A_j) > v_i(A_i)`.
    pub fn strict_envy(inst: &Instance, alloc: &Allocation) -> Self {
        let n = inst.n();
        let successors = (0..n)
            .map(|i| {
                let own = inst.value(i, alloc.bundle(i));
                (0..n)
                    .filter(|&j| j != i && inst.value(i, alloc.bundle(j)) > own)
                    .collect()
            })
            .collect();
        EnvyGraph { successors }
    }

    pub fn n(&self) -> usize {
        self.successors.len()
    }

    pub fn successors(&self, i: AgentId) -> &[AgentId] {
        &self.successors[i]
    }

    pub fn has_edge(&self, i: AgentId, j: AgentId) -> bool {
        self.successors[i].binary_search(&j).is_ok()
    }

    /// Agents nobody points at.
    pub fn unenvied(&self) -> Vec<AgentId> {
        let mut envied = vec![false; self.n()];
        for s in &self.successors {
            for &j in s {
                envied[j] = true;
            }
        }
        (0..self.n()).filter(|&i| !envied[i]).collect()
    }

    /// A directed cycle through the lowest-index agent that lies on any cycle,
    /// found by depth-first search over ascending successors. The cycle starts
    /// at that agent. On a graph with one out-edge per node this is the cycle
    /// reached by following edges from it.
    pub fn find_cycle(&self) -> Option<Vec<AgentId>> {
        (0..self.n()).find_map(|start| self.cycle_through(start))
    }

    fn cycle_through(&self, start: AgentId) -> Option<Vec<AgentId>> {
        // Nodes below `start` lie on no cycle, so they are skipped.
        let mut visited = vec![false; self.n()];
        let mut path = vec![start];
        let mut cursor = vec![0usize];
        visited[start] = true;
        while let Some(&node) = path.last() {
            let k = cursor.last_mut().expect("cursor tracks path");
            match self.successors[node].get(*k) {
                None => {
                    path.pop();
                    cursor.pop();
                }
                Some(&next) => {
                    *k += 1;
                    if next == start {
                        return Some(path);
                    }
                    if next > start && !visited[next] {
                        visited[next] = true;
                        path.push(next);
                        cursor.push(0);
                    }
                }
            }
        }
        None
    }
}

/// `cycle[t]` receives the bundle of `cycle[t + 1]`, and the last receives the first's.
pub fn rotate(alloc: &mut Allocation, cycle: &[AgentId]) {
    if let Some(&first) = cycle.first() {
        let head = alloc.bundles[first];
        for w in cycle.windows(2) {
            alloc.bundles[w[0]] = alloc.bundles[w[1]];
        }
        alloc.bundles[*cycle.last().expect("non-empty")] = head;
    }
}

/// If some agent weakly prefers its own bundle to every other, returns the
/// allocation unchanged with no reassigned agents. Otherwise rotates bundles
/// along a cycle of the most-envied graph and returns the cycle's agents in
/// rotation order.
pub fn improve(inst: &Instance, alloc: &Allocation) -> (Allocation, Vec<AgentId>) {
    let n = inst.n();
    let content = (0..n).any(|i| {
        let own = inst.value(i, alloc.bundle(i));
        (0..n).all(|j| own >= inst.value(i, alloc.bundle(j)))
    });
    if content {
        return (alloc.clone(), Vec::new());
    }
    let cycle = EnvyGraph::most_envied(inst, alloc)
        .find_cycle()
        .expect("out-degree one on every node forces a cycle");
    let mut out = alloc.clone();
    rotate(&mut out, &cycle);
    (out, cycle)
}

/// Goods are handed out in index order, each to the lowest-index agent nobody
/// strictly envies. Whenever every agent is envied, a strict-envy cycle is
/// rotated until someone is not.
///
/// Requires every declared class to be monotone.
pub fn envy_cycle_elimination(inst: &Instance) -> Result<(Allocation, RunTrace)> {
    if let Some(v) = inst.valuations().iter().find(|v| !v.class().is_monotone()) {
        return Err(Error::Contract(format!(
            "envy-cycle elimination needs monotone valuations, got {}",
            v.class()
        )));
    }
    let (n, m) = (inst.n(), inst.m());
    let mut alloc = Allocation::empty(n, m);
    let mut trace = RunTrace::default();
    let settle = |alloc: &mut Allocation, trace: &mut RunTrace| loop {
        let graph = EnvyGraph::strict_envy(inst, alloc);
        if let Some(&free) = graph.unenvied().first() {
            return free;
        }
        let cycle = graph
            .find_cycle()
            .expect("every node envied implies a cycle");
        rotate(alloc, &cycle);
        trace.push(TraceEvent::Rotate { cycle });
    };
    for good in 0..m {
        let agent = settle(&mut alloc, &mut trace);
        alloc.pool.remove(good);
        alloc.bundles[agent] = alloc.bundles[agent].union(Bundle::singleton(good));
        trace.push(TraceEvent::Assign { agent, good });
    }
    Ok((alloc, trace))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fairness::{is_ef1, proportional_set};
    use crate::instance::fixture;

    #[test]
    fn content_agent_leaves_allocation_alone() {
        let inst = Instance::additive(&[vec![5, 1], vec![5, 1]]).unwrap();
        let a = Allocation::from_lists(2, &[&[0], &[1]]);
        let (b, moved) = improve(&inst, &a);
        assert_eq!(b, a);
        assert!(moved.is_empty());
    }

    #[test]
    fn mutual_envy_swaps() {
        let inst = Instance::additive(&[vec![1, 3], vec![3, 1]]).unwrap();
        let a = Allocation::from_lists(2, &[&[0], &[1]]);
        let (b, moved) = improve(&inst, &a);
        assert_eq!(b, Allocation::from_lists(2, &[&[1], &[0]]));
        assert_eq!(moved, vec![0, 1]);
        assert_eq!(proportional_set(&inst, &b), vec![0, 1]);
    }

    #[test]
    fn cycle_starts_at_lowest_node_on_a_cycle() {
        // 0 → 1, 1 → 2, 2 → 1: agent 0 is on no cycle.
        let g = EnvyGraph {
            successors: vec![vec![1], vec![2], vec![1]],
        };
        assert_eq!(g.find_cycle(), Some(vec![1, 2]));
        let acyclic = EnvyGraph {
            successors: vec![vec![1], vec![2], vec![]],
        };
        assert_eq!(acyclic.find_cycle(), None);
        assert_eq!(acyclic.unenvied(), vec![0]);
        // Branching: 0 → {1, 2}, 1 → 3, 2 → 0, 3 → 1.
        let g = EnvyGraph {
            successors: vec![vec![1, 2], vec![3], vec![0], vec![1]],
        };
        assert_eq!(g.find_cycle(), Some(vec![0, 2]));
    }

    #[test]
    fn rotation_direction() {
        let mut a = Allocation::from_lists(3, &[&[0], &[1], &[2]]);
        rotate(&mut a, &[0, 1, 2]);
        assert_eq!(a, Allocation::from_lists(3, &[&[1], &[2], &[0]]));
    }

    #[test]
    fn ece_single_agent_and_xos7() {
        let one = Instance::additive(&[vec![1, 2, 3]]).unwrap();
        let (a, _) = envy_cycle_elimination(&one).unwrap();
        assert_eq!(a.bundle(0), Bundle::full(3));

        let inst = fixture("xos7").unwrap().instance;
        let (a, trace) = envy_cycle_elimination(&inst).unwrap();
        assert!(a.is_complete());
        assert!(is_ef1(&inst, &a));
        assert_eq!(trace.replay(3, 7).unwrap(), a);
    }

    #[test]
    fn ece_refuses_satiating() {
        let inst = fixture("rr_satiating").unwrap().instance;
        assert!(matches!(
            envy_cycle_elimination(&inst),
            Err(Error::Contract(_))
        ));
    }
}
