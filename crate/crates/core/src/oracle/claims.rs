//! Seeded claim suites. Each claim pairs a generator family with a checker
//! composition; positive claims look for counterexamples, negative controls
//! reproduce a known violation on a fixed instance.
//!
//! | id    | instances                                        | checked                                   |
//! |-------|--------------------------------------------------|-------------------------------------------|
//! | INTRO | `intro_superadditive`                            | no PROP1 allocation, some EF1 allocation  |
//! | C2.1  | submodular generators, n = 1, m ≤ 6              | `v(X\|S) ≥ v(X\|T)` for `S ⊆ T`, all triples |
//! | C2.2  | submodular generators, n = 1, m ≤ 6              | marginals of unions are subadditive       |
//! | T3.1  | satiating-submodular, n 2..=3, m 1..=7           | every EF1 allocation is PROP1             |
//! | T3.2  | `xos7`, pinned split                             | EF1 and not PROP1, best augment 2 < 7/3   |
//! | C3.3  | monotone-submodular, n 1..=3, m 1..=7            | ECE output is EF1 and PROP1               |
//! | T3.4  | satiating-subadditive, n = 2, m 1..=10           | every EF1 allocation is PROP1             |
//! | T4.1  | satiating-submodular, n 2..=4, m 1..=10          | RR to the second-to-last round is PROP1   |
//! | T4.2  | `rr_satiating`                                   | complete RR fails PROP1, partial passes   |
//! | C4.3  | monotone-submodular, n 2..=4, m 1..=10           | complete RR is PROP1                      |
//! | T4.4  | `rr_xos`, both orders                            | complete RR fails PROP1                   |
//! | T5.1  | satiating-subadditive, n 2..=4, m 1..=10         | repair loop: PROP1, ≤ n·m loops, checkpoints |
//! | T5.5  | satiating-submodular, n 2..=4, m 1..=12          | fast algorithm: PROP1, ≤ m loops          |
//! | T6.1  | monotone-submodular, n 1..=3, m 1..=6            | MNW output is PROP1 and MEF1              |
//! | L6.2  | monotone-submodular, n 2..=3, m 1..=6            | every MEF1 allocation is PROP1            |
//! | T6.3  | `xos7`                                           | PROP1 and Pareto-optimal sets disjoint    |

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};

use super::{allocation_at, enumerate_allocations, fairness_sets, size_profile};
use crate::algorithms::{
    envy_cycle_elimination, max_nash_welfare, prop1_subadditive, prop1_submodular_fast,
    round_robin, RunTrace, Stop, TraceEvent,
};
use crate::bundle::Bundle;
use crate::error::{Error, Result};
use crate::fairness::{is_ef1, is_mef1, is_prop1, is_prop1_for, Prop1Witness};
use crate::instance::{fixture, generate, Allocation, GenSpec, Instance};
use crate::valuation::ValuationClass;
use crate::value::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClaimId {
    Intro,
    C2_1,
    C2_2,
    T3_1,
    T3_2,
    C3_3,
    T3_4,
    T4_1,
    T4_2,
    C4_3,
    T4_4,
    T5_1,
    T5_5,
    T6_1,
    L6_2,
    T6_3,
}

impl ClaimId {
    pub const ALL: [ClaimId; 16] = [
        ClaimId::Intro,
        ClaimId::C2_1,
        ClaimId::C2_2,
        ClaimId::T3_1,
        ClaimId::T3_2,
        ClaimId::C3_3,
        ClaimId::T3_4,
        ClaimId::T4_1,
        ClaimId::T4_2,
        ClaimId::C4_3,
        ClaimId::T4_4,
        ClaimId::T5_1,
        ClaimId::T5_5,
        ClaimId::T6_1,
        ClaimId::L6_2,
        ClaimId::T6_3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClaimId::Intro => "INTRO",
            ClaimId::C2_1 => "C2.1",
            ClaimId::C2_2 => "C2.2",
            ClaimId::T3_1 => "T3.1",
            ClaimId::T3_2 => "T3.2",
            ClaimId::C3_3 => "C3.3",
            ClaimId::T3_4 => "T3.4",
            ClaimId::T4_1 => "T4.1",
            ClaimId::T4_2 => "T4.2",
            ClaimId::C4_3 => "C4.3",
            ClaimId::T4_4 => "T4.4",
            ClaimId::T5_1 => "T5.1",
            ClaimId::T5_5 => "T5.5",
            ClaimId::T6_1 => "T6.1",
            ClaimId::L6_2 => "L6.2",
            ClaimId::T6_3 => "T6.3",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            ClaimId::Intro => "superadditive instance: no PROP1 allocation, yet EF1 exists",
            ClaimId::C2_1 => "submodular marginals shrink on supersets",
            ClaimId::C2_2 => "submodular marginals are subadditive over unions",
            ClaimId::T3_1 => "satiating submodular: EF1 implies PROP1",
            ClaimId::T3_2 => "monotone XOS: an EF1 allocation that is not PROP1",
            ClaimId::C3_3 => "monotone submodular: envy-cycle elimination is EF1 and PROP1",
            ClaimId::T3_4 => "two agents, satiating subadditive: EF1 implies PROP1",
            ClaimId::T4_1 => {
                "satiating submodular: round-robin is PROP1 after the second-to-last round"
            }
            ClaimId::T4_2 => "satiating submodular: complete round-robin can fail PROP1",
            ClaimId::C4_3 => "monotone submodular: complete round-robin is PROP1",
            ClaimId::T4_4 => "monotone XOS: complete round-robin can fail PROP1",
            ClaimId::T5_1 => {
                "satiating subadditive: repair loop reaches PROP1 within n·m iterations"
            }
            ClaimId::T5_5 => {
                "satiating submodular: fast algorithm reaches PROP1 within m iterations"
            }
            ClaimId::T6_1 => "monotone submodular: max Nash welfare is PROP1 and MEF1",
            ClaimId::L6_2 => "monotone submodular: MEF1 implies PROP1",
            ClaimId::T6_3 => "monotone XOS: no Pareto-optimal allocation is PROP1",
        }
    }

    /// Fixed-instance claims that must reproduce a violation.
    pub fn is_negative_control(self) -> bool {
        matches!(
            self,
            ClaimId::Intro | ClaimId::T3_2 | ClaimId::T4_2 | ClaimId::T4_4 | ClaimId::T6_3
        )
    }

    pub fn default_trials(self) -> usize {
        match self {
            ClaimId::T3_1 | ClaimId::T3_4 | ClaimId::C3_3 => 200,
            ClaimId::T4_1 | ClaimId::C4_3 | ClaimId::T5_1 | ClaimId::T5_5 => 300,
            ClaimId::T6_1 | ClaimId::L6_2 | ClaimId::C2_1 | ClaimId::C2_2 => 100,
            _ => 1,
        }
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClaimId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ClaimId::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownClaim(s.to_string()))
    }
}

impl Serialize for ClaimId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Counterexample {
    pub instance: Instance,
    pub allocation: Allocation,
    pub reason: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremSuiteResult {
    pub claim: ClaimId,
    pub description: &'static str,
    pub negative_control: bool,
    pub seed: u64,
    pub trials: usize,
    /// Individual checker evaluations (allocations scanned, runs checked, ...).
    pub checks: u64,
    pub passed: bool,
    pub counterexample: Option<Counterexample>,
    pub details: Vec<String>,
}

/// Runs one claim suite. `trials` defaults per claim; fixed-instance claims ignore it.
pub fn verify_claim(
    claim: ClaimId,
    trials: Option<usize>,
    seed: u64,
) -> Result<TheoremSuiteResult> {
    let trials = if claim.is_negative_control() {
        1
    } else {
        trials.unwrap_or_else(|| claim.default_trials())
    };
    let mut s = Suite {
        checks: 0,
        premises: 0,
        loops: 0,
        failure: None,
        details: Vec::new(),
        ok: true,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match claim {
        ClaimId::Intro => intro(&mut s)?,
        ClaimId::T3_2 => xos7_pinned(&mut s)?,
        ClaimId::T4_2 => rr_satiating(&mut s)?,
        ClaimId::T4_4 => rr_xos(&mut s)?,
        ClaimId::T6_3 => xos7_pareto(&mut s)?,
        ClaimId::C2_1 | ClaimId::C2_2 => {
            for t in 0..trials {
                let class = if t % 2 == 0 {
                    ValuationClass::MonotoneSubmodular
                } else {
                    ValuationClass::SatiatingSubmodular
                };
                let inst = draw(&mut rng, class, 1..=1, 1..=6)?;
                if claim == ClaimId::C2_1 {
                    shrinking_marginals(&mut s, &inst);
                } else {
                    subadditive_marginals(&mut s, &inst);
                }
                if s.failure.is_some() {
                    break;
                }
            }
        }
        _ => {
            let (class, ns, ms) = family(claim);
            for _ in 0..trials {
                let inst = draw(&mut rng, class, ns.clone(), ms.clone())?;
                random_trial(claim, &mut s, &inst)?;
                if s.failure.is_some() {
                    break;
                }
            }
        }
    }
    match claim {
        ClaimId::T3_1 | ClaimId::T3_4 => s
            .details
            .push(format!("{} EF1 allocations checked", s.premises)),
        ClaimId::L6_2 => s
            .details
            .push(format!("{} MEF1 allocations checked", s.premises)),
        ClaimId::T5_1 | ClaimId::T5_5 => s.details.push(format!(
            "{} while-loop iterations in total, {} runs needed the loop",
            s.loops, s.premises
        )),
        _ => {}
    }
    let passed = s.ok && s.failure.is_none();
    Ok(TheoremSuiteResult {
        claim,
        description: claim.description(),
        negative_control: claim.is_negative_control(),
        seed,
        trials,
        checks: s.checks,
        passed,
        counterexample: s.failure,
        details: s.details,
    })
}

/// Every claim with default trial counts.
pub fn verify_all(seed: u64) -> Result<Vec<TheoremSuiteResult>> {
    ClaimId::ALL
        .into_iter()
        .map(|c| verify_claim(c, None, seed))
        .collect()
}

struct Suite {
    checks: u64,
    /// Cases where the claim's hypothesis was met (so the check was not vacuous).
    premises: u64,
    loops: u64,
    failure: Option<Counterexample>,
    details: Vec<String>,
    /// Cleared by negative controls that fail to reproduce.
    ok: bool,
}

impl Suite {
    fn check(
        &mut self,
        cond: bool,
        inst: &Instance,
        alloc: &Allocation,
        reason: impl FnOnce() -> String,
    ) {
        self.checks += 1;
        if !cond && self.failure.is_none() {
            self.failure = Some(Counterexample {
                instance: inst.clone(),
                allocation: alloc.clone(),
                reason: reason(),
            });
        }
    }

    /// A negative-control expectation on a fixed instance.
    fn expect(&mut self, cond: bool, what: String) {
        self.checks += 1;
        if !cond {
            self.ok = false;
            self.details.push(format!("not reproduced: {what}"));
        } else {
            self.details.push(what);
        }
    }
}

fn family(claim: ClaimId) -> (ValuationClass, RangeInclusive<usize>, RangeInclusive<usize>) {
    use ValuationClass::*;
    match claim {
        ClaimId::T3_1 => (SatiatingSubmodular, 2..=3, 1..=7),
        ClaimId::C3_3 => (MonotoneSubmodular, 1..=3, 1..=7),
        ClaimId::T3_4 => (SatiatingSubadditive, 2..=2, 1..=10),
        ClaimId::T4_1 => (SatiatingSubmodular, 2..=4, 1..=10),
        ClaimId::C4_3 => (MonotoneSubmodular, 2..=4, 1..=10),
        ClaimId::T5_1 => (SatiatingSubadditive, 2..=4, 1..=10),
        ClaimId::T5_5 => (SatiatingSubmodular, 2..=4, 1..=12),
        ClaimId::T6_1 => (MonotoneSubmodular, 1..=3, 1..=6),
        ClaimId::L6_2 => (MonotoneSubmodular, 2..=3, 1..=6),
        other => unreachable!("{other} has no random family"),
    }
}

fn draw(
    rng: &mut ChaCha8Rng,
    class: ValuationClass,
    ns: RangeInclusive<usize>,
    ms: RangeInclusive<usize>,
) -> Result<Instance> {
    let n = rng.gen_range(ns);
    let m = rng.gen_range(ms);
    let inst = generate(&GenSpec::new(class, n, m, rng.gen()))?;
    // The hypothesis class is checked before any claim is tested against it.
    if inst.verify_classes()?.iter().any(|ok| !ok) {
        return Err(Error::GeneratorBug(format!(
            "{class} instance fails its verifier"
        )));
    }
    Ok(inst)
}

fn random_trial(claim: ClaimId, s: &mut Suite, inst: &Instance) -> Result<()> {
    let (n, m) = (inst.n(), inst.m());
    match claim {
        ClaimId::T3_1 | ClaimId::T3_4 => {
            for a in enumerate_allocations(n, m)? {
                let ef1 = is_ef1(inst, &a);
                s.premises += ef1 as u64;
                s.check(!ef1 || is_prop1(inst, &a), inst, &a, || {
                    "EF1 allocation is not PROP1".into()
                });
            }
        }
        ClaimId::L6_2 => {
            for a in enumerate_allocations(n, m)? {
                let mef1 = is_mef1(inst, &a);
                s.premises += mef1 as u64;
                s.check(!mef1 || is_prop1(inst, &a), inst, &a, || {
                    "MEF1 allocation is not PROP1".into()
                });
            }
        }
        ClaimId::C3_3 => {
            let (a, trace) = envy_cycle_elimination(inst)?;
            s.check(a.is_complete() && is_ef1(inst, &a), inst, &a, || {
                "ECE output is not EF1".into()
            });
            s.check(is_prop1(inst, &a), inst, &a, || {
                "ECE output is not PROP1".into()
            });
            replays(s, inst, &a, &trace)?;
        }
        ClaimId::T4_1 => {
            let order: Vec<_> = (0..n).collect();
            let (a, trace) = round_robin(inst, &order, Stop::SecondToLast)?;
            s.check(is_prop1(inst, &a), inst, &a, || {
                "partial round-robin allocation is not PROP1".into()
            });
            greedy_picks(s, inst, &trace, &a)?;
            replays(s, inst, &a, &trace)?;
        }
        ClaimId::C4_3 => {
            let order: Vec<_> = (0..n).collect();
            let (a, trace) = round_robin(inst, &order, Stop::Complete)?;
            s.check(a.is_complete() && is_prop1(inst, &a), inst, &a, || {
                "round-robin allocation is not PROP1".into()
            });
            greedy_picks(s, inst, &trace, &a)?;
        }
        ClaimId::T5_1 => {
            let (a, trace) = prop1_subadditive(inst)?;
            s.loops += trace.while_loop_executions as u64;
            s.premises += (trace.while_loop_executions > 0) as u64;
            s.check(a.is_complete() && is_prop1(inst, &a), inst, &a, || {
                "output is not PROP1".into()
            });
            let loops = trace.while_loop_executions;
            s.check(loops <= n * m, inst, &a, || {
                format!("{loops} loop iterations exceed n·m")
            });
            checkpoints(s, inst, &a, &trace);
            replays(s, inst, &a, &trace)?;
        }
        ClaimId::T5_5 => {
            let (a, trace) = prop1_submodular_fast(inst)?;
            s.loops += trace.while_loop_executions as u64;
            s.premises += (trace.while_loop_executions > 0) as u64;
            s.check(a.is_complete() && is_prop1(inst, &a), inst, &a, || {
                "output is not PROP1".into()
            });
            let loops = trace.while_loop_executions;
            s.check(loops <= m, inst, &a, || {
                format!("{loops} loop iterations exceed m")
            });
            checkpoints(s, inst, &a, &trace);
            replays(s, inst, &a, &trace)?;
        }
        ClaimId::T6_1 => {
            let a = max_nash_welfare(inst)?;
            s.check(is_prop1(inst, &a), inst, &a, || {
                "MNW allocation is not PROP1".into()
            });
            s.check(is_mef1(inst, &a), inst, &a, || {
                "MNW allocation is not MEF1".into()
            });
        }
        other => unreachable!("{other} is not a random-family claim"),
    }
    Ok(())
}

fn replays(s: &mut Suite, inst: &Instance, a: &Allocation, trace: &RunTrace) -> Result<()> {
    let replayed = trace.replay(inst.n(), inst.m())?;
    s.check(replayed == *a, inst, a, || {
        "trace replay differs from output".into()
    });
    Ok(())
}

/// Each pick's marginal is at least that of every good still available then.
fn greedy_picks(s: &mut Suite, inst: &Instance, trace: &RunTrace, out: &Allocation) -> Result<()> {
    let mut a = Allocation::empty(inst.n(), inst.m());
    for e in &trace.events {
        if let TraceEvent::Pick {
            agent,
            good,
            marginal,
            ..
        } = *e
        {
            let held = a.bundles[agent];
            let best = a
                .pool
                .iter()
                .map(|o| inst.marginal(agent, Bundle::singleton(o), held))
                .max();
            // A dummy counts as an available good of marginal 0.
            let ok = best.is_none_or(|b| marginal >= b || (good.is_none() && b.is_negative()));
            s.check(ok, inst, out, || {
                format!("agent {agent} picked below the best marginal")
            });
            if let Some(g) = good {
                a.pool.remove(g);
                a.bundles[agent].insert(g);
            }
        }
    }
    Ok(())
}

/// After every improve step some agent is proportional and all reassigned agents
/// are; PROP1 agents stay PROP1; the PROP1 set grows within every `m` iterations.
fn checkpoints(s: &mut Suite, inst: &Instance, out: &Allocation, trace: &RunTrace) {
    let m = inst.m();
    let mut sizes = Vec::new();
    let mut prev: Option<&[usize]> = None;
    for (t, reassigned, p, p1) in trace.checkpoints() {
        s.check(!p.is_empty(), inst, out, || {
            format!("no proportional agent at iteration {t}")
        });
        s.check(reassigned.iter().all(|r| p.contains(r)), inst, out, || {
            format!("a reassigned agent is not proportional at iteration {t}")
        });
        if let Some(prev) = prev {
            s.check(prev.iter().all(|x| p1.contains(x)), inst, out, || {
                format!("PROP1 set shrank at iteration {t}")
            });
        }
        prev = Some(p1);
        sizes.push(p1.len());
    }
    for t in 0..sizes.len() {
        let end = (t + m).min(sizes.len() - 1);
        if t + m < sizes.len() {
            s.check(
                sizes[t + 1..=end].iter().any(|&k| k > sizes[t]),
                inst,
                out,
                || format!("PROP1 set stalled for {m} iterations after iteration {t}"),
            );
        }
    }
}

/// All `X`, `S ⊆ T` with `X ∩ T = ∅`: `v(X|S) ≥ v(X|T)`.
fn shrinking_marginals(s: &mut Suite, inst: &Instance) {
    let full = inst.goods();
    let empty = Allocation::empty(1, inst.m());
    let mut ok = true;
    let mut count = 0;
    for t in full.subsets() {
        for sub in t.subsets() {
            for x in full.difference(t).subsets() {
                count += 1;
                ok &= inst.marginal(0, x, sub) >= inst.marginal(0, x, t);
            }
        }
    }
    s.checks += count - 1;
    s.check(ok, inst, &empty, || "a marginal grew on a superset".into());
}

/// All disjoint `X, S, T`: `v(X ∪ T | S) ≤ v(X|S) + v(T|S)` and
/// `v(T|S) ≤ Σ_{o ∈ T} v(o|S)`.
fn subadditive_marginals(s: &mut Suite, inst: &Instance) {
    let full = inst.goods();
    let empty = Allocation::empty(1, inst.m());
    let mut ok = true;
    let mut count = 0;
    for base in full.subsets() {
        let rest = full.difference(base);
        for t in rest.subsets() {
            let singles: Value = t
                .iter()
                .map(|o| inst.marginal(0, Bundle::singleton(o), base))
                .sum();
            let mt = inst.marginal(0, t, base);
            ok &= mt <= singles;
            for x in rest.difference(t).subsets() {
                count += 1;
                ok &= inst.marginal(0, x.union(t), base) <= inst.marginal(0, x, base) + mt;
            }
        }
    }
    s.checks += count - 1;
    s.check(ok, inst, &empty, || {
        "marginal of a union exceeds the sum".into()
    });
}

fn intro(s: &mut Suite) -> Result<()> {
    let inst = fixture("intro_superadditive")?.instance;
    let sets = fairness_sets(&inst)?;
    s.checks += sets.total;
    s.expect(
        sets.prop1.is_empty(),
        format!("0 of {} allocations are PROP1", sets.total),
    );
    s.expect(
        !sets.ef1.is_empty(),
        format!("{} allocations are EF1", sets.ef1.len()),
    );
    Ok(())
}

fn xos7_pinned(s: &mut Suite) -> Result<()> {
    let f = fixture("xos7")?;
    let (inst, a) = (f.instance, f.pinned.expect("xos7 pins an allocation"));
    s.expect(is_ef1(&inst, &a), "pinned (1,3,3) split is EF1".into());
    s.expect(
        is_prop1_for(&inst, &a, 0) == Prop1Witness::Unsatisfied,
        "agent 0 is not PROP1".into(),
    );
    let best = (0..inst.m())
        .filter(|&g| !a.bundle(0).contains(g))
        .map(|g| inst.value(0, a.bundle(0).with(g)))
        .max()
        .unwrap_or(Value::ZERO);
    let share = inst.grand_value(0) * Value::new(1, 3).expect("nonzero");
    s.expect(
        best == Value::int(2) && best.scale(3) < inst.grand_value(0),
        format!("best augmented value {best} < share {share}"),
    );
    Ok(())
}

fn rr_satiating(s: &mut Suite) -> Result<()> {
    let inst = fixture("rr_satiating")?.instance;
    let (full, _) = round_robin(&inst, &[0, 1], Stop::Complete)?;
    s.expect(
        full == Allocation::from_lists(6, &[&[0, 1, 2], &[4, 5, 3]]),
        "complete round-robin gives ({a,b,c}, {g1,g2,d})".into(),
    );
    let vm = inst.grand_value(1);
    let best = (0..3)
        .map(|o| inst.value(1, full.bundle(1).with(o)))
        .max()
        .expect("three goods");
    s.expect(
        vm == Value::int(7) && best == Value::int(3) && best.scale(2) < vm,
        format!("agent 1: best augmented value {best}, 2·{best} < {vm}"),
    );
    s.expect(
        !is_prop1(&inst, &full),
        "complete allocation is not PROP1".into(),
    );
    let (partial, _) = round_robin(&inst, &[0, 1], Stop::SecondToLast)?;
    s.expect(
        is_prop1(&inst, &partial),
        "second-to-last round allocation is PROP1 for both agents".into(),
    );
    Ok(())
}

fn rr_xos(s: &mut Suite) -> Result<()> {
    let inst = fixture("rr_xos")?.instance;
    let expect = Allocation::from_lists(6, &[&[0, 1, 2], &[3, 4, 5]]);
    for order in [[0, 1], [1, 0]] {
        let (a, _) = round_robin(&inst, &order, Stop::Complete)?;
        s.expect(
            a == expect,
            format!("order {order:?} gives ({{a,b,c}}, {{d,e,f}})"),
        );
        s.expect(
            !is_prop1(&inst, &a),
            format!("order {order:?} result is not PROP1"),
        );
    }
    let vm = inst.grand_value(1);
    let tops: Vec<Value> = (0..3)
        .map(|o| inst.value(1, expect.bundle(1).with(o)))
        .collect();
    s.expect(
        vm == Value::int(19) && tops.iter().all(|&v| v == Value::int(9) && v.scale(2) < vm),
        format!("agent 1: v(M) = {vm}, augmented values {tops:?}"),
    );
    Ok(())
}

fn xos7_pareto(s: &mut Suite) -> Result<()> {
    let inst = fixture("xos7")?.instance;
    let sets = fairness_sets(&inst)?;
    s.checks += sets.total;
    let overlap = sets
        .prop1
        .iter()
        .filter(|k| sets.pareto_optimal.binary_search(k).is_ok())
        .count();
    s.expect(
        !sets.prop1.is_empty() && overlap == 0,
        format!(
            "{} allocations scanned: {} PROP1, {} Pareto-optimal, {overlap} both",
            sets.total,
            sets.prop1.len(),
            sets.pareto_optimal.len()
        ),
    );
    let shaped = sets
        .prop1
        .iter()
        .all(|&k| size_profile(&allocation_at(3, 7, k)) == [3, 2, 2]);
    s.expect(
        shaped,
        "every PROP1 allocation has bundle sizes {3,2,2}".into(),
    );
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip() {
        for c in ClaimId::ALL {
            assert_eq!(c.name().parse::<ClaimId>().unwrap(), c);
        }
        assert_eq!("t6.3".parse::<ClaimId>().unwrap(), ClaimId::T6_3);
        assert!(matches!(
            "T9.9".parse::<ClaimId>(),
            Err(Error::UnknownClaim(_))
        ));
    }

    #[test]
    fn negative_controls_reproduce() {
        for c in ClaimId::ALL.into_iter().filter(|c| c.is_negative_control()) {
            let r = verify_claim(c, None, 1).unwrap();
            assert!(r.passed, "{c}: {:?}", r.details);
        }
    }

    #[test]
    fn t6_3_scans_all_allocations() {
        let r = verify_claim(ClaimId::T6_3, None, 0).unwrap();
        assert!(r.details[0].starts_with("2187 allocations scanned"));
    }

    #[test]
    fn short_positive_suites_pass() {
        for c in ClaimId::ALL
            .into_iter()
            .filter(|c| !c.is_negative_control())
        {
            let r = verify_claim(c, Some(5), 3).unwrap();
            assert!(r.passed, "{c}: {:?}", r.counterexample.map(|x| x.reason));
            assert!(r.checks > 0);
        }
    }
}
