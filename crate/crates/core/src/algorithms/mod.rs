//! Constructive allocation algorithms.
//!
//! Every run is single-threaded and deterministic. Wherever a choice is left
//! open (which agent, which good, which cycle) the lowest index wins.

mod envy;
mod mnw;
mod prop1;
mod round_robin;
mod trace;

pub use envy::{envy_cycle_elimination, improve, rotate, EnvyGraph};
pub use mnw::max_nash_welfare;
pub use prop1::{prop1_subadditive, prop1_submodular_fast};
pub use round_robin::{round_robin, Stop};
pub use trace::{RunTrace, TraceEvent};

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::instance::{Allocation, Instance};

/// Names accepted by the CLI's `--alg`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Algorithm {
    RoundRobin,
    EnvyCycleElimination,
    Prop1Subadditive,
    Prop1SubmodularFast,
    MaxNashWelfare,
}

impl Algorithm {
    pub const ALL: [Algorithm; 5] = [
        Algorithm::RoundRobin,
        Algorithm::EnvyCycleElimination,
        Algorithm::Prop1Subadditive,
        Algorithm::Prop1SubmodularFast,
        Algorithm::MaxNashWelfare,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::RoundRobin => "round_robin",
            Algorithm::EnvyCycleElimination => "envy_cycle_elimination",
            Algorithm::Prop1Subadditive => "prop1_subadditive",
            Algorithm::Prop1SubmodularFast => "prop1_submodular_fast",
            Algorithm::MaxNashWelfare => "max_nash_welfare",
        }
    }

    /// Whether every declared class of `inst` lies inside this algorithm's guarantee.
    pub fn suits(self, inst: &Instance) -> bool {
        inst.valuations().iter().all(|v| {
            let c = v.class();
            match self {
                Algorithm::RoundRobin | Algorithm::Prop1SubmodularFast => c.is_submodular(),
                Algorithm::EnvyCycleElimination => c.is_monotone(),
                Algorithm::Prop1Subadditive => c.is_subadditive(),
                Algorithm::MaxNashWelfare => c.is_monotone() && c.is_submodular(),
            }
        })
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let alias = match s {
            "rr" => Some(Algorithm::RoundRobin),
            "ece" => Some(Algorithm::EnvyCycleElimination),
            "mnw" => Some(Algorithm::MaxNashWelfare),
            _ => None,
        };
        alias
            .or_else(|| Algorithm::ALL.into_iter().find(|a| a.name() == s))
            .ok_or_else(|| Error::Contract(format!("unknown algorithm `{s}`")))
    }
}

/// Runs `alg` with default settings (identity agent order, complete stop).
pub fn run(alg: Algorithm, inst: &Instance) -> Result<(Allocation, RunTrace)> {
    match alg {
        Algorithm::RoundRobin => {
            let order: Vec<_> = (0..inst.n()).collect();
            round_robin(inst, &order, Stop::Complete)
        }
        Algorithm::EnvyCycleElimination => envy_cycle_elimination(inst),
        Algorithm::Prop1Subadditive => prop1_subadditive(inst),
        Algorithm::Prop1SubmodularFast => prop1_submodular_fast(inst),
        Algorithm::MaxNashWelfare => Ok((max_nash_welfare(inst)?, RunTrace::default())),
    }
}
