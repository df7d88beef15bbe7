//! The named counterexample instances.
//!
//! | id                    | agents | goods (index order)        |
//! |-----------------------|--------|----------------------------|
//! | `intro_superadditive` | 2      | 0, 1, 2                    |
//! | `xos7`                | 3      | 1..7 stored as 0..6        |
//! | `rr_satiating`        | 2      | a, b, c, d, g1, g2 (0..5)  |
//! | `rr_xos`              | 2      | a, b, c, d, e, f (0..5)    |

use std::fmt;
use std::str::FromStr;

use super::{Allocation, Instance};
use crate::bundle::Bundle;
use crate::error::{Error, Result};
use crate::valuation::{ConditionalRule, Kind, ValuationClass, ValuationFn};
use crate::value::Value;

pub const FIXTURE_NAMES: [&str; 4] = ["intro_superadditive", "xos7", "rr_satiating", "rr_xos"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FixtureId {
    /// Two agents, three goods, value 2 for the grand bundle and 0 for everything smaller.
    IntroSuperadditive,
    /// Three agents sharing a cardinality-based XOS valuation over seven goods.
    Xos7,
    /// Additive agent against a satiating submodular agent whose good `d` turns negative.
    RrSatiating,
    /// Additive agent against a two-clause XOS agent.
    RrXos,
}

impl FixtureId {
    pub const ALL: [FixtureId; 4] = [
        FixtureId::IntroSuperadditive,
        FixtureId::Xos7,
        FixtureId::RrSatiating,
        FixtureId::RrXos,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FixtureId::IntroSuperadditive => FIXTURE_NAMES[0],
            FixtureId::Xos7 => FIXTURE_NAMES[1],
            FixtureId::RrSatiating => FIXTURE_NAMES[2],
            FixtureId::RrXos => FIXTURE_NAMES[3],
        }
    }
}

impl fmt::Display for FixtureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FixtureId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FixtureId::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::UnknownFixture(s.to_string()))
    }
}

#[derive(Clone, Debug)]
pub struct Fixture {
    pub id: FixtureId,
    pub instance: Instance,
    /// The distinguished allocation, where the fixture has one.
    pub pinned: Option<Allocation>,
}

pub fn fixture(name: &str) -> Result<Fixture> {
    let id: FixtureId = name.parse()?;
    let (instance, pinned) = match id {
        FixtureId::IntroSuperadditive => (intro_superadditive()?, None),
        FixtureId::Xos7 => {
            // Any split with sizes (1, 3, 3) works; this one is fixed for reproducibility.
            let pinned = Allocation::from_lists(7, &[&[0], &[1, 2, 3], &[4, 5, 6]]);
            (xos7()?, Some(pinned))
        }
        FixtureId::RrSatiating => (rr_satiating()?, None),
        FixtureId::RrXos => (rr_xos()?, None),
    };
    Ok(Fixture {
        id,
        instance,
        pinned,
    })
}

fn ints(xs: &[i64]) -> Vec<Value> {
    xs.iter().map(|&x| Value::from(x)).collect()
}

fn labels(names: &[&str]) -> Option<Vec<String>> {
    Some(names.iter().map(|s| s.to_string()).collect())
}

fn intro_superadditive() -> Result<Instance> {
    let mut table = vec![Value::ZERO; 8];
    table[0b111] = Value::int(2);
    let v = ValuationFn::new(Kind::Tabular(table), ValuationClass::MonotoneGeneral)?;
    Instance::new(vec![v.clone(), v], None)
}

/// `f_0` gives every good 1; `f_g` gives good `g` alone 2. The max is 2, 2, 3, ..., 7 by size.
fn xos7() -> Result<Instance> {
    let mut clauses = vec![vec![Value::ONE; 7]];
    clauses.extend((0..7).map(|g| {
        let mut c = vec![Value::ZERO; 7];
        c[g] = Value::int(2);
        c
    }));
    let v = ValuationFn::new(Kind::Xos(clauses), ValuationClass::MonotoneXos)?;
    Instance::new(
        vec![v.clone(), v.clone(), v],
        labels(&["1", "2", "3", "4", "5", "6", "7"]),
    )
}

fn rr_satiating() -> Result<Instance> {
    let agent1 = ValuationFn::additive(ints(&[1, 1, 1, 0, 0, 0]))?;
    let agent2 = ValuationFn::new(
        Kind::MarginalRule(ConditionalRule {
            base: ints(&[2, 2, 2, 0, 3, 3]),
            trigger: 3,
            default: Value::int(2),
            condition: Bundle::from_goods([4, 5]),
            conditioned: Value::int(-5),
        }),
        ValuationClass::SatiatingSubmodular,
    )?;
    Instance::new(
        vec![agent1, agent2],
        labels(&["a", "b", "c", "d", "g1", "g2"]),
    )
}

fn rr_xos() -> Result<Instance> {
    let agent1 = ValuationFn::additive(ints(&[3, 2, 1, 0, 0, 0]))?;
    let agent2 = ValuationFn::new(
        Kind::Xos(vec![ints(&[5, 5, 5, 0, 0, 4]), ints(&[0, 0, 0, 6, 2, 1])]),
        ValuationClass::MonotoneXos,
    )?;
    Instance::new(
        vec![agent1, agent2],
        labels(&["a", "b", "c", "d", "e", "f"]),
    )
}
