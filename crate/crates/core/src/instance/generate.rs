//! Seeded random instances, one construction per valuation class.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::Instance;
use crate::bundle::MAX_GOODS;
use crate::error::{Error, Result};
use crate::valuation::{Coverage, Kind, ValuationClass, ValuationFn};
use crate::value::Value;

/// The subadditive-cover DP is `O(3^m)`.
pub const SUBADDITIVE_GEN_LIMIT: usize = 14;

/// Generated valuations are checked against their class up to this many goods.
const VERIFY_LIMIT: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenSpec {
    pub seed: u64,
    pub n: usize,
    pub m: usize,
    pub class: ValuationClass,
    /// Largest integer weight drawn.
    pub magnitude: u32,
}

impl GenSpec {
    pub fn new(class: ValuationClass, n: usize, m: usize, seed: u64) -> Self {
        GenSpec {
            seed,
            n,
            m,
            class,
            magnitude: 10,
        }
    }
}

/// Builds `spec.n` independent valuations of class `spec.class` from one seeded stream.
///
/// * additive: weights uniform in `[0, magnitude]`.
/// * monotone-submodular: weighted coverage over `2m` elements, each good
///   covering each element with probability `1/m`.
/// * monotone-XOS: max of 2 to 4 additive clauses.
/// * satiating-submodular: coverage plus `s·k·(m+1−k)` on the bundle size `k`,
///   with `s` at most `magnitude/m`.
/// * satiating-subadditive: subadditive cover of a random table with
///   `v(S)` in `[magnitude·|S|/2, magnitude·|S|]`.
pub fn generate(spec: &GenSpec) -> Result<Instance> {
    if spec.n == 0 {
        return Err(Error::Contract("generator needs n ≥ 1".into()));
    }
    if spec.magnitude == 0 {
        return Err(Error::Contract("generator needs magnitude ≥ 1".into()));
    }
    let cap = match spec.class {
        ValuationClass::SatiatingSubadditive => SUBADDITIVE_GEN_LIMIT,
        _ => MAX_GOODS,
    };
    if spec.m > cap {
        return Err(Error::Size(format!(
            "{} generation supports at most {cap} goods, asked for {}",
            spec.class, spec.m
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let valuations = (0..spec.n)
        .map(|_| {
            let kind = draw_kind(&mut rng, spec)?;
            ValuationFn::new(kind, spec.class).map_err(|e| Error::GeneratorBug(e.to_string()))
        })
        .collect::<Result<Vec<_>>>()?;
    let inst = Instance::new(valuations, None)?;
    if spec.m <= VERIFY_LIMIT {
        if let Some(i) = inst.verify_classes()?.iter().position(|ok| !ok) {
            return Err(Error::GeneratorBug(format!(
                "agent {i} fails the {} verifier (seed {})",
                spec.class, spec.seed
            )));
        }
    }
    Ok(inst)
}

fn weights(rng: &mut ChaCha8Rng, len: usize, magnitude: u32) -> Vec<Value> {
    (0..len)
        .map(|_| Value::from(rng.gen_range(0..=magnitude)))
        .collect()
}

fn coverage(rng: &mut ChaCha8Rng, m: usize, magnitude: u32) -> Result<Coverage> {
    let universe = 2 * m;
    let element_weights = weights(rng, universe, magnitude);
    // About two elements per good, so single goods rarely reach a 1/n share alone.
    let density = m.max(2) as u32;
    let covers: Vec<Vec<usize>> = (0..m)
        .map(|_| {
            (0..universe)
                .filter(|_| rng.gen_ratio(1, density))
                .collect()
        })
        .collect();
    Coverage::new(element_weights, &covers)
}

fn draw_kind(rng: &mut ChaCha8Rng, spec: &GenSpec) -> Result<Kind> {
    let (m, mag) = (spec.m, spec.magnitude);
    Ok(match spec.class {
        ValuationClass::Additive => Kind::Additive(weights(rng, m, mag)),
        ValuationClass::MonotoneSubmodular => Kind::Coverage(coverage(rng, m, mag)?),
        ValuationClass::MonotoneXos => {
            let k = rng.gen_range(2..=4);
            Kind::Xos((0..k).map(|_| weights(rng, m, mag)).collect())
        }
        ValuationClass::SatiatingSubmodular => {
            let cover = coverage(rng, m, mag)?;
            // g(1) = g(m) = m·s, so a large s would make every single good worth a share.
            let s = rng.gen_range(1..=(mag as usize / m.max(1)).max(1)) as i128;
            let g = (0..=m as i128)
                .map(|k| Value::int(k * (m as i128 + 1 - k) * s))
                .collect();
            Kind::Sum(vec![Kind::Coverage(cover), Kind::ConcaveCardinality(g)])
        }
        ValuationClass::SatiatingSubadditive => {
            // Uniform in [magnitude·|S|/2, magnitude·|S|]. Flat draws let the cover
            // collapse toward 0, since some partition of M nearly always has cheap parts.
            let raw: Vec<Value> = (0..1usize << m)
                .map(|s| {
                    let top = mag * s.count_ones();
                    Value::from(rng.gen_range(top / 2..=top))
                })
                .collect();
            Kind::Tabular(subadditive_cover(&raw, m))
        }
        other => {
            return Err(Error::Contract(format!("no generator for class {other}")));
        }
    })
}

/// Largest subadditive function below `table`: `v'(S) = min` over partitions of
/// `S` of the summed part values, by DP over subsets in increasing mask order.
pub fn subadditive_cover(table: &[Value], m: usize) -> Vec<Value> {
    assert_eq!(table.len(), 1 << m);
    let mut cover = table.to_vec();
    for s in 1..table.len() {
        // Fixing the lowest good to one side visits each unordered split once.
        let low = s & s.wrapping_neg();
        let rest = s ^ low;
        let mut best = cover[s];
        let mut t = rest;
        loop {
            let part = t | low;
            if part != s {
                let cand = cover[part] + cover[s ^ part];
                if cand < best {
                    best = cand;
                }
            }
            if t == 0 {
                break;
            }
            t = (t - 1) & rest;
        }
        cover[s] = best;
    }
    cover
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::serialize_instance;
    use crate::valuation::is_subadditive_table;

    const GENERATED: [ValuationClass; 5] = [
        ValuationClass::Additive,
        ValuationClass::MonotoneSubmodular,
        ValuationClass::MonotoneXos,
        ValuationClass::SatiatingSubmodular,
        ValuationClass::SatiatingSubadditive,
    ];

    #[test]
    fn same_seed_same_bytes() {
        for class in GENERATED {
            let spec = GenSpec::new(class, 3, 6, 42);
            let a = serialize_instance(&generate(&spec).unwrap());
            let b = serialize_instance(&generate(&spec).unwrap());
            assert_eq!(a, b, "{class}");
        }
    }

    #[test]
    fn different_seeds_differ() {
        let a = generate(&GenSpec::new(ValuationClass::MonotoneSubmodular, 2, 6, 1)).unwrap();
        let b = generate(&GenSpec::new(ValuationClass::MonotoneSubmodular, 2, 6, 2)).unwrap();
        assert_ne!(a, b);
    }

    #[test]
    fn generated_classes_verify() {
        for class in GENERATED {
            for seed in 0..10 {
                let inst = generate(&GenSpec::new(class, 2, 1 + seed as usize % 8, seed)).unwrap();
                assert!(inst.verify_classes().unwrap().iter().all(|&ok| ok));
            }
        }
    }

    #[test]
    fn cover_is_subadditive_and_below_input() {
        let spec = GenSpec::new(ValuationClass::SatiatingSubadditive, 1, 6, 9);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let mut raw = weights(&mut rng, 64, 20);
        raw[0] = Value::ZERO;
        let cover = subadditive_cover(&raw, 6);
        assert!(is_subadditive_table(&cover, 6));
        assert!(cover.iter().zip(&raw).all(|(c, r)| c <= r));
        // Already subadditive input is a fixed point.
        assert_eq!(subadditive_cover(&cover, 6), cover);
        assert!(generate(&spec).is_ok());
    }

    #[test]
    fn satiating_submodular_goes_non_monotone() {
        let non_monotone = (0..20).any(|seed| {
            let inst = generate(&GenSpec::new(
                ValuationClass::SatiatingSubmodular,
                1,
                6,
                seed,
            ))
            .unwrap();
            !inst.valuation(0).is_monotone().unwrap()
        });
        assert!(non_monotone);
    }

    #[test]
    fn caps_and_unsupported_classes() {
        let too_big = GenSpec::new(ValuationClass::SatiatingSubadditive, 1, 15, 0);
        assert!(matches!(generate(&too_big), Err(Error::Size(_))));
        let general = GenSpec::new(ValuationClass::MonotoneGeneral, 1, 3, 0);
        assert!(matches!(generate(&general), Err(Error::Contract(_))));
    }
}
