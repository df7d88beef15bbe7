//! Builds one valuation of each constructive kind and probes its class.

use propone::bundle::Bundle;
use propone::valuation::{ConditionalRule, Coverage, Kind, ValuationClass, ValuationFn};
use propone::value::Value;

fn ints(xs: &[i128]) -> Vec<Value> {
    xs.iter().map(|&x| Value::int(x)).collect()
}

fn main() -> propone::error::Result<()> {
    let coverage = Coverage::new(ints(&[3, 1, 2]), &[vec![0, 1], vec![1, 2], vec![2]])?;
    let rule = ConditionalRule {
        base: ints(&[2, 2, 0]),
        trigger: 2,
        default: Value::int(1),
        condition: Bundle::from_goods([0, 1]),
        conditioned: Value::int(-3),
    };
    let samples = [
        (
            "additive",
            Kind::Additive(ints(&[1, 2, 3])),
            ValuationClass::Additive,
        ),
        (
            "xos",
            Kind::Xos(vec![ints(&[3, 0, 1]), ints(&[0, 2, 2])]),
            ValuationClass::MonotoneXos,
        ),
        (
            "coverage",
            Kind::Coverage(coverage),
            ValuationClass::MonotoneSubmodular,
        ),
        (
            "concave",
            Kind::ConcaveCardinality(ints(&[0, 4, 5, 4])),
            ValuationClass::SatiatingSubmodular,
        ),
        (
            "rule",
            Kind::MarginalRule(rule),
            ValuationClass::SatiatingSubadditive,
        ),
    ];

    println!(
        "{:<9} {:>8} {:>10} {:>12} {:>12}",
        "kind", "v(M)", "monotone", "submodular", "subadditive"
    );
    for (name, kind, class) in samples {
        let v = ValuationFn::new(kind, class)?;
        println!(
            "{name:<9} {:>8} {:>10} {:>12} {:>12}",
            v.value(Bundle::full(3))?.to_string(),
            v.is_monotone()?,
            v.is_submodular()?,
            v.is_subadditive()?,
        );
        assert!(v.verify_class()?, "{name} does not meet its declared class");
    }

    // A concave cardinality curve that turns down: the third good has a negative marginal.
    let satiating = ValuationFn::new(
        Kind::ConcaveCardinality(ints(&[0, 4, 5, 4])),
        ValuationClass::SatiatingSubmodular,
    )?;
    let two = Bundle::from_goods([0, 1]);
    println!(
        "marginal of good 2 on {{0,1}}: {}",
        satiating.marginal(Bundle::singleton(2), two)?
    );
    Ok(())
}
