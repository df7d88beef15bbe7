//! Brute-force maximum Nash welfare and the properties it carries.

use propone::algorithms::max_nash_welfare;
use propone::fairness::{is_mef1, is_pareto_optimal, is_prop1, nash_score};
use propone::instance::{generate, GenSpec};
use propone::valuation::ValuationClass;

fn main() -> propone::error::Result<()> {
    let inst = generate(&GenSpec::new(ValuationClass::MonotoneSubmodular, 3, 6, 11))?;
    let alloc = max_nash_welfare(&inst)?;
    let score = nash_score(&inst, &alloc);
    println!(
        "sizes {:?}: {} positive agents, product {}",
        alloc.sizes(),
        score.count_positive,
        score.product_positive
    );
    println!(
        "MEF1={} PROP1={} Pareto-optimal={}",
        is_mef1(&inst, &alloc),
        is_prop1(&inst, &alloc),
        is_pareto_optimal(&inst, &alloc)?
    );
    Ok(())
}
