//! Both PROP1 algorithms, with their JSON-lines traces.

use propone::algorithms::{prop1_subadditive, prop1_submodular_fast};
use propone::fairness::is_prop1;
use propone::instance::{fixture, generate, GenSpec};
use propone::valuation::ValuationClass;

fn main() -> propone::error::Result<()> {
    let inst = fixture("xos7")?.instance;
    let (alloc, trace) = prop1_subadditive(&inst)?;
    println!(
        "xos7: sizes {:?}, PROP1={}",
        alloc.sizes(),
        is_prop1(&inst, &alloc)
    );
    print!("{}", trace.to_json_lines());

    // The general algorithm on satiating-subadditive instances, where the repair loop does real work.
    println!("\nseed  loops  item moves  bound n·m");
    for seed in 0..8 {
        let inst = generate(&GenSpec::new(
            ValuationClass::SatiatingSubadditive,
            3,
            8,
            seed,
        ))?;
        let (a, trace) = prop1_subadditive(&inst)?;
        assert!(is_prop1(&inst, &a));
        println!(
            "{seed:>4}  {:>5}  {:>10}  {:>9}",
            trace.while_loop_executions, trace.item_moves, 24
        );
    }

    let inst = generate(&GenSpec::new(ValuationClass::SatiatingSubmodular, 3, 8, 0))?;
    let (b, fast) = prop1_submodular_fast(&inst)?;
    println!(
        "\nfast algorithm: PROP1={}, {} loops",
        is_prop1(&inst, &b),
        fast.while_loop_executions
    );
    Ok(())
}
