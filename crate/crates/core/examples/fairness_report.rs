//! Full fairness report for a hand-written allocation.

use propone::fairness::{is_pareto_optimal, FairnessReport};
use propone::instance::{Allocation, Instance};

fn main() -> propone::error::Result<()> {
    let inst = Instance::additive(&[vec![4, 1, 1, 0], vec![1, 3, 1, 3]])?;
    let alloc = Allocation::from_lists(4, &[&[0], &[1, 2, 3]]);
    let report = FairnessReport::new(&inst, &alloc);
    println!("{}", serde_json::to_string_pretty(&report)?);
    println!("pareto optimal: {}", is_pareto_optimal(&inst, &alloc)?);
    Ok(())
}
