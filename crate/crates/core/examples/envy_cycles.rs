//! Envy graphs, cycle rotation, and envy-cycle elimination.

use propone::algorithms::{envy_cycle_elimination, improve, EnvyGraph};
use propone::fairness::is_ef1;
use propone::instance::{generate, Allocation, GenSpec, Instance};
use propone::valuation::ValuationClass;

fn main() -> propone::error::Result<()> {
    // Each agent wants the other's bundle.
    let inst = Instance::additive(&[vec![1, 5], vec![5, 1]])?;
    let alloc = Allocation::from_lists(2, &[&[0], &[1]]);
    let graph = EnvyGraph::most_envied(&inst, &alloc);
    println!("cycle: {:?}", graph.find_cycle());
    let (better, moved) = improve(&inst, &alloc);
    println!(
        "after improve: {:?} / {:?}, reassigned {moved:?}",
        better.bundle(0),
        better.bundle(1)
    );

    let inst = generate(&GenSpec::new(ValuationClass::MonotoneSubmodular, 4, 9, 3))?;
    let (alloc, trace) = envy_cycle_elimination(&inst)?;
    println!(
        "ECE on 4 agents, 9 goods: sizes {:?}, {} rotations, EF1={}",
        alloc.sizes(),
        trace.rotations,
        is_ef1(&inst, &alloc)
    );
    Ok(())
}
