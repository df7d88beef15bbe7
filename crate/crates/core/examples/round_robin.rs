//! Round-robin with both stopping rules on the satiating fixture.

use propone::algorithms::{round_robin, Stop, TraceEvent};
use propone::fairness::is_prop1;
use propone::instance::fixture;

fn main() -> propone::error::Result<()> {
    let inst = fixture("rr_satiating")?.instance;
    for stop in [Stop::Complete, Stop::SecondToLast] {
        let (alloc, trace) = round_robin(&inst, &[0, 1], stop)?;
        println!("{stop:?}: PROP1={}", is_prop1(&inst, &alloc));
        for e in &trace.events {
            if let TraceEvent::Pick {
                round,
                agent,
                good: Some(g),
                marginal,
            } = e
            {
                println!(
                    "  round {round}: agent {agent} takes {} (marginal {marginal})",
                    inst.label(*g)
                );
            }
        }
        let pool: Vec<String> = inst
            .goods()
            .difference(alloc.allocated())
            .iter()
            .map(|g| inst.label(g))
            .collect();
        println!("  unallocated: [{}]", pool.join(", "));
    }
    Ok(())
}
