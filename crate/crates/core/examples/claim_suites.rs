//! Runs a few claim suites with small trial counts and prints their outcome.

use propone::oracle::{verify_claim, ClaimId};

fn main() -> propone::error::Result<()> {
    for claim in [ClaimId::T3_1, ClaimId::T4_1, ClaimId::T5_1, ClaimId::T6_3] {
        let r = verify_claim(claim, Some(20), 1)?;
        let verdict = if r.passed { "PASS" } else { "FAIL" };
        println!(
            "{verdict} {:<5} {} ({} checks)",
            r.claim.name(),
            r.description,
            r.checks
        );
        for d in &r.details {
            println!("      {d}");
        }
    }
    Ok(())
}
