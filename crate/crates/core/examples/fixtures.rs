//! Prints the built-in fixtures and their distinguished allocations.

use propone::fairness::FairnessReport;
use propone::instance::{fixture, Allocation, Instance, FIXTURE_NAMES};

fn show(inst: &Instance, a: &Allocation) -> String {
    let bundles: Vec<String> = (0..a.n())
        .map(|i| {
            let labels: Vec<String> = a.bundle(i).iter().map(|g| inst.label(g)).collect();
            format!("{{{}}}", labels.join(","))
        })
        .collect();
    format!("({})", bundles.join(", "))
}

fn main() -> propone::error::Result<()> {
    for name in FIXTURE_NAMES {
        let f = fixture(name)?;
        let inst = &f.instance;
        let shares: Vec<String> = (0..inst.n())
            .map(|i| inst.grand_value(i).to_string())
            .collect();
        println!(
            "{name}: n={} m={} v_i(M)=[{}]",
            inst.n(),
            inst.m(),
            shares.join(", ")
        );
        if let Some(a) = &f.pinned {
            let r = FairnessReport::new(inst, a);
            println!(
                "  pinned {} EF1={} PROP1={}",
                show(inst, a),
                r.is_ef1,
                r.is_prop1
            );
        }
    }
    Ok(())
}
