//! Seeded instance generation for every supported class.

use propone::instance::{generate, serialize_instance, GenSpec};
use propone::valuation::ValuationClass;

fn main() -> propone::error::Result<()> {
    for class in [
        ValuationClass::Additive,
        ValuationClass::MonotoneSubmodular,
        ValuationClass::MonotoneXos,
        ValuationClass::SatiatingSubmodular,
        ValuationClass::SatiatingSubadditive,
    ] {
        let inst = generate(&GenSpec::new(class, 3, 5, 42))?;
        let verified = inst.verify_classes()?.iter().all(|&ok| ok);
        let grand: Vec<String> = (0..3).map(|i| inst.grand_value(i).to_string()).collect();
        println!(
            "{:<22} verified={verified} v_i(M)=[{}]",
            class.name(),
            grand.join(", ")
        );
    }

    // Same seed, same bytes.
    let spec = GenSpec::new(ValuationClass::SatiatingSubmodular, 2, 4, 7);
    assert_eq!(
        serialize_instance(&generate(&spec)?),
        serialize_instance(&generate(&spec)?)
    );
    println!(
        "{}",
        String::from_utf8_lossy(&serialize_instance(&generate(&spec)?))
    );
    Ok(())
}
