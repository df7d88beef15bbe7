//! Parses an instance document, solves it, and round-trips the result.

use propone::algorithms::{run, Algorithm};
use propone::instance::{
    parse_allocation, parse_instance, serialize_allocation, serialize_instance,
};

const DOC: &str = r#"{
  "n": 2, "m": 3, "labels": ["x", "y", "z"],
  "valuations": [
    {"kind": "additive", "weights": [2, "1/2", 1], "declared_class": "additive"},
    {"kind": "concave_cardinality", "g": [0, 3, 4, 3], "declared_class": "satiating-submodular"}
  ]
}"#;

fn main() -> propone::error::Result<()> {
    let inst = parse_instance(DOC.as_bytes())?;
    assert_eq!(parse_instance(&serialize_instance(&inst))?, inst);
    let (alloc, _) = run(Algorithm::Prop1SubmodularFast, &inst)?;
    let bytes = serialize_allocation(&alloc);
    println!("{}", String::from_utf8_lossy(&bytes));
    assert_eq!(parse_allocation(&bytes)?, alloc);
    Ok(())
}
