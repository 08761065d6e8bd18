//! Benchmark-only crate; see `benches/pipeline.rs`.

use tilderep::ehresmann::Ehresmann;
use tilderep::zoo::by_name;

/// A zoo member that is known to pass the Ehresmann gate.
pub fn zoo_ehresmann(name: &str) -> Ehresmann {
    Ehresmann::new(by_name(name).expect("catalogue name")).expect("zoo members are Ehresmann")
}
