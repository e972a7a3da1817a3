//! Writes the Hasse diagram of Δ(1) in Graphviz format.
//!
//!     cargo run --example hasse_dot -- D6 | dot -Tsvg > d6.svg

use rowmotion::rootsys::{RootSystem, SimpleType};

fn main() -> rowmotion::Result<()> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "D6".into());
    let rs = RootSystem::new(SimpleType::parse(&arg)?)?;
    print!(
        "{}",
        rs.delta_one().to_dot(&format!("Delta1_{}", rs.kind()))
    );
    Ok(())
}
