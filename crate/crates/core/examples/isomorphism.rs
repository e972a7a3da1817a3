//! Finds explicit order isomorphisms between Δ(1) and the expected product
//! or union of chains.
//!
//!     cargo run --example isomorphism

use rowmotion::rootsys::{default_sweep, RootSystem};
use rowmotion::verify::claimed_structure;

fn main() -> rowmotion::Result<()> {
    for kind in default_sweep() {
        let Some(model) = claimed_structure(kind) else {
            println!("{kind:<4} no model");
            continue;
        };
        let delta = RootSystem::new(kind)?.delta_one();
        match delta.is_isomorphic(&model) {
            Some(map) if delta.is_order_isomorphism(&model, &map) => {
                let sample: Vec<String> = (0..delta.len().min(3))
                    .map(|x| format!("{} -> {}", delta.label(x), model.label(map[x])))
                    .collect();
                println!("{kind:<4} isomorphic  {}", sample.join(", "));
            }
            _ => println!("{kind:<4} NOT isomorphic"),
        }
    }
    Ok(())
}
