//! Rowmotion orbits on the lower ideals of Δ(1), with the cardinality
//! sequence of each orbit and its ideals of size h* - 2 marked.
//!
//!     cargo run --example rowmotion_orbits -- E6

use rowmotion::dynamics::{lagrangian_count, orbit_decomposition};
use rowmotion::poset::DEFAULT_ENUMERATION_CAP;
use rowmotion::rootsys::{RootSystem, SimpleType};

fn main() -> rowmotion::Result<()> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "E6".into());
    let rs = RootSystem::new(SimpleType::parse(&arg)?)?;
    let target = rs.dual_coxeter_number() as i64 - 2;
    let poset = rs.delta_one();
    let orbits = orbit_decomposition(&poset, DEFAULT_ENUMERATION_CAP)?;
    println!(
        "{}: {} ideals in {} orbits, h - 1 = {}",
        rs.kind(),
        orbits.iter().map(|o| o.size()).sum::<usize>(),
        orbits.len(),
        rs.coxeter_number() - 1
    );
    for (i, orbit) in orbits.iter().enumerate() {
        let seq: Vec<String> = orbit
            .cardinalities()
            .into_iter()
            .map(|c| {
                if c as i64 == target {
                    format!("[{c}]")
                } else {
                    c.to_string()
                }
            })
            .collect();
        println!(
            "orbit {i:>2} size {:>2} lagrangian {}: {}",
            orbit.size(),
            lagrangian_count(orbit, target),
            seq.join(" ")
        );
    }
    Ok(())
}
