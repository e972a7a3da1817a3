//! Coxeter numbers, highest roots and the size of the θ-graded piece for
//! every simple type in the default sweep.
//!
//!     cargo run --example root_systems

use rowmotion::rootsys::{default_sweep, RootSystem};

fn main() -> rowmotion::Result<()> {
    println!(
        "{:<5} {:>4} {:>4} {:>5} {:>4}  theta",
        "type", "h", "h*", "|Pl|", "|D1|"
    );
    for kind in default_sweep() {
        let rs = RootSystem::new(kind)?;
        let (h, hstar) = rs.coxeter_numbers();
        println!(
            "{:<5} {:>4} {:>4} {:>5} {:>4}  {}",
            kind.to_string(),
            h,
            hstar,
            rs.long_simple_count(),
            rs.delta_one_roots().len(),
            rs.theta().label(),
        );
    }
    Ok(())
}
