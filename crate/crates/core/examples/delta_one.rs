//! Lists the roots of Δ(1) for one type, grouped by height.
//!
//!     cargo run --example delta_one -- F4

use rowmotion::rootsys::{RootSystem, SimpleType};

fn main() -> rowmotion::Result<()> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "E6".into());
    let rs = RootSystem::new(SimpleType::parse(&arg)?)?;
    let roots = rs.delta_one_roots();
    println!("{}: {} roots with (α, θ) = 1", rs.kind(), roots.len());
    let mut height = 0;
    for root in roots {
        if root.height() != height {
            height = root.height();
            print!("\nheight {height:>2}:");
        }
        print!(" {}{}", root.label(), if root.is_long() { "" } else { "s" });
    }
    println!();
    let poset = rs.delta_one();
    let covers: usize = (0..poset.len()).map(|x| poset.upper_covers(x).len()).sum();
    println!(
        "\n{} cover relations, graded: {}",
        covers,
        poset.is_graded()
    );
    Ok(())
}
