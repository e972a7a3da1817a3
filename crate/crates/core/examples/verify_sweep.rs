//! Runs the orbit checks over all types up to a rank bound and prints the
//! summary table.
//!
//!     cargo run --release --example verify_sweep -- 10

use rowmotion::poset::DEFAULT_ENUMERATION_CAP;
use rowmotion::rootsys::sweep_up_to;
use rowmotion::verify::{render_table, verify_sweep};

fn main() -> rowmotion::Result<()> {
    let max: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(8);
    let reports = verify_sweep(&sweep_up_to(max, max + 1), DEFAULT_ENUMERATION_CAP)?;
    print!("{}", render_table(&reports));
    let failed = reports.iter().filter(|r| !r.passed()).count();
    println!("{} types, {failed} with a failing clause", reports.len());
    std::process::exit(if failed == 0 { 0 } else { 1 });
}
