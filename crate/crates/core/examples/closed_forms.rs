//! Rowmotion on `[2] × K_{n-1}` computed from rank signatures alone, side by
//! side with the operator on ideals.
//!
//!     cargo run --example closed_forms -- 4

use rowmotion::dynamics::{
    classify_orbit, ideal_of_signature, orbit_of, rowmotion_k_closed_form, signature_of,
    RankSignature, Slice, DEFAULT_ORBIT_CAP,
};
use rowmotion::poset::{KPoset, ProductPoset};

fn main() -> rowmotion::Result<()> {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(4);
    let k = KPoset::new(n)?;
    let pp = ProductPoset::new(2, k.poset().clone());
    for start in [Slice::Level(1), Slice::Unprimed] {
        let sig = RankSignature::new([(start, 2)]);
        let orbit = orbit_of(
            pp.poset(),
            &ideal_of_signature(&pp, &k, &sig)?,
            DEFAULT_ORBIT_CAP,
        )?;
        println!(
            "orbit of {sig}: {} ideals, {:?}",
            orbit.size(),
            classify_orbit(&orbit, &pp)?
        );
        let mut current = signature_of(&pp, &k, &orbit.ideals()[0])?;
        for ideal in orbit.ideals() {
            let next = rowmotion_k_closed_form(&current, n, 2)?;
            assert_eq!(signature_of(&pp, &k, ideal)?, current);
            println!("  {current:<16} -> {next}");
            current = next;
        }
    }
    Ok(())
}
