//! Centralizer orders of unipotent elements from the commutant algebra,
//! compared with the predicted power of q.

use divclass::group::{Family, GroupSpec};
use divclass::report::{oracle_crosscheck, Caps};

fn main() -> divclass::Result<()> {
    for spec in [
        GroupSpec::new(Family::GL, 4, 3)?,
        GroupSpec::new(Family::Sp, 4, 3)?,
        GroupSpec::new(Family::SU, 3, 3)?,
    ] {
        println!("{spec}");
        for c in oracle_crosscheck(&spec, Caps::default())? {
            println!(
                "  {:?}: |C| = {:>8}, q-part {:>5}, q^a = {:>5} {}",
                c.parts,
                c.centralizer_order,
                c.q_part,
                c.expected_q_part,
                if c.ok { "" } else { "MISMATCH" }
            );
        }
    }
    Ok(())
}
