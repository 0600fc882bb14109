//! Centralizer exponents `a_u` of unipotent classes and the bound `a_u >= rank`.

use divclass::unipotent::{verify_unipotent_bound, JordanFamily};

fn main() -> divclass::Result<()> {
    for (family, n) in [
        (JordanFamily::Linear, 4),
        (JordanFamily::Symplectic, 6),
        (JordanFamily::Orthogonal, 7),
        (JordanFamily::Orthogonal, 8),
    ] {
        let r = verify_unipotent_bound(family, n)?;
        println!(
            "{family}({n}): rank {}, {} types, bound holds: {}",
            r.rank,
            r.types.len(),
            r.bound_ok
        );
        let min = r.types.iter().map(|t| t.a).min().unwrap_or(0);
        for t in r.types.iter().filter(|t| t.a == min) {
            println!(
                "  minimum a = {} at {:?}{}",
                t.a,
                t.parts,
                if t.regular { " (regular)" } else { "" }
            );
        }
    }
    Ok(())
}
