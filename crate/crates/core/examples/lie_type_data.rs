//! Group orders, fundamental group orders, good primes and the class size
//! predicted for a CC-torus.

use divclass::generic::{
    fundamental_group_order, good_prime, group_order, isolated_class_size, DynkinType,
};
use divclass::group::{Family, GroupSpec, Sign};

fn main() -> divclass::Result<()> {
    for spec in [
        GroupSpec::new(Family::SL, 3, 5)?.projective(),
        GroupSpec::new(Family::SU, 3, 5)?.projective(),
        GroupSpec::new(Family::Sp, 6, 3)?.projective(),
        GroupSpec::new(Family::Omega, 7, 3)?,
        GroupSpec::with_sign(Family::Omega, Some(Sign::Minus), 8, 3)?.projective(),
    ] {
        println!("|{spec}| = {}", group_order(&spec)?);
    }
    for (label, ty, rank, q) in [
        ("A2", "A", 2, 7),
        ("2A2", "2A", 2, 5),
        ("B3", "B", 3, 3),
        ("E6", "E6", 6, 7),
    ] {
        let t: DynkinType = ty.parse()?;
        println!(
            "{label}({q}): k = {}, 3 good: {}",
            fundamental_group_order(t, rank, q)?,
            good_prime(t, 3)
        );
    }
    // PSL(3,7): Coxeter torus of order 57 meeting the centre (order 3) in itself
    println!(
        "isolated vertex of SL(3,7)/Z: {}",
        isolated_class_size(5_630_688, 57, 3, 3)?
    );
    Ok(())
}
