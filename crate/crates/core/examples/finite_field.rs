//! Arithmetic in GF(p^f): the chosen modulus, a primitive element and the
//! Frobenius conjugation used by unitary groups.

use divclass::field::{make_field, FieldOps, FieldTables};

fn main() -> divclass::Result<()> {
    let gf9 = make_field(3, 2)?;
    println!("GF(9) modulus (constant term first): {:?}", gf9.modulus());
    let x = gf9.elem(&[0, 1]);
    let y = gf9.elem(&[2, 1]);
    println!("x = {:?}, y = {:?}", x.coeffs(), y.coeffs());
    println!("x + y = {:?}", (&x + &y).coeffs());
    println!("x * y = {:?}", (&x * &y).coeffs());
    println!("x^-1  = {:?}", x.inv()?.coeffs());
    println!("order of x: {:?}", x.multiplicative_order());
    println!("x^3 (conjugate over GF(3)) = {:?}", x.q_power(3)?.coeffs());

    let gf25 = FieldTables::with_conjugation(make_field(5, 2)?, 5)?;
    let fixed = (0..gf25.order() as u8)
        .filter(|&a| gf25.conj(a) == a)
        .count();
    println!(
        "GF(25): primitive code {}, {} elements fixed by a -> a^5",
        gf25.primitive(),
        fixed
    );
    Ok(())
}
