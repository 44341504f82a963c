//! Arithmetic in GF(p^k): element codes, inverses and the Frobenius map.
use polarity_graphs::{Fe, Field};

fn main() -> polarity_graphs::Result<()> {
    let f = Field::of_order(9)?;
    println!(
        "GF(9) modulus coefficients (low degree first): {:?}",
        f.modulus()
    );

    let a = f.from_coeffs(&[1, 2]); // 1 + 2x
    let b = f.from_coeffs(&[0, 1]); // x
    println!("a = {:?}, b = {:?}", f.coeffs(a), f.coeffs(b));
    println!("a + b = {:?}", f.coeffs(f.add(a, b)));
    println!("a * b = {:?}", f.coeffs(f.mul(a, b)));
    println!("a^-1  = {:?}", f.coeffs(f.inv(a)?));
    assert_eq!(f.mul(a, f.inv(a)?), Fe::ONE);

    // x -> x^3 is the nontrivial automorphism of GF(9).
    let conj: Vec<_> = f.elements().map(|x| f.coeffs(f.pow(x, 3))).collect();
    println!("x^3 over all elements: {conj:?}");

    // The checked wrapper refuses to mix fields.
    let g = Field::of_order(3)?;
    let mixed = f.elem(a).add(&g.elem(Fe::ONE));
    println!("mixing GF(9) and GF(3): {}", mixed.unwrap_err());

    println!("dividing by zero: {}", f.inv(Fe::ZERO).unwrap_err());
    Ok(())
}
