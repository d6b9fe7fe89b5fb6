//! Expands the Hilbert series `(1+t)^3 / (1-t)^3`, checks that it pairs with
//! itself under `H(t) H(-t) = 1`, and takes its even-degree part.

use quadbundle::algebra_core::{expand_rational_series, koszul_pairing, IntPoly};

fn main() -> quadbundle::Result<()> {
    let num = IntPoly::parse("(1+t)^3")?;
    let den = IntPoly::parse("(1-t)^3")?;
    let h = expand_rational_series(&num, &den, 12)?;
    println!("H(t)      = {:?}", h.to_i64s().unwrap());

    let pairing = koszul_pairing(&h, &h)?;
    println!("H(t)H(-t) = {:?}", pairing.to_i64s().unwrap());

    let v = h.even_veronese();
    println!("even part = {:?}", v.to_i64s().unwrap());
    Ok(())
}
