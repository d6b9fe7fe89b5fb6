//! Euler characteristics of twisted sheaves on a K3 surface and on the plane.

use quadbundle::algebra_core::IntPoly;
use quadbundle::k3_chern::{self, K3ChernData};

fn main() -> quadbundle::Result<()> {
    let data = K3ChernData::azumaya(2, 4, 2)?;
    for n in -2..=2 {
        println!("chi(A({n})) = {}", k3_chern::chi_twisted_k3(&data, n));
    }
    let table = k3_chern::simplicity_consequences(k3_chern::chi_twisted_k3(&data, 0));
    println!("{table:?}");

    let observed = IntPoly::from_ints(&[0, 0, 2]);
    println!("c2 fitted to chi = 2n^2: {}", k3_chern::solve_c2_from_hilbert(2, 2, &observed)?);

    let even = k3_chern::chi_even_clifford_p2()?;
    for c in &even.components {
        println!("chi({}) = {}", c.name, c.chi);
    }
    println!("total chi {} over rank {}, c2 = {}", even.total_chi, even.total_rank, even.c2);
    Ok(())
}
