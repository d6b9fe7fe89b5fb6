//! Change in c2 under an elementary transformation, with the divisibility
//! and minimality checks that follow from it.

use quadbundle::k3_chern::{self, ElemTransformData};

fn main() -> quadbundle::Result<()> {
    let data = ElemTransformData::from_parts(1, 3, 2, 3, 12)?;
    let report = k3_chern::delta_c2_elementary_transform(&data)?;
    println!("delta c2 = {} (expanded form agrees: {:?})", report.delta_c2, report.agrees);
    println!("note: {}", report.caveat);

    let swapped = k3_chern::delta_c2_elementary_transform(&data.swapped())?;
    println!("swapped roles: delta c2 = {}", swapped.delta_c2);

    let r = 3;
    println!("c2 difference divisible: {}", k3_chern::gerbe_divisibility_check(r, 10 + report.delta_c2, 10)?);
    let bound = k3_chern::simple_c2_lower_bound(r);
    println!("lower bound for rank {r}: {bound}; c2 = {bound} minimal: {}", k3_chern::minimality_check(r, bound, bound)?);
    Ok(())
}
