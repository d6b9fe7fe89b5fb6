//! Lists the isotropic planes of three 4-variable forms over GF(3) and groups
//! them into connected families.

use quadbundle::algebra_core::Field;
use quadbundle::quadratic_forms::{classify_components, enumerate_max_isotropic, QuadForm};

fn main() -> quadbundle::Result<()> {
    let f = Field::prime(3)?;
    let h = QuadForm::hyperbolic(f);
    let forms = [
        ("H + H", h.direct_sum(&h)?),
        ("<-1,1> + H", QuadForm::diagonal_i64(f, &[-1, 1])?.direct_sum(&h)?),
        ("rank-3 cone", QuadForm::slice_model(f.zero())?),
    ];
    for (name, q) in &forms {
        let planes = enumerate_max_isotropic(q, 2)?;
        let classes = classify_components(q, &planes)?;
        println!("{name}: rank {}, {} planes, {} families", q.rank(), planes.len(), classes.count());
        let labels = classes.labels(planes.len());
        for (plane, label) in planes.iter().zip(&labels).take(4) {
            println!("  family {label}: {:?}", plane.basis_rows().iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>());
        }
    }
    Ok(())
}
