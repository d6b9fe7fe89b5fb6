//! Semisimplicity reports for Clifford algebras and their even parts.

use quadbundle::algebra_core::Field;
use quadbundle::clifford::build_clifford;
use quadbundle::quadratic_forms::QuadForm;

fn main() -> quadbundle::Result<()> {
    let f = Field::prime(11)?;
    let cases = [
        ("Cl(H)", QuadForm::hyperbolic(f), false),
        ("Cl0(<1,1,1,1,1,-1>)", QuadForm::diagonal_i64(f, &[1, 1, 1, 1, 1, -1])?, true),
        ("Cl0(<1,1,1,1>)", QuadForm::diagonal_i64(f, &[1, 1, 1, 1])?, true),
        ("Cl0(cone)", QuadForm::slice_model(f.zero())?, true),
    ];
    for (name, q, even) in cases {
        let cl = build_clifford(&q);
        let report = if even {
            cl.even_subalgebra().algebra.semisimplicity_report()?
        } else {
            cl.algebra().semisimplicity_report()?
        };
        println!("{name}\n{report}\n");
    }
    Ok(())
}
