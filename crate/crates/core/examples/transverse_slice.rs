//! The family `<-1, t> + H` near `t = 0`. Over `Q(s)` with `t = s^2` the
//! center of the even part splits; at `t = 0` it acquires a nilpotent.

use quadbundle::algebra_core::{Field, RationalFunction, Scalar, UniPoly};
use quadbundle::clifford::build_clifford;
use quadbundle::quadratic_forms::QuadForm;

fn main() -> quadbundle::Result<()> {
    let t = Scalar::Rf(RationalFunction::from_poly(UniPoly::from_ints(&[0, 0, 1])));
    let generic = build_clifford(&QuadForm::slice_model(t)?).even_subalgebra();
    let report = generic.algebra.semisimplicity_report()?;
    println!("over Q(s), t = s^2:\n{report}\n");

    let special = build_clifford(&QuadForm::slice_model(Field::Rational.zero())?).even_subalgebra();
    let report = special.algebra.semisimplicity_report()?;
    println!("at t = 0:\n{report}");
    if let Some(z) = &report.central_nilpotent {
        println!("z = {}, z^2 = {}", special.algebra.format_element(z), special.algebra.format_element(&special.algebra.mul(z, z)));
    }
    Ok(())
}
