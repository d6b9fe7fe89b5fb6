//! Checks that the Clifford algebra of an orthogonal sum is the graded
//! tensor product of the two Clifford algebras.

use quadbundle::algebra_core::Field;
use quadbundle::clifford::TensorIdentification;
use quadbundle::quadratic_forms::QuadForm;

fn main() -> quadbundle::Result<()> {
    let f = Field::prime(5)?;
    let q1 = QuadForm::diagonal_i64(f, &[1, 2])?;
    let q2 = QuadForm::hyperbolic(f);
    let id = TensorIdentification::new(&q1, &q2)?;
    println!("Cl(q1 + q2) has dimension {}", id.direct.dim());
    println!("graded tensor has dimension {}", id.tensor.dim());
    println!("generators map to an isomorphism: {}", id.is_isomorphism());
    Ok(())
}
