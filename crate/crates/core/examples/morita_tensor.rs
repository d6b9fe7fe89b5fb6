//! Row vectors tensored with column vectors over the matrix ring is one
//! dimensional for every size.

use quadbundle::clifford::morita_tensor_dim;

fn main() {
    for n in 1..=6 {
        println!("n = {n}: dim = {}", morita_tensor_dim(n));
    }
}
