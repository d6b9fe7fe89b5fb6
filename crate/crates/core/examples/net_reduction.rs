//! Analyzes a random net over GF(7): discriminant, smoothness probe, base
//! points, and the rank profile after projecting away from one base point.

use quadbundle::algebra_core::Field;
use quadbundle::quadric_nets::{self, smoothness_probe, NetOfQuadrics};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> quadbundle::Result<()> {
    let f = Field::prime(7)?;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let net = NetOfQuadrics::random(f, &mut rng)?;
    let disc = quadric_nets::discriminant(&net);
    println!("discriminant: {disc}");
    println!("probe: {}", smoothness_probe(&disc, true)?);

    let points = quadric_nets::find_base_points(&net)?;
    println!("{} base points", points.len());
    let Some(x) = points.first() else {
        return Ok(());
    };
    let profile = quadric_nets::rank_profile(&net, x)?;
    println!("projecting from {x}:");
    for entry in &profile.histogram {
        println!("  {entry:?}");
    }
    println!("rank drops by exactly 2 everywhere: {}", profile.rank_drop_holds());
    Ok(())
}
