//! Orthogonal complements of a row matrix: generators of `A⊥` and `A⊥⊥`,
//! their dimensions, and the closure law `X⊥ = X⊥⊥⊥`.

use troplin::corpus::example_a0;
use troplin::prevariety::{dimension, orthogonal_generators, prevariety_equal};

fn main() -> troplin::Result<()> {
    let a = example_a0(4)?;
    println!("rows of A:");
    for row in a.rows() {
        println!("  {row}");
    }

    let perp = orthogonal_generators(&a)?;
    println!("generators of A-perp (dimension {}):", dimension(&perp));
    for g in perp.gens() {
        println!("  {g}");
    }

    let perp2 = orthogonal_generators(&perp.to_matrix())?;
    println!("generators of A-perp-perp (dimension {}):", dimension(&perp2));
    for g in perp2.gens() {
        println!("  {g}");
    }

    let perp3 = orthogonal_generators(&perp2.to_matrix())?;
    println!(
        "taking one more complement returns to A-perp: {}",
        prevariety_equal(&perp, &perp3)?
    );
    Ok(())
}
