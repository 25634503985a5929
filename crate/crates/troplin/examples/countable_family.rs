//! A single prevariety in six coordinates containing a countable family of
//! points, one per defining row: each point is orthogonal to every row,
//! membership survives perturbations that move the coordinate pairs
//! rigidly, and breaking a pair leaves the prevariety.

use num::BigRational;
use troplin::corpus::{example_countable_family, point_pj, CountableFamilySpec};
use troplin::prevariety::prevariety_member;
use troplin::rat::ExtRat;
use troplin::TropVector;

fn shifted(p: &TropVector, deltas: &[(usize, BigRational)]) -> TropVector {
    let mut coords: Vec<ExtRat> = p.iter().cloned().collect();
    for (i, d) in deltas {
        coords[*i] = &coords[*i] + &ExtRat::Finite(d.clone());
    }
    TropVector::new(coords).unwrap()
}

fn main() -> troplin::Result<()> {
    let spec = CountableFamilySpec::default_for(5);
    let rows = example_countable_family(&spec)?;
    println!("defining rows:");
    for r in rows.rows() {
        println!("  {r}");
    }

    for j in 1..=spec.len() {
        let p = point_pj(j, &spec)?;
        println!("p_{j} = {p}: member {}", prevariety_member(&rows, &p)?);
    }

    let p = point_pj(3, &spec)?;
    let eps = BigRational::new(1.into(), 100.into());
    let rigid = shifted(&p, &[(2, eps.clone()), (3, eps.clone())]);
    println!(
        "moving the middle pair of p_3 together: member {}",
        prevariety_member(&rows, &rigid)?
    );
    let broken = shifted(&p, &[(2, eps)]);
    println!(
        "moving only one coordinate of the pair: member {}",
        prevariety_member(&rows, &broken)?
    );
    Ok(())
}
