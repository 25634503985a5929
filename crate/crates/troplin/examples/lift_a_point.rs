//! Lifting a min-plus hull point to an exact vector: membership supplies
//! the coefficients, and the lift picks integer multipliers that avoid
//! leading-term cancellation, so its valuations reproduce the point.

use troplin::puiseux::PuiseuxVector;
use troplin::variety::lift_hull_point;
use troplin::GeneratorSet;

fn pvec(coords: &[&str]) -> PuiseuxVector {
    PuiseuxVector::new(coords.iter().map(|c| c.parse().unwrap()).collect()).unwrap()
}

fn main() -> troplin::Result<()> {
    let vectors = [pvec(&["1", "0", "t"]), pvec(&["0", "1", "1"])];
    let trop_rows: Vec<_> = vectors.iter().map(PuiseuxVector::tropicalize).collect();
    let gens = GeneratorSet::new(3, trop_rows)?;

    // a point of the hull: both generators contribute at coefficient 0
    let target = gens.hull_eval(&[troplin::ExtRat::zero(), troplin::ExtRat::zero()])?;
    let coeffs = gens
        .hull_member(&target)?
        .expect("evaluations are members");

    let lifted = lift_hull_point(&vectors, &coeffs, &target)?;
    println!("target            {target}");
    println!("lift              {lifted}");
    println!("lift valuations   {}", lifted.tropicalize());
    Ok(())
}
