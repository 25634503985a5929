//! Tropicalizing a spanned subspace: maximal minors of a basis, the induced
//! generating rows of the valuation image, and exact membership tests
//! against the minor valuations.

use troplin::puiseux::PuiseuxVector;
use troplin::rat::ExtRat;
use troplin::variety::{plucker_coordinates, trop_generators_from_plucker, trop_space_member};
use troplin::TropVector;

fn pvec(coords: &[&str]) -> PuiseuxVector {
    PuiseuxVector::new(coords.iter().map(|c| c.parse().unwrap()).collect()).unwrap()
}

fn tv(coords: &[&str]) -> TropVector {
    TropVector::new(coords.iter().map(|c| c.parse().unwrap()).collect::<Vec<ExtRat>>()).unwrap()
}

fn main() -> troplin::Result<()> {
    let basis = [pvec(&["1", "0", "t", "1+t"]), pvec(&["0", "1", "1", "t^2"])];
    let plucker = plucker_coordinates(&basis)?;
    println!("minor valuations of the span:");
    for (subset, val) in plucker.trop_coords() {
        println!("  columns {subset:?}: {val}");
    }

    let rows = trop_generators_from_plucker(&plucker);
    println!("defining rows of the valuation image:");
    for r in rows.rows() {
        println!("  {r}");
    }

    // the basis tropicalizations are members; a generic point is not
    for point in [
        basis[0].tropicalize(),
        basis[1].tropicalize(),
        tv(&["0", "0", "5", "0"]),
    ] {
        println!(
            "{point} in the tropicalized span: {}",
            trop_space_member(&plucker, &point)?
        );
    }
    Ok(())
}
