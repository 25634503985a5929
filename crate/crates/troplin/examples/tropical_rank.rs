//! Tropical rank and singularity: a square matrix is tropically singular
//! when every permutation expansion either hits `inf` or ties its minimum,
//! and the rank is the largest nonsingular square submatrix.

use troplin::rank::{is_tropically_singular, tropical_rank};
use troplin::rat::ExtRat;
use troplin::{TropMatrix, TropVector};

fn row(coords: &[&str]) -> TropVector {
    TropVector::new(coords.iter().map(|c| c.parse().unwrap()).collect::<Vec<ExtRat>>()).unwrap()
}

fn main() -> troplin::Result<()> {
    let nonsingular = TropMatrix::from_rows(vec![row(&["0", "1"]), row(&["1", "0"])])?;
    println!(
        "[[0,1],[1,0]]: rank {}, singular {}",
        tropical_rank(&nonsingular),
        is_tropically_singular(&nonsingular)?
    );

    // the all-zero matrix ties every permutation at 0
    let tied = TropMatrix::from_rows(vec![row(&["0", "0"]), row(&["0", "0"])])?;
    println!(
        "[[0,0],[0,0]]: rank {}, singular {}",
        tropical_rank(&tied),
        is_tropically_singular(&tied)?
    );

    let wide = TropMatrix::from_rows(vec![
        row(&["0", "1", "inf"]),
        row(&["inf", "0", "2"]),
    ])?;
    println!("a 2x3 matrix with infinities: rank {}", tropical_rank(&wide));
    Ok(())
}
