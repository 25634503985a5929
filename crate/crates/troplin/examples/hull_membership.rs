//! Min-plus hulls: evaluating combinations of generators and testing exact
//! membership, with witness coefficients when the answer is yes.

use troplin::{ExtRat, GeneratorSet, TropVector};

fn tv(coords: &[i64]) -> TropVector {
    TropVector::new(coords.iter().map(|&c| ExtRat::from_int(c)).collect()).unwrap()
}

fn main() -> troplin::Result<()> {
    let gens = GeneratorSet::new(3, vec![tv(&[0, 0, 1]), tv(&[2, 0, 0])])?;

    let combo = gens.hull_eval(&[ExtRat::from_int(1), ExtRat::zero()])?;
    println!("1 * g0 min 0 * g1 = {combo}");

    for point in [combo.clone(), tv(&[0, 0, 0])] {
        match gens.hull_member(&point)? {
            Some(coeffs) => {
                let cs: Vec<String> = coeffs.iter().map(ExtRat::to_string).collect();
                println!("{point} is in the hull via coefficients ({})", cs.join(", "));
            }
            None => println!("{point} is not in the hull"),
        }
    }
    Ok(())
}
