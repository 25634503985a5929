//! The decision procedure end to end: one input that is certified as the
//! valuation image of a subspace, one refuted by the dimension obstruction,
//! and one left inconclusive because the search gets no rounds.

use troplin::rat::ExtRat;
use troplin::variety::{decide_variety, Decision, SearchBudget};
use troplin::{TropMatrix, TropVector};

fn row(coords: &[&str]) -> TropVector {
    TropVector::new(coords.iter().map(|c| c.parse().unwrap()).collect::<Vec<ExtRat>>()).unwrap()
}

fn report(label: &str, rows: Vec<TropVector>, budget: &SearchBudget) -> troplin::Result<()> {
    let m = TropMatrix::from_rows(rows)?;
    match decide_variety(&m, budget, 0)? {
        Decision::Variety(cert) => {
            println!("{label}: variety");
            println!("  primal lifts: {}, basis {:?}", cert.v_lifts().len(), cert.p_basis());
            println!("  orthogonal lifts: {}, basis {:?}", cert.w_lifts().len(), cert.q_basis());
            for v in cert.v_lifts() {
                println!("  lift {v} tropicalizes to {}", v.tropicalize());
            }
        }
        Decision::NotVariety(obs) => {
            println!(
                "{label}: not a variety ({} + {} > {})",
                obs.dim_perp, obs.dim_perp_perp, obs.ambient
            );
        }
        Decision::Inconclusive(r) => {
            println!(
                "{label}: inconclusive after {} rounds at {} terms",
                r.rounds, r.max_terms
            );
        }
    }
    Ok(())
}

fn main() -> troplin::Result<()> {
    let budget = SearchBudget::default();
    report(
        "line in three coordinates",
        vec![row(&["0", "0", "inf"]), row(&["0", "inf", "0"])],
        &budget,
    )?;
    report(
        "two independent rows",
        vec![row(&["0", "0", "0"]), row(&["1", "0", "0"])],
        &budget,
    )?;
    report(
        "same line, zero search rounds",
        vec![row(&["0", "0", "inf"]), row(&["0", "inf", "0"])],
        &SearchBudget {
            rounds: 0,
            max_terms: 6,
        },
    )?;
    Ok(())
}
