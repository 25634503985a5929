//! Built-in example data: a structured family of defining matrices whose
//! prevarieties are never valuation images of subspaces, and a countable
//! family of points inside one fixed prevariety in six coordinates.

use num::{BigInt, BigRational, Zero};

use crate::rat::ExtRat;
use crate::trop::{TropMatrix, TropVector};
use crate::{Error, Result};

fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Defining rows in `n >= 3` coordinates: rows `1..=n-2` are all ones with
/// zeros at positions `i`, `n-1`, `n` (1-based), and the last row is all
/// ones with zeros at the final two positions. The orthogonal prevariety
/// and its orthogonal both have dimension `n - 1`, so the decision
/// procedure reports an obstruction for every `n`.
pub fn example_a0(n: usize) -> Result<TropMatrix> {
    if n < 3 {
        return Err(Error::Dimension(format!(
            "the family needs ambient dimension >= 3, got {n}"
        )));
    }
    let mut rows = Vec::new();
    for i in 1..=n - 2 {
        let coords = (1..=n)
            .map(|c| ExtRat::from_int(if c == i || c >= n - 1 { 0 } else { 1 }))
            .collect();
        rows.push(TropVector::new(coords).expect("n >= 3"));
    }
    let last = (1..=n)
        .map(|c| ExtRat::from_int(if c >= n - 1 { 0 } else { 1 }))
        .collect();
    rows.push(TropVector::new(last).expect("n >= 3"));
    TropMatrix::from_rows(rows)
}

/// The known generating set of the orthogonal of [`example_a0`]: rows
/// `1..=n-2` are all `inf` with zeros at positions `i`, `n-1`, `n`, and the
/// last row is all `inf` with zeros at the final two positions.
pub fn example_a0_orthogonal(n: usize) -> Result<TropMatrix> {
    if n < 3 {
        return Err(Error::Dimension(format!(
            "the family needs ambient dimension >= 3, got {n}"
        )));
    }
    let mut rows = Vec::new();
    for i in 1..=n - 2 {
        let coords = (1..=n)
            .map(|c| {
                if c == i || c >= n - 1 {
                    ExtRat::from_int(0)
                } else {
                    ExtRat::Infinity
                }
            })
            .collect();
        rows.push(TropVector::new(coords).expect("n >= 3"));
    }
    let last = (1..=n)
        .map(|c| {
            if c >= n - 1 {
                ExtRat::from_int(0)
            } else {
                ExtRat::Infinity
            }
        })
        .collect();
    rows.push(TropVector::new(last).expect("n >= 3"));
    TropMatrix::from_rows(rows)
}

/// Offsets for the countable family: one rational `eps_i` per row, each
/// strictly between 0 and 1/4 and pairwise distinct. The gaps between the
/// shifted coordinates keep every point of the family inside the prevariety
/// with margin to spare.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CountableFamilySpec {
    epsilons: Vec<BigRational>,
}

impl CountableFamilySpec {
    /// Validates the offsets: each in the open interval (0, 1/4) and all
    /// pairwise distinct.
    pub fn with_epsilons(epsilons: Vec<BigRational>) -> Result<Self> {
        let quarter = ratio(1, 4);
        for (i, e) in epsilons.iter().enumerate() {
            if *e <= BigRational::zero() || *e >= quarter {
                return Err(Error::Domain(format!(
                    "offset {} is {e}, outside the open interval (0, 1/4)",
                    i + 1
                )));
            }
        }
        for i in 0..epsilons.len() {
            for j in i + 1..epsilons.len() {
                if epsilons[i] == epsilons[j] {
                    return Err(Error::Domain(format!(
                        "offsets {} and {} are both {}",
                        i + 1,
                        j + 1,
                        epsilons[i]
                    )));
                }
            }
        }
        Ok(CountableFamilySpec { epsilons })
    }

    /// Default offsets `eps_i = 1/8 + 1/(8(i+2))` for `i = 1..=m`: strictly
    /// decreasing inside (1/8, 1/6], so the validation holds for every `m`.
    pub fn default_for(m: usize) -> Self {
        let epsilons = (1..=m as i64)
            .map(|i| ratio(1, 8) + ratio(1, 8 * (i + 2)))
            .collect();
        let spec = CountableFamilySpec { epsilons };
        debug_assert!(
            CountableFamilySpec::with_epsilons(spec.epsilons.clone()).is_ok(),
            "default offsets satisfy their own validation"
        );
        spec
    }

    pub fn len(&self) -> usize {
        self.epsilons.len()
    }

    pub fn is_empty(&self) -> bool {
        self.epsilons.is_empty()
    }

    /// The offset for 1-based row index `i`.
    pub fn epsilon(&self, i: usize) -> Result<&BigRational> {
        self.epsilons
            .get(i.wrapping_sub(1))
            .ok_or_else(|| Error::Domain(format!("row index {i} outside 1..={}", self.len())))
    }
}

/// Defining rows of the shared prevariety in six coordinates: row `i` is
/// `(-i, -i, -i/2 - eps_i, -i/2, 0, 0)`.
pub fn example_countable_family(spec: &CountableFamilySpec) -> Result<TropMatrix> {
    let mut rows = Vec::new();
    for i in 1..=spec.len() {
        let e = spec.epsilon(i)?;
        let i_q = int(i as i64);
        let half_i = &i_q / int(2);
        let coords = vec![
            ExtRat::Finite(-i_q.clone()),
            ExtRat::Finite(-i_q),
            ExtRat::Finite(-&half_i - e),
            ExtRat::Finite(-half_i),
            ExtRat::Finite(BigRational::zero()),
            ExtRat::Finite(BigRational::zero()),
        ];
        rows.push(TropVector::new(coords).expect("six coordinates"));
    }
    TropMatrix::new(6, rows)
}

/// The `j`-th point of the family (1-based):
/// `(0, 0, -j/2 - 1/4 + eps_j, -j/2 - 1/4, -j, -j)`. Each point is
/// orthogonal to every defining row, the third and fourth coordinates
/// differ by exactly `eps_j` so distinct offsets give distinct points, and
/// membership survives any perturbation that moves the three coordinate
/// pairs rigidly.
pub fn point_pj(j: usize, spec: &CountableFamilySpec) -> Result<TropVector> {
    let e = spec.epsilon(j)?;
    let j_q = int(j as i64);
    let shifted = -&j_q / int(2) - ratio(1, 4);
    let coords = vec![
        ExtRat::Finite(BigRational::zero()),
        ExtRat::Finite(BigRational::zero()),
        ExtRat::Finite(&shifted + e),
        ExtRat::Finite(shifted),
        ExtRat::Finite(-j_q.clone()),
        ExtRat::Finite(-j_q),
    ];
    Ok(TropVector::new(coords).expect("six coordinates"))
}
