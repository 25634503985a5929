//! Deciding whether a min-plus prevariety is the coordinatewise valuation
//! image of a linear subspace of Puiseux vectors.
//!
//! The pipeline: from defining rows `A`, compute generators of `X = A⊥` and
//! `Y = X⊥`. If `dim X + dim Y` exceeds the ambient dimension, no subspace
//! can tropicalize onto `X` and the answer is a dimension obstruction. When
//! the dimensions split the ambient space exactly, the answer is positive
//! precisely when every generator of `X` and of `Y` lifts to an exact vector
//! such that all cross pairs have zero dot product and each side spans its
//! full dimension; such liftings form a certificate that is checked
//! exactly. The search for liftings is randomized and budgeted, so a third
//! outcome reports that the budget ran out without a certificate.

use std::collections::BTreeMap;

use itertools::Itertools;
use num::{BigInt, BigRational, One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

use crate::prevariety::{dimension, orthogonal_generators};
use crate::puiseux::{PuiseuxFrac, PuiseuxPoly, PuiseuxVector};
use crate::rat::{min_attained_twice, ExtRat};
use crate::trop::{self, GeneratorSet, TropMatrix, TropVector};
use crate::{Error, Result};

/// Exterior coordinates of the span of `d` Puiseux vectors in `n`
/// coordinates: one maximal minor per sorted `d`-subset of columns.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PlueckerVector {
    d: usize,
    n: usize,
    coords: BTreeMap<Vec<usize>, PuiseuxPoly>,
}

impl PlueckerVector {
    pub fn spanning_dim(&self) -> usize {
        self.d
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    /// All maximal minors, keyed by sorted column subset.
    pub fn coords(&self) -> &BTreeMap<Vec<usize>, PuiseuxPoly> {
        &self.coords
    }

    pub fn coord(&self, subset: &[usize]) -> Option<&PuiseuxPoly> {
        self.coords.get(subset)
    }

    /// Valuations of the maximal minors.
    pub fn trop_coords(&self) -> BTreeMap<Vec<usize>, ExtRat> {
        self.coords
            .iter()
            .map(|(k, p)| (k.clone(), p.valuation()))
            .collect()
    }
}

fn determinant(m: &[Vec<PuiseuxPoly>]) -> PuiseuxPoly {
    let k = m.len();
    if k == 0 {
        return PuiseuxPoly::one();
    }
    if k == 1 {
        return m[0][0].clone();
    }
    let mut acc = PuiseuxPoly::zero();
    for (j, entry) in m[0].iter().enumerate() {
        if entry.is_zero() {
            continue;
        }
        let minor: Vec<Vec<PuiseuxPoly>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let term = &determinant(&minor) * entry;
        acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

/// Maximal minors of the matrix whose rows are the given vectors. Errors if
/// the rows are linearly dependent (every minor vanishes) or if there are
/// more rows than coordinates.
pub fn plucker_coordinates(rows: &[PuiseuxVector]) -> Result<PlueckerVector> {
    let Some(first) = rows.first() else {
        return Err(Error::Shape("need at least one spanning vector".into()));
    };
    let n = first.len();
    if rows.iter().any(|r| r.len() != n) {
        return Err(Error::Shape("spanning vectors must share a length".into()));
    }
    let d = rows.len();
    if d > n {
        return Err(Error::Shape(format!(
            "{d} spanning vectors exceed the ambient dimension {n}"
        )));
    }
    let mut coords = BTreeMap::new();
    let mut any_nonzero = false;
    for subset in (0..n).combinations(d) {
        let sub: Vec<Vec<PuiseuxPoly>> = rows
            .iter()
            .map(|r| subset.iter().map(|&c| r.get(c).clone()).collect())
            .collect();
        let minor = determinant(&sub);
        any_nonzero |= !minor.is_zero();
        coords.insert(subset, minor);
    }
    if !any_nonzero {
        return Err(Error::Rank("spanning vectors are linearly dependent".into()));
    }
    Ok(PlueckerVector { d, n, coords })
}

/// Membership of `x` in the valuation image of the span: for every
/// `(d+1)`-subset the multiset of complementary minor valuations shifted by
/// `x` must attain its minimum at least twice. Vacuously true when `d = n`.
pub fn trop_space_member(p: &PlueckerVector, x: &TropVector) -> Result<bool> {
    if x.len() != p.n {
        return Err(Error::Dimension(format!(
            "vector has length {}, expected {}",
            x.len(),
            p.n
        )));
    }
    for subset in (0..p.n).combinations(p.d + 1) {
        let vals: Vec<ExtRat> = subset
            .iter()
            .map(|&j| {
                let key: Vec<usize> = subset.iter().copied().filter(|&c| c != j).collect();
                &p.coords[&key].valuation() + x.get(j)
            })
            .collect();
        if !min_attained_twice(&vals) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Defining rows of the valuation image read off the minor valuations: one
/// row per `(d+1)`-subset, carrying the complementary minor valuation at
/// each member coordinate and `inf` elsewhere. A vector lies in the
/// valuation image of the span exactly when it is orthogonal to every row.
pub fn trop_generators_from_plucker(p: &PlueckerVector) -> TropMatrix {
    let mut rows = Vec::new();
    for subset in (0..p.n).combinations(p.d + 1) {
        let mut coords = vec![ExtRat::Infinity; p.n];
        for &j in &subset {
            let key: Vec<usize> = subset.iter().copied().filter(|&c| c != j).collect();
            coords[j] = p.coords[&key].valuation();
        }
        rows.push(TropVector::new(coords).expect("ambient dimension >= 1"));
    }
    TropMatrix::new(p.n, rows).expect("rows share the ambient dimension")
}

/// One bilinear condition: the lifts of generator `x_index` and generator
/// `y_index` must have zero dot product, which only involves the shared
/// support coordinates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BilinearEquation {
    x_index: usize,
    y_index: usize,
    coords: Vec<usize>,
}

impl BilinearEquation {
    pub fn x_index(&self) -> usize {
        self.x_index
    }

    pub fn y_index(&self) -> usize {
        self.y_index
    }

    pub fn coords(&self) -> &[usize] {
        &self.coords
    }
}

/// The lifting conditions for a pair of generating sets: unknowns are lift
/// coordinates over each generator's support (all other coordinates are
/// pinned to the zero polynomial), equations demand orthogonality of every
/// cross pair.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BilinearSystem {
    ambient: usize,
    x_supports: Vec<Vec<usize>>,
    y_supports: Vec<Vec<usize>>,
    equations: Vec<BilinearEquation>,
}

impl BilinearSystem {
    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn x_supports(&self) -> &[Vec<usize>] {
        &self.x_supports
    }

    pub fn y_supports(&self) -> &[Vec<usize>] {
        &self.y_supports
    }

    pub fn equations(&self) -> &[BilinearEquation] {
        &self.equations
    }

    pub fn num_unknowns(&self) -> usize {
        self.x_supports.iter().map(Vec::len).sum::<usize>()
            + self.y_supports.iter().map(Vec::len).sum::<usize>()
    }

    /// Exact check that candidate lifts respect the support pinning and
    /// satisfy every equation.
    pub fn is_satisfied_by(&self, vs: &[PuiseuxVector], ws: &[PuiseuxVector]) -> Result<bool> {
        if vs.len() != self.x_supports.len() || ws.len() != self.y_supports.len() {
            return Err(Error::Shape(format!(
                "expected {} and {} lifts, got {} and {}",
                self.x_supports.len(),
                self.y_supports.len(),
                vs.len(),
                ws.len()
            )));
        }
        if vs.iter().chain(ws.iter()).any(|v| v.len() != self.ambient) {
            return Err(Error::Dimension(format!(
                "lifts must have length {}",
                self.ambient
            )));
        }
        let pinned = |vecs: &[PuiseuxVector], supports: &[Vec<usize>]| {
            vecs.iter().zip(supports).all(|(v, supp)| {
                (0..self.ambient).all(|i| supp.contains(&i) || v.get(i).is_zero())
            })
        };
        if !pinned(vs, &self.x_supports) || !pinned(ws, &self.y_supports) {
            return Ok(false);
        }
        for eq in &self.equations {
            let mut acc = PuiseuxPoly::zero();
            for &c in &eq.coords {
                acc = &acc + &(vs[eq.x_index].get(c) * ws[eq.y_index].get(c));
            }
            if !acc.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Builds the lifting conditions for generators `xs` of a prevariety and
/// generators `ys` of its orthogonal.
pub fn build_bilinear_system(xs: &TropMatrix, ys: &TropMatrix) -> Result<BilinearSystem> {
    if xs.ambient_dim() != ys.ambient_dim() {
        return Err(Error::Dimension(format!(
            "ambient dimensions differ: {} vs {}",
            xs.ambient_dim(),
            ys.ambient_dim()
        )));
    }
    let x_supports: Vec<Vec<usize>> = xs.rows().iter().map(TropVector::support).collect();
    let y_supports: Vec<Vec<usize>> = ys.rows().iter().map(TropVector::support).collect();
    let mut equations = Vec::new();
    for (i, xs_supp) in x_supports.iter().enumerate() {
        for (j, ys_supp) in y_supports.iter().enumerate() {
            let coords: Vec<usize> = xs_supp
                .iter()
                .copied()
                .filter(|c| ys_supp.contains(c))
                .collect();
            equations.push(BilinearEquation {
                x_index: i,
                y_index: j,
                coords,
            });
        }
    }
    Ok(BilinearSystem {
        ambient: xs.ambient_dim(),
        x_supports,
        y_supports,
        equations,
    })
}

/// Exact combination `sum_i s_i t^(r_i) V_i` whose coordinatewise valuation
/// equals `target`, where `target` must be the min-plus evaluation of the
/// tropicalized vectors at `coeffs`. The integer multipliers `s_i` are
/// powers of the smallest base that avoids leading-term cancellation in
/// every coordinate, so the choice is deterministic.
pub fn lift_hull_point(
    vectors: &[PuiseuxVector],
    coeffs: &[ExtRat],
    target: &TropVector,
) -> Result<PuiseuxVector> {
    let n = target.len();
    if vectors.iter().any(|v| v.len() != n) {
        return Err(Error::Dimension(format!(
            "vectors must have length {n} to match the target"
        )));
    }
    if coeffs.len() != vectors.len() {
        return Err(Error::Shape(format!(
            "{} coefficients for {} vectors",
            coeffs.len(),
            vectors.len()
        )));
    }
    let trop_rows: Vec<TropVector> = vectors.iter().map(PuiseuxVector::tropicalize).collect();
    let expected = trop::eval_rows(n, &trop_rows, coeffs);
    if expected != *target {
        return Err(Error::Contract(format!(
            "target {target} is not the evaluation {expected} of the combination"
        )));
    }
    let active: Vec<usize> = (0..vectors.len())
        .filter(|&i| coeffs[i].is_finite())
        .collect();
    // leading contributors per finite target coordinate
    let contributors: Vec<(usize, Vec<(usize, BigRational)>)> = (0..n)
        .filter(|&nu| target.get(nu).is_finite())
        .map(|nu| {
            let tight: Vec<(usize, BigRational)> = active
                .iter()
                .enumerate()
                .filter_map(|(pos, &i)| {
                    let val = &coeffs[i] + &vectors[i].get(nu).valuation();
                    if val == *target.get(nu) {
                        Some((pos, vectors[i].get(nu).leading_coeff().cloned().expect(
                            "finite valuation implies a leading term",
                        )))
                    } else {
                        None
                    }
                })
                .collect();
            debug_assert!(!tight.is_empty(), "evaluation check guarantees a witness");
            (nu, tight)
        })
        .collect();
    let base_bound = n * active.len().max(1) + 2;
    for base in 1..=base_bound {
        let s: Vec<BigRational> = (0..active.len())
            .map(|pos| BigRational::from_integer(BigInt::from(base).pow(pos as u32)))
            .collect();
        let cancels = contributors.iter().any(|(_, tight)| {
            tight
                .iter()
                .fold(BigRational::zero(), |acc, (pos, lc)| acc + &s[*pos] * lc)
                .is_zero()
        });
        if cancels {
            continue;
        }
        let mut out = PuiseuxVector::zero(n).expect("target is nonempty");
        for (pos, &i) in active.iter().enumerate() {
            let r = coeffs[i].as_finite().expect("active coefficients are finite");
            let scaled = vectors[i].scale(&PuiseuxPoly::monomial(s[pos].clone(), r.clone()));
            out = out.add(&scaled).expect("lengths agree");
        }
        debug_assert_eq!(out.tropicalize(), *target);
        return Ok(out);
    }
    unreachable!("a non-cancelling base exists below the bound");
}

fn frac_row(v: &PuiseuxVector) -> Vec<PuiseuxFrac> {
    v.iter().map(|p| PuiseuxFrac::from_poly(p.clone())).collect()
}

/// Indices of a maximal linearly independent subset, greedily from the
/// front, so the result is deterministic and sorted.
pub(crate) fn row_basis_indices(vs: &[PuiseuxVector]) -> Vec<usize> {
    let mut reduced: Vec<(usize, Vec<PuiseuxFrac>)> = Vec::new();
    let mut picked = Vec::new();
    for (idx, v) in vs.iter().enumerate() {
        let mut row = frac_row(v);
        for (pc, r) in &reduced {
            if !row[*pc].is_zero() {
                let f = row[*pc].clone();
                for (cell, rc) in row.iter_mut().zip(r.iter()) {
                    *cell = cell.sub(&f.mul(rc));
                }
            }
        }
        if let Some(pc) = row.iter().position(|c| !c.is_zero()) {
            let inv = row[pc].clone();
            for cell in row.iter_mut() {
                *cell = cell.div(&inv);
            }
            reduced.push((pc, row));
            picked.push(idx);
        }
    }
    picked
}

/// A set of pivot coordinates usable as the identity block of an echelon
/// basis, together with the generators that can prescribe each basis row:
/// for pivot `i` a row needs valuations that are finite at `i` and infinite
/// at every other pivot, so exactly the generators with that shape qualify.
struct PivotBlock {
    pivots: Vec<usize>,
    choices: Vec<Vec<usize>>,
}

/// Enumerates pivot blocks for a side of the sought dimension, capped to
/// bound the search schedule. A realizable side always has at least one:
/// its minimal-support generators supply a row for every coordinate basis
/// of the underlying matroid.
fn pivot_blocks(gens: &GeneratorSet, dim: usize, cap: usize) -> Vec<PivotBlock> {
    let rows = gens.gens();
    let mut out = Vec::new();
    for pivots in (0..gens.ambient_dim()).combinations(dim) {
        let choices: Vec<Vec<usize>> = pivots
            .iter()
            .map(|&i| {
                (0..rows.len())
                    .filter(|&g| {
                        rows[g].get(i).is_finite()
                            && pivots
                                .iter()
                                .all(|&i2| i2 == i || !rows[g].get(i2).is_finite())
                    })
                    .collect()
            })
            .collect();
        if choices.iter().all(|c| !c.is_empty()) {
            out.push(PivotBlock { pivots, choices });
            if out.len() == cap {
                break;
            }
        }
    }
    out
}

/// Exact echelon basis over a pivot block: row `k` has an exact 1 at its
/// pivot, exact 0 at the other pivots, and elsewhere one term per finite
/// coordinate of its prescribing generator, at the generator's valuations
/// shifted so the pivot sits at 0. Round 0 uses unit coefficients; later
/// rounds draw wider random coefficients and append higher-order terms, up
/// to `max_terms` per coordinate, to reach liftings whose minors must
/// cancel to a prescribed depth.
fn echelon_lift(
    gens: &GeneratorSet,
    block: &PivotBlock,
    round: usize,
    max_terms: usize,
    rng: &mut ChaCha20Rng,
) -> Vec<PuiseuxVector> {
    let n = gens.ambient_dim();
    let extra = if round == 0 || max_terms == 0 {
        0
    } else {
        (round / 2).min(max_terms - 1)
    };
    let span = 2 + round as i64;
    block
        .pivots
        .iter()
        .enumerate()
        .map(|(k, &i)| {
            let pick = block.choices[k][(round / 2) % block.choices[k].len()];
            let g = &gens.gens()[pick];
            let shift = g.get(i).as_finite().expect("pivot entry is finite").clone();
            let coords = (0..n)
                .map(|j| {
                    if j == i {
                        return PuiseuxPoly::one();
                    }
                    match g.get(j) {
                        ExtRat::Infinity => PuiseuxPoly::zero(),
                        ExtRat::Finite(v) => {
                            let e0 = v - &shift;
                            let mut p = if round == 0 {
                                PuiseuxPoly::monomial(BigRational::one(), e0.clone())
                            } else {
                                let mag = rng.random_range(1..=span);
                                let lead = if rng.random_bool(0.5) { -mag } else { mag };
                                PuiseuxPoly::monomial(
                                    BigRational::from_integer(lead.into()),
                                    e0.clone(),
                                )
                            };
                            for s in 1..=extra {
                                let c = rng.random_range(-span..=span);
                                let e = &e0 + BigRational::new(BigInt::from(s), BigInt::from(2));
                                p = &p + &PuiseuxPoly::monomial(
                                    BigRational::from_integer(c.into()),
                                    e,
                                );
                            }
                            p
                        }
                    }
                })
                .collect();
            PuiseuxVector::new(coords).expect("ambient dimension >= 1")
        })
        .collect()
}

/// The complementary echelon basis: for each non-pivot coordinate `j`, the
/// vector with an exact 1 at `j`, the negated column `j` of the echelon rows
/// spread over the pivots, and exact 0 elsewhere. Every dual row has zero
/// dot product with every echelon row identically, whatever the entries, so
/// the two spans are orthogonal complements of each other.
fn dual_echelon(rows: &[PuiseuxVector], pivots: &[usize], n: usize) -> Vec<PuiseuxVector> {
    (0..n)
        .filter(|j| !pivots.contains(j))
        .map(|j| {
            let coords = (0..n)
                .map(|c| {
                    if c == j {
                        PuiseuxPoly::one()
                    } else if let Some(k) = pivots.iter().position(|&i| i == c) {
                        -rows[k].get(j)
                    } else {
                        PuiseuxPoly::zero()
                    }
                })
                .collect();
            PuiseuxVector::new(coords).expect("ambient dimension >= 1")
        })
        .collect()
}

/// Minimal-support vectors of the rows' kernel: for each column subset one
/// wider than the row count, the vector of signed maximal minors inside the
/// subset. Each is orthogonal to every row because a Laplace expansion of a
/// matrix with a repeated row vanishes, and together they min-plus generate
/// the entire tropicalized kernel, so residuating a target against them
/// decides exactly whether the target lifts into the kernel. With no rows
/// the kernel is the whole space and the vectors degenerate to the units.
fn kernel_elementary(rows: &[PuiseuxVector], n: usize) -> Vec<PuiseuxVector> {
    let k = rows.len();
    let mut out = Vec::new();
    for subset in (0..n).combinations(k + 1) {
        let mut coords = vec![PuiseuxPoly::zero(); n];
        let mut any = false;
        for (t, &j) in subset.iter().enumerate() {
            let m: Vec<Vec<PuiseuxPoly>> = rows
                .iter()
                .map(|r| {
                    subset
                        .iter()
                        .filter(|&&c| c != j)
                        .map(|&c| r.get(c).clone())
                        .collect()
                })
                .collect();
            let minor = determinant(&m);
            any |= !minor.is_zero();
            coords[j] = if t % 2 == 0 { minor } else { -&minor };
        }
        if any {
            out.push(PuiseuxVector::new(coords).expect("ambient dimension >= 1"));
        }
    }
    out
}

/// Lifts every generator of `side` into the span the elementary vectors
/// generate, or reports the first generator that falls outside the span's
/// valuation image, which refutes the round's basis guess.
fn solve_side(side: &GeneratorSet, elementary: &[PuiseuxVector]) -> Option<Vec<PuiseuxVector>> {
    let n = side.ambient_dim();
    let trop_rows: Vec<TropVector> = elementary.iter().map(PuiseuxVector::tropicalize).collect();
    side.gens()
        .iter()
        .map(|g| {
            let lambda = trop::residuate(n, &trop_rows, g)?;
            Some(
                lift_hull_point(elementary, &lambda, g)
                    .expect("membership certifies the evaluation contract"),
            )
        })
        .collect()
}

/// Search budget for the lifting phase.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SearchBudget {
    /// Number of randomized seeding rounds.
    pub rounds: usize,
    /// Largest number of terms a seed coordinate may carry.
    pub max_terms: usize,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            rounds: 20,
            max_terms: 6,
        }
    }
}

/// Witness that no subspace works: the two orthogonal prevarieties are
/// jointly too large for the ambient dimension.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Obstruction {
    pub dim_perp: usize,
    pub dim_perp_perp: usize,
    pub ambient: usize,
}

/// Exact liftings of both generating sets, with index subsets marking a
/// linear basis on each side.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VarietyCertificate {
    v_lifts: Vec<PuiseuxVector>,
    w_lifts: Vec<PuiseuxVector>,
    p_basis: Vec<usize>,
    q_basis: Vec<usize>,
}

impl VarietyCertificate {
    /// Assembles a certificate from parts, e.g. parsed back from an emitted
    /// document; nothing is validated here, [`verify_certificate`] is the
    /// gate.
    pub fn new(
        v_lifts: Vec<PuiseuxVector>,
        w_lifts: Vec<PuiseuxVector>,
        p_basis: Vec<usize>,
        q_basis: Vec<usize>,
    ) -> Self {
        VarietyCertificate {
            v_lifts,
            w_lifts,
            p_basis,
            q_basis,
        }
    }

    pub fn v_lifts(&self) -> &[PuiseuxVector] {
        &self.v_lifts
    }

    pub fn w_lifts(&self) -> &[PuiseuxVector] {
        &self.w_lifts
    }

    pub fn p_basis(&self) -> &[usize] {
        &self.p_basis
    }

    pub fn q_basis(&self) -> &[usize] {
        &self.q_basis
    }
}

/// Search metadata reported when no certificate was found in budget.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct InconclusiveReport {
    pub rounds: usize,
    pub max_terms: usize,
}

/// Outcome of the decision procedure.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Decision {
    Variety(VarietyCertificate),
    NotVariety(Obstruction),
    Inconclusive(InconclusiveReport),
}

/// Reports the dimension obstruction when the two sides cannot both be
/// valuation images of complementary subspaces.
pub fn dimension_obstruction(xs: &GeneratorSet, ys: &GeneratorSet) -> Result<Option<Obstruction>> {
    if xs.ambient_dim() != ys.ambient_dim() {
        return Err(Error::Dimension(format!(
            "ambient dimensions differ: {} vs {}",
            xs.ambient_dim(),
            ys.ambient_dim()
        )));
    }
    let n = xs.ambient_dim();
    let (e, j) = (dimension(xs), dimension(ys));
    Ok((e + j > n).then_some(Obstruction {
        dim_perp: e,
        dim_perp_perp: j,
        ambient: n,
    }))
}

/// Randomized search for exact liftings of both generating sets with all
/// cross pairs orthogonal. Each round picks a pivot block on one side
/// (alternating when both sides offer one), lifts that side's prescribing
/// generators to an exact echelon basis, and pairs it with the dual echelon
/// basis of the complementary coordinates, so the two candidate spans are
/// orthogonal complements by construction. Every generator of both sides is
/// then lifted into its span by residuation against the span's
/// minimal-support vectors, a complete membership test, so a round fails
/// only when the guessed span genuinely misses a generator; rank checks
/// reject rounds whose lifts do not span. Round 0 is the deterministic unit
/// lift, later rounds randomize, and the whole search is deterministic for
/// a fixed seed. Cost grows with the binomial counts of the ambient
/// dimension, matching the exterior-algebra routines.
pub fn search_liftings(
    xs: &GeneratorSet,
    ys: &GeneratorSet,
    budget: &SearchBudget,
    seed: u64,
) -> Result<Option<(Vec<PuiseuxVector>, Vec<PuiseuxVector>)>> {
    if xs.ambient_dim() != ys.ambient_dim() {
        return Err(Error::Dimension(format!(
            "ambient dimensions differ: {} vs {}",
            xs.ambient_dim(),
            ys.ambient_dim()
        )));
    }
    let e_dim = dimension(xs);
    let j_dim = dimension(ys);
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    const BLOCK_CAP: usize = 64;
    let x_blocks = pivot_blocks(xs, e_dim, BLOCK_CAP);
    let y_blocks = pivot_blocks(ys, j_dim, BLOCK_CAP);
    if x_blocks.is_empty() && y_blocks.is_empty() {
        return Ok(None);
    }
    for round in 0..budget.rounds {
        let on_x = if y_blocks.is_empty() {
            true
        } else if x_blocks.is_empty() {
            false
        } else {
            round % 2 == 0
        };
        let blocks = if on_x { &x_blocks } else { &y_blocks };
        let block = &blocks[(round / 2) % blocks.len()];
        let found = attempt_round(xs, ys, block, on_x, round, budget.max_terms, &mut rng);
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

fn attempt_round(
    xs: &GeneratorSet,
    ys: &GeneratorSet,
    block: &PivotBlock,
    on_x: bool,
    round: usize,
    max_terms: usize,
    rng: &mut ChaCha20Rng,
) -> Option<(Vec<PuiseuxVector>, Vec<PuiseuxVector>)> {
    let n = xs.ambient_dim();
    let (primal, complement) = if on_x { (xs, ys) } else { (ys, xs) };
    let basis = echelon_lift(primal, block, round, max_terms, rng);
    let duals = dual_echelon(&basis, &block.pivots, n);
    let primal_lifts = solve_side(primal, &kernel_elementary(&duals, n))?;
    let complement_lifts = solve_side(complement, &kernel_elementary(&basis, n))?;
    if row_basis_indices(&primal_lifts).len() != basis.len()
        || row_basis_indices(&complement_lifts).len() != duals.len()
    {
        return None;
    }
    Some(if on_x {
        (primal_lifts, complement_lifts)
    } else {
        (complement_lifts, primal_lifts)
    })
}

fn check_basis(lifts: &[PuiseuxVector], basis: &[usize], dim: usize, side: &str) -> Result<()> {
    if basis.len() != dim {
        return Err(Error::Contract(format!(
            "{side} basis has {} indices, expected {dim}",
            basis.len()
        )));
    }
    if basis.windows(2).any(|w| w[0] >= w[1]) || basis.iter().any(|&i| i >= lifts.len()) {
        return Err(Error::Contract(format!(
            "{side} basis indices must be strictly increasing and in range"
        )));
    }
    let selected: Vec<PuiseuxVector> = basis.iter().map(|&i| lifts[i].clone()).collect();
    if row_basis_indices(&selected).len() != dim {
        return Err(Error::Contract(format!(
            "{side} basis rows are linearly dependent"
        )));
    }
    if row_basis_indices(lifts).len() != dim {
        return Err(Error::Contract(format!(
            "{side} lifts span the wrong dimension"
        )));
    }
    Ok(())
}

/// Exact verification of a lifting certificate against the generating sets
/// it claims to lift: tropicalizations match generator by generator, all
/// cross pairs are orthogonal, and the declared bases pin the dimensions to
/// an exact split of the ambient space.
pub fn verify_certificate(
    xs: &GeneratorSet,
    ys: &GeneratorSet,
    cert: &VarietyCertificate,
) -> Result<()> {
    let n = xs.ambient_dim();
    if ys.ambient_dim() != n {
        return Err(Error::Dimension(format!(
            "ambient dimensions differ: {} vs {}",
            n,
            ys.ambient_dim()
        )));
    }
    if cert.v_lifts.len() != xs.len() || cert.w_lifts.len() != ys.len() {
        return Err(Error::Contract(format!(
            "certificate lifts {} and {} generators, expected {} and {}",
            cert.v_lifts.len(),
            cert.w_lifts.len(),
            xs.len(),
            ys.len()
        )));
    }
    if cert
        .v_lifts
        .iter()
        .chain(cert.w_lifts.iter())
        .any(|v| v.len() != n)
    {
        return Err(Error::Dimension(format!("lifts must have length {n}")));
    }
    for (i, v) in cert.v_lifts.iter().enumerate() {
        if v.tropicalize() != xs.gens()[i] {
            return Err(Error::Contract(format!(
                "lift {i} tropicalizes to {}, expected {}",
                v.tropicalize(),
                xs.gens()[i]
            )));
        }
    }
    for (j, w) in cert.w_lifts.iter().enumerate() {
        if w.tropicalize() != ys.gens()[j] {
            return Err(Error::Contract(format!(
                "orthogonal lift {j} tropicalizes to {}, expected {}",
                w.tropicalize(),
                ys.gens()[j]
            )));
        }
    }
    for (i, v) in cert.v_lifts.iter().enumerate() {
        for (j, w) in cert.w_lifts.iter().enumerate() {
            if !v.dot(w)?.is_zero() {
                return Err(Error::Contract(format!(
                    "lift pair ({i}, {j}) has nonzero dot product"
                )));
            }
        }
    }
    let e_dim = dimension(xs);
    let j_dim = dimension(ys);
    if e_dim + j_dim != n {
        return Err(Error::Contract(format!(
            "dimensions {e_dim} + {j_dim} do not split the ambient dimension {n}"
        )));
    }
    check_basis(&cert.v_lifts, &cert.p_basis, e_dim, "primal")?;
    check_basis(&cert.w_lifts, &cert.q_basis, j_dim, "orthogonal")?;
    Ok(())
}

/// Full decision procedure for the prevariety defined by `rows`: a verified
/// lifting certificate proves the positive answer, a dimension overshoot
/// proves the negative one, and a search that exhausts its budget reports
/// neither. Deterministic for a fixed seed.
pub fn decide_variety(rows: &TropMatrix, budget: &SearchBudget, seed: u64) -> Result<Decision> {
    let xs = orthogonal_generators(rows)?;
    let ys = orthogonal_generators(&xs.to_matrix())?;
    let n = rows.ambient_dim();
    if let Some(obs) = dimension_obstruction(&xs, &ys)? {
        return Ok(Decision::NotVariety(obs));
    }
    debug_assert_eq!(dimension(&xs) + dimension(&ys), n, "orthogonal pairs never undershoot");
    match search_liftings(&xs, &ys, budget, seed)? {
        Some((v_lifts, w_lifts)) => {
            let p_basis = row_basis_indices(&v_lifts);
            let q_basis = row_basis_indices(&w_lifts);
            let cert = VarietyCertificate {
                v_lifts,
                w_lifts,
                p_basis,
                q_basis,
            };
            verify_certificate(&xs, &ys, &cert)?;
            Ok(Decision::Variety(cert))
        }
        None => Ok(Decision::Inconclusive(InconclusiveReport {
            rounds: budget.rounds,
            max_terms: budget.max_terms,
        })),
    }
}
