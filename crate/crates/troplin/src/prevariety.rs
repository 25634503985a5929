//! Tropical orthogonal complements as finitely generated hulls.
//!
//! The complement of a single coefficient row is a min-plus hyperplane: the
//! set of points where the minimum of the shifted coordinates is attained at
//! least twice. That condition splits into one min-plus halfspace per finite
//! coefficient (`x_u + a_u >= min over the other coordinates`), and the
//! complement of a whole row list is the intersection of all of them.
//! Generators are computed by incremental double description: start from
//! generators of the full space and intersect one halfspace at a time,
//! keeping satisfying generators and combining satisfier/violator pairs into
//! boundary generators.

use std::sync::OnceLock;

use num::BigRational;

use crate::rat::ExtRat;
use crate::rank::tropical_rank;
use crate::trop::{reduce_generators, GeneratorSet, TropMatrix, TropVector};
use crate::{Error, Result};

/// One min-plus halfspace `x_lhs + lhs_offset >= min_v(x_v + rhs_offsets_v)`.
///
/// `rhs_offsets` is always `inf` at `lhs_index`. When it is `inf` everywhere
/// the inequality degenerates to the equality `x_lhs = inf`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MinPlusInequality {
    lhs_index: usize,
    lhs_offset: BigRational,
    rhs_offsets: Vec<ExtRat>,
}

impl MinPlusInequality {
    pub fn lhs_index(&self) -> usize {
        self.lhs_index
    }

    pub fn lhs_offset(&self) -> &BigRational {
        &self.lhs_offset
    }

    pub fn rhs_offsets(&self) -> &[ExtRat] {
        &self.rhs_offsets
    }

    /// True when the right-hand side is identically `inf`, forcing
    /// `x_lhs = inf` on every satisfying point.
    pub fn forces_infinite(&self) -> bool {
        self.rhs_offsets.iter().all(|c| c.is_infinite())
    }

    fn lhs_eval(&self, x: &TropVector) -> ExtRat {
        x.get(self.lhs_index) + &ExtRat::Finite(self.lhs_offset.clone())
    }

    fn rhs_eval(&self, x: &TropVector) -> ExtRat {
        ExtRat::min_of(
            x.iter()
                .zip(self.rhs_offsets.iter())
                .map(|(xv, av)| xv + av)
                .collect::<Vec<_>>()
                .iter(),
        )
    }

    pub fn satisfied_by(&self, x: &TropVector) -> Result<bool> {
        if x.len() != self.rhs_offsets.len() {
            return Err(Error::Dimension(format!(
                "point length {} does not match inequality on {} coordinates",
                x.len(),
                self.rhs_offsets.len()
            )));
        }
        Ok(self.lhs_eval(x) >= self.rhs_eval(x))
    }
}

/// Halfspace list whose conjunction is the complement of the single row `a`:
/// one inequality per finite coordinate. An all-`inf` row yields no
/// constraints; a row with exactly one finite coordinate yields the single
/// degenerate inequality forcing that coordinate to `inf`.
pub fn compile_halfspaces(a: &TropVector) -> Result<Vec<MinPlusInequality>> {
    if a.len() < 2 {
        return Err(Error::Dimension(
            "halfspace compilation needs at least two coordinates".into(),
        ));
    }
    let mut out = Vec::new();
    for mu in 0..a.len() {
        let ExtRat::Finite(offset) = a.get(mu) else {
            continue;
        };
        let mut rhs = a.coords().to_vec();
        rhs[mu] = ExtRat::Infinity;
        out.push(MinPlusInequality {
            lhs_index: mu,
            lhs_offset: offset.clone(),
            rhs_offsets: rhs,
        });
    }
    Ok(out)
}

/// One double-description step: intersect the hull of `gens` with one
/// halfspace. Satisfying generators survive; each satisfier/violator pair
/// contributes `min(lhs(h) + g, rhs(g) + h)`, which lands exactly on the
/// boundary. A pair whose satisfier has `rhs(g) = inf` only reproduces a
/// scaled copy of `g` and is skipped.
fn intersect_halfspace(
    ambient: usize,
    gens: Vec<TropVector>,
    ineq: &MinPlusInequality,
) -> Vec<TropVector> {
    let mut sat = Vec::new();
    let mut viol = Vec::new();
    for g in gens {
        if ineq.lhs_eval(&g) >= ineq.rhs_eval(&g) {
            sat.push(g);
        } else {
            viol.push(g);
        }
    }
    let mut out = sat.clone();
    for h in &viol {
        let lh = ineq.lhs_eval(h);
        debug_assert!(lh.is_finite(), "violator has finite left-hand side");
        for g in &sat {
            let rg = ineq.rhs_eval(g);
            if rg.is_infinite() {
                continue;
            }
            let combined = TropVector::new(
                g.iter()
                    .zip(h.iter())
                    .map(|(gv, hv)| {
                        let a = gv + &lh;
                        let b = hv + &rg;
                        if a < b {
                            a
                        } else {
                            b
                        }
                    })
                    .collect(),
            )
            .expect("ambient >= 1");
            out.push(combined);
        }
    }
    reduce_generators(ambient, out)
}

fn full_space_generators(n: usize) -> Vec<TropVector> {
    let mut gens = Vec::with_capacity(n + 1);
    for i in 0..n {
        let mut coords = vec![ExtRat::Infinity; n];
        coords[i] = ExtRat::zero();
        gens.push(TropVector::new(coords).expect("n >= 1"));
    }
    gens.push(TropVector::new(vec![ExtRat::zero(); n]).expect("n >= 1"));
    gens
}

/// Canonical generators of the tropical orthogonal complement of the rows.
/// Zero rows impose no constraints and yield generators of the full space.
pub fn orthogonal_generators(rows: &TropMatrix) -> Result<GeneratorSet> {
    let n = rows.ambient_dim();
    if n < 2 {
        return Err(Error::Dimension(
            "orthogonal complements need ambient dimension >= 2".into(),
        ));
    }
    let mut gens = full_space_generators(n);
    'rows: for row in rows.rows() {
        for ineq in compile_halfspaces(row)? {
            gens = intersect_halfspace(n, gens, &ineq);
            if gens.is_empty() {
                // hull already collapsed to the all-inf point; no further
                // constraint changes that
                break 'rows;
            }
        }
    }
    GeneratorSet::new(n, gens)
}

/// Generators of the complement of the complement: the smallest prevariety
/// containing the hull of the rows.
pub fn double_orthogonal_generators(rows: &TropMatrix) -> Result<GeneratorSet> {
    let first = orthogonal_generators(rows)?;
    orthogonal_generators(&first.to_matrix())
}

/// Exact membership in the prevariety cut out by the rows: the point must be
/// tropically orthogonal to every row.
pub fn prevariety_member(rows: &TropMatrix, x: &TropVector) -> Result<bool> {
    if x.len() != rows.ambient_dim() {
        return Err(Error::Dimension(format!(
            "point length {} does not match ambient dimension {}",
            x.len(),
            rows.ambient_dim()
        )));
    }
    for row in rows.rows() {
        if !crate::trop::is_tropically_orthogonal(x, row)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Hull equality of two generator sets, decided by mutual membership of the
/// generators. Canonical sets are syntactically equal iff hull-equal, but the
/// membership route keeps this independent of canonicalization.
pub fn prevariety_equal(g1: &GeneratorSet, g2: &GeneratorSet) -> Result<bool> {
    if g1.ambient_dim() != g2.ambient_dim() {
        return Err(Error::Dimension(format!(
            "ambient dimensions {} and {} differ",
            g1.ambient_dim(),
            g2.ambient_dim()
        )));
    }
    for g in g1.gens() {
        if g2.hull_member(g)?.is_none() {
            return Ok(false);
        }
    }
    for g in g2.gens() {
        if g1.hull_member(g)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Dimension of the hull of a generator set: the tropical rank of the
/// generator matrix. The hull of no generators is the single all-`inf` point
/// and has dimension 0.
pub fn dimension(g: &GeneratorSet) -> usize {
    if g.is_empty() {
        return 0;
    }
    tropical_rank(&g.to_matrix())
}

/// A prevariety presented by its defining rows, with generators computed on
/// first use and cached.
#[derive(Debug)]
pub struct Prevariety {
    defining: TropMatrix,
    gens: OnceLock<GeneratorSet>,
}

impl Prevariety {
    pub fn new(defining: TropMatrix) -> Result<Self> {
        if defining.ambient_dim() < 2 {
            return Err(Error::Dimension(
                "prevarieties need ambient dimension >= 2".into(),
            ));
        }
        Ok(Prevariety {
            defining,
            gens: OnceLock::new(),
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.defining.ambient_dim()
    }

    pub fn defining_rows(&self) -> &TropMatrix {
        &self.defining
    }

    pub fn member(&self, x: &TropVector) -> Result<bool> {
        prevariety_member(&self.defining, x)
    }

    pub fn generators(&self) -> &GeneratorSet {
        self.gens.get_or_init(|| {
            orthogonal_generators(&self.defining).expect("ambient dimension checked at construction")
        })
    }

    pub fn dimension(&self) -> usize {
        dimension(self.generators())
    }
}
