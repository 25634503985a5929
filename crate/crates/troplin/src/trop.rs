//! Min-plus vectors, matrices, and tropical hulls.
//!
//! A point is tropically orthogonal to a coefficient row when the minimum of
//! the coordinatewise sums is attained at least twice (or everything is
//! `inf`). The tropical hull of a finite generator list collects every
//! coordinatewise minimum of scalar-shifted generators; membership is decided
//! exactly by residuation: the candidate multipliers are the largest ones
//! that never undershoot, and the point belongs to the hull precisely when
//! they reproduce it.

use std::fmt;

use crate::rat::{min_attained_twice, ExtRat};
use crate::{Error, Result};

/// A point of rational tropical space: coordinates in Q extended by `inf`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct TropVector {
    coords: Vec<ExtRat>,
}

impl TropVector {
    pub fn new(coords: Vec<ExtRat>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::Dimension("vector must have length >= 1".into()));
        }
        Ok(TropVector { coords })
    }

    /// All-`inf` point of the given length.
    pub fn all_infinite(n: usize) -> Result<Self> {
        Self::new(vec![ExtRat::Infinity; n])
    }

    /// Always at least 1; there is no empty vector.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[ExtRat] {
        &self.coords
    }

    pub fn get(&self, i: usize) -> &ExtRat {
        &self.coords[i]
    }

    pub fn iter(&self) -> std::slice::Iter<'_, ExtRat> {
        self.coords.iter()
    }

    /// Indices of finite coordinates.
    pub fn support(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.coords[i].is_finite()).collect()
    }

    pub fn is_all_infinite(&self) -> bool {
        self.coords.iter().all(|c| c.is_infinite())
    }

    /// Tropical scaling: adds `c` to every coordinate.
    pub fn scale(&self, c: &ExtRat) -> TropVector {
        TropVector {
            coords: self.coords.iter().map(|x| x + c).collect(),
        }
    }

    /// Shifts so the minimal finite coordinate becomes 0. Returns `None` for
    /// the all-`inf` point, which has no finite coordinate to anchor on.
    pub fn normalize(&self) -> Option<TropVector> {
        let m = ExtRat::min_of(self.coords.iter());
        let m = m.as_finite()?.clone();
        let neg = ExtRat::Finite(-m);
        Some(self.scale(&neg))
    }
}

impl fmt::Display for TropVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A finite list of equal-length rows. Rows may be empty, in which case the
/// ambient dimension is still carried explicitly.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TropMatrix {
    ambient: usize,
    rows: Vec<TropVector>,
}

impl TropMatrix {
    pub fn new(ambient: usize, rows: Vec<TropVector>) -> Result<Self> {
        if ambient == 0 {
            return Err(Error::Dimension("ambient dimension must be >= 1".into()));
        }
        for r in &rows {
            if r.len() != ambient {
                return Err(Error::Dimension(format!(
                    "row length {} does not match ambient dimension {ambient}",
                    r.len()
                )));
            }
        }
        Ok(TropMatrix { ambient, rows })
    }

    /// Infers the ambient dimension from the first row.
    pub fn from_rows(rows: Vec<TropVector>) -> Result<Self> {
        let ambient = rows
            .first()
            .map(|r| r.len())
            .ok_or_else(|| Error::Dimension("cannot infer dimension from zero rows".into()))?;
        Self::new(ambient, rows)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[TropVector] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &TropVector {
        &self.rows[i]
    }

    pub fn is_square(&self) -> bool {
        self.rows.len() == self.ambient
    }

    pub fn entry(&self, i: usize, j: usize) -> &ExtRat {
        self.rows[i].get(j)
    }
}

/// True when `min_i(v_i + a_i)` is attained at least twice, with all-`inf`
/// sums counting as attained everywhere. Symmetric in its arguments.
pub fn is_tropically_orthogonal(v: &TropVector, a: &TropVector) -> Result<bool> {
    if v.len() != a.len() {
        return Err(Error::Dimension(format!(
            "length mismatch: {} vs {}",
            v.len(),
            a.len()
        )));
    }
    if v.len() < 2 {
        return Err(Error::Dimension(
            "tropical orthogonality needs at least two coordinates".into(),
        ));
    }
    let sums: Vec<ExtRat> = v.iter().zip(a.iter()).map(|(x, y)| x + y).collect();
    Ok(min_attained_twice(&sums))
}

/// Coordinatewise minimum of `coeffs[i] + rows[i]`, with no generators
/// producing the all-`inf` point.
pub(crate) fn eval_rows(ambient: usize, rows: &[TropVector], coeffs: &[ExtRat]) -> TropVector {
    let mut out = vec![ExtRat::Infinity; ambient];
    for (t, g) in coeffs.iter().zip(rows.iter()) {
        for (o, c) in out.iter_mut().zip(g.iter()) {
            let v = t + c;
            if v < *o {
                *o = v;
            }
        }
    }
    TropVector { coords: out }
}

/// Residuation: the pointwise-largest multipliers whose combination still
/// dominates `x`, or `None` for each row only when forced. Returns `Some`
/// multipliers iff their combination reproduces `x` exactly.
pub(crate) fn residuate(ambient: usize, rows: &[TropVector], x: &TropVector) -> Option<Vec<ExtRat>> {
    let mut lambda = Vec::with_capacity(rows.len());
    for g in rows {
        // sup over finite coordinates of g of (x - g); inf when x is inf at
        // a finite coordinate of g, and inf for an all-inf row (vacuous).
        let mut best: Option<ExtRat> = None;
        let mut forced_inf = g.support().is_empty();
        for (xv, gv) in x.iter().zip(g.iter()) {
            if gv.is_infinite() {
                continue;
            }
            match xv.checked_sub(gv) {
                Some(d) => {
                    if d.is_infinite() {
                        forced_inf = true;
                        break;
                    }
                    if best.as_ref().is_none_or(|b| d > *b) {
                        best = Some(d);
                    }
                }
                None => unreachable!("subtrahend is finite"),
            }
        }
        lambda.push(if forced_inf {
            ExtRat::Infinity
        } else {
            best.expect("row with finite support yields a bound")
        });
    }
    if eval_rows(ambient, rows, &lambda) == *x {
        Some(lambda)
    } else {
        None
    }
}

/// Normalizes, sorts, deduplicates, and drops every vector lying in the hull
/// of the kept others. Removal never grows "the others", so a single ordered
/// pass leaves a set whose members are all extreme, and extreme generators of
/// a finitely generated tropical hull are unique up to scaling: the result is
/// a canonical form for the hull.
pub(crate) fn reduce_generators(ambient: usize, vectors: Vec<TropVector>) -> Vec<TropVector> {
    let mut gens: Vec<TropVector> = vectors.iter().filter_map(|v| v.normalize()).collect();
    gens.sort();
    gens.dedup();
    let mut kept: Vec<bool> = vec![true; gens.len()];
    for i in 0..gens.len() {
        let others: Vec<TropVector> = gens
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i && kept[*j])
            .map(|(_, g)| g.clone())
            .collect();
        if residuate(ambient, &others, &gens[i]).is_some() {
            kept[i] = false;
        }
    }
    gens.into_iter()
        .zip(kept)
        .filter_map(|(g, k)| k.then_some(g))
        .collect()
}

/// Canonical generating set of a tropical hull: normalized, deduplicated,
/// sorted, and with no generator inside the hull of the others. The all-`inf`
/// point is always in the hull and never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GeneratorSet {
    ambient: usize,
    gens: Vec<TropVector>,
}

impl GeneratorSet {
    pub fn new(ambient: usize, vectors: Vec<TropVector>) -> Result<Self> {
        if ambient == 0 {
            return Err(Error::Dimension("ambient dimension must be >= 1".into()));
        }
        for v in &vectors {
            if v.len() != ambient {
                return Err(Error::Dimension(format!(
                    "generator length {} does not match ambient dimension {ambient}",
                    v.len()
                )));
            }
        }
        Ok(GeneratorSet {
            ambient,
            gens: reduce_generators(ambient, vectors),
        })
    }

    pub fn from_matrix(m: &TropMatrix) -> Result<Self> {
        Self::new(m.ambient_dim(), m.rows().to_vec())
    }

    pub fn empty(ambient: usize) -> Result<Self> {
        Self::new(ambient, Vec::new())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn gens(&self) -> &[TropVector] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn to_matrix(&self) -> TropMatrix {
        TropMatrix {
            ambient: self.ambient,
            rows: self.gens.clone(),
        }
    }

    /// `min_i(coeffs[i] + g_i)` coordinatewise. With no generators (or all
    /// multipliers `inf`) this is the all-`inf` point.
    pub fn hull_eval(&self, coeffs: &[ExtRat]) -> Result<TropVector> {
        if coeffs.len() != self.gens.len() {
            return Err(Error::Dimension(format!(
                "{} multipliers for {} generators",
                coeffs.len(),
                self.gens.len()
            )));
        }
        Ok(eval_rows(self.ambient, &self.gens, coeffs))
    }

    /// Exact hull membership. Returns the residuation witness when `x` is in
    /// the hull, `None` otherwise.
    pub fn hull_member(&self, x: &TropVector) -> Result<Option<Vec<ExtRat>>> {
        if x.len() != self.ambient {
            return Err(Error::Dimension(format!(
                "point length {} does not match ambient dimension {}",
                x.len(),
                self.ambient
            )));
        }
        Ok(residuate(self.ambient, &self.gens, x))
    }
}

#[cfg(test)]
pub(crate) use tests::{tv, tvi};
