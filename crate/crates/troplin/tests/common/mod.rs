//! Shared helpers and independent oracles for the integration suites.
//!
//! The oracles here deliberately avoid the library's own algorithms: the
//! singularity oracle enumerates permutations outright, and the prevariety
//! sampler enumerates argmin-pair cells with classical (non-tropical)
//! polyhedral computations, so agreement is evidence rather than tautology.

// each test binary compiles this module separately and uses its own subset
#![allow(dead_code)]

use std::collections::BTreeSet;

use itertools::Itertools;
use num::rational::Ratio;
use num::{BigRational, One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use troplin::puiseux::{PuiseuxPoly, PuiseuxVector};
use troplin::{ExtRat, TropMatrix, TropVector};

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

pub fn fin(n: i64, d: i64) -> ExtRat {
    ExtRat::Finite(rat(n, d))
}

#[allow(dead_code)]
pub fn tv(coords: &[i64]) -> TropVector {
    TropVector::new(coords.iter().map(|&c| ExtRat::from_int(c)).collect()).unwrap()
}

/// Random matrix matching the acceptance corpus shape: entries are `inf`
/// with probability 1/5, otherwise rationals with |numerator| <= 8 and
/// denominator <= 4.
pub fn random_matrix(rng: &mut ChaCha20Rng, n: usize, k: usize) -> TropMatrix {
    let rows = (0..k)
        .map(|_| {
            TropVector::new((0..n).map(|_| random_entry(rng)).collect()).unwrap()
        })
        .collect();
    TropMatrix::new(n, rows).unwrap()
}

pub fn random_entry(rng: &mut ChaCha20Rng) -> ExtRat {
    if rng.random_bool(0.2) {
        ExtRat::Infinity
    } else {
        fin(rng.random_range(-8..=8), rng.random_range(1..=4))
    }
}

/// The shared random-instance corpus for the complement-law criteria.
pub fn acceptance_corpus(seed: u64, count: usize) -> Vec<TropMatrix> {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.random_range(2..=5);
            let k = rng.random_range(1..=3);
            random_matrix(&mut rng, n, k)
        })
        .collect()
}

/// Nonzero polynomial with up to `max_terms` terms, exponents in the
/// half-integer window [-2, 2].
pub fn random_puiseux_poly(rng: &mut ChaCha20Rng, max_terms: usize) -> PuiseuxPoly {
    loop {
        let terms = rng.random_range(1..=max_terms);
        let p = PuiseuxPoly::from_terms((0..terms).map(|_| {
            let num = loop {
                let c = rng.random_range(-4i64..=4);
                if c != 0 {
                    break c;
                }
            };
            (
                BigRational::new(rng.random_range(-4i64..=4).into(), 2.into()),
                BigRational::from_integer(num.into()),
            )
        }));
        if !p.is_zero() {
            return p;
        }
    }
}

pub fn random_puiseux_vector(rng: &mut ChaCha20Rng, n: usize, max_terms: usize) -> PuiseuxVector {
    PuiseuxVector::new(
        (0..n)
            .map(|_| {
                if rng.random_bool(0.15) {
                    PuiseuxPoly::zero()
                } else {
                    random_puiseux_poly(rng, max_terms)
                }
            })
            .collect(),
    )
    .unwrap()
}

/// Ground-truth tropical singularity: enumerate every permutation, track
/// the minimum assignment weight and how often it is attained.
pub fn singular_by_permutations(m: &TropMatrix) -> bool {
    let n = m.nrows();
    let mut best: Option<(BigRational, usize)> = None;
    for perm in (0..n).permutations(n) {
        let mut w = ExtRat::zero();
        for (i, &j) in perm.iter().enumerate() {
            w = &w + m.entry(i, j);
        }
        let ExtRat::Finite(w) = w else { continue };
        best = Some(match best.take() {
            None => (w, 1),
            Some((b, _)) if w < b => (w, 1),
            Some((b, c)) if w == b => (b, c + 1),
            Some(kept) => kept,
        });
    }
    match best {
        None => true,
        Some((_, count)) => count >= 2,
    }
}

/// Exhaustive sample points of the orthogonal prevariety of `a`, computed
/// by classical polyhedral geometry with no tropical machinery.
///
/// Points are grouped by which coordinates are infinite. Within one such
/// chart a row is vacuous when at most zero of its finite entries meet a
/// finite coordinate, impossible when exactly one does (a lone finite term
/// cannot tie), and otherwise forces the minimum of `x_j + a_j` to be hit
/// at two chosen positions. Each choice across rows is an ordinary
/// polyhedron; its vertices, extreme rays, and lineality directions are
/// enumerated by brute-force tight-set inspection over the homogenized
/// cone and mapped back with `inf` at the chart's infinite coordinates.
pub fn prevariety_samples(a: &TropMatrix) -> Vec<TropVector> {
    let n = a.ambient_dim();
    assert!(n <= 16, "chart enumeration is exponential in the ambient dimension");
    let mut out: BTreeSet<TropVector> = BTreeSet::new();
    out.insert(TropVector::all_infinite(n).unwrap());
    for chart in 1u32..(1u32 << n) {
        let finite: Vec<usize> = (0..n).filter(|i| chart >> i & 1 == 1).collect();
        let mut per_row: Vec<Vec<(usize, usize)>> = Vec::new();
        let mut impossible = false;
        for row in a.rows() {
            let js: Vec<usize> = finite
                .iter()
                .copied()
                .filter(|&c| row.get(c).is_finite())
                .collect();
            match js.len() {
                0 => {}
                1 => {
                    impossible = true;
                    break;
                }
                _ => per_row.push(js.iter().copied().tuple_combinations().collect()),
            }
        }
        if impossible {
            continue;
        }
        let cells: Vec<Vec<(usize, usize)>> = if per_row.is_empty() {
            vec![Vec::new()]
        } else {
            per_row
                .iter()
                .multi_cartesian_product()
                .map(|combo| combo.into_iter().copied().collect())
                .collect()
        };
        for cell in cells {
            sample_cell(a, &finite, &cell, &mut out);
        }
    }
    out.into_iter().collect()
}

type Q = Ratio<i64>;

fn q_entry(e: &ExtRat) -> Q {
    let r = e.as_finite().expect("finite entry");
    Q::new(
        i64::try_from(r.numer()).expect("small numerator"),
        i64::try_from(r.denom()).expect("small denominator"),
    )
}

/// Adds every vertex, ray, and line sample of one argmin-pair cell.
///
/// Variables are the finite coordinates plus a homogenizing `w`; a cell
/// point is any cone element with `w > 0`, scaled back to `w = 1`.
fn sample_cell(
    a: &TropMatrix,
    finite: &[usize],
    cell: &[(usize, usize)],
    out: &mut BTreeSet<TropVector>,
) {
    let d = finite.len();
    let dim = d + 1;
    let col = |coord: usize| finite.iter().position(|&c| c == coord).unwrap();

    let mut eqs: Vec<Vec<Q>> = Vec::new();
    let mut ineqs: Vec<Vec<Q>> = Vec::new();
    let mut w_row = vec![Q::zero(); dim];
    w_row[d] = Q::one();
    ineqs.push(w_row);

    let mut pair_iter = cell.iter();
    for row in a.rows() {
        let js: Vec<usize> = finite
            .iter()
            .copied()
            .filter(|&c| row.get(c).is_finite())
            .collect();
        if js.is_empty() {
            continue;
        }
        let &(mu, nu) = pair_iter.next().expect("one pair per active row");
        // x_mu + a_mu = x_nu + a_nu
        let mut eq = vec![Q::zero(); dim];
        eq[col(mu)] = Q::one();
        eq[col(nu)] = -Q::one();
        eq[d] = q_entry(row.get(mu)) - q_entry(row.get(nu));
        eqs.push(eq);
        // x_j + a_j >= x_mu + a_mu for the untied positions
        for j in js {
            if j == mu || j == nu {
                continue;
            }
            let mut le = vec![Q::zero(); dim];
            le[col(j)] = Q::one();
            le[col(mu)] = -Q::one();
            le[d] = q_entry(row.get(j)) - q_entry(row.get(mu));
            ineqs.push(le);
        }
    }

    let (rays, lines) = cone_generators(&eqs, &ineqs, dim);
    let vertices: Vec<Vec<Q>> = rays
        .iter()
        .filter(|r| r[d] > Q::zero())
        .map(|r| (0..d).map(|j| r[j] / r[d]).collect())
        .collect();
    let Some(base) = vertices.first() else {
        return; // no point of the cell has every chart coordinate finite
    };

    let mut push = |coords: Vec<Q>| {
        let mut full = vec![ExtRat::Infinity; a.ambient_dim()];
        for (j, &c) in finite.iter().enumerate() {
            full[c] = ExtRat::Finite(BigRational::new(
                (*coords[j].numer()).into(),
                (*coords[j].denom()).into(),
            ));
        }
        out.insert(TropVector::new(full).unwrap());
    };

    for v in &vertices {
        push(v.clone());
    }
    for r in rays.iter().filter(|r| r[d].is_zero()) {
        push((0..d).map(|j| base[j] + r[j]).collect());
    }
    for (_, l) in &lines {
        push((0..d).map(|j| base[j] + l[j]).collect());
        push((0..d).map(|j| base[j] - l[j]).collect());
    }
}

/// Extreme rays and lineality basis of `{y : eqs y = 0, ineqs y >= 0}`.
///
/// Every subset of inequalities is tried as a tight set; when the tight
/// system's kernel exceeds the lineality space by exactly one dimension,
/// any kernel vector outside the lineality span is the candidate ray, kept
/// if one of its orientations satisfies all inequalities. Extreme rays all
/// arise this way (their full tight set qualifies), and spurious feasible
/// candidates are still valid cone points, which is all sampling needs.
fn cone_generators(
    eqs: &[Vec<Q>],
    ineqs: &[Vec<Q>],
    dim: usize,
) -> (Vec<Vec<Q>>, TaggedBasis) {
    assert!(ineqs.len() <= 20, "tight-set enumeration is exponential");
    let all: Vec<Vec<Q>> = eqs.iter().chain(ineqs).cloned().collect();
    let lines = kernel(&all, dim);

    let mut rays: Vec<Vec<Q>> = Vec::new();
    for mask in 0u32..(1u32 << ineqs.len()) {
        let mut rows: Vec<Vec<Q>> = eqs.to_vec();
        rows.extend(
            ineqs
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 == 1)
                .map(|(_, r)| r.clone()),
        );
        let kern = kernel(&rows, dim);
        if kern.len() != lines.len() + 1 {
            continue;
        }
        let Some(v) = kern
            .iter()
            .map(|(_, v)| reduce_against(v, &lines))
            .find(|v| v.iter().any(|c| !c.is_zero()))
        else {
            continue;
        };
        let neg: Vec<Q> = v.iter().map(|c| -c).collect();
        let oriented = if satisfies_all(&v, ineqs) {
            v
        } else if satisfies_all(&neg, ineqs) {
            neg
        } else {
            continue;
        };
        let ray = normalize(oriented);
        if !rays.contains(&ray) {
            rays.push(ray);
        }
    }
    (rays, lines)
}

fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn satisfies_all(v: &[Q], ineqs: &[Vec<Q>]) -> bool {
    ineqs.iter().all(|h| dot(h, v) >= Q::zero())
}

fn normalize(mut v: Vec<Q>) -> Vec<Q> {
    let denom_lcm = v
        .iter()
        .map(|c| *c.denom())
        .fold(1i64, |l, d| l / gcd(l, d) * d);
    let mut content = 0i64;
    for c in v.iter_mut() {
        *c *= Q::from_integer(denom_lcm);
        content = gcd(content, *c.numer());
    }
    if content > 1 {
        for c in v.iter_mut() {
            *c /= Q::from_integer(content);
        }
    }
    v
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Kernel basis vectors tagged with the free column each one owns.
type TaggedBasis = Vec<(usize, Vec<Q>)>;

/// Kernel basis of the row system, one vector per free column of the
/// reduced echelon form, tagged with that column. Each basis vector is 1
/// at its own free column and 0 at every other free column.
fn kernel(rows: &[Vec<Q>], dim: usize) -> TaggedBasis {
    let (rref, pivots) = reduced_echelon(rows, dim);
    let mut basis = Vec::new();
    for f in (0..dim).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Q::zero(); dim];
        v[f] = Q::one();
        for (row, &p) in rref.iter().zip(&pivots) {
            v[p] = -row[f];
        }
        basis.push((f, v));
    }
    basis
}

fn reduced_echelon(rows: &[Vec<Q>], dim: usize) -> (Vec<Vec<Q>>, Vec<usize>) {
    let mut a: Vec<Vec<Q>> = rows.to_vec();
    let m = a.len();
    let mut pivots = Vec::new();
    for c in 0..dim {
        let prow = pivots.len();
        let Some(r) = (prow..m).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(prow, r);
        let inv = a[prow][c];
        for cell in a[prow].iter_mut() {
            *cell /= inv;
        }
        let pivot_row = a[prow].clone();
        for (r2, row) in a.iter_mut().enumerate() {
            if r2 != prow && !row[c].is_zero() {
                let f = row[c];
                for (cell, p) in row.iter_mut().zip(&pivot_row) {
                    *cell -= f * p;
                }
            }
        }
        pivots.push(c);
    }
    a.truncate(pivots.len());
    (a, pivots)
}

/// Component of `v` outside the span of a kernel basis: eliminating each
/// basis vector's own free column removes exactly the span, because the
/// basis vectors vanish at each other's free columns. Zero iff `v` is in
/// the span.
fn reduce_against(v: &[Q], lines: &[(usize, Vec<Q>)]) -> Vec<Q> {
    let mut v = v.to_vec();
    for (f, line) in lines {
        let coeff = v[*f];
        if !coeff.is_zero() {
            for (cell, c) in v.iter_mut().zip(line) {
                *cell -= coeff * c;
            }
        }
    }
    v
}
