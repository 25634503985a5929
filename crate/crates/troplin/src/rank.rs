//! Tropical singularity and rank.
//!
//! A square matrix is tropically singular when the minimum over all
//! permutations of the diagonal-product sums is `inf` (no permutation avoids
//! an `inf` entry) or is attained by at least two permutations. Rather than
//! enumerating permutations, this solves one exact min-cost assignment with
//! `inf` entries treated as forbidden edges, then checks uniqueness of the
//! optimum: under optimal dual potentials every optimal permutation uses only
//! tight edges, so a second optimum exists precisely when the digraph that
//! orients matched tight edges row-to-column and unmatched tight edges
//! column-to-row contains a directed cycle.

use itertools::Itertools;
use num::{BigRational, Zero};

use crate::rat::ExtRat;
use crate::trop::TropMatrix;
use crate::{Error, Result};

struct Assignment {
    /// `row_to_col[i]` is the column matched to row `i`.
    row_to_col: Vec<usize>,
    row_potential: Vec<BigRational>,
    col_potential: Vec<BigRational>,
}

/// Exact shortest-augmenting-path assignment. Entries are looked up through
/// `cost`, which returns `inf` for forbidden edges. Returns `None` when no
/// perfect matching on finite edges exists.
fn min_assignment(r: usize, cost: &dyn Fn(usize, usize) -> ExtRat) -> Option<Assignment> {
    let mut u = vec![BigRational::zero(); r];
    let mut v = vec![BigRational::zero(); r];
    let mut col_to_row: Vec<Option<usize>> = vec![None; r];

    for i in 0..r {
        let mut minv = vec![ExtRat::Infinity; r];
        let mut way: Vec<Option<usize>> = vec![None; r];
        let mut used = vec![false; r];
        let mut cur_row = i;
        let mut prev_col: Option<usize> = None;
        let end_col;
        loop {
            for j in 0..r {
                if used[j] {
                    continue;
                }
                if let ExtRat::Finite(c) = cost(cur_row, j) {
                    let red = ExtRat::Finite(&c - &u[cur_row] - &v[j]);
                    if red < minv[j] {
                        minv[j] = red;
                        way[j] = prev_col;
                    }
                }
            }
            let mut delta = ExtRat::Infinity;
            let mut next = None;
            for j in 0..r {
                if !used[j] && minv[j] < delta {
                    delta = minv[j].clone();
                    next = Some(j);
                }
            }
            let (j1, delta) = match (next, delta) {
                (Some(j), ExtRat::Finite(d)) => (j, d),
                // every unmatched column is unreachable over finite edges
                _ => return None,
            };
            u[i] += &delta;
            for j in 0..r {
                if used[j] {
                    u[col_to_row[j].expect("used column is matched")] += &delta;
                    v[j] -= &delta;
                } else if let ExtRat::Finite(x) = &mut minv[j] {
                    *x -= &delta;
                }
            }
            used[j1] = true;
            match col_to_row[j1] {
                Some(row) => {
                    cur_row = row;
                    prev_col = Some(j1);
                }
                None => {
                    end_col = j1;
                    break;
                }
            }
        }
        // flip the alternating path
        let mut j0 = end_col;
        loop {
            match way[j0] {
                Some(j1) => {
                    col_to_row[j0] = col_to_row[j1];
                    j0 = j1;
                }
                None => {
                    col_to_row[j0] = Some(i);
                    break;
                }
            }
        }
    }

    let mut row_to_col = vec![usize::MAX; r];
    for (j, i) in col_to_row.iter().enumerate() {
        row_to_col[i.expect("perfect matching")] = j;
    }

    if cfg!(debug_assertions) {
        for i in 0..r {
            for (j, vj) in v.iter().enumerate() {
                if let ExtRat::Finite(c) = cost(i, j) {
                    debug_assert!(&u[i] + vj <= c, "infeasible duals at ({i},{j})");
                }
            }
            let j = row_to_col[i];
            let c = cost(i, j).as_finite().expect("matched edge is finite").clone();
            debug_assert!(&u[i] + &v[j] == c, "matched edge not tight at ({i},{j})");
        }
    }

    Some(Assignment {
        row_to_col,
        row_potential: u,
        col_potential: v,
    })
}

/// Directed cycle test on the tight subgraph. Nodes `0..r` are rows and
/// `r..2r` are columns; any directed cycle alternates matched and unmatched
/// tight edges by construction.
fn tight_digraph_has_cycle(r: usize, asg: &Assignment, cost: &dyn Fn(usize, usize) -> ExtRat) -> bool {
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); 2 * r];
    for i in 0..r {
        for j in 0..r {
            if let ExtRat::Finite(c) = cost(i, j) {
                if &asg.row_potential[i] + &asg.col_potential[j] == c {
                    if asg.row_to_col[i] == j {
                        adj[i].push(r + j);
                    } else {
                        adj[r + j].push(i);
                    }
                }
            }
        }
    }
    // iterative three-color DFS
    let mut color = vec![0u8; 2 * r];
    for start in 0..2 * r {
        if color[start] != 0 {
            continue;
        }
        let mut stack = vec![(start, 0usize)];
        color[start] = 1;
        while let Some(top) = stack.last_mut() {
            let node = top.0;
            if top.1 < adj[node].len() {
                let next = adj[node][top.1];
                top.1 += 1;
                match color[next] {
                    0 => {
                        color[next] = 1;
                        stack.push((next, 0));
                    }
                    1 => return true,
                    _ => {}
                }
            } else {
                color[node] = 2;
                stack.pop();
            }
        }
    }
    false
}

fn singular_with_cost(r: usize, cost: &dyn Fn(usize, usize) -> ExtRat) -> bool {
    match min_assignment(r, cost) {
        None => true,
        Some(asg) => tight_digraph_has_cycle(r, &asg, cost),
    }
}

/// Exact tropical singularity test for a square matrix.
pub fn is_tropically_singular(m: &TropMatrix) -> Result<bool> {
    if !m.is_square() {
        return Err(Error::Shape(format!(
            "singularity needs a square matrix, got {}x{}",
            m.nrows(),
            m.ambient_dim()
        )));
    }
    Ok(singular_with_cost(m.nrows(), &|i, j| m.entry(i, j).clone()))
}

/// Side length of the largest tropically non-singular square submatrix;
/// 0 when every entry is `inf`.
pub fn tropical_rank(m: &TropMatrix) -> usize {
    let bound = m.nrows().min(m.ambient_dim());
    for r in (1..=bound).rev() {
        for rows in (0..m.nrows()).combinations(r) {
            for cols in (0..m.ambient_dim()).combinations(r) {
                let nonsingular =
                    !singular_with_cost(r, &|i, j| m.entry(rows[i], cols[j]).clone());
                if nonsingular {
                    return r;
                }
            }
        }
    }
    0
}
