//! Acceptance gate: one test per criterion, each printing a single
//! pass/fail line with its elapsed time (visible with `--nocapture`).
//! Criteria with a stated time budget fail when they run over it.

mod common;

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use common::*;
use num::{BigRational, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use rayon::prelude::*;
use troplin::corpus::{example_a0, example_a0_orthogonal, example_countable_family, point_pj, CountableFamilySpec};
use troplin::prevariety::{dimension, orthogonal_generators, prevariety_equal, prevariety_member};
use troplin::rank::is_tropically_singular;
use troplin::trop::is_tropically_orthogonal;
use troplin::variety::{decide_variety, plucker_coordinates, trop_generators_from_plucker, trop_space_member, verify_certificate, Decision, SearchBudget};
use troplin::{ExtRat, GeneratorSet, TropMatrix, TropVector};

fn finish(name: &str, started: Instant, budget: Option<Duration>) {
    let elapsed = started.elapsed();
    if let Some(budget) = budget {
        assert!(
            elapsed <= budget,
            "acceptance {name}: FAIL (took {elapsed:.2?}, budget {budget:.2?})"
        );
    }
    println!("acceptance {name}: PASS ({elapsed:.2?})");
}

#[test]
fn a01_fixture_complements_and_obstruction() {
    let started = Instant::now();
    for n in 3..=6usize {
        let a = example_a0(n).unwrap();
        let xs = orthogonal_generators(&a).unwrap();
        let expected = GeneratorSet::from_matrix(&example_a0_orthogonal(n).unwrap()).unwrap();
        assert!(
            prevariety_equal(&xs, &expected).unwrap(),
            "acceptance a01: FAIL (complement of the n={n} fixture is off)"
        );
        let ys = orthogonal_generators(&xs.to_matrix()).unwrap();
        assert!(
            prevariety_equal(&ys, &xs).unwrap(),
            "acceptance a01: FAIL (double complement differs at n={n})"
        );
        let decision = decide_variety(&a, &SearchBudget::default(), 0).unwrap();
        match decision {
            Decision::NotVariety(obs) => {
                assert_eq!(
                    (obs.dim_perp, obs.dim_perp_perp),
                    (n - 1, n - 1),
                    "acceptance a01: FAIL (wrong obstruction dimensions at n={n})"
                );
            }
            other => panic!("acceptance a01: FAIL (expected an obstruction at n={n}, got {other:?})"),
        }
    }
    finish("a01 fixture complements and obstruction", started, Some(Duration::from_secs(5)));
}

#[test]
fn a02_random_complement_laws() {
    let started = Instant::now();
    let mut rng = ChaCha20Rng::seed_from_u64(0xA02);
    for (idx, a) in acceptance_corpus(2025, 200).iter().enumerate() {
        let xs = orthogonal_generators(a).unwrap();
        let hull = GeneratorSet::from_matrix(a).unwrap();
        for _ in 0..100 {
            let coeffs: Vec<ExtRat> = (0..hull.len()).map(|_| random_entry(&mut rng)).collect();
            let p = hull.hull_eval(&coeffs).unwrap();
            for g in xs.gens() {
                assert!(
                    is_tropically_orthogonal(&p, g).unwrap(),
                    "acceptance a02: FAIL (instance {idx}: hull point {p} misses generator {g})"
                );
            }
        }
        let ys = orthogonal_generators(&xs.to_matrix()).unwrap();
        let zs = orthogonal_generators(&ys.to_matrix()).unwrap();
        assert!(
            prevariety_equal(&xs, &zs).unwrap(),
            "acceptance a02: FAIL (instance {idx}: triple complement differs from single)"
        );
    }
    finish("a02 random complement laws", started, Some(Duration::from_secs(120)));
}

#[test]
fn a03_dimension_inequality() {
    let started = Instant::now();
    for (idx, a) in acceptance_corpus(2025, 200).iter().enumerate() {
        let xs = orthogonal_generators(a).unwrap();
        let ys = orthogonal_generators(&xs.to_matrix()).unwrap();
        let (dx, dy) = (dimension(&xs), dimension(&ys));
        assert!(
            dx + dy >= a.ambient_dim(),
            "acceptance a03: FAIL (instance {idx}: {dx} + {dy} < {})",
            a.ambient_dim()
        );
    }
    finish("a03 dimension inequality", started, None);
}

#[test]
fn a04_generator_completeness() {
    let started = Instant::now();
    let mut jobs: Vec<(usize, usize, u64)> = Vec::new();
    for n in 2..=4usize {
        for k in 1..=2usize {
            for idx in 0..4u64.pow((n * k) as u32) {
                jobs.push((n, k, idx));
            }
        }
    }
    let checked = AtomicUsize::new(0);
    let failures: Mutex<Vec<String>> = Mutex::new(Vec::new());
    jobs.par_iter().for_each(|&(n, k, idx)| {
        if failures.lock().unwrap().len() >= 5 {
            return;
        }
        let a = matrix_from_digits(n, k, idx);
        let gens = orthogonal_generators(&a).unwrap();
        for g in gens.gens() {
            for row in a.rows() {
                if !is_tropically_orthogonal(g, row).unwrap() {
                    failures.lock().unwrap().push(format!(
                        "matrix {n}x{k}#{idx}: emitted generator {g} is not orthogonal to {row}"
                    ));
                    return;
                }
            }
        }
        for sample in prevariety_samples(&a) {
            if gens.hull_member(&sample).unwrap().is_none() {
                failures.lock().unwrap().push(format!(
                    "matrix {n}x{k}#{idx}: prevariety point {sample} is outside the emitted hull"
                ));
                return;
            }
        }
        checked.fetch_add(1, Ordering::Relaxed);
    });
    let failures = failures.into_inner().unwrap();
    assert!(
        failures.is_empty(),
        "acceptance a04: FAIL ({} completeness violations, first: {})",
        failures.len(),
        failures[0]
    );
    assert_eq!(checked.load(Ordering::Relaxed), jobs.len());
    finish("a04 generator completeness", started, Some(Duration::from_secs(600)));
}

/// Entries of the exhaustive corpus, base-4 digits: 0, 1, 2, inf.
fn matrix_from_digits(n: usize, k: usize, mut idx: u64) -> TropMatrix {
    let mut rows = Vec::with_capacity(k);
    for _ in 0..k {
        let coords = (0..n)
            .map(|_| {
                let digit = idx % 4;
                idx /= 4;
                match digit {
                    3 => ExtRat::Infinity,
                    d => ExtRat::from_int(d as i64),
                }
            })
            .collect();
        rows.push(TropVector::new(coords).unwrap());
    }
    TropMatrix::new(n, rows).unwrap()
}

#[test]
fn a05_minor_membership_and_certificates() {
    let started = Instant::now();
    let mut rng = ChaCha20Rng::seed_from_u64(0xA05);
    let budget = SearchBudget { rounds: 20, max_terms: 6 };
    for base in 0..50 {
        let (rows, plucker) = loop {
            let d = rng.random_range(1..=3usize);
            let n = rng.random_range(d.max(2)..=6usize);
            let rows: Vec<_> = (0..d).map(|_| random_puiseux_vector(&mut rng, n, 3)).collect();
            if let Ok(p) = plucker_coordinates(&rows) {
                break (rows, p);
            }
        };
        for _ in 0..20 {
            let combo = rows
                .iter()
                .map(|r| r.scale(&random_puiseux_poly(&mut rng, 2)))
                .reduce(|acc, r| acc.add(&r).unwrap())
                .unwrap();
            assert!(
                trop_space_member(&plucker, &combo.tropicalize()).unwrap(),
                "acceptance a05: FAIL (base {base}: tropicalized combination rejected)"
            );
        }
        let defining = trop_generators_from_plucker(&plucker);
        match decide_variety(&defining, &budget, 0).unwrap() {
            Decision::Variety(cert) => {
                for v in cert.v_lifts() {
                    for w in cert.w_lifts() {
                        assert!(
                            v.dot(w).unwrap().is_zero(),
                            "acceptance a05: FAIL (base {base}: certificate dot is not exactly zero)"
                        );
                    }
                }
                let xs = orthogonal_generators(&defining).unwrap();
                let ys = orthogonal_generators(&xs.to_matrix()).unwrap();
                verify_certificate(&xs, &ys, &cert).unwrap_or_else(|e| {
                    panic!("acceptance a05: FAIL (base {base}: certificate rejected: {e})")
                });
            }
            other => panic!("acceptance a05: FAIL (base {base}: expected a verified certificate, got {other:?})"),
        }
    }
    finish("a05 minor membership and certificates", started, Some(Duration::from_secs(600)));
}

#[test]
fn a06_singularity_oracle() {
    let started = Instant::now();
    for idx in 0..19683u64 {
        let mut digits = idx;
        let rows: Vec<TropVector> = (0..3)
            .map(|_| {
                TropVector::new(
                    (0..3)
                        .map(|_| {
                            let d = digits % 3;
                            digits /= 3;
                            match d {
                                2 => ExtRat::Infinity,
                                d => ExtRat::from_int(d as i64),
                            }
                        })
                        .collect(),
                )
                .unwrap()
            })
            .collect();
        let m = TropMatrix::new(3, rows).unwrap();
        assert_eq!(
            is_tropically_singular(&m).unwrap(),
            singular_by_permutations(&m),
            "acceptance a06: FAIL (3x3 sweep disagrees at #{idx}: {m:?})"
        );
    }
    let mut rng = ChaCha20Rng::seed_from_u64(0xA06);
    for trial in 0..1000 {
        let rows: Vec<TropVector> = (0..5)
            .map(|_| {
                TropVector::new(
                    (0..5)
                        .map(|_| fin(rng.random_range(-8..=8), rng.random_range(1..=4)))
                        .collect(),
                )
                .unwrap()
            })
            .collect();
        let m = TropMatrix::new(5, rows).unwrap();
        assert_eq!(
            is_tropically_singular(&m).unwrap(),
            singular_by_permutations(&m),
            "acceptance a06: FAIL (random 5x5 disagrees at trial {trial})"
        );
    }
    finish("a06 singularity oracle", started, None);
}

#[test]
fn a07_shared_points_family() {
    let started = Instant::now();
    let spec = CountableFamilySpec::default_for(8);
    let rows = example_countable_family(&spec).unwrap();
    let delta = BigRational::new(1.into(), 100.into());
    let shifts = [-delta.clone(), BigRational::zero(), delta.clone()];

    let perturb = |p: &TropVector, d: [&BigRational; 3]| {
        TropVector::new(
            p.iter()
                .enumerate()
                .map(|(i, c)| &ExtRat::Finite(d[i / 2].clone()) + c)
                .collect(),
        )
        .unwrap()
    };

    let mut perturbed: Vec<Vec<TropVector>> = Vec::new();
    for j in 2..=7 {
        let p = point_pj(j, &spec).unwrap();
        assert!(
            prevariety_member(&rows, &p).unwrap(),
            "acceptance a07: FAIL (point {j} is not shared by all eight constraints)"
        );
        let mut variants = Vec::new();
        for d0 in &shifts {
            for d1 in &shifts {
                for d2 in &shifts {
                    let moved = perturb(&p, [d0, d1, d2]);
                    assert!(
                        prevariety_member(&rows, &moved).unwrap(),
                        "acceptance a07: FAIL (paired perturbation of point {j} fell out)"
                    );
                    variants.push(moved);
                }
            }
        }
        perturbed.push(variants);

        let mut unpaired = p.coords().to_vec();
        unpaired[0] = &unpaired[0] + &ExtRat::Finite(delta.clone());
        let unpaired = TropVector::new(unpaired).unwrap();
        assert!(
            !prevariety_member(&rows, &unpaired).unwrap(),
            "acceptance a07: FAIL (unpaired first-coordinate shift of point {j} stayed a member)"
        );
    }
    for i in 0..perturbed.len() {
        for j in (i + 1)..perturbed.len() {
            for a in &perturbed[i] {
                for b in &perturbed[j] {
                    assert_ne!(
                        a, b,
                        "acceptance a07: FAIL (perturbed points {i} and {j} collide)"
                    );
                }
            }
        }
    }
    finish("a07 shared points family", started, Some(Duration::from_secs(1)));
}
