//! Structural invariants of the exact simulator: projector algebra,
//! permutation invariance of post-measurement states, and the multiplicity
//! law that certifies the perfect pair.

mod common;

use common::{random_spectrum, spec};
use num_complex::Complex64;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use schurcon::exact::{
    build_input_state, cross_block_probability, measure_blocks, permutation_action,
    project_block, Permutation, PureBipartiteState, Side,
};
use schurcon::young::{dim_sn_irrep, enumerate_partitions};

fn random_bipartite_state(n: usize, d: usize, rng: &mut ChaCha12Rng) -> PureBipartiteState {
    let dn = d.pow(n as u32);
    let amps: Vec<Complex64> = (0..dn * dn)
        .map(|_| Complex64::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5))
        .collect();
    let norm = amps.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    let amps = amps.into_iter().map(|z| z / norm).collect();
    PureBipartiteState::from_amplitudes(n, d, amps).unwrap()
}

fn state_distance(a: &PureBipartiteState, b: &PureBipartiteState) -> f64 {
    a.amplitudes()
        .iter()
        .zip(b.amplitudes())
        .map(|(x, y)| (x - y).norm_sqr())
        .sum::<f64>()
        .sqrt()
}

#[test]
fn projector_algebra_on_random_vectors() {
    let mut rng = ChaCha12Rng::seed_from_u64(31);
    for (n, d) in [(2usize, 2usize), (3, 2), (4, 2), (3, 3)] {
        let state = random_bipartite_state(n, d, &mut rng);
        let shapes = enumerate_partitions(n, d).unwrap();
        // Idempotence and completeness on side A.
        let mut total = vec![Complex64::ZERO; state.amplitudes().len()];
        for shape in &shapes {
            let once = project_block(&state, shape, Side::A).unwrap();
            let twice = project_block(&once, shape, Side::A).unwrap();
            assert!(
                state_distance(&once, &twice) <= 1e-10,
                "P^2 != P at {shape}, n={n}, d={d}"
            );
            for (acc, z) in total.iter_mut().zip(once.amplitudes()) {
                *acc += z;
            }
            // Orthogonality against every other block.
            for other in &shapes {
                if other == shape {
                    continue;
                }
                let cross = project_block(&once, other, Side::A).unwrap();
                assert!(
                    cross.norm_squared().sqrt() <= 1e-10,
                    "P_{other} P_{shape} != 0 at n={n}, d={d}"
                );
            }
        }
        let resolved = PureBipartiteState::from_amplitudes(n, d, total).unwrap();
        assert!(
            state_distance(&resolved, &state) <= 1e-10,
            "sum of projectors is not the identity at n={n}, d={d}"
        );
    }
}

#[test]
fn post_states_invariant_under_all_permutations_small() {
    let mut rng = ChaCha12Rng::seed_from_u64(5150);
    for (n, d) in [(2usize, 2usize), (3, 2), (4, 2), (3, 3), (4, 3)] {
        let p = random_spectrum(d, &mut rng);
        let state = build_input_state(&p, n).unwrap();
        for outcome in measure_blocks(&state).unwrap() {
            for sigma in Permutation::all(n) {
                let a = permutation_action(&sigma, Side::A, &outcome.post_state).unwrap();
                let moved = permutation_action(&sigma, Side::B, &a).unwrap();
                assert!(
                    state_distance(&moved, &outcome.post_state) <= 1e-10,
                    "n={n} d={d} {}",
                    outcome.shape
                );
            }
        }
    }
}

#[test]
fn post_states_invariant_under_sampled_permutations_large() {
    let mut rng = ChaCha12Rng::seed_from_u64(62);
    for n in [5usize, 6] {
        let p = random_spectrum(2, &mut rng);
        let state = build_input_state(&p, n).unwrap();
        let all = Permutation::all(n);
        for outcome in measure_blocks(&state).unwrap() {
            for _ in 0..20 {
                let sigma = &all[rng.random_range(0..all.len())];
                let a = permutation_action(sigma, Side::A, &outcome.post_state).unwrap();
                let moved = permutation_action(sigma, Side::B, &a).unwrap();
                assert!(
                    state_distance(&moved, &outcome.post_state) <= 1e-10,
                    "n={n} {}",
                    outcome.shape
                );
            }
        }
    }
}

#[test]
fn schmidt_multiplicities_divide_by_the_path_dimension() {
    let mut rng = ChaCha12Rng::seed_from_u64(77);
    for (n, d) in [(3usize, 2usize), (4, 2), (5, 2), (3, 3), (4, 3)] {
        let p = random_spectrum(d, &mut rng);
        let state = build_input_state(&p, n).unwrap();
        for outcome in measure_blocks(&state).unwrap() {
            let dim_v = dim_sn_irrep(&outcome.shape, outcome.shape.len())
                .unwrap()
                .to_usize()
                .unwrap();
            let mut u_side_total = 0.0;
            for &(value, multiplicity) in &outcome.block_spectrum {
                assert_eq!(
                    multiplicity % dim_v,
                    0,
                    "{}: multiplicity {multiplicity} not divisible by {dim_v}",
                    outcome.shape
                );
                // Removing the uniform size-dim_v factor leaves the
                // multiplicity-space spectrum, which must be normalized.
                u_side_total += value * dim_v as f64 * (multiplicity / dim_v) as f64;
            }
            assert!(
                (u_side_total - 1.0).abs() <= 1e-9,
                "{}: residual spectrum sums to {u_side_total}",
                outcome.shape
            );
        }
    }
}

#[test]
fn cross_block_mass_vanishes_on_a_spectrum_grid() {
    for p in [
        spec(&[0.9, 0.1]),
        spec(&[0.5, 0.5]),
        spec(&[0.5, 0.3, 0.2]),
    ] {
        let n = 3;
        let state = build_input_state(&p, n).unwrap();
        let shapes = enumerate_partitions(n, p.dim()).unwrap();
        for lambda in &shapes {
            for mu in &shapes {
                if lambda == mu {
                    continue;
                }
                let mass = cross_block_probability(&state, lambda, mu).unwrap();
                assert!(mass <= 1e-12, "{lambda} vs {mu}: {mass}");
            }
        }
    }
}
