//! Grid-level invariants of the distribution machinery that go past the
//! inline unit tests: completeness to thirty copies at four levels, and the
//! sampling oracle at the edge of its stated envelope.

mod common;

use common::{spec, ssyt_schur};
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;
use schurcon::young::{
    distribution, enumerate_partitions, sample_shape, schur_bialternant, schur_polynomial,
    Spectrum,
};

#[test]
fn schur_routes_match_tableau_enumeration() {
    // The determinant route, the bialternant, and (where cheap) an outright
    // enumeration of semistandard fillings must agree.
    let spectra = [
        spec(&[0.75, 0.25]),
        spec(&[0.5, 0.3, 0.2]),
        spec(&[0.4, 0.3, 0.2, 0.1]),
    ];
    for p in &spectra {
        let d = p.dim();
        for n in 0..=6usize {
            for lambda in enumerate_partitions(n, d).unwrap() {
                let jt = schur_polynomial(&lambda, p);
                let brute = ssyt_schur(&lambda, p.probs());
                assert!(
                    (jt - brute).abs() <= 1e-13,
                    "{lambda} at {:?}: {jt} vs {brute}",
                    p.probs()
                );
                let bi = schur_bialternant(&lambda, p).unwrap();
                assert!((jt - bi).abs() <= 1e-10, "{lambda}: {jt} vs {bi}");
            }
        }
    }
}

#[test]
fn completeness_to_thirty_copies() {
    let grid: Vec<Spectrum> = vec![
        spec(&[1.0]),
        spec(&[0.9, 0.1]),
        spec(&[0.5, 0.5]),
        spec(&[0.75, 0.25]),
        spec(&[0.5, 0.3, 0.2]),
        spec(&[0.7, 0.2, 0.1]),
        spec(&[0.4, 0.3, 0.2, 0.1]),
        spec(&[0.25, 0.25, 0.25, 0.25]),
        spec(&[0.97, 0.01, 0.01, 0.01]),
    ];
    for p in &grid {
        for n in [10usize, 20, 30] {
            let dist = distribution(n, p.dim(), p).unwrap();
            let total = dist.total_probability();
            assert!(
                (total - 1.0).abs() <= 1e-9,
                "n={n}, p={:?}: {total}",
                p.probs()
            );
        }
    }
}

#[test]
fn sampling_oracle_matches_at_the_envelope_edge() {
    // A million shots with every per-shape deviation within four binomial
    // standard errors; configurations at the large end of the envelope.
    let shots = 1_000_000usize;
    for (n, p, seed) in [
        (8usize, spec(&[0.5, 0.3, 0.2]), 1u64),
        (7, spec(&[0.75, 0.25]), 2),
        (3, spec(&[0.75, 0.25]), 3),
    ] {
        let dist = distribution(n, p.dim(), &p).unwrap();
        let mut counts = vec![0u64; dist.entries.len()];
        let mut rng = ChaCha12Rng::seed_from_u64(seed);
        for _ in 0..shots {
            let shape = sample_shape(&p, n, &mut rng).unwrap();
            let at = dist
                .entries
                .iter()
                .position(|e| e.partition == shape)
                .expect("shape is a valid outcome");
            counts[at] += 1;
        }
        for (entry, &count) in dist.entries.iter().zip(&counts) {
            let freq = count as f64 / shots as f64;
            let sigma = (entry.probability * (1.0 - entry.probability) / shots as f64)
                .sqrt()
                .max(1e-12);
            assert!(
                (freq - entry.probability).abs() <= 4.0 * sigma,
                "n={n} {}: freq {freq} vs {} (sigma {sigma})",
                entry.partition,
                entry.probability
            );
            // The three-copy mixed shape hits its 0.375 closed form within
            // three binomial standard errors.
            if n == 3 && entry.partition.parts() == [2, 1] {
                assert!((entry.probability - 0.375).abs() < 1e-12);
                assert!((freq - 0.375).abs() <= 3.0 * sigma, "freq {freq}");
            }
        }
    }
}
