//! The achievability story end to end: the probability of concentrating at
//! least `capacity - eps` ebits per copy approaches one at the low-side
//! exponent's rate.

mod common;

use common::spec;
use schurcon::proto::capacity;
use schurcon::rates::{exponent_parametric, tail_probability_log2, Side};

#[test]
fn sub_capacity_tail_decays_at_the_low_side_exponent() {
    let p = spec(&[0.75, 0.25]);
    let eps = 0.25;
    let rate = capacity(&p) - eps;
    let exponent = exponent_parametric(rate, &p, Side::Low).unwrap();
    for n in [200usize, 500, 1000] {
        // P[yield/copy < capacity - eps] = P[dim V <= 2^{n rate}] up to the
        // threshold convention; one-sided with 0.01 bits of slack.
        let estimate = -tail_probability_log2(n, 2, &p, rate, Side::Low).unwrap() / n as f64;
        assert!(
            estimate >= exponent - 0.01,
            "n={n}: tail exponent {estimate} below {exponent} - 0.01"
        );
    }
}

#[test]
fn tail_exponent_trend_toward_the_limit() {
    let p = spec(&[0.75, 0.25]);
    let rate = 0.5;
    let target = exponent_parametric(rate, &p, Side::Low).unwrap();
    let mut previous_gap = f64::INFINITY;
    for n in [500usize, 1000, 2000, 5000] {
        let estimate = -tail_probability_log2(n, 2, &p, rate, Side::Low).unwrap() / n as f64;
        assert!(estimate >= target - 0.02, "n={n}: {estimate}");
        let gap = (estimate - target).abs();
        assert!(
            gap <= previous_gap + 1e-3,
            "gap grew at n={n}: {gap} after {previous_gap}"
        );
        previous_gap = gap;
    }
    assert!(previous_gap <= 0.01);
}
