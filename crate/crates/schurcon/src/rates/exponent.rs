//! Failure exponents of the concentrated Bell size, three ways: the
//! parametric form driven by the potential `psi`, the primal
//! divergence-minimization form used as its independent oracle, and the
//! random-coding exponent used for the dense-coding comparison.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rates::entropy::{psi, relative_entropy, shannon_entropy};
use crate::young::Spectrum;

const LN_2: f64 = std::f64::consts::LN_2;

/// Which tail of the size distribution the exponent describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Side {
    /// Sizes at most `2^{nR}` with `R <= H(p)`: the failure event.
    Low,
    /// Sizes at least `2^{nR}` with `R >= H(p)`.
    High,
}

fn check_side(r_bits: f64, p: &Spectrum, side: Side) -> Result<f64> {
    let h = shannon_entropy(p);
    const TOL: f64 = 1e-9;
    match side {
        Side::Low if r_bits <= h + TOL => Ok(h),
        Side::High if r_bits + TOL >= h && r_bits <= (p.support() as f64).log2() + TOL => Ok(h),
        _ => Err(Error::input(format!(
            "rate {r_bits} outside the valid range for {side:?} side (H = {h})"
        ))),
    }
}

/// Golden-section maximization on `[a, b]`.
fn maximize_golden(f: &impl Fn(f64) -> f64, mut a: f64, mut b: f64, iters: usize) -> f64 {
    const INV_PHI: f64 = 0.6180339887498949;
    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    for _ in 0..iters {
        if f1 < f2 {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            f1 = f(x1);
        }
    }
    f1.max(f2)
}

fn maximize_grid_then_golden(f: &impl Fn(f64) -> f64, a: f64, b: f64, grid: usize) -> f64 {
    let step = (b - a) / grid as f64;
    let mut best_x = a;
    let mut best = f64::NEG_INFINITY;
    for k in 0..=grid {
        let x = a + step * k as f64;
        let v = f(x);
        if v > best {
            best = v;
            best_x = x;
        }
    }
    let lo = (best_x - step).max(a);
    let hi = (best_x + step).min(b);
    maximize_golden(f, lo, hi, 80).max(best)
}

/// `alpha * psi(1/alpha)` in nats, evaluated in ratio form so the huge power
/// `p_i^{1/alpha}` never under- or overflows: it equals
/// `ln p_1 + alpha * ln sum_i (p_i / p_1)^{1/alpha}`, which tends to
/// `ln p_1` as `alpha -> 0`.
fn alpha_psi_inv(alpha: f64, p: &Spectrum) -> f64 {
    let xs = p.support_probs();
    let top = xs[0];
    if alpha <= 0.0 {
        return top.ln();
    }
    let s = 1.0 / alpha;
    let acc: f64 = xs.iter().map(|&x| (x / top).powf(s)).sum();
    top.ln() + alpha * acc.ln()
}

/// Parametric exponent in bits.
///
/// Low side: `sup_{s >= 1} ((1-s)R - psi(s)) / s`, maximized over the
/// compact variable `a = 1/s` in `[0, 1]`, the `a -> 0` endpoint evaluated
/// analytically as `log(1/p_1) - R`. High side: the same expression over
/// `0 < s <= 1`.
pub fn exponent_parametric(r_bits: f64, p: &Spectrum, side: Side) -> Result<f64> {
    check_side(r_bits, p, side)?;
    let r = r_bits * LN_2;
    let value = match side {
        Side::Low => {
            let objective = |alpha: f64| (alpha - 1.0) * r - alpha_psi_inv(alpha, p);
            let scan = maximize_grid_then_golden(&objective, 0.0, 1.0, 256);
            scan.max(objective(0.0))
        }
        Side::High => {
            let objective =
                |s: f64| ((1.0 - s) * r - psi(s, p).expect("s > 0")) / s;
            maximize_grid_then_golden(&objective, 1e-6, 1.0, 256)
        }
    };
    Ok((value / LN_2).max(0.0))
}

/// Primal estimate of the exponent: constrained divergence minimization over
/// the ordered simplex, by dense grid plus shrinking local refinement.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct PrimalExponent {
    /// Estimated `inf D(q || p)` in bits.
    pub value: f64,
    /// Coarse-grid resolution in the simplex coordinates; the refinement
    /// only improves on it.
    pub resolution: f64,
}

/// Exponent by direct minimization of `D(q || p)` over ordered spectra with
/// `H(q) <= R` (low side) or `H(q) >= R` (high side).
///
/// Oracle route: independent of [`exponent_parametric`], usable up to
/// four-level spectra.
pub fn exponent_primal(r_bits: f64, p: &Spectrum, side: Side) -> Result<PrimalExponent> {
    check_side(r_bits, p, side)?;
    let d = p.dim();
    if d > 4 {
        return Err(Error::guard(format!(
            "primal exponent search supports up to 4 levels, got {d}"
        )));
    }
    let step = match d {
        1 | 2 => 1e-3,
        3 => 5e-3,
        _ => 1e-2,
    };
    let evaluate = |q: Vec<f64>| -> Option<(f64, Vec<f64>)> {
        let spec = Spectrum::with_sum_tol(q, 1e-6).ok()?;
        let feasible = match side {
            Side::Low => shannon_entropy(&spec) <= r_bits,
            Side::High => shannon_entropy(&spec) >= r_bits,
        };
        feasible.then(|| (relative_entropy(&spec, p), spec.probs().to_vec()))
    };
    // Slides an infeasible point onto the entropy boundary by mixing it
    // toward an anchor on the feasible side (the top corner for the low
    // side, the uniform point for the high side). Lets the local search
    // walk along the active constraint instead of rejecting every step
    // that overshoots it.
    let onto_boundary = |q: &[f64]| -> Option<Vec<f64>> {
        let entropy_of = |v: &[f64]| {
            -v.iter()
                .filter(|&&x| x > 0.0)
                .map(|&x| x * x.log2())
                .sum::<f64>()
        };
        let anchor: Vec<f64> = match side {
            Side::Low => {
                let mut a = vec![0.0; d];
                a[0] = 1.0;
                a
            }
            Side::High => vec![1.0 / d as f64; d],
        };
        let mix = |t: f64| -> Vec<f64> {
            q.iter()
                .zip(&anchor)
                .map(|(&x, &a)| (1.0 - t) * x + t * a)
                .collect()
        };
        let hits = |t: f64| match side {
            Side::Low => entropy_of(&mix(t)) <= r_bits,
            Side::High => entropy_of(&mix(t)) >= r_bits,
        };
        if hits(0.0) {
            return Some(q.to_vec());
        }
        if !hits(1.0) {
            return None;
        }
        let (mut lo, mut hi) = (0.0f64, 1.0f64);
        for _ in 0..80 {
            let mid = 0.5 * (lo + hi);
            if hits(mid) {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        Some(mix(hi))
    };
    fn merge(best: &mut Option<(f64, Vec<f64>)>, cand: (f64, Vec<f64>)) {
        if best.as_ref().is_none_or(|(b, _)| cand.0 < *b) {
            *best = Some(cand);
        }
    }

    // Dense grid over the ordered simplex (free coordinates q_1..q_{d-1}).
    let mut best: Option<(f64, Vec<f64>)> = None;
    let mut q = vec![0.0; d];
    grid_scan(&mut q, 0, 1.0, step, &mut |q| {
        if let Some(cand) = evaluate(q) {
            merge(&mut best, cand);
        }
    });
    let (_, mut center) = best
        .clone()
        .ok_or_else(|| Error::input(format!("no feasible ordered spectrum at rate {r_bits}")))?;

    // Local polish: a box stencil around the incumbent that shrinks only
    // when it stops improving, so progress along the active entropy
    // constraint is not cut short.
    let mut width = step;
    let mut rounds = 0;
    while width > 1e-12 && rounds < 400 {
        rounds += 1;
        let offsets = [-width, -0.5 * width, 0.0, 0.5 * width, width];
        let mut candidates = vec![vec![]];
        for &coordinate in center.iter().take(d.saturating_sub(1)) {
            let mut next = Vec::new();
            for c in &candidates {
                for o in offsets {
                    let mut c = c.clone();
                    c.push((coordinate + o).clamp(0.0, 1.0));
                    next.push(c);
                }
            }
            candidates = next;
        }
        let before = best.as_ref().expect("incumbent exists").0;
        for mut c in candidates {
            let head: f64 = c.iter().sum();
            if head > 1.0 + 1e-12 {
                continue;
            }
            c.push((1.0 - head).max(0.0));
            if let Some(slid) = onto_boundary(&c) {
                if let Some(cand) = evaluate(slid) {
                    merge(&mut best, cand);
                }
            }
            if let Some(cand) = evaluate(c) {
                merge(&mut best, cand);
            }
        }
        let (after, incumbent) = best.as_ref().expect("incumbent exists");
        center = incumbent.clone();
        if before - after < 1e-14 {
            width *= 0.5;
        }
    }

    let (value, _) = best.expect("incumbent exists");
    Ok(PrimalExponent {
        value: value.max(0.0),
        resolution: step,
    })
}

fn grid_scan(
    q: &mut Vec<f64>,
    at: usize,
    remaining: f64,
    step: f64,
    consider: &mut impl FnMut(Vec<f64>),
) {
    let d = q.len();
    if at == d - 1 {
        q[d - 1] = remaining.max(0.0);
        if d == 1 || q[d - 1] <= q[d - 2] + 1e-12 {
            consider(q.clone());
        }
        return;
    }
    // Ordered: q[at] at least the equal share of what is left, at most the
    // previous coordinate.
    let lo = remaining / (d - at) as f64;
    let hi = if at == 0 { 1.0 } else { q[at - 1].min(remaining) };
    let mut v = (lo / step).floor() * step;
    while v <= hi + 1e-12 {
        if v >= lo - step {
            q[at] = v.min(hi);
            grid_scan(q, at + 1, (remaining - q[at]).max(0.0), step, consider);
        }
        v += step;
    }
}

/// Random-coding exponent `sup_{1 <= s <= 2} (1-s)R - psi(s)`, in bits.
pub fn bh_exponent(r_bits: f64, p: &Spectrum) -> Result<f64> {
    let h = shannon_entropy(p);
    if r_bits > h + 1e-9 {
        return Err(Error::input(format!(
            "random-coding exponent needs R <= H(p) = {h}, got {r_bits}"
        )));
    }
    let r = r_bits * LN_2;
    let objective = |s: f64| (1.0 - s) * r - psi(s, p).expect("s > 0");
    Ok((maximize_grid_then_golden(&objective, 1.0, 2.0, 256) / LN_2).max(0.0))
}

/// A sampled exponent curve with its provenance.
#[derive(Clone, Debug, Serialize)]
pub struct RateCurve {
    pub spectrum: Vec<f64>,
    pub method: String,
    /// `(R, exponent)` pairs, `R` strictly increasing, both in bits.
    pub points: Vec<(f64, f64)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExponentMethod {
    Parametric,
    Primal,
    RandomCoding,
}

/// Samples one exponent method over a rate grid, choosing the applicable
/// side per point and skipping rates where the method is undefined.
pub fn rate_curve(
    p: &Spectrum,
    r_min: f64,
    r_max: f64,
    steps: usize,
    method: ExponentMethod,
) -> Result<RateCurve> {
    if steps == 0 || r_min >= r_max {
        return Err(Error::input("rate grid needs r_min < r_max and steps >= 1"));
    }
    let h = shannon_entropy(p);
    let mut points = Vec::new();
    for k in 0..=steps {
        let r = r_min + (r_max - r_min) * k as f64 / steps as f64;
        let side = if r <= h { Side::Low } else { Side::High };
        let value = match method {
            ExponentMethod::Parametric => exponent_parametric(r, p, side).ok(),
            ExponentMethod::Primal => exponent_primal(r, p, side).ok().map(|e| e.value),
            ExponentMethod::RandomCoding => bh_exponent(r, p).ok(),
        };
        if let Some(v) = value {
            points.push((r, v));
        }
    }
    Ok(RateCurve {
        spectrum: p.probs().to_vec(),
        method: match method {
            ExponentMethod::Parametric => "parametric",
            ExponentMethod::Primal => "primal",
            ExponentMethod::RandomCoding => "random-coding",
        }
        .to_string(),
        points,
    })
}
