use crate::error::{Error, Result};
use crate::young::Spectrum;

/// Shannon entropy in bits, with `0 log 0 = 0`.
pub fn shannon_entropy(q: &Spectrum) -> f64 {
    -q.support_probs().iter().map(|&x| x * x.log2()).sum::<f64>()
}

/// Relative entropy `D(q || p)` in bits; `+inf` when `q` puts mass outside
/// the support of `p`.
pub fn relative_entropy(q: &Spectrum, p: &Spectrum) -> f64 {
    let dim = q.dim().max(p.dim());
    let at = |s: &Spectrum, i: usize| s.probs().get(i).copied().unwrap_or(0.0);
    let mut acc = 0.0;
    for i in 0..dim {
        let qi = at(q, i);
        if qi == 0.0 {
            continue;
        }
        let pi = at(p, i);
        if pi == 0.0 {
            return f64::INFINITY;
        }
        acc += qi * (qi / pi).log2();
    }
    acc.max(0.0)
}

/// The potential `psi(s) = ln sum_i p_i^s`, in nats. Requires `s > 0`.
pub fn psi(s: f64, p: &Spectrum) -> Result<f64> {
    if !s.is_finite() || s <= 0.0 {
        return Err(Error::input(format!("psi requires finite s > 0, got {s}")));
    }
    Ok(p.support_probs()
        .iter()
        .map(|&x| x.powf(s))
        .sum::<f64>()
        .ln())
}
