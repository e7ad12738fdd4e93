//! Two-sided block measurement: project both local systems onto the same
//! Young-frame block and keep the surviving branch.
//!
//! Projectors are never materialized; `P_lambda` acts as the character-
//! weighted permutation sum `(dim V / n!) sum_sigma chi(sigma) pi(sigma)`
//! applied lazily to the amplitude vector.

use std::collections::HashMap;

use num_complex::Complex64;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::exact::character::sn_character;
use crate::exact::permutation::Permutation;
use crate::exact::state::{
    accumulate_side_table, permutation_index_table, PureBipartiteState, Side,
};
use crate::young::{dim_sn_irrep, enumerate_partitions, Partition};

/// Copy-count cap for the permutation-sum projectors (n! terms each).
pub const MEASURE_MAX_COPIES: usize = 6;

/// Outcomes below this probability are dropped from the outcome list.
pub const OUTCOME_PROBABILITY_FLOOR: f64 = 1e-14;

/// One surviving measurement branch.
#[derive(Clone, Debug)]
pub struct BlockOutcome {
    pub shape: Partition,
    pub probability: f64,
    /// Normalized post-measurement state, supported on the block pair.
    pub post_state: PureBipartiteState,
    /// Grouped squared Schmidt coefficients of the post-measurement state.
    pub block_spectrum: Vec<(f64, usize)>,
}

struct ProjectorContext {
    tables: Vec<Vec<usize>>,
    /// Character weight per group element and diagram: chi[lambda_index][sigma_index].
    weights: Vec<Vec<f64>>,
    shapes: Vec<Partition>,
    group_order: f64,
}

fn projector_context(n: usize, d: usize) -> Result<ProjectorContext> {
    let shapes = enumerate_partitions(n, d)?;
    let perms = Permutation::all(n);
    let tables: Vec<Vec<usize>> = perms
        .iter()
        .map(|sigma| permutation_index_table(sigma, n, d))
        .collect();

    // Characters depend only on the cycle type; evaluate each class once.
    let mut class_cache: HashMap<(usize, Partition), f64> = HashMap::new();
    let mut weights = vec![Vec::with_capacity(perms.len()); shapes.len()];
    for sigma in &perms {
        let class = sigma.cycle_type();
        for (li, lambda) in shapes.iter().enumerate() {
            let chi = match class_cache.get(&(li, class.clone())) {
                Some(&c) => c,
                None => {
                    let c = sn_character(lambda, &class)? as f64;
                    class_cache.insert((li, class.clone()), c);
                    c
                }
            };
            weights[li].push(chi);
        }
    }
    let group_order = (1..=n).map(|k| k as f64).product::<f64>();
    Ok(ProjectorContext {
        tables,
        weights,
        shapes,
        group_order,
    })
}

fn apply_block_projector(
    ctx: &ProjectorContext,
    lambda_index: usize,
    side: Side,
    state: &PureBipartiteState,
    dim_v: f64,
) -> PureBipartiteState {
    let mut acc = vec![Complex64::ZERO; state.amplitudes().len()];
    let scale = dim_v / ctx.group_order;
    for (table, &chi) in ctx.tables.iter().zip(&ctx.weights[lambda_index]) {
        if chi == 0.0 {
            continue;
        }
        accumulate_side_table(&mut acc, scale * chi, table, side, state);
    }
    PureBipartiteState::from_amplitudes(state.copies(), state.local_dim(), acc)
        .expect("projector preserves shape")
}

fn check_guard(state: &PureBipartiteState) -> Result<()> {
    if state.copies() > MEASURE_MAX_COPIES {
        return Err(Error::guard(format!(
            "block measurement supports n <= {MEASURE_MAX_COPIES}, got {}",
            state.copies()
        )));
    }
    if state.copies() == 0 {
        return Err(Error::input("need at least one copy"));
    }
    Ok(())
}

/// Measures the Young-frame blocks on both sides and returns every branch
/// with probability above [`OUTCOME_PROBABILITY_FLOOR`], in canonical
/// diagram order.
pub fn measure_blocks(state: &PureBipartiteState) -> Result<Vec<BlockOutcome>> {
    check_guard(state)?;
    let ctx = projector_context(state.copies(), state.local_dim())?;
    let mut outcomes = Vec::new();
    for (li, shape) in ctx.shapes.iter().enumerate() {
        let dim_v = dim_sn_irrep(shape, shape.len())?
            .to_f64()
            .expect("desk-scale dimension");
        let projected_a = apply_block_projector(&ctx, li, Side::A, state, dim_v);
        let projected = apply_block_projector(&ctx, li, Side::B, &projected_a, dim_v);
        let probability = projected.norm_squared();
        if probability <= OUTCOME_PROBABILITY_FLOOR {
            continue;
        }
        let post_state = projected.normalized()?;
        let block_spectrum = post_state.schmidt_spectrum();
        outcomes.push(BlockOutcome {
            shape: shape.clone(),
            probability,
            post_state,
            block_spectrum,
        });
    }
    Ok(outcomes)
}

/// Probabilities only (no post-states, no spectra): the cheap path for
/// closed-form comparisons. Returns `(per-shape probability, mismatch)`
/// where `mismatch` is the probability that the two sides disagree,
/// computed as the mass missing from the agreeing branches.
pub fn block_probabilities(state: &PureBipartiteState) -> Result<(Vec<(Partition, f64)>, f64)> {
    check_guard(state)?;
    let norm = state.norm_squared();
    let ctx = projector_context(state.copies(), state.local_dim())?;
    let mut probs = Vec::new();
    for (li, shape) in ctx.shapes.iter().enumerate() {
        let dim_v = dim_sn_irrep(shape, shape.len())?
            .to_f64()
            .expect("desk-scale dimension");
        let projected_a = apply_block_projector(&ctx, li, Side::A, state, dim_v);
        let projected = apply_block_projector(&ctx, li, Side::B, &projected_a, dim_v);
        probs.push((shape.clone(), projected.norm_squared()));
    }
    let total: f64 = probs.iter().map(|(_, p)| p).sum();
    Ok((probs, (norm - total).max(0.0)))
}

/// Applies the single-block projector for `shape` on one side, returning
/// the (unnormalized) projected state.
pub fn project_block(
    state: &PureBipartiteState,
    shape: &Partition,
    side: Side,
) -> Result<PureBipartiteState> {
    check_guard(state)?;
    let ctx = projector_context(state.copies(), state.local_dim())?;
    let li = ctx
        .shapes
        .iter()
        .position(|s| s == shape)
        .ok_or_else(|| Error::input(format!("{shape} is not an outcome label here")))?;
    let dim_v = dim_sn_irrep(shape, shape.len())?.to_f64().expect("small");
    Ok(apply_block_projector(&ctx, li, side, state, dim_v))
}

/// Norm-squared of `(P_lambda x P_mu) |state>`: the cross-block mass, which
/// vanishes for inputs whose two sides are copies of the same state.
pub fn cross_block_probability(
    state: &PureBipartiteState,
    lambda: &Partition,
    mu: &Partition,
) -> Result<f64> {
    check_guard(state)?;
    let ctx = projector_context(state.copies(), state.local_dim())?;
    let find = |shape: &Partition| {
        ctx.shapes
            .iter()
            .position(|s| s == shape)
            .ok_or_else(|| Error::input(format!("{shape} is not an outcome label here")))
    };
    let li = find(lambda)?;
    let mi = find(mu)?;
    let dim_l = dim_sn_irrep(lambda, lambda.len())?.to_f64().expect("small");
    let dim_m = dim_sn_irrep(mu, mu.len())?.to_f64().expect("small");
    let projected_a = apply_block_projector(&ctx, li, Side::A, state, dim_l);
    let projected = apply_block_projector(&ctx, mi, Side::B, &projected_a, dim_m);
    Ok(projected.norm_squared())
}
