//! Command bodies: each returns the rendered output text and exit code.

use num_traits::ToPrimitive;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;
use serde_json::{json, Value};

use crate::cli::output::{
    csv_partition, fmt_sig, json_big, json_f64, json_partition, json_spectrum, render_csv,
    render_json,
};
use crate::cli::{CheckCommand, Command, CommandOutput, Format, OutputArgs, SideArg, SpectrumArgs};
use crate::error::{Error, Result};
use crate::exact::{build_input_state, concentrate, measure_blocks};
use crate::proto::teleport::haar_random_state;
use crate::proto::{
    capacity, concentration_yield, dense_coding_error_rate, simulate_dense_coding,
    simulate_teleportation, teleport_resources, teleportation_branches, WeylOperatorSet,
};
use crate::rates::{
    bh_exponent, dim_entropy_bound_check, exponent_parametric, exponent_primal, shannon_entropy,
    tail_probability_log2, Side,
};
use crate::util::compensated_sum;
use crate::young::{
    dim_sn_irrep, dim_su_irrep, distribution, enumerate_partitions, sample_shape,
    schur_weyl_prob, Partition, Spectrum,
};

/// CLI spectra may be off from one by up to this before being rejected.
const CLI_SPECTRUM_TOL: f64 = 1e-9;

/// Shot count per sampling shard; shard `k` draws from seed + k.
const SAMPLE_SHARD: u64 = 65_536;

fn parse_spectrum(args: &SpectrumArgs) -> Result<Spectrum> {
    let probs: Vec<f64> = args
        .spectrum
        .split(',')
        .map(|tok| {
            tok.trim()
                .parse::<f64>()
                .map_err(|_| Error::input(format!("cannot parse spectrum entry {tok:?}")))
        })
        .collect::<Result<_>>()?;
    if args.normalize {
        Spectrum::normalized(probs)
    } else {
        Spectrum::with_sum_tol(probs, CLI_SPECTRUM_TOL)
    }
}

fn finish(value: Value, rows: (Vec<&str>, Vec<Vec<String>>), args: &OutputArgs, exit: i32) -> CommandOutput {
    let default = Format::Json;
    let text = match args.format.unwrap_or(default) {
        Format::Json => render_json(&value),
        Format::Csv => render_csv(&rows.0, &rows.1),
    };
    CommandOutput {
        text,
        exit,
        out_path: args.out.clone(),
    }
}

fn finish_csv_default(
    value: Value,
    rows: (Vec<&str>, Vec<Vec<String>>),
    args: &OutputArgs,
    exit: i32,
) -> CommandOutput {
    let text = match args.format.unwrap_or(Format::Csv) {
        Format::Json => render_json(&value),
        Format::Csv => render_csv(&rows.0, &rows.1),
    };
    CommandOutput {
        text,
        exit,
        out_path: args.out.clone(),
    }
}

pub fn dispatch(command: Command) -> Result<CommandOutput> {
    match command {
        Command::Dist { spectrum, n, output } => cmd_dist(&spectrum, n, &output),
        Command::Simulate {
            spectrum,
            n,
            certify_bell,
            output,
        } => cmd_simulate(&spectrum, n, certify_bell, &output),
        Command::Sample {
            spectrum,
            n,
            shots,
            seed,
            output,
        } => cmd_sample(&spectrum, n, shots, seed, &output),
        Command::Exponent {
            spectrum,
            rate_min,
            rate_max,
            steps,
            n,
            output,
        } => cmd_exponent(&spectrum, rate_min, rate_max, steps, n, &output),
        Command::Tail {
            spectrum,
            n,
            side,
            rate_min,
            rate_max,
            steps,
            output,
        } => cmd_tail(&spectrum, n, side, rate_min, rate_max, steps, &output),
        Command::Check { which } => cmd_check(which),
        Command::Yield { spectrum, n, output } => cmd_yield(&spectrum, n, &output),
        Command::Teleport {
            bell_size,
            seed,
            output,
        } => cmd_teleport(bell_size, seed, &output),
        Command::Densecode {
            bell_size,
            seed,
            output,
        } => cmd_densecode(bell_size, seed, &output),
    }
}

fn cmd_dist(spectrum: &SpectrumArgs, n: usize, output: &OutputArgs) -> Result<CommandOutput> {
    let p = parse_spectrum(spectrum)?;
    let dist = distribution(n, p.dim(), &p)?;
    let outcomes: Vec<Value> = dist
        .entries
        .iter()
        .map(|e| {
            json!({
                "partition": json_partition(&e.partition),
                "dim_v": json_big(&e.dim_v),
                "dim_u": json_big(&e.dim_u),
                "probability": json_f64(e.probability),
                "ebits": json_f64(e.ebits),
            })
        })
        .collect();
    let value = json!({
        "schema": "schurcon.dist.v1",
        "n": n,
        "d": dist.d,
        "spectrum": json_spectrum(p.probs()),
        "outcomes": outcomes,
    });
    let rows = dist
        .entries
        .iter()
        .map(|e| {
            vec![
                csv_partition(&e.partition),
                e.dim_v.to_string(),
                e.dim_u.to_string(),
                fmt_sig(e.probability),
                fmt_sig(e.ebits),
            ]
        })
        .collect();
    Ok(finish(
        value,
        (vec!["partition", "dim_v", "dim_u", "probability", "ebits"], rows),
        output,
        0,
    ))
}

fn cmd_simulate(
    spectrum: &SpectrumArgs,
    n: usize,
    certify_bell: bool,
    output: &OutputArgs,
) -> Result<CommandOutput> {
    let p = parse_spectrum(spectrum)?;
    if certify_bell && p.dim() != 2 {
        return Err(Error::UnsupportedDimension(format!(
            "--certify-bell needs a two-level spectrum, got {} levels",
            p.dim()
        )));
    }
    let state = build_input_state(&p, n)?;
    let outcomes = measure_blocks(&state)?;
    let total: f64 = compensated_sum(outcomes.iter().map(|o| o.probability));
    let mismatch = (1.0 - total).max(0.0);

    let certification = if certify_bell {
        Some(concentrate(&state)?)
    } else {
        None
    };

    let mut json_outcomes = Vec::new();
    let mut rows = Vec::new();
    for outcome in &outcomes {
        let closed = schur_weyl_prob(&outcome.shape, &p);
        let delta = (outcome.probability - closed).abs();
        let dim_v = dim_sn_irrep(&outcome.shape, outcome.shape.len())?;
        let ebits = dim_v.to_f64().map(|v| v.log2()).unwrap_or(f64::NAN);
        let cert = certification
            .as_ref()
            .and_then(|c| c.iter().find(|o| o.shape == outcome.shape));
        let schmidt: Vec<Value> = outcome
            .block_spectrum
            .iter()
            .map(|&(v, m)| json!({"value": json_f64(v), "multiplicity": m}))
            .collect();
        json_outcomes.push(json!({
            "partition": json_partition(&outcome.shape),
            "probability": json_f64(outcome.probability),
            "closed_form": json_f64(closed),
            "delta": json_f64(delta),
            "ebits": json_f64(ebits),
            "schmidt_spectrum": schmidt,
            "bell_size": cert.map(|c| Value::from(c.bell_size)).unwrap_or(Value::Null),
            "fidelity": cert.map(|c| json_f64(c.fidelity)).unwrap_or(Value::Null),
        }));
        let schmidt_cell = outcome
            .block_spectrum
            .iter()
            .map(|&(v, m)| format!("{}x{}", fmt_sig(v), m))
            .collect::<Vec<_>>()
            .join(";");
        rows.push(vec![
            csv_partition(&outcome.shape),
            fmt_sig(outcome.probability),
            fmt_sig(closed),
            fmt_sig(delta),
            fmt_sig(ebits),
            schmidt_cell,
            cert.map(|c| c.bell_size.to_string()).unwrap_or_default(),
            cert.map(|c| fmt_sig(c.fidelity)).unwrap_or_default(),
        ]);
    }

    let certified = certification
        .as_ref()
        .map(|c| c.iter().all(|o| o.fidelity >= 1.0 - 1e-10));
    let value = json!({
        "schema": "schurcon.simulate.v1",
        "n": n,
        "d": p.dim(),
        "spectrum": json_spectrum(p.probs()),
        "mismatch_probability": json_f64(mismatch),
        "certified": certified.map(Value::from).unwrap_or(Value::Null),
        "outcomes": json_outcomes,
    });
    Ok(finish(
        value,
        (
            vec![
                "partition",
                "probability",
                "closed_form",
                "delta",
                "ebits",
                "schmidt_spectrum",
                "bell_size",
                "fidelity",
            ],
            rows,
        ),
        output,
        0,
    ))
}

fn cmd_sample(
    spectrum: &SpectrumArgs,
    n: usize,
    shots: u64,
    seed: u64,
    output: &OutputArgs,
) -> Result<CommandOutput> {
    let p = parse_spectrum(spectrum)?;
    if shots == 0 {
        return Err(Error::input("need at least one shot"));
    }
    let dist = distribution(n, p.dim(), &p)?;

    // Deterministic sharding: shard k draws its shots from seed + k.
    let mut counts: std::collections::HashMap<Partition, u64> = std::collections::HashMap::new();
    let mut remaining = shots;
    let mut shard = 0u64;
    while remaining > 0 {
        let batch = remaining.min(SAMPLE_SHARD);
        let mut rng = ChaCha12Rng::seed_from_u64(seed.wrapping_add(shard));
        for _ in 0..batch {
            let shape = sample_shape(&p, n, &mut rng)?;
            *counts.entry(shape).or_insert(0) += 1;
        }
        remaining -= batch;
        shard += 1;
    }

    // Chi-square against the closed form, pooling cells whose expected count
    // is below 5 into one bucket.
    let mut stat = 0.0;
    let mut used_cells = 0usize;
    let mut pooled_expected = 0.0;
    let mut pooled_observed = 0.0;
    for entry in &dist.entries {
        let expected = entry.probability * shots as f64;
        let observed = counts.get(&entry.partition).copied().unwrap_or(0) as f64;
        if expected < 5.0 {
            pooled_expected += expected;
            pooled_observed += observed;
        } else {
            stat += (observed - expected).powi(2) / expected;
            used_cells += 1;
        }
    }
    if pooled_expected > 0.0 {
        stat += (pooled_observed - pooled_expected).powi(2) / pooled_expected;
        used_cells += 1;
    }
    let dof = used_cells.saturating_sub(1);
    let p_value = if dof == 0 {
        1.0
    } else {
        use statrs::distribution::{ChiSquared, ContinuousCDF};
        1.0 - ChiSquared::new(dof as f64).expect("dof >= 1").cdf(stat)
    };

    // Observed shapes in canonical (descending lexicographic) order.
    let mut observed: Vec<(&Partition, u64)> = counts.iter().map(|(k, &v)| (k, v)).collect();
    observed.sort_by(|a, b| b.0.cmp(a.0));

    let shapes: Vec<Value> = observed
        .iter()
        .map(|(shape, count)| {
            let closed = dist
                .entry(shape)
                .map(|e| e.probability)
                .unwrap_or_default();
            json!({
                "partition": json_partition(shape),
                "count": count,
                "frequency": json_f64(*count as f64 / shots as f64),
                "probability": json_f64(closed),
            })
        })
        .collect();
    let rows = observed
        .iter()
        .map(|(shape, count)| {
            let closed = dist
                .entry(shape)
                .map(|e| e.probability)
                .unwrap_or_default();
            vec![
                csv_partition(shape),
                count.to_string(),
                fmt_sig(*count as f64 / shots as f64),
                fmt_sig(closed),
            ]
        })
        .collect();

    let value = json!({
        "schema": "schurcon.sample.v1",
        "n": n,
        "d": p.dim(),
        "spectrum": json_spectrum(p.probs()),
        "shots": shots,
        "seed": seed,
        "shapes": shapes,
        "chi_square": {
            "statistic": json_f64(stat),
            "dof": dof,
            "p_value": json_f64(p_value),
        },
    });
    Ok(finish(
        value,
        (vec!["partition", "count", "frequency", "probability"], rows),
        output,
        0,
    ))
}

fn cmd_exponent(
    spectrum: &SpectrumArgs,
    rate_min: Option<f64>,
    rate_max: Option<f64>,
    steps: usize,
    tail_n: Option<usize>,
    output: &OutputArgs,
) -> Result<CommandOutput> {
    let p = parse_spectrum(spectrum)?;
    let log_d = (p.dim() as f64).log2();
    let r_min = rate_min.unwrap_or(0.0);
    let r_max = rate_max.unwrap_or(log_d);
    if !(0.0..=log_d + 1e-12).contains(&r_min) || !(0.0..=log_d + 1e-12).contains(&r_max) {
        return Err(Error::input(format!(
            "rate grid [{r_min}, {r_max}] outside [0, {log_d}]"
        )));
    }
    if steps == 0 || r_min > r_max {
        return Err(Error::input("rate grid needs rate_min <= rate_max and steps >= 1"));
    }
    let h = shannon_entropy(&p);

    let mut points = Vec::new();
    let mut rows = Vec::new();
    for k in 0..=steps {
        let r = r_min + (r_max - r_min) * k as f64 / steps as f64;
        let side = if r <= h { Side::Low } else { Side::High };
        let parametric = exponent_parametric(r, &p, side).ok();
        let primal = exponent_primal(r, &p, side).ok().map(|e| e.value);
        let bh = bh_exponent(r, &p).ok();
        let tail = tail_n.and_then(|n| {
            tail_probability_log2(n, p.dim(), &p, r, side)
                .ok()
                .map(|l| -l / n as f64)
        });
        let opt = |x: Option<f64>| x.map(json_f64).unwrap_or(Value::Null);
        points.push(json!({
            "r": json_f64(r),
            "parametric": opt(parametric),
            "primal": opt(primal),
            "bh": opt(bh),
            "tail_estimate": opt(tail),
        }));
        let cell = |x: Option<f64>| x.map(fmt_sig).unwrap_or_default();
        rows.push(vec![
            fmt_sig(r),
            cell(parametric),
            cell(primal),
            cell(bh),
            cell(tail),
        ]);
    }

    let value = json!({
        "schema": "schurcon.exponent.v1",
        "spectrum": json_spectrum(p.probs()),
        "entropy": json_f64(h),
        "tail_n": tail_n.map(Value::from).unwrap_or(Value::Null),
        "points": points,
    });
    Ok(finish_csv_default(
        value,
        (vec!["R", "parametric", "primal", "bh", "tail_estimate"], rows),
        output,
        0,
    ))
}

#[allow(clippy::too_many_arguments)]
fn cmd_tail(
    spectrum: &SpectrumArgs,
    n: usize,
    side: SideArg,
    rate_min: Option<f64>,
    rate_max: Option<f64>,
    steps: usize,
    output: &OutputArgs,
) -> Result<CommandOutput> {
    let p = parse_spectrum(spectrum)?;
    let log_d = (p.dim() as f64).log2();
    let r_min = rate_min.unwrap_or(0.0);
    let r_max = rate_max.unwrap_or(log_d);
    if steps == 0 || r_min > r_max {
        return Err(Error::input("rate grid needs rate_min <= rate_max and steps >= 1"));
    }
    let side = match side {
        SideArg::Low => Side::Low,
        SideArg::High => Side::High,
    };
    let side_name = match side {
        Side::Low => "low",
        Side::High => "high",
    };

    let mut points = Vec::new();
    let mut rows = Vec::new();
    for k in 0..=steps {
        let r = r_min + (r_max - r_min) * k as f64 / steps as f64;
        let log2_tail = tail_probability_log2(n, p.dim(), &p, r, side)?;
        let estimate = -log2_tail / n as f64;
        points.push(json!({
            "r": json_f64(r),
            "side": side_name,
            "tail_probability": json_f64(log2_tail.exp2()),
            "log2_tail": json_f64(log2_tail),
            "exponent_estimate": json_f64(estimate),
        }));
        rows.push(vec![
            fmt_sig(r),
            side_name.to_string(),
            fmt_sig(log2_tail.exp2()),
            fmt_sig(log2_tail),
            fmt_sig(estimate),
        ]);
    }

    let value = json!({
        "schema": "schurcon.tail.v1",
        "n": n,
        "d": p.dim(),
        "spectrum": json_spectrum(p.probs()),
        "points": points,
    });
    Ok(finish_csv_default(
        value,
        (
            vec!["R", "side", "tail_probability", "log2_tail", "exponent_estimate"],
            rows,
        ),
        output,
        0,
    ))
}

fn cmd_check(which: CheckCommand) -> Result<CommandOutput> {
    match which {
        CheckCommand::Dims { d, n_max, output } => {
            if d == 0 {
                return Err(Error::input("d must be at least 1"));
            }
            if n_max > 30 || d > 6 {
                return Err(Error::guard(format!(
                    "dimension identity check supports n_max <= 30, d <= 6; got n_max = {n_max}, d = {d}"
                )));
            }
            let mut failures = Vec::new();
            for n in 0..=n_max {
                let mut sum = num_bigint::BigUint::ZERO;
                for lambda in enumerate_partitions(n, d)? {
                    sum += dim_sn_irrep(&lambda, d)? * dim_su_irrep(&lambda, d)?;
                }
                let expect = num_bigint::BigUint::from(d).pow(n as u32);
                if sum != expect {
                    failures.push((n, sum.to_string(), expect.to_string()));
                }
            }
            let passed = failures.is_empty();
            let value = json!({
                "schema": "schurcon.check.v1",
                "check": "dims",
                "d": d,
                "n_max": n_max,
                "passed": passed,
                "failures": failures
                    .iter()
                    .map(|(n, got, want)| json!({"n": n, "sum": got, "expected": want}))
                    .collect::<Vec<_>>(),
            });
            let rows = vec![vec![
                "dims".to_string(),
                d.to_string(),
                n_max.to_string(),
                passed.to_string(),
            ]];
            Ok(finish(
                value,
                (vec!["check", "d", "n_max", "passed"], rows),
                &output,
                if passed { 0 } else { 1 },
            ))
        }
        CheckCommand::Lemma3 { d, n_max, output } => {
            let report = dim_entropy_bound_check(n_max, d)?;
            let worst = report.worst_case.as_ref();
            let value = json!({
                "schema": "schurcon.check.v1",
                "check": "lemma3",
                "d": d,
                "n_max": n_max,
                "passed": report.holds,
                "coefficient_stated": json_f64(report.coeff_stated),
                "coefficient_derived": json_f64(report.coeff_derived),
                "coefficient_used": json_f64(report.coeff_used),
                "constant": json_f64(report.constant),
                "worst_slack": json_f64(report.worst_slack),
                "worst_case": worst.map(|w| json!({
                    "n": w.n,
                    "partition": json_partition(&w.partition),
                    "lhs": json_f64(w.lhs),
                    "bound": json_f64(w.bound),
                })).unwrap_or(Value::Null),
            });
            let rows = vec![vec![
                "lemma3".to_string(),
                d.to_string(),
                n_max.to_string(),
                report.holds.to_string(),
                fmt_sig(report.worst_slack),
            ]];
            Ok(finish(
                value,
                (vec!["check", "d", "n_max", "passed", "worst_slack"], rows),
                &output,
                if report.holds { 0 } else { 1 },
            ))
        }
        CheckCommand::Completeness {
            spectrum,
            n_max,
            output,
        } => {
            let p = parse_spectrum(&spectrum)?;
            let mut worst: f64 = 0.0;
            let mut failures = Vec::new();
            for n in 0..=n_max {
                let dist = distribution(n, p.dim(), &p)?;
                let gap = (dist.total_probability() - 1.0).abs();
                worst = worst.max(gap);
                if gap > 1e-9 {
                    failures.push((n, gap));
                }
            }
            let passed = failures.is_empty();
            let value = json!({
                "schema": "schurcon.check.v1",
                "check": "completeness",
                "n_max": n_max,
                "spectrum": json_spectrum(p.probs()),
                "passed": passed,
                "worst_gap": json_f64(worst),
                "failures": failures
                    .iter()
                    .map(|(n, gap)| json!({"n": n, "gap": json_f64(*gap)}))
                    .collect::<Vec<_>>(),
            });
            let rows = vec![vec![
                "completeness".to_string(),
                p.dim().to_string(),
                n_max.to_string(),
                passed.to_string(),
                fmt_sig(worst),
            ]];
            Ok(finish(
                value,
                (vec!["check", "d", "n_max", "passed", "worst_gap"], rows),
                &output,
                if passed { 0 } else { 1 },
            ))
        }
    }
}

fn cmd_yield(spectrum: &SpectrumArgs, n: usize, output: &OutputArgs) -> Result<CommandOutput> {
    let p = parse_spectrum(spectrum)?;
    let y = concentration_yield(n, p.dim(), &p)?;
    let outcomes: Vec<Value> = y
        .outcomes
        .iter()
        .map(|o| {
            json!({
                "partition": json_partition(&o.shape),
                "probability": json_f64(o.probability),
                "ebits": json_f64(o.ebits),
            })
        })
        .collect();
    let value = json!({
        "schema": "schurcon.yield.v1",
        "n": y.n,
        "d": y.d,
        "spectrum": json_spectrum(p.probs()),
        "outcomes": outcomes,
        "mean_ebits_per_copy": json_f64(y.mean_ebits_per_copy),
        "capacity": json_f64(capacity(&p)),
    });
    let rows = y
        .outcomes
        .iter()
        .map(|o| {
            vec![
                csv_partition(&o.shape),
                fmt_sig(o.probability),
                fmt_sig(o.ebits),
            ]
        })
        .collect();
    Ok(finish(
        value,
        (vec!["partition", "probability", "ebits"], rows),
        output,
        0,
    ))
}

fn cmd_teleport(bell_size: usize, seed: u64, output: &OutputArgs) -> Result<CommandOutput> {
    let weyl = WeylOperatorSet::new(bell_size)?;
    let resources = teleport_resources(bell_size)?;
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let input = haar_random_state(bell_size, &mut rng);
    let branches = teleportation_branches(bell_size, &input, &weyl.bell_state())?;
    let run = simulate_teleportation(bell_size, &input, &mut rng)?;

    let branch_values: Vec<Value> = branches
        .iter()
        .map(|b| {
            json!({
                "symbols": [b.symbols.0, b.symbols.1],
                "probability": json_f64(b.probability),
                "fidelity": json_f64(b.fidelity),
            })
        })
        .collect();
    let value = json!({
        "schema": "schurcon.teleport.v1",
        "bell_size": bell_size,
        "seed": seed,
        "qubits": json_f64(resources.qubits),
        "classical_bits": json_f64(resources.classical_bits),
        "branches": branch_values,
        "sampled": {
            "symbols": [run.classical_symbols.0, run.classical_symbols.1],
            "fidelity": json_f64(run.fidelity),
        },
    });
    let rows = branches
        .iter()
        .map(|b| {
            vec![
                b.symbols.0.to_string(),
                b.symbols.1.to_string(),
                fmt_sig(b.probability),
                fmt_sig(b.fidelity),
            ]
        })
        .collect();
    Ok(finish(
        value,
        (vec!["shift", "phase", "probability", "fidelity"], rows),
        output,
        0,
    ))
}

fn cmd_densecode(bell_size: usize, seed: u64, output: &OutputArgs) -> Result<CommandOutput> {
    let weyl = WeylOperatorSet::new(bell_size)?;
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mut decodes = Vec::new();
    let mut correct = 0usize;
    for message in 0..bell_size * bell_size {
        let decoded = simulate_dense_coding(bell_size, message, &mut rng)?;
        if decoded == message {
            correct += 1;
        }
        decodes.push((message, decoded));
    }
    let error_rate = dense_coding_error_rate(bell_size, &weyl.bell_state())?;
    let effect_bits = (bell_size as f64).log2();

    let value = json!({
        "schema": "schurcon.densecode.v1",
        "bell_size": bell_size,
        "seed": seed,
        "message_count": bell_size * bell_size,
        "carrier_dim": bell_size,
        "effect_bits": json_f64(effect_bits),
        "decodes": decodes
            .iter()
            .map(|&(m, d)| json!({"message": m, "decoded": d, "correct": m == d}))
            .collect::<Vec<_>>(),
        "correct": correct,
        "error_rate": json_f64(error_rate),
    });
    let rows = decodes
        .iter()
        .map(|&(m, d)| vec![m.to_string(), d.to_string(), (m == d).to_string()])
        .collect();
    Ok(finish(
        value,
        (vec!["message", "decoded", "correct"], rows),
        output,
        0,
    ))
}
