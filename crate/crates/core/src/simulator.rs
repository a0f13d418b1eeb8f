//! Monte Carlo estimation of logical failure rates under i.i.d. Pauli noise.
//!
//! Each shot draws its randomness from a counter-based stream keyed by
//! (seed, shot index), so results are identical under any execution order or
//! thread count; aggregation is a commutative sum.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::builder::StabilizerCode;
use crate::decoder::{extract_syndrome, DecodeOutcome, Decoder, GroupedDecoder, noerror_gain, naive_table_size};
use crate::pauli::{PauliKind, PauliOperator};
use crate::verifier::{Classification, Classifier};
use crate::{Error, Result};

/// Per-qubit X/Y/Z probabilities, i.i.d. across qubits.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NoiseModel {
    pub px: f64,
    pub py: f64,
    pub pz: f64,
}

impl NoiseModel {
    pub fn new(px: f64, py: f64, pz: f64) -> Result<Self> {
        if px < 0.0 || py < 0.0 || pz < 0.0 || px + py + pz > 1.0 {
            return Err(Error::InvalidParameter(format!(
                "Pauli probabilities ({px}, {py}, {pz}) must be nonnegative and sum to at most 1"
            )));
        }
        Ok(NoiseModel { px, py, pz })
    }

    pub fn depolarizing(p: f64) -> Result<Self> {
        NoiseModel::new(p / 3.0, p / 3.0, p / 3.0)
    }

    pub fn total(&self) -> f64 {
        self.px + self.py + self.pz
    }
}

/// Counter-based per-shot stream: one ChaCha8 cipher keyed by the seed, with
/// the shot index as the stream counter.
pub fn shot_rng(seed: u64, shot: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(shot);
    rng
}

/// Each qubit independently receives I, X, Y, or Z with the model's
/// probabilities.
pub fn sample_error<R: Rng>(model: &NoiseModel, n: usize, rng: &mut R) -> PauliOperator {
    let mut factors = Vec::new();
    for q in 0..n {
        let u: f64 = rng.random();
        let kind = if u < model.px {
            PauliKind::X
        } else if u < model.px + model.py {
            PauliKind::Y
        } else if u < model.px + model.py + model.pz {
            PauliKind::Z
        } else {
            PauliKind::I
        };
        if kind != PauliKind::I {
            factors.push((q, kind));
        }
    }
    PauliOperator::from_factors(n, &factors).expect("indices in range")
}

/// The error injected at a given shot of a run, reproducible in isolation.
pub fn shot_error(model: &NoiseModel, n: usize, seed: u64, shot: u64) -> PauliOperator {
    sample_error(model, n, &mut shot_rng(seed, shot))
}

#[derive(Clone, Debug, PartialEq)]
pub struct SimulationSummary {
    pub shots: u64,
    pub failures: u64,
    pub detections: u64,
    pub failure_rate: f64,
    pub wilson_interval_95: (f64, f64),
    pub seed: u64,
    pub code: String,
    pub decoder: String,
}

/// Wilson 95% score interval for `successes` out of `trials`.
pub fn wilson_interval(successes: u64, trials: u64) -> (f64, f64) {
    if trials == 0 {
        return (0.0, 1.0);
    }
    let z = 1.959963984540054_f64;
    let n = trials as f64;
    let p = successes as f64 / n;
    let z2 = z * z;
    let denom = 1.0 + z2 / n;
    let center = (p + z2 / (2.0 * n)) / denom;
    let half = z / denom * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt();
    // at the boundaries center - half is exactly p up to rounding residue;
    // pin the bound so the interval always contains the observed rate
    let lo = if successes == 0 { 0.0 } else { (center - half).max(0.0) };
    let hi = if successes == trials { 1.0 } else { (center + half).min(1.0) };
    (lo, hi)
}

fn code_descriptor(code: &StabilizerCode) -> String {
    match &code.construction {
        Some(c) => format!("{}[[{},{},{}]]", c.tag(), code.n, code.k, code.claimed_distance),
        None => format!("[[{},{},{}]]", code.n, code.k, code.claimed_distance),
    }
}

/// Outcome of a single shot.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum ShotOutcome {
    Fine,
    Detection,
    Failure,
}

fn run_shot<D: Decoder>(
    code: &StabilizerCode,
    decoder: &D,
    classifier: &Classifier,
    model: &NoiseModel,
    seed: u64,
    shot: u64,
) -> Result<ShotOutcome> {
    let e = shot_error(model, code.n, seed, shot);
    let s = extract_syndrome(code, &e)?;
    let residual = match decoder.decode(&s)? {
        DecodeOutcome::NoError => e,
        DecodeOutcome::Correction(c) => e.product(&c)?,
        DecodeOutcome::DetectedUnrecoverable => return Ok(ShotOutcome::Detection),
    };
    let class = classifier.classify(&residual)?;
    Ok(match class.classification {
        Classification::Logical => ShotOutcome::Failure,
        _ => ShotOutcome::Fine,
    })
}

/// Runs `shots` independent shots and aggregates failures and detections.
///
/// Deterministic for fixed (code, decoder, model, shots, seed) under any
/// thread count: shots are keyed by index, and the counts are sums.
pub fn run_monte_carlo<D: Decoder + Sync>(
    code: &StabilizerCode,
    decoder: &D,
    model: &NoiseModel,
    shots: u64,
    seed: u64,
) -> Result<SimulationSummary> {
    if shots < 1 {
        return Err(Error::InvalidParameter("shots must be at least 1".into()));
    }
    let classifier = Classifier::new(code);
    let (failures, detections) = (0..shots)
        .into_par_iter()
        .map(|shot| run_shot(code, decoder, &classifier, model, seed, shot))
        .try_fold(
            || (0u64, 0u64),
            |acc, outcome| -> Result<(u64, u64)> {
                Ok(match outcome? {
                    ShotOutcome::Fine => acc,
                    ShotOutcome::Failure => (acc.0 + 1, acc.1),
                    ShotOutcome::Detection => (acc.0, acc.1 + 1),
                })
            },
        )
        .try_reduce(|| (0, 0), |a, b| Ok((a.0 + b.0, a.1 + b.1)))?;
    Ok(SimulationSummary {
        shots,
        failures,
        detections,
        failure_rate: failures as f64 / shots as f64,
        wilson_interval_95: wilson_interval(failures, shots),
        seed,
        code: code_descriptor(code),
        decoder: decoder.descriptor(),
    })
}

#[derive(Clone, Debug)]
pub struct GainRow {
    pub p: f64,
    pub c: u128,
    pub c_prime: u128,
    pub gain: f64,
}

/// Evaluates the no-error gain of the grouped rule set against the naive
/// 2^(n-k) table over a probability grid.
pub fn gain_scan(
    code: &StabilizerCode,
    decoder: &GroupedDecoder,
    p_grid: &[f64],
) -> Result<Vec<GainRow>> {
    let c = decoder.rule_count();
    let c_prime = naive_table_size(code).ok_or_else(|| {
        Error::Capacity(format!(
            "naive table size 2^{} does not fit in 128 bits",
            code.generator_count()
        ))
    })?;
    if c > c_prime {
        return Err(Error::InvalidParameter(format!(
            "grouped rule count {c} exceeds the naive table size {c_prime}"
        )));
    }
    p_grid
        .iter()
        .map(|&p| {
            Ok(GainRow { p, c, c_prime, gain: noerror_gain(c, c_prime, p)? })
        })
        .collect()
}
