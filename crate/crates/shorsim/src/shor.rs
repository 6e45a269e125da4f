// Copyright 2026 The shorsim Developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! The end-to-end factoring pipeline.
//!
//! A run wires together base selection, circuit assembly, exact
//! simulation, and continued-fraction post-processing. In exact mode
//! (the default) the control-register distribution is computed without
//! sampling noise and peaks are processed in descending probability;
//! with `shots` set, measured values are drawn from that distribution
//! with a seeded generator and processed in descending frequency.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::circuit::Convention;
use crate::contfrac::{extract_period, Extraction};
use crate::error::Error;
use crate::modexp::{gcd, order_bruteforce, MeSpec, MeVersion};
use crate::qpe::{run_qpe, AnalyticSpectrum};
use crate::statevec::{sample_counts, sample_distribution, StateVector};
use crate::Result;

/// `⌈log₂ n⌉` for `n ≥ 2`: the work-register width.
pub fn work_qubits_for(n: u64) -> usize {
    (64 - (n - 1).leading_zeros()) as usize
}

/// Configuration of one factoring run.
#[derive(Debug, Clone, Serialize)]
pub struct ShorConfig {
    /// The odd composite to factor.
    pub n: u64,
    /// Fixed base; chosen at random from the seed when absent.
    pub a: Option<u64>,
    /// Control-register override; defaults to `2·n_work + 1 + n_epsilon`.
    pub m: Option<usize>,
    /// Extra control qubits beyond the default.
    pub n_epsilon: u32,
    /// Modular-exponentiation operator construction.
    pub me_version: MeVersion,
    /// Sample count; absent runs in exact-distribution mode.
    pub shots: Option<usize>,
    pub seed: u64,
    /// Add 1 to the least significant bit of every measured index.
    pub error_inject: bool,
}

impl ShorConfig {
    pub fn new(n: u64) -> Self {
        ShorConfig {
            n,
            a: None,
            m: None,
            n_epsilon: 0,
            me_version: MeVersion::Concatenated,
            shots: None,
            seed: 0,
            error_inject: false,
        }
    }

    pub fn with_base(mut self, a: u64) -> Self {
        self.a = Some(a);
        self
    }

    pub fn with_control_qubits(mut self, m: usize) -> Self {
        self.m = Some(m);
        self
    }

    pub fn with_epsilon_qubits(mut self, n_epsilon: u32) -> Self {
        self.n_epsilon = n_epsilon;
        self
    }

    pub fn with_version(mut self, version: MeVersion) -> Self {
        self.me_version = version;
        self
    }

    pub fn with_shots(mut self, shots: usize) -> Self {
        self.shots = Some(shots);
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_error_injection(mut self) -> Self {
        self.error_inject = true;
        self
    }

    /// Effective control-register width.
    pub fn control_qubits(&self) -> usize {
        self.m
            .unwrap_or(2 * work_qubits_for(self.n) + 1 + self.n_epsilon as usize)
    }
}

/// Outcome of a base draw.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BaseChoice {
    /// Coprime base usable for period finding.
    Base(u64),
    /// The draw itself shared a factor with the modulus.
    ClassicalFactor { a: u64, factor: u64 },
}

/// Draws a uniform base from `[2, n−1]`. A draw sharing a factor with
/// `n` short-circuits to that factor. Identical seeds reproduce the
/// draw.
pub fn choose_base(n: u64, seed: u64) -> BaseChoice {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a = rng.gen_range(2..n);
    let g = gcd(a, n);
    if g != 1 {
        BaseChoice::ClassicalFactor { a, factor: g }
    } else {
        BaseChoice::Base(a)
    }
}

/// One histogram row.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct HistogramRow {
    pub index: u64,
    pub probability: f64,
    pub count: u64,
}

/// Histogram peaks above the dominance thresholds.
///
/// A peak is dominant when its probability reaches half of the maximum
/// peak; a sub-dominant peak sits within ±1 of a dominant one and
/// carries at least a tenth of the maximum.
#[derive(Debug, Clone, Serialize)]
pub struct PeakClassification {
    pub dominant: Vec<u64>,
    pub sub_dominant: Vec<u64>,
}

pub fn classify_peaks(probs: &[f64]) -> PeakClassification {
    let max = probs.iter().cloned().fold(0.0f64, f64::max);
    let dominant: Vec<u64> = probs
        .iter()
        .enumerate()
        .filter(|(_, &p)| p >= 0.5 * max && p > 0.0)
        .map(|(i, _)| i as u64)
        .collect();
    let sub_dominant: Vec<u64> = probs
        .iter()
        .enumerate()
        .filter(|(i, &p)| {
            let i = *i as u64;
            p >= 0.1 * max && !dominant.contains(&i) && dominant.iter().any(|&d| d.abs_diff(i) == 1)
        })
        .map(|(i, _)| i as u64)
        .collect();
    PeakClassification {
        dominant,
        sub_dominant,
    }
}

/// Result of a factoring run.
#[derive(Debug, Clone, Serialize)]
pub enum Outcome {
    /// The random base already shared a factor with the modulus.
    ClassicalFactor { a: u64, f1: u64, f2: u64 },
    /// Period extraction succeeded.
    Factors {
        f1: u64,
        f2: u64,
        period: u64,
        from_index: u64,
    },
    /// Every processed peak failed the period conditions.
    Failure { reason: String },
}

/// Full record of one run: histogram, ranked peaks, per-peak extraction
/// traces, and the outcome. Serializes to JSON.
#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub config: ShorConfig,
    pub base: u64,
    pub work_qubits: usize,
    pub control_qubits: usize,
    pub histogram: Vec<HistogramRow>,
    pub peaks: PeakClassification,
    /// Peaks in processing order (descending probability or frequency,
    /// ties by ascending index).
    pub processed: Vec<u64>,
    pub traces: Vec<Extraction>,
    pub outcome: Outcome,
    /// Number of peaks examined before the run resolved.
    pub attempts: usize,
}

impl RunReport {
    pub fn factors(&self) -> Option<(u64, u64)> {
        match &self.outcome {
            Outcome::Factors { f1, f2, .. } => Some((*f1, *f2)),
            Outcome::ClassicalFactor { f1, f2, .. } => Some((*f1, *f2)),
            Outcome::Failure { .. } => None,
        }
    }

    pub fn period(&self) -> Option<u64> {
        match &self.outcome {
            Outcome::Factors { period, .. } => Some(*period),
            _ => None,
        }
    }

    pub fn probabilities(&self) -> Vec<f64> {
        self.histogram.iter().map(|row| row.probability).collect()
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

fn perfect_power_root(n: u64) -> Option<u64> {
    for k in 2..64 {
        let root = (n as f64).powf(1.0 / k as f64).round() as u64;
        for c in root.saturating_sub(1)..=root + 1 {
            if c >= 2 && c.checked_pow(k) == Some(n) {
                return Some(c);
            }
        }
        if 1u64 << k > n {
            break;
        }
    }
    None
}

/// Classical screening applied before any simulation.
pub fn validate_modulus(n: u64) -> Result<()> {
    if n < 3 {
        return Err(Error::InvalidModulus(n, "smaller than 3"));
    }
    if n.is_multiple_of(2) {
        return Err(Error::InvalidModulus(n, "even"));
    }
    if is_prime(n) {
        return Err(Error::InvalidModulus(n, "prime"));
    }
    if perfect_power_root(n).is_some() {
        return Err(Error::InvalidModulus(n, "a prime power"));
    }
    Ok(())
}

/// Adds 1 to the least significant bit of a measured index, wrapping at
/// `2^m`.
pub fn inject_lsb_error(ell: u64, m: usize) -> u64 {
    (ell + 1) % (1u64 << m)
}

/// The controlled powers `U^{2^k}` for `k < m` in the configured
/// construction.
pub fn controlled_powers(a: u64, n: u64, m: usize, version: MeVersion) -> Result<Vec<MeSpec>> {
    (0..m)
        .map(|k| {
            let p = 1u64 << k;
            match version {
                MeVersion::Concatenated => MeSpec::concatenated(a, n, p),
                MeVersion::PerPowerCycles => MeSpec::per_power_cycles(a, n, p),
                MeVersion::Truncated => MeSpec::truncated_orbit_of_one(a, n, p),
            }
        })
        .collect()
}

/// The closed-form control distribution for base `a`: uniform weights
/// `1/√r` on the phases `s/r` with `r` from the classical order oracle.
/// Used to validate simulations.
pub fn theoretical_histogram(a: u64, n: u64, m: usize) -> Result<Vec<f64>> {
    let r = order_bruteforce(a, n)?;
    AnalyticSpectrum::uniform_period(r, 1 << m).distribution()
}

/// Runs the factoring pipeline.
pub fn run(config: &ShorConfig) -> Result<RunReport> {
    validate_modulus(config.n)?;
    let n_mod = config.n;

    let base = match config.a {
        Some(a) => {
            if a <= 1 || a >= n_mod {
                return Err(Error::InvalidBase {
                    a,
                    n: n_mod,
                    reason: "base must satisfy 1 < a < N",
                });
            }
            let g = gcd(a, n_mod);
            if g != 1 {
                return Err(Error::NotCoprime { a, n: n_mod, g });
            }
            a
        }
        None => match choose_base(n_mod, config.seed) {
            BaseChoice::Base(a) => a,
            BaseChoice::ClassicalFactor { a, factor } => {
                return Ok(RunReport {
                    config: config.clone(),
                    base: a,
                    work_qubits: work_qubits_for(n_mod),
                    control_qubits: config.control_qubits(),
                    histogram: Vec::new(),
                    peaks: PeakClassification {
                        dominant: Vec::new(),
                        sub_dominant: Vec::new(),
                    },
                    processed: Vec::new(),
                    traces: Vec::new(),
                    outcome: Outcome::ClassicalFactor {
                        a,
                        f1: factor,
                        f2: n_mod / factor,
                    },
                    attempts: 0,
                });
            }
        },
    };

    let n_work = work_qubits_for(n_mod);
    let m = config.control_qubits();
    // 2^(m + n) amplitudes; refuse configurations that cannot fit in
    // memory instead of aborting inside an allocation
    if m == 0 || m + n_work > 30 {
        return Err(Error::QubitOutOfRange {
            index: m,
            num_qubits: 30 - n_work.min(30),
        });
    }
    let powers = controlled_powers(base, n_mod, m, config.me_version)?;
    let work = StateVector::new_basis_state(n_work, 1)?;
    let probs = run_qpe(m, &work, &powers, Convention::Qiskit)?;
    debug_assert!((probs.iter().sum::<f64>() - 1.0).abs() < 1e-9);

    let counts = match config.shots {
        Some(shots) => sample_counts(
            &sample_distribution(&probs, shots, config.seed),
            probs.len(),
        ),
        None => vec![0u64; probs.len()],
    };

    // processing order: descending weight, ties by ascending index.
    // Probabilities are quantized so that analytically equal peaks
    // (identical up to rounding dust) tie deterministically.
    let weight = |i: usize| -> u64 {
        match config.shots {
            Some(_) => counts[i],
            None => (probs[i] / 1e-12).round() as u64,
        }
    };
    let mut order: Vec<usize> = (0..probs.len()).filter(|&i| weight(i) > 0).collect();
    order.sort_by(|&x, &y| weight(y).cmp(&weight(x)).then(x.cmp(&y)));

    // Walk the peaks in order. The outcome comes from the first success,
    // but every dominant peak is still extracted and traced; lesser
    // peaks stop mattering once a factor is in hand.
    let peaks = classify_peaks(&probs);
    let mut traces = Vec::new();
    let mut processed = Vec::new();
    let mut outcome = None;
    let mut attempts = 0usize;
    for &peak in &order {
        if outcome.is_some() && !peaks.dominant.contains(&(peak as u64)) {
            break;
        }
        let measured = if config.error_inject {
            inject_lsb_error(peak as u64, m)
        } else {
            peak as u64
        };
        processed.push(measured);
        let extraction = extract_period(measured, m as u32, base, n_mod)?;
        let found = extraction.period.zip(extraction.factors);
        traces.push(extraction);
        if outcome.is_none() {
            attempts += 1;
            if let Some((period, (f1, f2))) = found {
                outcome = Some(Outcome::Factors {
                    f1,
                    f2,
                    period,
                    from_index: measured,
                });
            }
        }
    }
    let outcome = outcome.unwrap_or(Outcome::Failure {
        reason: "every peak failed the period conditions; retry with a new base".into(),
    });

    Ok(RunReport {
        config: config.clone(),
        base,
        work_qubits: n_work,
        control_qubits: m,
        histogram: probs
            .iter()
            .enumerate()
            .map(|(i, &p)| HistogramRow {
                index: i as u64,
                probability: p,
                count: counts[i],
            })
            .collect(),
        peaks,
        processed,
        traces,
        outcome,
        attempts,
    })
}

/// Histogram CSV with columns `index,bitstring,probability,count`.
pub fn histogram_csv(rows: &[HistogramRow], m: usize) -> String {
    let mut out = String::from("index,bitstring,probability,count\n");
    for row in rows {
        out.push_str(&format!(
            "{},{:0width$b},{},{}\n",
            row.index,
            row.index,
            row.probability,
            row.count,
            width = m
        ));
    }
    out
}

/// Parses a histogram CSV produced by [`histogram_csv`].
pub fn histogram_from_csv(text: &str) -> Result<Vec<HistogramRow>> {
    let mut rows = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if i == 0 || line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 4 {
            return Err(Error::CircuitMismatch(format!("bad csv row: {line}")));
        }
        rows.push(HistogramRow {
            index: fields[0]
                .parse()
                .map_err(|_| Error::CircuitMismatch(format!("bad index in csv row: {line}")))?,
            probability: fields[2].parse().map_err(|_| {
                Error::CircuitMismatch(format!("bad probability in csv row: {line}"))
            })?,
            count: fields[3]
                .parse()
                .map_err(|_| Error::CircuitMismatch(format!("bad count in csv row: {line}")))?,
        });
    }
    Ok(rows)
}

/// Renders a bar chart of the distribution, one row per index, bars
/// scaled to at most `width` columns. Zero-probability rows are
/// skipped.
pub fn ascii_histogram(probs: &[f64], width: usize) -> String {
    let max = probs.iter().cloned().fold(0.0f64, f64::max);
    if max == 0.0 {
        return String::new();
    }
    let mut out = String::new();
    let index_width = format!("{}", probs.len().saturating_sub(1)).len();
    for (i, &p) in probs.iter().enumerate() {
        if p <= 0.0 {
            continue;
        }
        let bar_len = ((p / max) * width as f64).round() as usize;
        out.push_str(&format!(
            "{:>index_width$}  {:<width$}  {:.6}\n",
            i,
            "#".repeat(bar_len.max(1)),
            p,
            index_width = index_width,
            width = width
        ));
    }
    out
}
