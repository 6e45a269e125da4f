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

//! Quantum phase estimation: circuit assembly and the closed-form
//! amplitude model.
//!
//! The assembled circuit is the standard sandwich — Hadamards on the
//! control register, controlled powers `U^{2^k}` of the work-register
//! permutation, inverse QFT on the controls. The control qubit carrying
//! bit `k` of the readout drives `U^{2^k}`, which in the Qiskit
//! ordering is simply control qubit `k`.
//!
//! For validation, the final control distribution has the exact closed
//! form `P_ℓ = Σ_s |a_s·A_ℓ(φ_s)|²` with
//!
//! ```text
//! A_ℓ(θ) = (1/M)·(1 − e^{2πi(θ−ℓ/M)M}) / (1 − e^{2πi(θ−ℓ/M)})
//! ```
//!
//! collapsing to a Kronecker delta whenever `Mθ` is an integer.

use num_complex::Complex64;

use crate::circuit::{bit_reverse, Circuit, Convention, Gate};
use crate::error::Error;
use crate::modexp::{build_me_operator, MeSpec};
use crate::qft::{build_iqft, QftParams};
use crate::statevec::StateVector;
use crate::tol;
use crate::Result;

/// A phase expressed in cycles, `0 ≤ value < 1`, optionally carrying its
/// exact rational form `s/r`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseAngle {
    value: f64,
    rational: Option<(u64, u64)>,
}

impl PhaseAngle {
    pub fn from_value(value: f64) -> Self {
        let value = value.rem_euclid(1.0);
        PhaseAngle {
            value,
            rational: None,
        }
    }

    pub fn from_rational(s: u64, r: u64) -> Self {
        PhaseAngle {
            value: (s % r) as f64 / r as f64,
            rational: Some((s % r, r)),
        }
    }

    pub fn value(&self) -> f64 {
        self.value
    }

    pub fn rational(&self) -> Option<(u64, u64)> {
        self.rational
    }
}

/// Weighted phase spectrum fed to the analytic model.
#[derive(Debug, Clone)]
pub struct AnalyticSpectrum {
    /// Number of control states `M = 2^m`.
    pub states: usize,
    /// `(weight a_s, phase φ_s)` lines; weights must satisfy
    /// `Σ|a_s|² = 1`.
    pub entries: Vec<(Complex64, PhaseAngle)>,
}

impl AnalyticSpectrum {
    /// The spectrum of a period-`r` multiply operator seen from the
    /// work state `|1⟩`: uniform weights `1/√r` on phases `s/r`.
    pub fn uniform_period(r: u64, states: usize) -> Self {
        let w = Complex64::new(1.0 / (r as f64).sqrt(), 0.0);
        AnalyticSpectrum {
            states,
            entries: (0..r)
                .map(|s| (w, PhaseAngle::from_rational(s, r)))
                .collect(),
        }
    }

    pub fn distribution(&self) -> Result<Vec<f64>> {
        let lines: Vec<(Complex64, f64)> = self
            .entries
            .iter()
            .map(|(w, phase)| (*w, phase.value()))
            .collect();
        analytic_distribution(&lines, self.states)
    }
}

/// The phase-estimation amplitude `A_ℓ(θ)` for `M` control states.
///
/// Evaluates the regularized Kronecker-delta limit when `Mθ` is within
/// [`tol::INT_PHASE`] of an integer, avoiding the 0/0 quotient.
pub fn analytic_amplitude(theta: f64, ell: u64, states: usize) -> Complex64 {
    let m = states as f64;
    let mode = theta * m;
    let nearest = mode.round();
    if (mode - nearest).abs() <= tol::INT_PHASE {
        let hit = nearest.rem_euclid(m) as u64;
        return if ell == hit {
            Complex64::new(1.0, 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        };
    }
    let delta = theta - ell as f64 / m;
    let two_pi = 2.0 * std::f64::consts::PI;
    let numerator = Complex64::new(1.0, 0.0) - Complex64::from_polar(1.0, two_pi * delta * m);
    let denominator = Complex64::new(1.0, 0.0) - Complex64::from_polar(1.0, two_pi * delta);
    numerator / denominator / m
}

/// Exact control-register distribution for a weighted phase spectrum:
/// `P_ℓ = Σ_s |a_s·A_ℓ(φ_s)|²`.
pub fn analytic_distribution(spectrum: &[(Complex64, f64)], states: usize) -> Result<Vec<f64>> {
    let weight_sum: f64 = spectrum.iter().map(|(w, _)| w.norm_sqr()).sum();
    if (weight_sum - 1.0).abs() > tol::PROB_SUM {
        return Err(Error::WeightNormalization { sum: weight_sum });
    }
    let mut probs = vec![0.0f64; states];
    for (ell, p) in probs.iter_mut().enumerate() {
        for &(weight, phase) in spectrum {
            let amp = weight * analytic_amplitude(phase, ell as u64, states);
            *p += amp.norm_sqr();
        }
    }
    Ok(probs)
}

/// Assembles the phase-estimation circuit for `m` control qubits over
/// the given controlled powers.
///
/// `powers[k]` must describe `U^{2^k}`; the work register size is taken
/// from `work_init`. Control qubits occupy circuit positions `0..m` and
/// work qubits `m..m+n` in both conventions; the conventions differ in
/// which wire carries which readout bit.
pub fn assemble_qpe(
    m: usize,
    work_init: &StateVector,
    powers: &[MeSpec],
    convention: Convention,
) -> Result<Circuit> {
    if powers.len() != m {
        return Err(Error::PowerCountMismatch {
            expected: m,
            got: powers.len(),
        });
    }
    let n = work_init.num_qubits();
    let mut circuit = Circuit::new(m + n, convention);
    for q in 0..m {
        circuit.push(Gate::H(q))?;
    }
    let work_qubits = work_wires(m, n, convention);
    for (k, spec) in powers.iter().enumerate() {
        let control = match convention {
            Convention::Qiskit => k,
            // most significant readout bit on the top wire
            Convention::PhysMath => m - 1 - k,
        };
        let perm = build_me_operator(spec, n)?;
        circuit.push(Gate::ControlledWorkPermutation {
            control,
            work_qubits: work_qubits.clone(),
            perm,
            label: format!("{}^{} mod {}", spec.a, spec.p, spec.n),
        })?;
    }
    let iqft = build_iqft(&QftParams::new(m, convention))?;
    for gate in iqft.gates() {
        circuit.push(gate.clone())?;
    }
    Ok(circuit)
}

/// Work-register wire list: entry `i` is the circuit qubit carrying bit
/// `i` of the work value.
pub fn work_wires(m: usize, n: usize, convention: Convention) -> Vec<usize> {
    match convention {
        Convention::Qiskit => (m..m + n).collect(),
        Convention::PhysMath => (m..m + n).rev().collect(),
    }
}

/// `|0…0⟩ ⊗ work_init` laid out for the chosen convention.
pub fn initial_state(
    m: usize,
    work_init: &StateVector,
    convention: Convention,
) -> Result<StateVector> {
    let n = work_init.num_qubits();
    let wires = work_wires(m, n, convention);
    let dim = 1usize << (m + n);
    let mut amps = vec![Complex64::new(0.0, 0.0); dim];
    for (w, &amp) in work_init.amplitudes().iter().enumerate() {
        if amp == Complex64::new(0.0, 0.0) {
            continue;
        }
        let mut index = 0usize;
        for (bit, &wire) in wires.iter().enumerate() {
            index |= ((w >> bit) & 1) << wire;
        }
        amps[index] = amp;
    }
    StateVector::from_amplitudes(amps)
}

/// Control-register readout distribution over `ℓ ∈ [0, 2^m)`.
///
/// Marginalizes out the work register and reorders the raw sub-index
/// into the convention's integer labeling (the physics ordering reads
/// the wires most-significant-first).
pub fn control_distribution(
    state: &StateVector,
    m: usize,
    convention: Convention,
) -> Result<Vec<f64>> {
    let control_qubits: Vec<usize> = (0..m).collect();
    let raw = state.marginal_probabilities(&control_qubits)?;
    Ok(match convention {
        Convention::Qiskit => raw,
        Convention::PhysMath => {
            let mut out = vec![0.0; raw.len()];
            for (i, p) in raw.into_iter().enumerate() {
                out[bit_reverse(i, m)] = p;
            }
            out
        }
    })
}

/// Builds, runs and reads out a QPE circuit in one call.
pub fn run_qpe(
    m: usize,
    work_init: &StateVector,
    powers: &[MeSpec],
    convention: Convention,
) -> Result<Vec<f64>> {
    let circuit = assemble_qpe(m, work_init, powers, convention)?;
    let mut state = initial_state(m, work_init, convention)?;
    circuit.apply_to(&mut state)?;
    control_distribution(&state, m, convention)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modexp::{self, MeVersion};

    #[test]
    fn identity_power_gives_zero_phase() {
        // U = identity permutation, work |1⟩, m = 1
        let work = StateVector::new_basis_state(1, 1).unwrap();
        let spec = MeSpec {
            a: 1,
            n: 2,
            p: 1,
            version: MeVersion::Truncated,
            cycles: vec![],
        };
        let probs = run_qpe(1, &work, &[spec], Convention::Qiskit).unwrap();
        assert!((probs[0] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn four_peaks_for_order_four() {
        // N = 15, a = 8, m = 5: peaks at 0, 8, 16, 24
        let work = StateVector::new_basis_state(4, 1).unwrap();
        let powers: Vec<MeSpec> = (0..5)
            .map(|k| MeSpec::concatenated(8, 15, 1 << k).unwrap())
            .collect();
        let probs = run_qpe(5, &work, &powers, Convention::Qiskit).unwrap();
        for (ell, p) in probs.iter().enumerate() {
            let expect = if ell % 8 == 0 { 0.25 } else { 0.0 };
            assert!((p - expect).abs() < 1e-10, "ell={ell} p={p}");
        }
    }

    #[test]
    fn two_peaks_for_order_two_m9() {
        // N = 15, a = 4, m = 9: peaks at 0 and 256
        let work = StateVector::new_basis_state(4, 1).unwrap();
        let powers: Vec<MeSpec> = (0..9)
            .map(|k| MeSpec::concatenated(4, 15, 1 << k).unwrap())
            .collect();
        let probs = run_qpe(9, &work, &powers, Convention::Qiskit).unwrap();
        assert!((probs[0] - 0.5).abs() < 1e-10);
        assert!((probs[256] - 0.5).abs() < 1e-10);
        let rest: f64 = probs
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != 0 && *i != 256)
            .map(|(_, p)| p)
            .sum();
        assert!(rest < 1e-10);
    }

    #[test]
    fn conventions_agree_on_readout() {
        let work = StateVector::new_basis_state(4, 1).unwrap();
        let powers: Vec<MeSpec> = (0..5)
            .map(|k| MeSpec::concatenated(8, 15, 1 << k).unwrap())
            .collect();
        let conv1 = run_qpe(5, &work, &powers, Convention::Qiskit).unwrap();
        let conv2 = run_qpe(5, &work, &powers, Convention::PhysMath).unwrap();
        for (a, b) in conv1.iter().zip(&conv2) {
            assert!((a - b).abs() < 1e-10);
        }
    }

    #[test]
    fn eigenstate_input_reads_single_phase() {
        // work register seeded with |u_1⟩ for a = 8, N = 15 (r = 4):
        // the readout collapses onto ℓ = M·1/4
        let work = modexp::eigenstate(8, 15, 1, 4).unwrap();
        let powers: Vec<MeSpec> = (0..5)
            .map(|k| MeSpec::concatenated(8, 15, 1 << k).unwrap())
            .collect();
        let probs = run_qpe(5, &work, &powers, Convention::Qiskit).unwrap();
        assert!((probs[8] - 1.0).abs() < 1e-10);
    }

    #[test]
    fn wrong_power_count_rejected() {
        let work = StateVector::new_basis_state(4, 1).unwrap();
        let powers = vec![MeSpec::concatenated(8, 15, 1).unwrap()];
        assert!(matches!(
            assemble_qpe(3, &work, &powers, Convention::Qiskit),
            Err(Error::PowerCountMismatch {
                expected: 3,
                got: 1
            })
        ));
    }

    #[test]
    fn amplitude_integer_phase_is_delta() {
        let states = 16;
        for ell_theta in 0..states as u64 {
            let theta = ell_theta as f64 / states as f64;
            for ell in 0..states as u64 {
                let amp = analytic_amplitude(theta, ell, states);
                let expect = if ell == ell_theta { 1.0 } else { 0.0 };
                assert!((amp - Complex64::new(expect, 0.0)).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn amplitude_peaks_near_theta() {
        // θ = 1/3, M = 16: |A_ℓ|² is maximal at ℓ = 5 and sums to 1
        let states = 16;
        let theta = 1.0 / 3.0;
        let probs: Vec<f64> = (0..states as u64)
            .map(|ell| analytic_amplitude(theta, ell, states).norm_sqr())
            .collect();
        let max_ell = probs
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.partial_cmp(b.1).unwrap())
            .unwrap()
            .0;
        assert_eq!(max_ell, 5);
        assert!((probs.iter().sum::<f64>() - 1.0).abs() < tol::PROB_SUM);
    }

    #[test]
    fn amplitude_continuous_at_integer_limit() {
        let states = 32;
        let ell = 7u64;
        let eps = 1e-7;
        let theta = (ell as f64 + eps) / states as f64;
        let amp = analytic_amplitude(theta, ell, states);
        assert!((amp - Complex64::new(1.0, 0.0)).norm() <= 1e-5);
        let amp_other = analytic_amplitude(theta, ell + 1, states);
        assert!(amp_other.norm() <= 1e-5);
    }

    #[test]
    fn distribution_examples() {
        // single exact phase
        let spectrum = vec![(Complex64::new(1.0, 0.0), 0.25)];
        let probs = analytic_distribution(&spectrum, 16).unwrap();
        assert!((probs[4] - 1.0).abs() < 1e-12);

        // r = 4 uniform: four equal peaks on 32 states
        let probs = AnalyticSpectrum::uniform_period(4, 32)
            .distribution()
            .unwrap();
        for (ell, p) in probs.iter().enumerate() {
            let expect = if ell % 8 == 0 { 0.25 } else { 0.0 };
            assert!((p - expect).abs() < 1e-12);
        }

        // r = 6 uniform on 32 states: top six indices
        let probs = AnalyticSpectrum::uniform_period(6, 32)
            .distribution()
            .unwrap();
        let mut ranked: Vec<usize> = (0..32).collect();
        ranked.sort_by(|&a, &b| probs[b].partial_cmp(&probs[a]).unwrap());
        let mut top: Vec<usize> = ranked[..6].to_vec();
        top.sort_unstable();
        assert_eq!(top, vec![0, 5, 11, 16, 21, 27]);

        // unnormalized weights are rejected
        let bad = vec![(Complex64::new(0.5, 0.0), 0.25)];
        assert!(analytic_distribution(&bad, 16).is_err());
    }

    #[test]
    fn geometric_sum_identity() {
        // Σ_{s<r} e^{2πi k s/r} = 0 for k not a multiple of r
        for r in 1..=40u64 {
            for k in -100i64..=100 {
                let sum: Complex64 = (0..r)
                    .map(|s| {
                        Complex64::from_polar(
                            1.0,
                            2.0 * std::f64::consts::PI * k as f64 * s as f64 / r as f64,
                        )
                    })
                    .sum();
                if k.rem_euclid(r as i64) == 0 {
                    assert!((sum - Complex64::new(r as f64, 0.0)).norm() < 1e-8);
                } else {
                    assert!(sum.norm() < 1e-8, "r={r} k={k} sum={sum}");
                }
            }
        }
    }

    #[test]
    fn simulated_marginal_matches_analytic_model() {
        for &(a, n_mod, qubits, m) in &[(8u64, 15u64, 4usize, 5usize), (4, 15, 4, 6), (2, 21, 5, 5)]
        {
            let r = modexp::order_bruteforce(a, n_mod).unwrap();
            let work = StateVector::new_basis_state(qubits, 1).unwrap();
            let powers: Vec<MeSpec> = (0..m)
                .map(|k| MeSpec::concatenated(a, n_mod, 1 << k).unwrap())
                .collect();
            let simulated = run_qpe(m, &work, &powers, Convention::Qiskit).unwrap();
            let analytic = AnalyticSpectrum::uniform_period(r, 1 << m)
                .distribution()
                .unwrap();
            for (s, t) in simulated.iter().zip(&analytic) {
                assert!((s - t).abs() <= tol::ANALYTIC_VS_SIM, "a={a} N={n_mod}");
            }
        }
    }
}
