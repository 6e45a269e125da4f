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

//! Quantum Fourier transform circuits.
//!
//! `build_qft` emits the textbook ladder of Hadamards and controlled
//! phase rotations `R_n = P(2π/2^n)` followed by the qubit-reversal SWAP
//! network, so that the circuit's dense matrix equals the discrete
//! Fourier kernel `(1/√M)·e^{2πi kℓ/M}` in the chosen convention. The
//! inverse transform is the same circuit read backwards with every
//! phase angle negated.
//!
//! An optional angle cutoff `k_max` drops rotations finer than
//! `2π/2^k_max`; sufficiently coarse transforms still feed the
//! continued-fraction post-processing, which needs only an approximate
//! phase.

use crate::circuit::{Circuit, Convention, Gate};
use crate::contfrac::Rational;
use crate::Result;

/// Parameters for QFT construction.
#[derive(Debug, Clone)]
pub struct QftParams {
    pub m: usize,
    pub convention: Convention,
    /// Drop controlled rotations `R_n` with `n > k_max`.
    pub angle_cutoff_k: Option<u32>,
    /// Emit the final qubit-reversal SWAP network (the default). When
    /// suppressed the caller must compensate by reinterpreting output
    /// indices bit-reversed.
    pub swaps: bool,
}

impl QftParams {
    pub fn new(m: usize, convention: Convention) -> Self {
        assert!(m >= 1, "transform needs at least one qubit");
        QftParams {
            m,
            convention,
            angle_cutoff_k: None,
            swaps: true,
        }
    }

    pub fn with_cutoff(mut self, k_max: u32) -> Self {
        assert!(k_max >= 1, "angle cutoff must be at least 1");
        self.angle_cutoff_k = Some(k_max);
        self
    }

    pub fn without_swaps(mut self) -> Self {
        self.swaps = false;
        self
    }
}

/// Builds the forward QFT circuit.
pub fn build_qft(params: &QftParams) -> Result<Circuit> {
    let m = params.m;
    let mut circuit = Circuit::new(m, params.convention);
    let keep = |n: u32| params.angle_cutoff_k.is_none_or(|k| n <= k);

    match params.convention {
        // Stage for target t uses controls below it; the most significant
        // wire is processed first in both conventions.
        Convention::Qiskit => {
            for target in (0..m).rev() {
                circuit.push(Gate::H(target))?;
                for control in (0..target).rev() {
                    let n = (target - control + 1) as u32;
                    if keep(n) {
                        circuit.push(Gate::ControlledPhase {
                            theta: rotation_angle(n),
                            control,
                            target,
                        })?;
                    }
                }
            }
        }
        Convention::PhysMath => {
            for target in 0..m {
                circuit.push(Gate::H(target))?;
                for control in target + 1..m {
                    let n = (control - target + 1) as u32;
                    if keep(n) {
                        circuit.push(Gate::ControlledPhase {
                            theta: rotation_angle(n),
                            control,
                            target,
                        })?;
                    }
                }
            }
        }
    }

    if params.swaps {
        for q in 0..m / 2 {
            circuit.push(Gate::Swap(q, m - 1 - q))?;
        }
    }
    Ok(circuit)
}

/// Builds the inverse QFT: the forward circuit reversed gate-by-gate
/// with all phase angles negated.
pub fn build_iqft(params: &QftParams) -> Result<Circuit> {
    let forward = build_qft(params)?;
    let mut circuit = Circuit::new(params.m, params.convention);
    for gate in forward.gates().iter().rev() {
        let inverted = match gate {
            Gate::ControlledPhase {
                theta,
                control,
                target,
            } => Gate::ControlledPhase {
                theta: -theta,
                control: *control,
                target: *target,
            },
            Gate::Phase { theta, target } => Gate::Phase {
                theta: -theta,
                target: *target,
            },
            g => g.clone(),
        };
        circuit.push(inverted)?;
    }
    Ok(circuit)
}

/// `θ_n = 2π/2^n`, the controlled rotation used at distance `n − 1`.
pub fn rotation_angle(n: u32) -> f64 {
    2.0 * std::f64::consts::PI / (1u64 << n) as f64
}

/// Partial phase angle of one QFT stage.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialPhase {
    /// Stage index `r`, 1-based as in the physics convention.
    pub stage: u32,
    /// The binary fraction `0.ℓ_{m−r+1} … ℓ_m`.
    pub value: Rational,
}

/// Partial phases `Ω_r = (ℓ mod 2^r)/2^r` for `r = 1…m`.
///
/// Stage `m` recovers the full phase `ℓ/2^m`; stage 1 is the single
/// lowest-order bit.
pub fn partial_phases(ell: u64, m: u32) -> Result<Vec<PartialPhase>> {
    if ell >= 1u64 << m {
        return Err(crate::error::Error::BasisIndexOutOfRange {
            index: ell as usize,
            num_qubits: m as usize,
        });
    }
    (1..=m)
        .map(|r| {
            let den = 1u64 << r;
            Ok(PartialPhase {
                stage: r,
                value: Rational::new(ell % den, den)?,
            })
        })
        .collect()
}
