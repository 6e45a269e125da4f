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

//! Gate IR, qubit-ordering conventions, and permutation lowering.
//!
//! Two wire orderings are used in the literature and both are supported.
//! The OpenQASM/Qiskit ordering places the least significant bit on
//! qubit 0 at the top of the circuit; the physics/mathematics ordering
//! numbers wires from the top with the least significant bit at the
//! bottom. Circuits convert between the two by the index reversal
//! `q ↦ num_qubits − 1 − q`, which horizontally mirrors every diagram.
//!
//! Simulation is convention-blind: a gate on qubit `q` acts on bit `q`
//! of the basis index. The convention tag records how integers were laid
//! onto wires when the circuit was built, so readout code can interpret
//! measured indices (physics-ordering readout is the bit reversal of
//! the raw index).

use num_complex::Complex64;

use crate::error::Error;
use crate::modexp::Permutation;
use crate::statevec::StateVector;
use crate::Result;

/// Qubit-ordering convention a circuit was built in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Convention {
    /// OpenQASM/Qiskit: qubit 0 on top carries the least significant bit.
    Qiskit,
    /// Physics/mathematics: top wire carries the most significant bit.
    PhysMath,
}

/// One gate of the IR. Operand indices refer to circuit qubits.
#[derive(Debug, Clone)]
pub enum Gate {
    H(usize),
    X(usize),
    Phase {
        theta: f64,
        target: usize,
    },
    ControlledPhase {
        theta: f64,
        control: usize,
        target: usize,
    },
    Swap(usize, usize),
    MultiControlledX {
        controls: Vec<usize>,
        polarities: Vec<bool>,
        target: usize,
    },
    ControlledWorkPermutation {
        control: usize,
        work_qubits: Vec<usize>,
        perm: Permutation,
        label: String,
    },
}

impl Gate {
    fn operands(&self) -> Vec<usize> {
        match self {
            Gate::H(q) | Gate::X(q) => vec![*q],
            Gate::Phase { target, .. } => vec![*target],
            Gate::ControlledPhase {
                control, target, ..
            } => vec![*control, *target],
            Gate::Swap(a, b) => vec![*a, *b],
            Gate::MultiControlledX {
                controls, target, ..
            } => {
                let mut v = controls.clone();
                v.push(*target);
                v
            }
            Gate::ControlledWorkPermutation {
                control,
                work_qubits,
                ..
            } => {
                let mut v = vec![*control];
                v.extend_from_slice(work_qubits);
                v
            }
        }
    }

    fn map_qubits(&self, f: impl Fn(usize) -> usize) -> Gate {
        match self {
            Gate::H(q) => Gate::H(f(*q)),
            Gate::X(q) => Gate::X(f(*q)),
            Gate::Phase { theta, target } => Gate::Phase {
                theta: *theta,
                target: f(*target),
            },
            Gate::ControlledPhase {
                theta,
                control,
                target,
            } => Gate::ControlledPhase {
                theta: *theta,
                control: f(*control),
                target: f(*target),
            },
            Gate::Swap(a, b) => Gate::Swap(f(*a), f(*b)),
            Gate::MultiControlledX {
                controls,
                polarities,
                target,
            } => Gate::MultiControlledX {
                controls: controls.iter().map(|&q| f(q)).collect(),
                polarities: polarities.clone(),
                target: f(*target),
            },
            Gate::ControlledWorkPermutation {
                control,
                work_qubits,
                perm,
                label,
            } => Gate::ControlledWorkPermutation {
                control: f(*control),
                work_qubits: work_qubits.iter().map(|&q| f(q)).collect(),
                perm: perm.clone(),
                label: label.clone(),
            },
        }
    }
}

/// Ordered gate list over a fixed number of qubits.
#[derive(Debug, Clone)]
pub struct Circuit {
    num_qubits: usize,
    convention: Convention,
    gates: Vec<Gate>,
}

impl Circuit {
    pub fn new(num_qubits: usize, convention: Convention) -> Self {
        Circuit {
            num_qubits,
            convention,
            gates: Vec::new(),
        }
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    /// Appends a gate after checking its operands are distinct and in
    /// range.
    pub fn push(&mut self, gate: Gate) -> Result<()> {
        let ops = gate.operands();
        let mut seen = vec![false; self.num_qubits];
        for q in ops {
            if q >= self.num_qubits {
                return Err(Error::QubitOutOfRange {
                    index: q,
                    num_qubits: self.num_qubits,
                });
            }
            if seen[q] {
                return Err(Error::DuplicateQubit(q));
            }
            seen[q] = true;
        }
        self.gates.push(gate);
        Ok(())
    }

    /// Gate list of `self` followed by `other`; both circuits must agree
    /// on width and convention.
    pub fn compose(&self, other: &Circuit) -> Result<Circuit> {
        if self.num_qubits != other.num_qubits {
            return Err(Error::CircuitMismatch(format!(
                "widths differ: {} vs {}",
                self.num_qubits, other.num_qubits
            )));
        }
        if self.convention != other.convention {
            return Err(Error::CircuitMismatch("conventions differ".into()));
        }
        let mut out = self.clone();
        out.gates.extend(other.gates.iter().cloned());
        Ok(out)
    }

    /// Rewrites the circuit into the other convention by reversing every
    /// operand index (`q ↦ num_qubits − 1 − q`). Applying the conversion
    /// twice returns the original circuit; simulated actions of the two
    /// forms are related by basis-index bit reversal.
    pub fn convert_convention(&self, target: Convention) -> Circuit {
        if target == self.convention {
            return self.clone();
        }
        let n = self.num_qubits;
        Circuit {
            num_qubits: n,
            convention: target,
            gates: self
                .gates
                .iter()
                .map(|g| g.map_qubits(|q| n - 1 - q))
                .collect(),
        }
    }

    /// Applies every gate in order to `state`.
    pub fn apply_to(&self, state: &mut StateVector) -> Result<()> {
        if state.num_qubits() != self.num_qubits {
            return Err(Error::CircuitMismatch(format!(
                "state has {} qubits, circuit has {}",
                state.num_qubits(),
                self.num_qubits
            )));
        }
        for gate in &self.gates {
            match gate {
                Gate::H(q) => state.apply_h(*q)?,
                Gate::X(q) => state.apply_x(*q)?,
                Gate::Phase { theta, target } => state.apply_phase(*theta, *target)?,
                Gate::ControlledPhase {
                    theta,
                    control,
                    target,
                } => state.apply_controlled_phase(*theta, *control, *target)?,
                Gate::Swap(a, b) => state.apply_swap(*a, *b)?,
                Gate::MultiControlledX {
                    controls,
                    polarities,
                    target,
                } => state.apply_mcx(controls, polarities, *target)?,
                Gate::ControlledWorkPermutation {
                    control,
                    work_qubits,
                    perm,
                    ..
                } => state.apply_controlled_work_permutation(*control, work_qubits, perm)?,
            }
        }
        Ok(())
    }

    /// Runs the circuit on `|input⟩` and returns the final state.
    pub fn run_on_basis_state(&self, input: usize) -> Result<StateVector> {
        let mut state = StateVector::new_basis_state(self.num_qubits, input)?;
        self.apply_to(&mut state)?;
        Ok(state)
    }

    /// Dense matrix of the circuit in the raw index basis (columns are
    /// the images of basis states). Intended for small test circuits.
    pub fn unitary(&self) -> Result<Vec<Vec<Complex64>>> {
        let dim = 1usize << self.num_qubits;
        let mut cols = Vec::with_capacity(dim);
        for input in 0..dim {
            cols.push(self.run_on_basis_state(input)?.amplitudes().to_vec());
        }
        // transpose to row-major [row][col]
        let mut m = vec![vec![Complex64::new(0.0, 0.0); dim]; dim];
        for (col, state) in cols.iter().enumerate() {
            for (row, amp) in state.iter().enumerate() {
                m[row][col] = *amp;
            }
        }
        Ok(m)
    }

    /// Replaces every controlled work permutation by its lowered
    /// X/multi-controlled-X realization (the permutation's lowering with
    /// the control wire prepended to every gate).
    pub fn lower_permutations(&self) -> Circuit {
        let mut out = Circuit::new(self.num_qubits, self.convention);
        for gate in &self.gates {
            match gate {
                Gate::ControlledWorkPermutation {
                    control,
                    work_qubits,
                    perm,
                    ..
                } => {
                    for lowered in lower_permutation(perm, work_qubits) {
                        let with_control = match lowered {
                            Gate::X(t) => Gate::MultiControlledX {
                                controls: vec![*control],
                                polarities: vec![true],
                                target: t,
                            },
                            Gate::MultiControlledX {
                                mut controls,
                                mut polarities,
                                target,
                            } => {
                                controls.insert(0, *control);
                                polarities.insert(0, true);
                                Gate::MultiControlledX {
                                    controls,
                                    polarities,
                                    target,
                                }
                            }
                            other => other,
                        };
                        out.gates.push(with_control);
                    }
                }
                g => out.gates.push(g.clone()),
            }
        }
        out
    }
}

/// Lowers a permutation on the given work qubits to a sequence of X and
/// multi-controlled-X gates.
///
/// The permutation is decomposed into transpositions; a transposition
/// `u ↔ v` becomes a ladder of bit flips, each fully controlled on every
/// other work qubit so that exactly one pair of basis states is
/// exchanged per gate. The identity lowers to an empty list.
pub fn lower_permutation(perm: &Permutation, work_qubits: &[usize]) -> Vec<Gate> {
    assert_eq!(perm.size(), 1 << work_qubits.len());
    let mut gates = Vec::new();
    for cycle in perm.cycles() {
        // (c0 c1 … ck) = (c0 c1), then (c0 c2), … applied in gate order
        for i in 1..cycle.len() {
            emit_transposition(cycle[0], cycle[i], work_qubits, &mut gates);
        }
    }
    gates
}

/// Exchanges exactly the basis states `u` and `v` of the work register.
fn emit_transposition(u: usize, v: usize, work_qubits: &[usize], gates: &mut Vec<Gate>) {
    let n = work_qubits.len();
    let diff: Vec<usize> = (0..n).filter(|b| (u ^ v) >> b & 1 == 1).collect();
    debug_assert!(!diff.is_empty());

    if n == 1 {
        gates.push(Gate::X(work_qubits[0]));
        return;
    }

    // Route u toward v one differing bit at a time, flip the last bit,
    // then un-route. Each step exchanges a single pair of basis states.
    let flip_gate = |state: usize, bit: usize| -> Gate {
        let mut controls = Vec::with_capacity(n - 1);
        let mut polarities = Vec::with_capacity(n - 1);
        for b in (0..n).filter(|&b| b != bit) {
            controls.push(work_qubits[b]);
            polarities.push(state >> b & 1 == 1);
        }
        Gate::MultiControlledX {
            controls,
            polarities,
            target: work_qubits[bit],
        }
    };

    let mut route = Vec::new();
    let mut cur = u;
    for &bit in diff.iter().skip(1) {
        route.push(flip_gate(cur, bit));
        cur ^= 1 << bit;
    }
    gates.extend(route.iter().cloned());
    gates.push(flip_gate(cur, diff[0]));
    gates.extend(route.into_iter().rev());
}

/// Reverses the low `bits` bits of `index`.
pub fn bit_reverse(index: usize, bits: usize) -> usize {
    let mut out = 0;
    for b in 0..bits {
        out |= ((index >> b) & 1) << (bits - 1 - b);
    }
    out
}
