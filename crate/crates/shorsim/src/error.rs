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

//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors raised by shorsim operations.
///
/// Domain errors report arguments outside an operation's contract (bad
/// qubit indices, invalid moduli, mismatched circuits). Contract
/// violations report inputs that break a mathematical precondition the
/// caller promised to uphold (non-unitary gates, non-bijective maps,
/// trivial roots).
#[derive(Debug, Error)]
pub enum Error {
    #[error("qubit index {index} out of range for {num_qubits}-qubit register")]
    QubitOutOfRange { index: usize, num_qubits: usize },

    #[error("basis index {index} out of range for {num_qubits}-qubit register")]
    BasisIndexOutOfRange { index: usize, num_qubits: usize },

    #[error("qubit indices must be distinct (got {0})")]
    DuplicateQubit(usize),

    #[error("gate matrix is not unitary within tolerance")]
    NonUnitaryGate,

    #[error("mapping on {size} states is not a bijection")]
    NotBijective { size: usize },

    #[error("cycles overlap at state {state}")]
    OverlappingCycles { state: u64 },

    #[error("cycle state {state} is not below the modulus {modulus}")]
    CycleStateOutOfRange { state: u64, modulus: u64 },

    #[error("base {a} and modulus {n} are not coprime (gcd = {g})")]
    NotCoprime { a: u64, n: u64, g: u64 },

    #[error("work register of {n} qubits cannot hold residues mod {modulus}")]
    WorkRegisterTooSmall { n: usize, modulus: u64 },

    #[error("expected {expected} controlled powers, got {got}")]
    PowerCountMismatch { expected: usize, got: usize },

    #[error("cannot compose circuits: {0}")]
    CircuitMismatch(String),

    #[error("spectrum weights are not normalized (sum of squares = {sum})")]
    WeightNormalization { sum: f64 },

    #[error("failure probability must lie strictly between 0 and 1 (got {0})")]
    EpsilonOutOfRange(f64),

    #[error("cannot export circuit: unlowered work permutation `{label}`")]
    UnloweredPermutation { label: String },

    #[error("{0} is not a valid modulus for factoring: {1}")]
    InvalidModulus(u64, &'static str),

    #[error("invalid base {a} for modulus {n}: {reason}")]
    InvalidBase {
        a: u64,
        n: u64,
        reason: &'static str,
    },

    #[error("{value} is not a proper square root of unity mod {modulus}")]
    TrivialRoot { value: u64, modulus: u64 },

    #[error("denominator must be positive")]
    ZeroDenominator,

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}
