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

//! Exact state-vector simulation of Shor's factoring algorithm.
//!
//! shorsim factors small semiprimes end-to-end on a dense, noiseless
//! state-vector simulator. It provides the building blocks as a library:
//!
//! * [`statevec`] — dense complex state vectors and gate kernels,
//! * [`circuit`] — a gate IR with two qubit-ordering conventions,
//!   permutation-to-gate lowering, and OpenQASM export,
//! * [`qft`] — quantum Fourier transform circuits and partial phases,
//! * [`qpe`] — phase-estimation assembly plus the closed-form amplitude
//!   model used to cross-check every simulation,
//! * [`modexp`] — modular arithmetic, order finding, and the
//!   modular-exponentiation permutation operators (full, per-power-cycle,
//!   and truncated constructions),
//! * [`contfrac`] — exact continued fractions and period extraction,
//! * [`shor`] — the end-to-end factoring pipeline.
//!
//! The fastest way to explore the crate is through its runnable examples:
//!
//! ```text
//! cargo run --example factor_fifteen
//! cargo run --example phase_histogram
//! cargo run --example continued_fractions
//! cargo run --example qft_matrix
//! cargo run --example synthesize_me_operator
//! cargo run --example qpe_analytic
//! cargo run --example error_injection
//! cargo run --example eigenstate_check
//! cargo run --example sampled_run
//! cargo run --example export_qasm
//! ```
//!
//! A thin command-line front end wraps the same entry points:
//!
//! ```text
//! cargo run --bin shorsim -- factor --n 15 --a 8 --m 9
//! ```
//!
//! # A three-line factoring run
//!
//! ```
//! use shorsim::shor::{ShorConfig, run};
//!
//! let report = run(&ShorConfig::new(15).with_base(8).with_control_qubits(9)).unwrap();
//! assert_eq!(report.factors(), Some((3, 5)));
//! ```

pub mod circuit;
pub mod contfrac;
pub mod error;
pub mod modexp;
pub mod qasm;
pub mod qft;
pub mod qpe;
pub mod shor;
pub mod statevec;
pub mod tol;

pub use error::Error;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
