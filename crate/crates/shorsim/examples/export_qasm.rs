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

//! OpenQASM 2.0 export: a bare QFT and a fully lowered factoring
//! circuit (work permutations decomposed to X/CX/CCX ladders).
//!
//! ```text
//! cargo run --example export_qasm
//! ```

use shorsim::circuit::Convention;
use shorsim::qasm::export_circuit_text;
use shorsim::qft::{build_qft, QftParams};
use shorsim::qpe::assemble_qpe;
use shorsim::shor::{controlled_powers, work_qubits_for};
use shorsim::statevec::StateVector;

fn main() {
    let qft = build_qft(&QftParams::new(3, Convention::Qiskit)).unwrap();
    println!("--- qft3.qasm ---");
    print!("{}", export_circuit_text(&qft).unwrap());

    // a small end-to-end factoring circuit: N = 15, a = 8, m = 3
    let (n, a, m) = (15u64, 8u64, 3usize);
    let work = StateVector::new_basis_state(work_qubits_for(n), 1).unwrap();
    let powers = controlled_powers(a, n, m, shorsim::modexp::MeVersion::Concatenated).unwrap();
    let circuit = assemble_qpe(m, &work, &powers, Convention::Qiskit).unwrap();
    let lowered = circuit.lower_permutations();
    let text = export_circuit_text(&lowered).unwrap();
    let path = std::env::temp_dir().join("shor_n15_a8_m3.qasm");
    std::fs::write(&path, &text).unwrap();
    println!("\n--- factoring circuit ---");
    println!(
        "{} gates after lowering, {} lines of QASM written to {}",
        lowered.len(),
        text.lines().count(),
        path.display()
    );
}
