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

//! Synthesizing modular-multiply operators from their cycle structure.
//!
//! The controlled power U^p only ever acts on the orbit of the work
//! state |1>, so a handful of closed cycles pins down everything the
//! circuit needs. This example prints the per-power cycles for
//! N = 21, a = 2 and lowers each operator to X/multi-controlled-X
//! gates.
//!
//! ```text
//! cargo run --example synthesize_me_operator
//! ```

use shorsim::circuit::lower_permutation;
use shorsim::modexp::{build_me_operator, MeSpec};
use shorsim::shor::work_qubits_for;

fn main() {
    let (n, a) = (21u64, 2u64);
    let qubits = work_qubits_for(n);
    println!("N = {n}, a = {a}: per-power cycles (u_ver = 1)\n");
    for k in 0..5u32 {
        let p = 1u64 << k;
        let spec = MeSpec::per_power_cycles(a, n, p).unwrap();
        let cycles: Vec<String> = spec.cycles.iter().map(|c| format!("{c:?}")).collect();
        let perm = build_me_operator(&spec, qubits).unwrap();
        let work: Vec<usize> = (0..qubits).collect();
        let gates = lower_permutation(&perm, &work);
        println!(
            "U^{p:<3} cycles: {:<28} lowered to {} gates",
            cycles.join(" "),
            gates.len()
        );
    }

    // serialized form round-trips through JSON
    let spec = MeSpec::per_power_cycles(5, 143, 8).unwrap();
    println!("\nU^8 for N = 143, a = 5 as JSON:");
    println!("{}", serde_json::to_string_pretty(&spec).unwrap());
}
