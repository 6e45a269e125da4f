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

//! End-to-end factoring of N = 15 in exact-distribution mode.
//!
//! ```text
//! cargo run --example factor_fifteen
//! ```

use shorsim::shor::{run, Outcome, ShorConfig};

fn main() {
    // 4 work qubits hold residues mod 15; 2*4+1 control qubits give the
    // continued-fraction method guaranteed resolution.
    for a in [2u64, 4, 7, 8, 11, 13, 14] {
        let config = ShorConfig::new(15).with_base(a).with_control_qubits(9);
        let report = run(&config).expect("valid configuration");
        match report.outcome {
            Outcome::Factors {
                f1,
                f2,
                period,
                from_index,
            } => println!(
                "a = {a:>2}: 15 = {f1} x {f2}   period r = {period}, measured l = {from_index}, \
                 {} peak(s) examined",
                report.attempts
            ),
            Outcome::Failure { .. } => {
                println!("a = {a:>2}: no factors (every peak gave a trivial root or odd period)")
            }
            Outcome::ClassicalFactor { .. } => unreachable!("base was fixed"),
        }
    }
}
