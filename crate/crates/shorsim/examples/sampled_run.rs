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

//! Shot-based sampling of the control register with a fixed seed.
//!
//! ```text
//! cargo run --example sampled_run
//! ```

use shorsim::shor::{run, ShorConfig};

fn main() {
    let config = ShorConfig::new(21)
        .with_base(2)
        .with_control_qubits(5)
        .with_shots(4096)
        .with_seed(7);
    let report = run(&config).unwrap();

    println!("N = 21, a = 2, m = 5, 4096 shots, seed 7\n");
    println!("index  count  probability");
    for row in &report.histogram {
        if row.count > 40 {
            println!("{:>5}  {:>5}  {:.5}", row.index, row.count, row.probability);
        }
    }
    match report.factors() {
        Some((f1, f2)) => println!("\nfactors: {f1} x {f2}"),
        None => println!("\nno factors from this sample; rerun with another seed"),
    }
    println!("(identical seed and flags always reproduce this output)");
}
