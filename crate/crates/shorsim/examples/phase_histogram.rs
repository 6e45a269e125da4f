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

//! Control-register phase histogram for N = 21, a = 2, m = 5, comparing
//! the simulated state vector against the closed-form model.
//!
//! ```text
//! cargo run --example phase_histogram
//! ```

use shorsim::shor::{ascii_histogram, classify_peaks, run, theoretical_histogram, ShorConfig};

fn main() {
    let (n, a, m) = (21u64, 2u64, 5usize);
    let report = run(&ShorConfig::new(n).with_base(a).with_control_qubits(m)).unwrap();
    let simulated = report.probabilities();
    let theory = theoretical_histogram(a, n, m).unwrap();

    println!("N = {n}, a = {a}, m = {m}: order of {a} mod {n} is 6,");
    println!("so peaks sit near the six phases s/6.\n");
    print!("{}", ascii_histogram(&simulated, 48));

    let peaks = classify_peaks(&simulated);
    println!("\ndominant peaks    : {:?}", peaks.dominant);
    println!("sub-dominant peaks: {:?}", peaks.sub_dominant);

    let max_diff = theory
        .iter()
        .zip(&simulated)
        .map(|(t, s)| (t - s).abs())
        .fold(0.0f64, f64::max);
    println!("\nmax |analytic - simulated| = {max_diff:.3e}");
}
