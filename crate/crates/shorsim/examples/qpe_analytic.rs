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

//! The closed-form phase-estimation profile |A_l(theta)|^2 for a phase
//! that does not land on the measurement grid (theta = 1/3, M = 16).
//!
//! ```text
//! cargo run --example qpe_analytic
//! ```

use shorsim::qpe::analytic_amplitude;

fn main() {
    let states = 16usize;
    let theta = 1.0 / 3.0;
    println!("M = {states}, theta = 1/3: the distribution peaks at l with l/M closest to theta\n");
    let probs: Vec<f64> = (0..states as u64)
        .map(|ell| analytic_amplitude(theta, ell, states).norm_sqr())
        .collect();
    for (ell, p) in probs.iter().enumerate() {
        let bar = "#".repeat((p * 70.0).round() as usize);
        println!(
            "l = {ell:>2}  theta_l = {:>6.4}  {p:.4}  {bar}",
            ell as f64 / states as f64
        );
    }
    println!("\nsum of probabilities: {:.12}", probs.iter().sum::<f64>());

    // an on-grid phase collapses to a single certain outcome
    let delta: Vec<f64> = (0..states as u64)
        .map(|ell| analytic_amplitude(0.25, ell, states).norm_sqr())
        .collect();
    println!("theta = 1/4 (on the grid): P(l=4) = {}", delta[4]);
}
