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

//! Builds the 3-qubit QFT circuit, prints its dense matrix, and checks
//! it against the discrete Fourier kernel.
//!
//! ```text
//! cargo run --example qft_matrix
//! ```

use num_complex::Complex64;
use shorsim::circuit::Convention;
use shorsim::qft::{build_qft, QftParams};

fn main() {
    let m = 3;
    let circuit = build_qft(&QftParams::new(m, Convention::Qiskit)).unwrap();
    println!(
        "{}-qubit QFT: {} gates (m(m+1)/2 H and controlled rotations plus swaps)\n",
        m,
        circuit.len()
    );

    let matrix = circuit.unitary().unwrap();
    let dim = 1usize << m;
    for row in &matrix {
        let cells: Vec<String> = row
            .iter()
            .map(|z| format!("{:>6.3}{:+.3}i", z.re, z.im))
            .collect();
        println!("[ {} ]", cells.join("  "));
    }

    let mut worst: f64 = 0.0;
    for (r, row) in matrix.iter().enumerate() {
        for (c, z) in row.iter().enumerate() {
            let angle = 2.0 * std::f64::consts::PI * (r as f64) * (c as f64) / dim as f64;
            let kernel = Complex64::from_polar(1.0 / (dim as f64).sqrt(), angle);
            worst = worst.max((z - kernel).norm());
        }
    }
    println!("\nmax deviation from (1/sqrt(M)) exp(2*pi*i*k*l/M): {worst:.3e}");
}
