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

//! The multiply operator's eigenstates and why the easy-to-prepare
//! work state |1> suffices: it is the uniform combination of all of
//! them.
//!
//! ```text
//! cargo run --example eigenstate_check
//! ```

use num_complex::Complex64;
use shorsim::modexp::{eigenstate, full_me_permutation, order_bruteforce};

fn main() {
    let (a, n, qubits) = (8u64, 15u64, 4usize);
    let r = order_bruteforce(a, n).unwrap();
    let perm = full_me_permutation(a, n, qubits).unwrap();
    let work: Vec<usize> = (0..qubits).collect();

    println!("U|w> = |{a}w mod {n}>, order r = {r}\n");
    for s in 0..r {
        let state = eigenstate(a, n, s, qubits).unwrap();
        let mut rotated = state.clone();
        rotated.apply_work_permutation(&work, &perm).unwrap();
        // recover the eigenvalue from the first nonzero amplitude
        let (i, amp) = state
            .amplitudes()
            .iter()
            .enumerate()
            .find(|(_, z)| z.norm() > 1e-9)
            .unwrap();
        let eigenvalue = rotated.amplitudes()[i] / amp;
        let expect = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * s as f64 / r as f64);
        println!(
            "U|u_{s}> = e^(2 pi i {s}/{r}) |u_{s}>   eigenvalue {:.4}{:+.4}i  (expected {:.4}{:+.4}i)",
            eigenvalue.re, eigenvalue.im, expect.re, expect.im
        );
    }

    // (1/sqrt(r)) sum_s |u_s> collapses onto the single basis state |1>
    let mut sum = vec![Complex64::new(0.0, 0.0); 1 << qubits];
    for s in 0..r {
        for (acc, amp) in sum
            .iter_mut()
            .zip(eigenstate(a, n, s, qubits).unwrap().amplitudes())
        {
            *acc += amp / (r as f64).sqrt();
        }
    }
    println!("\n(1/sqrt({r})) sum_s |u_s>:");
    for (w, amp) in sum.iter().enumerate() {
        if amp.norm() > 1e-9 {
            println!("  |{w}>  amplitude {:.6}", amp.re);
        }
    }
}
