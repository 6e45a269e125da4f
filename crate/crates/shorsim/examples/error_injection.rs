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

//! A simplified noise model: add 1 to the least significant bit of each
//! measured index. Continued fractions still recover the period from
//! half of the N = 15, a = 8 peaks.
//!
//! ```text
//! cargo run --example error_injection
//! ```

use shorsim::contfrac::extract_period;
use shorsim::shor::inject_lsb_error;

fn main() {
    let (a, n, m) = (8u64, 15u64, 9usize);
    println!("exact peaks for N = {n}, a = {a}, m = {m}: 0, 128, 256, 384");
    println!("with the LSB error each measurement comes back one higher:\n");
    for clean in [0u64, 128, 256, 384] {
        let noisy = inject_lsb_error(clean, m);
        let ex = extract_period(noisy, m as u32, a, n).unwrap();
        match (ex.period, ex.factors) {
            (Some(r), Some((f1, f2))) => println!(
                "l = {clean:>3} -> {noisy:>3}  phase {}  period {r}  factors {f1} x {f2}",
                ex.phi
            ),
            _ => println!("l = {clean:>3} -> {noisy:>3}  phase {}  no factors", ex.phi),
        }
    }
}
