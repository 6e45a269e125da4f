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

//! Continued fractions at work: expansion, convergents, and period
//! extraction from a measured phase.
//!
//! ```text
//! cargo run --example continued_fractions
//! ```

use shorsim::contfrac::{convergents, expand, extract_period, Rational};

fn main() {
    // a rational approximation of pi expands to [3; 7, 14, 1, 8, 2]
    let pi_ish = Rational::new(31415, 10000).unwrap();
    let cf = expand(pi_ish);
    println!("31415/10000 = {:?}", cf.coefficients());
    for c in convergents(&cf) {
        println!(
            "  convergent {:>2}: {}/{} = {:.10}",
            c.index,
            c.p,
            c.q,
            c.p as f64 / c.q as f64
        );
    }

    // a measured 9-bit phase from a run on N = 15 with base 8: walking
    // the convergents of 385/512 recovers the period r = 4
    println!();
    let ex = extract_period(385, 9, 8, 15).unwrap();
    println!(
        "measured l = 385 on 9 control qubits, phase {} = {}",
        ex.phi,
        ex.phi.as_f64()
    );
    println!("coefficients: {:?}", ex.coefficients);
    for row in &ex.rows {
        let (s, r) = row.convergent;
        match row.verdict.factors() {
            Some((f1, f2)) if s != 0 => println!("  {s}/{r}: period {r} -> factors {f1} x {f2}"),
            _ => println!("  {s}/{r}: rejected ({:?})", row.verdict),
        }
    }
    println!("extracted period: {:?}", ex.period);
}
