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

//! OpenQASM 2.0 circuit export.
//!
//! Emits a self-contained program over the `qelib1.inc` gate set:
//! `h`, `x`, `p`, `cp`, `swap`, `cx`, `ccx`. Multi-controlled X gates
//! with more than two controls are lowered by the standard ancilla-free
//! recursion through multi-controlled phases. Output is deterministic:
//! identical circuits produce byte-identical text, and circuits built in
//! the physics convention are converted to OpenQASM wire order first.

use std::fmt::Write as _;

use crate::circuit::{Circuit, Convention, Gate};
use crate::error::Error;
use crate::Result;

/// Renders a circuit as OpenQASM 2.0 text.
///
/// Controlled work permutations must be lowered first (see
/// [`Circuit::lower_permutations`]); an unlowered gate aborts the export
/// and names the offending label.
pub fn export_circuit_text(circuit: &Circuit) -> Result<String> {
    let circuit = circuit.convert_convention(Convention::Qiskit);
    let mut out = String::new();
    out.push_str("OPENQASM 2.0;\n");
    out.push_str("include \"qelib1.inc\";\n");
    let _ = writeln!(out, "qreg q[{}];", circuit.num_qubits());
    for gate in circuit.gates() {
        emit_gate(gate, &mut out)?;
    }
    Ok(out)
}

fn emit_gate(gate: &Gate, out: &mut String) -> Result<()> {
    match gate {
        Gate::H(q) => {
            let _ = writeln!(out, "h q[{q}];");
        }
        Gate::X(q) => {
            let _ = writeln!(out, "x q[{q}];");
        }
        Gate::Phase { theta, target } => {
            let _ = writeln!(out, "p({}) q[{target}];", angle(*theta));
        }
        Gate::ControlledPhase {
            theta,
            control,
            target,
        } => {
            let _ = writeln!(out, "cp({}) q[{control}],q[{target}];", angle(*theta));
        }
        Gate::Swap(a, b) => {
            let _ = writeln!(out, "swap q[{a}],q[{b}];");
        }
        Gate::MultiControlledX {
            controls,
            polarities,
            target,
        } => {
            // conjugate zero-polarity controls with X
            let flips: Vec<usize> = controls
                .iter()
                .zip(polarities)
                .filter(|(_, &pol)| !pol)
                .map(|(&q, _)| q)
                .collect();
            for &q in &flips {
                let _ = writeln!(out, "x q[{q}];");
            }
            emit_mcx(controls, *target, out);
            for &q in &flips {
                let _ = writeln!(out, "x q[{q}];");
            }
        }
        Gate::ControlledWorkPermutation { label, .. } => {
            return Err(Error::UnloweredPermutation {
                label: label.clone(),
            });
        }
    }
    Ok(())
}

/// Multi-controlled X over `qelib1.inc` primitives.
fn emit_mcx(controls: &[usize], target: usize, out: &mut String) {
    match controls.len() {
        0 => {
            let _ = writeln!(out, "x q[{target}];");
        }
        1 => {
            let _ = writeln!(out, "cx q[{}],q[{target}];", controls[0]);
        }
        2 => {
            let _ = writeln!(
                out,
                "ccx q[{}],q[{}],q[{target}];",
                controls[0], controls[1]
            );
        }
        _ => {
            // X = H·Z·H, so C^nX is a multi-controlled phase of pi
            // sandwiched between Hadamards on the target.
            let _ = writeln!(out, "h q[{target}];");
            let mut qubits = controls.to_vec();
            qubits.push(target);
            emit_mcp(std::f64::consts::PI, &qubits, out);
            let _ = writeln!(out, "h q[{target}];");
        }
    }
}

/// Phase `theta` on the component with every listed qubit set,
/// by the textbook recursion
/// `MCP(θ; c…, b, t) = CP(θ/2; b,t) · MCX(c…; b) · CP(−θ/2; b,t)
///  · MCX(c…; b) · MCP(θ/2; c…, t)`.
fn emit_mcp(theta: f64, qubits: &[usize], out: &mut String) {
    match qubits.len() {
        0 => {}
        1 => {
            let _ = writeln!(out, "p({}) q[{}];", angle(theta), qubits[0]);
        }
        2 => {
            let _ = writeln!(
                out,
                "cp({}) q[{}],q[{}];",
                angle(theta),
                qubits[0],
                qubits[1]
            );
        }
        n => {
            let target = qubits[n - 1];
            let bridge = qubits[n - 2];
            let rest = &qubits[..n - 2];
            let _ = writeln!(out, "cp({}) q[{bridge}],q[{target}];", angle(theta / 2.0));
            emit_mcx(rest, bridge, out);
            let _ = writeln!(out, "cp({}) q[{bridge}],q[{target}];", angle(-theta / 2.0));
            emit_mcx(rest, bridge, out);
            let mut reduced = rest.to_vec();
            reduced.push(target);
            emit_mcp(theta / 2.0, &reduced, out);
        }
    }
}

/// Formats an angle, preferring the exact `pi/2^k` form the QFT uses.
fn angle(theta: f64) -> String {
    let t = theta / std::f64::consts::PI;
    for k in 0..63u32 {
        let denom = (1u64 << k) as f64;
        if t * denom == 1.0 {
            return if k == 0 {
                "pi".to_string()
            } else {
                format!("pi/{}", 1u64 << k)
            };
        }
        if t * denom == -1.0 {
            return if k == 0 {
                "-pi".to_string()
            } else {
                format!("-pi/{}", 1u64 << k)
            };
        }
    }
    format!("{theta:?}")
}
