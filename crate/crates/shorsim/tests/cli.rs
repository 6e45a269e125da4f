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

//! End-to-end checks of the command-line interface, including golden
//! trace blocks that match the classic printed output format.

use std::process::{Command, Output};

fn shorsim(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_shorsim"))
        .args(args)
        .output()
        .expect("failed to launch shorsim")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

#[test]
fn factor_error_injected_golden_blocks() {
    let out = shorsim(&[
        "factor",
        "--n",
        "15",
        "--a",
        "8",
        "--m",
        "9",
        "--error-inject",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let golden_first = "\
l_measured   : 000000001 1
phi_phase_bin: 0.000000001
phi_phase_dec: 0.001953125
phi: (1, 512)
cont frac of phi  : [0, 512]
convergents of phi: [(0, 1), (1, 512)]
conv: (0, 1) r = 1 : no factors found
conv: (1, 512) r = 512 : no factors found
";
    let golden_second = "\
l_measured   : 010000001 129
phi_phase_bin: 0.010000001
phi_phase_dec: 0.251953125
phi: (129, 512)
cont frac of phi  : [0, 3, 1, 31, 4]
convergents of phi: [(0, 1), (1, 3), (1, 4), (32, 127), (129, 512)]
conv: (0, 1) r = 1 : no factors found
conv: (1, 3) r = 3 : no factors found
conv: (1, 4) r = 4 : factors
factor1: 3
factor2: 5
conv: (32, 127) r = 127 : no factors found
conv: (129, 512) r = 512 : no factors found
";
    // every dominant peak is traced, so the classic 385 walk shows up
    // after the run has already succeeded at 129
    let golden_fourth = "\
l_measured   : 110000001 385
phi_phase_bin: 0.110000001
phi_phase_dec: 0.751953125
phi: (385, 512)
cont frac of phi  : [0, 1, 3, 31, 1, 3]
convergents of phi: [(0, 1), (1, 1), (3, 4), (94, 125), (97, 129), (385, 512)]
conv: (0, 1) r = 1 : no factors found
conv: (1, 1) r = 1 : no factors found
conv: (3, 4) r = 4 : factors
factor1: 3
factor2: 5
conv: (94, 125) r = 125 : no factors found
conv: (97, 129) r = 129 : no factors found
conv: (385, 512) r = 512 : no factors found
";
    assert!(
        text.contains(golden_first),
        "missing first golden block:\n{text}"
    );
    assert!(
        text.contains(golden_second),
        "missing second golden block:\n{text}"
    );
    assert!(
        text.contains(golden_fourth),
        "missing fourth golden block:\n{text}"
    );
}

#[test]
fn factor_clean_run_traces_every_dominant_peak() {
    let out = shorsim(&["factor", "--n", "15", "--a", "8", "--m", "9"]);
    assert!(out.status.success());
    let text = stdout(&out);
    // the run succeeds at l = 128 but still walks the 3/4 peak
    assert!(text.contains("conv: (1, 4) r = 4 : factors"));
    assert!(text.contains("conv: (3, 4) r = 4 : factors"));
    assert!(text.contains("conv: (1, 2) r = 2 : no factors found"));
}

#[test]
fn factor_n21_golden_block() {
    let out = shorsim(&["factor", "--n", "21", "--a", "2", "--m", "5"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let golden = "\
l_measured   : 00101 5
phi_phase_bin: 0.00101
phi_phase_dec: 0.15625
phi: (5, 32)
cont frac of phi  : [0, 6, 2, 2]
convergents of phi: [(0, 1), (1, 6), (2, 13), (5, 32)]
conv: (0, 1) r = 1 : no factors found
conv: (1, 6) r = 6 : factors
factor1: 7
factor2: 3
conv: (2, 13) r = 13 : no factors found
conv: (5, 32) r = 32 : no factors found
";
    assert!(text.contains(golden), "missing golden block:\n{text}");
}

#[test]
fn contfrac_golden_lines() {
    let out = shorsim(&["contfrac", "--num", "385", "--den", "512"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "cont frac of phi  : [0, 1, 3, 31, 1, 3]\n\
         convergents of phi: [(0, 1), (1, 1), (3, 4), (94, 125), (97, 129), (385, 512)]\n"
    );

    let out = shorsim(&["contfrac", "--num", "31415", "--den", "10000"]);
    assert!(stdout(&out).contains("[3, 7, 14, 1, 8, 2]"));

    let out = shorsim(&["contfrac", "--num", "0", "--den", "1"]);
    let text = stdout(&out);
    assert!(text.contains("[0]"));
    assert!(text.contains("(0, 1)"));
}

#[test]
fn identical_flags_and_seed_are_byte_identical() {
    let args = [
        "factor", "--n", "21", "--a", "2", "--m", "5", "--shots", "4096", "--seed", "7",
    ];
    let first = shorsim(&args);
    let second = shorsim(&args);
    assert_eq!(first.stdout, second.stdout);
    assert!(stdout(&first).contains("frequency:"));
}

#[test]
fn invalid_modulus_exits_with_error() {
    let out = shorsim(&["factor", "--n", "9"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("prime power"), "stderr: {err}");

    let out = shorsim(&["factor", "--n", "14"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn order_subcommand() {
    let out = shorsim(&["order", "--n", "33", "--a", "7"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "order of 7 mod 33 = 10\n");
}

#[test]
fn synth_subcommand_cycles() {
    let out = shorsim(&["synth", "--n", "21", "--a", "2", "--p", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "[1, 4, 16]\n[2, 8, 11]\n");

    let out = shorsim(&["synth", "--n", "143", "--a", "5", "--p", "16"]);
    assert!(stdout(&out).contains("[1, 27, 14, 92, 53]"));

    // --p 1 gives the full orbit of 1
    let out = shorsim(&["synth", "--n", "21", "--a", "2", "--p", "1"]);
    assert_eq!(stdout(&out), "[1, 2, 4, 8, 16, 11]\n");

    let out = shorsim(&["synth", "--n", "21", "--a", "2", "--p", "2", "--lower"]);
    assert!(stdout(&out).contains("lowered gate count:"));
}

#[test]
fn histogram_csv_and_out_dir() {
    let dir = std::env::temp_dir().join(format!("shorsim-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_shorsim"))
        .args([
            "histogram",
            "--n",
            "15",
            "--a",
            "8",
            "--m",
            "5",
            "--theory",
            "--csv",
            "hist.csv",
        ])
        .env("SHORSIM_OUT_DIR", &dir)
        .output()
        .unwrap();
    assert!(out.status.success());
    let csv = std::fs::read_to_string(dir.join("hist.csv")).unwrap();
    assert!(csv.starts_with("index,bitstring,probability,count\n"));
    assert!(csv.contains("8,01000,0.25,0"));
    let text = stdout(&out);
    assert!(text.contains("dominant peaks    : [0, 8, 16, 24]"));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn histogram_theory_vs_simulate_diff() {
    let out = shorsim(&[
        "histogram",
        "--n",
        "33",
        "--a",
        "7",
        "--m",
        "6",
        "--theory",
        "--simulate",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("dominant peaks    : [0, 6, 13, 19, 26, 32, 38, 45, 51, 58]"));
    let diff_line = text
        .lines()
        .find(|l| l.starts_with("max |theory - simulated|"))
        .unwrap();
    let value: f64 = diff_line.split('=').nth(1).unwrap().trim().parse().unwrap();
    assert!(value <= 1e-9);
}

#[test]
fn export_qasm_is_deterministic() {
    let first = shorsim(&["export-qasm", "--kind", "qft", "--m", "3"]);
    let second = shorsim(&["export-qasm", "--kind", "qft", "--m", "3"]);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
    let text = stdout(&first);
    assert!(text.starts_with("OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[3];\n"));
    assert!(text.contains("h q[2];"));
    assert!(text.contains("cp(pi/2) q[1],q[2];"));
    assert!(text.contains("swap q[0],q[2];"));

    // a full lowered factoring circuit also exports cleanly
    let out = shorsim(&[
        "export-qasm",
        "--kind",
        "shor",
        "--m",
        "3",
        "--n",
        "15",
        "--a",
        "8",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("qreg q[7];"));
    assert!(text.contains("ccx"));
}

#[test]
fn factor_json_report_parses() {
    let dir = std::env::temp_dir().join(format!("shorsim-json-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = shorsim(&[
        "factor",
        "--n",
        "15",
        "--a",
        "8",
        "--m",
        "5",
        "--json",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(value["config"]["n"], 15);
    assert_eq!(value["base"], 8);
    assert_eq!(value["outcome"]["Factors"]["f1"], 3);
    assert_eq!(value["outcome"]["Factors"]["f2"], 5);
    assert!(value["traces"].as_array().unwrap().iter().any(|t| {
        t["rows"]
            .as_array()
            .unwrap()
            .iter()
            .any(|row| row["verdict"]["kind"] == "Factors")
    }));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn validate_subcommand() {
    let out = shorsim(&["validate", "--n", "15", "--a", "8", "--m", "5"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("PASS"));
}
