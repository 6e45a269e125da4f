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

//! Command-line front end.
//!
//! Thin dispatch over the library: factoring runs, histogram emission,
//! continued-fraction utilities, operator synthesis inspection, and
//! circuit export. Trace output mirrors the classic printed form so
//! published worked examples double as golden files.
//!
//! The optional environment variable `SHORSIM_OUT_DIR` selects the
//! directory that relative output paths (`--json`, `--csv`, `--out`)
//! resolve into.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use shorsim::circuit::Convention;
use shorsim::contfrac::{self, Extraction, PeriodCheck, Rational};
use shorsim::modexp::{self, MeVersion};
use shorsim::qasm::export_circuit_text;
use shorsim::qft::{build_iqft, build_qft, QftParams};
use shorsim::shor::{
    self, histogram_csv, run, theoretical_histogram, Outcome, RunReport, ShorConfig,
};
use shorsim::tol;

const OUT_DIR_ENV: &str = "SHORSIM_OUT_DIR";

#[derive(Parser)]
#[command(
    name = "shorsim",
    version,
    about = "Factor small semiprimes on an exact state-vector simulator"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the end-to-end factoring pipeline.
    Factor(FactorArgs),
    /// Emit the control-register distribution as CSV and/or a bar chart.
    Histogram(HistogramArgs),
    /// Continued-fraction expansion and convergents of a rational.
    Contfrac(ContfracArgs),
    /// Multiplicative order of a base modulo N.
    Order(OrderArgs),
    /// Inspect modular-exponentiation operator cycles.
    Synth(SynthArgs),
    /// Export a circuit as OpenQASM 2.0.
    ExportQasm(ExportArgs),
    /// Compare simulated distributions against the closed-form model.
    Validate(ValidateArgs),
}

#[derive(Args)]
struct FactorArgs {
    #[arg(long)]
    n: u64,
    #[arg(long)]
    a: Option<u64>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long, default_value_t = 0)]
    uver: u8,
    #[arg(long)]
    shots: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    error_inject: bool,
    /// Write the full run report as JSON.
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Args)]
struct HistogramArgs {
    #[arg(long)]
    n: u64,
    #[arg(long)]
    a: u64,
    #[arg(long)]
    m: usize,
    #[arg(long, default_value_t = 0)]
    uver: u8,
    /// Use the closed-form model.
    #[arg(long)]
    theory: bool,
    /// Use the state-vector simulator.
    #[arg(long)]
    simulate: bool,
    #[arg(long)]
    csv: Option<PathBuf>,
    #[arg(long)]
    ascii: bool,
}

#[derive(Args)]
struct ContfracArgs {
    #[arg(long)]
    num: u64,
    #[arg(long)]
    den: u64,
}

#[derive(Args)]
struct OrderArgs {
    #[arg(long)]
    n: u64,
    #[arg(long)]
    a: u64,
}

#[derive(Args)]
struct SynthArgs {
    #[arg(long)]
    n: u64,
    #[arg(long)]
    a: u64,
    #[arg(long)]
    p: u64,
    #[arg(long, default_value_t = 1)]
    uver: u8,
    /// Also lower the operator to X/multi-controlled-X gates and report
    /// the gate count.
    #[arg(long)]
    lower: bool,
}

#[derive(Args)]
struct ExportArgs {
    /// Circuit kind: qft, iqft, or shor.
    #[arg(long)]
    kind: String,
    #[arg(long)]
    m: usize,
    #[arg(long)]
    n: Option<u64>,
    #[arg(long)]
    a: Option<u64>,
    #[arg(long, default_value_t = 0)]
    uver: u8,
    /// Output path; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ValidateArgs {
    #[arg(long)]
    n: Option<u64>,
    #[arg(long)]
    a: Option<u64>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long, default_value_t = 0)]
    uver: u8,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Factor(args) => cmd_factor(args),
        Command::Histogram(args) => cmd_histogram(args),
        Command::Contfrac(args) => cmd_contfrac(args),
        Command::Order(args) => cmd_order(args),
        Command::Synth(args) => cmd_synth(args),
        Command::ExportQasm(args) => cmd_export_qasm(args),
        Command::Validate(args) => cmd_validate(args),
    };
    match result {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn resolve_out_path(path: &Path) -> PathBuf {
    if path.is_absolute() {
        return path.to_path_buf();
    }
    match std::env::var_os(OUT_DIR_ENV) {
        Some(dir) => PathBuf::from(dir).join(path),
        None => path.to_path_buf(),
    }
}

fn parse_version(uver: u8) -> Result<MeVersion, shorsim::Error> {
    MeVersion::from_index(uver).ok_or(shorsim::Error::CircuitMismatch(format!(
        "unknown u_ver {uver}; expected 0, 1 or 2"
    )))
}

/// Prints one extraction trace in the classic block format.
fn print_trace(ex: &Extraction, frequency: Option<u64>) {
    let m = ex.control_qubits as usize;
    let bits = format!("{:0width$b}", ex.ell, width = m);
    match frequency {
        Some(f) => println!("l_measured   : {bits} {} frequency: {f}", ex.ell),
        None => println!("l_measured   : {bits} {}", ex.ell),
    }
    println!("phi_phase_bin: 0.{bits}");
    println!("phi_phase_dec: {}", ex.ell as f64 / (1u64 << m) as f64);
    println!("phi: ({}, {})", ex.phi.numerator(), ex.phi.denominator());
    println!("cont frac of phi  : {}", format_list(&ex.coefficients));
    println!(
        "convergents of phi: [{}]",
        ex.rows
            .iter()
            .map(|row| format!("({}, {})", row.convergent.0, row.convergent.1))
            .collect::<Vec<_>>()
            .join(", ")
    );
    for row in &ex.rows {
        let (s, r) = row.convergent;
        match row.verdict {
            PeriodCheck::Factors { f1, f2 } if s != 0 => {
                println!("conv: ({s}, {r}) r = {r} : factors");
                println!("factor1: {f1}");
                println!("factor2: {f2}");
            }
            _ => println!("conv: ({s}, {r}) r = {r} : no factors found"),
        }
    }
}

fn format_list(values: &[u64]) -> String {
    format!(
        "[{}]",
        values
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    )
}

fn print_report(report: &RunReport) {
    // counts belong to the sampled index, before any injected LSB error
    let frequency = |ell: u64| -> Option<u64> {
        report.config.shots?;
        let states = 1u64 << report.control_qubits;
        let sampled = if report.config.error_inject {
            (ell + states - 1) % states
        } else {
            ell
        };
        report
            .histogram
            .iter()
            .find(|row| row.index == sampled)
            .map(|row| row.count)
    };
    for (i, trace) in report.traces.iter().enumerate() {
        if i > 0 {
            println!();
        }
        print_trace(trace, frequency(trace.ell));
    }
    println!();
    match &report.outcome {
        Outcome::Factors {
            f1,
            f2,
            period,
            from_index,
        } => {
            println!(
                "N = {} = {} x {}   (base a = {}, period r = {period}, from l = {from_index})",
                report.config.n, f1, f2, report.base
            );
        }
        Outcome::ClassicalFactor { a, f1, f2 } => {
            println!(
                "N = {} = {} x {}   (random base {} already shared a factor)",
                report.config.n, f1, f2, a
            );
        }
        Outcome::Failure { reason } => println!("no factors found: {reason}"),
    }
}

fn cmd_factor(args: FactorArgs) -> Result<ExitCode, shorsim::Error> {
    let mut config = ShorConfig::new(args.n)
        .with_seed(args.seed)
        .with_version(parse_version(args.uver)?);
    if let Some(a) = args.a {
        config = config.with_base(a);
    }
    if let Some(m) = args.m {
        config = config.with_control_qubits(m);
    }
    if let Some(shots) = args.shots {
        config = config.with_shots(shots);
    }
    if args.error_inject {
        config = config.with_error_injection();
    }
    let report = run(&config)?;
    print_report(&report);
    if let Some(path) = args.json {
        let path = resolve_out_path(&path);
        std::fs::write(&path, serde_json::to_string_pretty(&report).unwrap())?;
        println!("report written to {}", path.display());
    }
    Ok(match report.outcome {
        Outcome::Failure { .. } => ExitCode::from(1),
        _ => ExitCode::SUCCESS,
    })
}

fn cmd_histogram(args: HistogramArgs) -> Result<ExitCode, shorsim::Error> {
    let version = parse_version(args.uver)?;
    // default to the simulated distribution when neither flag is given
    let want_theory = args.theory || !args.simulate;
    let want_sim = args.simulate || !args.theory;

    let theory = if want_theory {
        Some(theoretical_histogram(args.a, args.n, args.m)?)
    } else {
        None
    };
    let simulated = if want_sim {
        let config = ShorConfig::new(args.n)
            .with_base(args.a)
            .with_control_qubits(args.m)
            .with_version(version);
        Some(run(&config)?.probabilities())
    } else {
        None
    };

    let shown = simulated.as_ref().or(theory.as_ref()).unwrap();
    let peaks = shor::classify_peaks(shown);
    println!("dominant peaks    : {}", format_list(&peaks.dominant));
    if !peaks.sub_dominant.is_empty() {
        println!("sub-dominant peaks: {}", format_list(&peaks.sub_dominant));
    }
    if args.ascii {
        print!("{}", shor::ascii_histogram(shown, 60));
    }
    if let (Some(t), Some(s)) = (&theory, &simulated) {
        let max_diff = t
            .iter()
            .zip(s)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0f64, f64::max);
        println!("max |theory - simulated| = {max_diff:.3e}");
    }
    if let Some(path) = args.csv {
        let rows: Vec<shor::HistogramRow> = shown
            .iter()
            .enumerate()
            .map(|(i, &p)| shor::HistogramRow {
                index: i as u64,
                probability: p,
                count: 0,
            })
            .collect();
        let path = resolve_out_path(&path);
        std::fs::write(&path, histogram_csv(&rows, args.m))?;
        println!("csv written to {}", path.display());
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_contfrac(args: ContfracArgs) -> Result<ExitCode, shorsim::Error> {
    let x = Rational::new(args.num, args.den)?;
    let cf = contfrac::expand(x);
    let convs = contfrac::convergents(&cf);
    println!("cont frac of phi  : {}", format_list(cf.coefficients()));
    println!(
        "convergents of phi: [{}]",
        convs
            .iter()
            .map(|c| format!("({}, {})", c.p, c.q))
            .collect::<Vec<_>>()
            .join(", ")
    );
    Ok(ExitCode::SUCCESS)
}

fn cmd_order(args: OrderArgs) -> Result<ExitCode, shorsim::Error> {
    let r = modexp::order_bruteforce(args.a, args.n)?;
    println!("order of {} mod {} = {}", args.a, args.n, r);
    Ok(ExitCode::SUCCESS)
}

fn cmd_synth(args: SynthArgs) -> Result<ExitCode, shorsim::Error> {
    let version = parse_version(args.uver)?;
    let spec = match version {
        MeVersion::Concatenated => modexp::MeSpec::concatenated(args.a, args.n, args.p)?,
        MeVersion::PerPowerCycles => modexp::MeSpec::per_power_cycles(args.a, args.n, args.p)?,
        MeVersion::Truncated => modexp::MeSpec::truncated_orbit_of_one(args.a, args.n, args.p)?,
    };
    for cycle in &spec.cycles {
        println!("{}", format_list(cycle));
    }
    if args.lower {
        let n_qubits = shor::work_qubits_for(args.n);
        let perm = modexp::build_me_operator(&spec, n_qubits)?;
        let work: Vec<usize> = (0..n_qubits).collect();
        let gates = shorsim::circuit::lower_permutation(&perm, &work);
        println!("lowered gate count: {}", gates.len());
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_export_qasm(args: ExportArgs) -> Result<ExitCode, shorsim::Error> {
    let text = match args.kind.as_str() {
        "qft" => export_circuit_text(&build_qft(&QftParams::new(args.m, Convention::Qiskit))?)?,
        "iqft" => export_circuit_text(&build_iqft(&QftParams::new(args.m, Convention::Qiskit))?)?,
        "shor" => {
            let (n, a) = match (args.n, args.a) {
                (Some(n), Some(a)) => (n, a),
                _ => {
                    return Err(shorsim::Error::CircuitMismatch(
                        "--kind shor requires --n and --a".into(),
                    ))
                }
            };
            let version = parse_version(args.uver)?;
            let n_work = shor::work_qubits_for(n);
            let powers = shor::controlled_powers(a, n, args.m, version)?;
            let work = shorsim::statevec::StateVector::new_basis_state(n_work, 1)?;
            let circuit = shorsim::qpe::assemble_qpe(args.m, &work, &powers, Convention::Qiskit)?;
            export_circuit_text(&circuit.lower_permutations())?
        }
        other => {
            return Err(shorsim::Error::CircuitMismatch(format!(
                "unknown circuit kind `{other}`; expected qft, iqft or shor"
            )))
        }
    };
    match args.out {
        Some(path) => {
            let path = resolve_out_path(&path);
            std::fs::write(&path, &text)?;
            println!("qasm written to {}", path.display());
        }
        None => print!("{text}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_validate(args: ValidateArgs) -> Result<ExitCode, shorsim::Error> {
    let configs: Vec<(u64, u64, usize)> = match (args.n, args.a, args.m) {
        (Some(n), Some(a), Some(m)) => vec![(n, a, m)],
        (None, None, None) => vec![
            (15, 2, 9),
            (15, 4, 9),
            (15, 7, 9),
            (15, 8, 9),
            (15, 8, 5),
            (15, 11, 9),
            (15, 13, 9),
            (21, 2, 5),
            (21, 2, 6),
            (21, 13, 6),
            (35, 4, 5),
            (33, 7, 6),
            (143, 5, 8),
            (143, 5, 9),
            (247, 2, 9),
        ],
        _ => {
            return Err(shorsim::Error::CircuitMismatch(
                "validate needs either all of --n/--a/--m or none".into(),
            ))
        }
    };
    let version = parse_version(args.uver)?;
    let mut all_ok = true;
    for (n, a, m) in configs {
        let theory = theoretical_histogram(a, n, m)?;
        let config = ShorConfig::new(n)
            .with_base(a)
            .with_control_qubits(m)
            .with_version(version);
        let simulated = run(&config)?.probabilities();
        let max_diff = theory
            .iter()
            .zip(&simulated)
            .map(|(x, y)| (x - y).abs())
            .fold(0.0f64, f64::max);
        let ok = version != MeVersion::Concatenated || max_diff <= tol::ANALYTIC_VS_SIM;
        all_ok &= ok;
        println!(
            "N={n:<4} a={a:<3} m={m:<3} u_ver={} max|diff|={max_diff:.3e} {}",
            version.index(),
            if ok { "PASS" } else { "FAIL" }
        );
    }
    Ok(if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
