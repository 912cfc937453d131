//! Command line driver: multiply and add on the simulators, batch
//! verification, metrics comparison, and circuit emission.
//!
//! Exit codes: 0 success, 1 verification found mismatches, 2 bad usage or
//! out-of-range arguments, 3 circuit too wide for dense simulation,
//! 4 I/O or serialization trouble.

use clap::{Parser, Subcommand, ValueEnum};
use qmul_core::adder::{default_carry_count, parallel_adder, AdderPlan};
use qmul_core::multiplier::{build_baseline_multiplier_with, build_multiplier_with, run_multiplier};
use qmul_core::verify::{run_suite, Sampling, SuiteOptions};
use qmul_core::{
    compute_metrics, to_qasm, Circuit, Error, HybridState, QftStyle, SimMode, StateVector,
    DEFAULT_DENSE_LIMIT,
};
use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "qmul", version, about = "Quantum Toffoli/QFT multiplier toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Multiply two n-bit numbers on the simulated circuit.
    Multiply {
        /// Operand width in bits.
        #[arg(long)]
        n: usize,
        #[arg(long)]
        x: u64,
        #[arg(long)]
        y: u64,
        /// Simulator choice; auto picks dense when the circuit fits.
        #[arg(long, value_enum, default_value_t = ModeArg::Auto)]
        mode: ModeArg,
        /// Emit the outcome as JSON instead of a sentence.
        #[arg(long)]
        json: bool,
    },
    /// Sum a list of values through one Fourier-space adder pass.
    Add {
        /// Payload width in bits; every value must fit in it.
        #[arg(long)]
        bits: usize,
        /// First value loads the accumulator, the rest are addends.
        #[arg(long, value_delimiter = ',', required = true)]
        values: Vec<u64>,
        /// Carry wires above the payload. Defaults to enough headroom
        /// for the worst-case sum; 0 makes the sum wrap mod 2^bits.
        #[arg(long)]
        t: Option<usize>,
    },
    /// Check simulated products against classical arithmetic.
    Verify {
        #[arg(long)]
        n: usize,
        /// Sweep every operand pair (the default up to n=6).
        #[arg(long, conflicts_with = "samples")]
        exhaustive: bool,
        /// Draw this many random pairs instead (the default above n=6,
        /// with 1000 pairs).
        #[arg(long)]
        samples: Option<usize>,
        /// Seed for random sampling.
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = ModeArg::Auto)]
        mode: ModeArg,
        /// Write the full JSON report here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare gate counts between the parallel and sequential designs.
    Metrics {
        #[arg(long)]
        n: usize,
    },
    /// Emit the multiplier circuit as JSON or OpenQASM 3.
    Emit {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        format: EmitFormat,
        /// Write to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Use the transform convention with final wire-reversal swaps.
        #[arg(long)]
        swaps: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Auto,
    Dense,
    Hybrid,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EmitFormat {
    Json,
    Qasm,
}

enum AppError {
    Core(Error),
    Io(std::io::Error),
}

impl fmt::Display for AppError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AppError::Core(e) => write!(f, "{e}"),
            AppError::Io(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for AppError {
    fn from(e: Error) -> Self {
        AppError::Core(e)
    }
}

impl From<std::io::Error> for AppError {
    fn from(e: std::io::Error) -> Self {
        AppError::Io(e)
    }
}

impl AppError {
    fn exit_code(&self) -> ExitCode {
        match self {
            AppError::Core(Error::Domain(_)) | AppError::Core(Error::Structural(_)) => {
                ExitCode::from(2)
            }
            AppError::Core(Error::Capacity { .. }) => ExitCode::from(3),
            AppError::Core(Error::Serialization(_)) | AppError::Io(_) => ExitCode::from(4),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

/// Dense amplitude budget in qubits, overridable for constrained or
/// generous machines.
fn dense_limit() -> Result<usize, AppError> {
    match std::env::var("QMUL_DENSE_LIMIT") {
        Ok(raw) => raw.trim().parse::<usize>().map_err(|_| {
            AppError::Core(Error::Domain(format!(
                "QMUL_DENSE_LIMIT must be a qubit count, got {raw:?}"
            )))
        }),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_DENSE_LIMIT),
        Err(e) => Err(AppError::Core(Error::Domain(format!(
            "QMUL_DENSE_LIMIT is unreadable: {e}"
        )))),
    }
}

fn resolve_mode(arg: ModeArg, total_qubits: usize, limit: usize) -> SimMode {
    match arg {
        ModeArg::Dense => SimMode::Dense,
        ModeArg::Hybrid => SimMode::Hybrid,
        ModeArg::Auto => {
            if total_qubits <= limit.min(63) {
                SimMode::Dense
            } else {
                SimMode::Hybrid
            }
        }
    }
}

fn run(command: Command) -> Result<ExitCode, AppError> {
    match command {
        Command::Multiply { n, x, y, mode, json } => multiply(n, x, y, mode, json),
        Command::Add { bits, values, t } => add(bits, &values, t),
        Command::Verify {
            n,
            exhaustive,
            samples,
            seed,
            mode,
            out,
        } => verify(n, exhaustive, samples, seed, mode, out),
        Command::Metrics { n } => metrics(n),
        Command::Emit {
            n,
            format,
            out,
            swaps,
        } => emit(n, format, out, swaps),
    }
}

fn multiply(n: usize, x: u64, y: u64, mode: ModeArg, json: bool) -> Result<ExitCode, AppError> {
    let limit = dense_limit()?;
    let mult = build_multiplier_with(n, QftStyle::default())?;
    let mode = resolve_mode(mode, mult.layout().total_qubits(), limit);
    let outcome = run_multiplier(&mult, x, y, mode, limit)?;
    if json {
        let doc = serde_json::json!({
            "n": n,
            "x": x,
            "y": y,
            "product": outcome.product,
            "probability": outcome.probability,
            "mode": mode,
            "qubits": mult.layout().total_qubits(),
        });
        println!("{doc}");
    } else {
        println!(
            "{x} \u{00d7} {y} = {} (p={:.6})",
            outcome.product, outcome.probability
        );
    }
    Ok(ExitCode::SUCCESS)
}

fn add(bits: usize, values: &[u64], t: Option<usize>) -> Result<ExitCode, AppError> {
    if bits == 0 || bits > 62 {
        return Err(AppError::Core(Error::Domain(
            "payload width must be between 1 and 62 bits".to_string(),
        )));
    }
    for &v in values {
        if v >> bits != 0 {
            return Err(AppError::Core(Error::Domain(format!(
                "value {v} does not fit in {bits} bits"
            ))));
        }
    }
    let addend_count = values.len() - 1;
    let carries = t.unwrap_or_else(|| default_carry_count(addend_count));
    let acc_width = bits + carries;
    if acc_width > 63 {
        return Err(AppError::Core(Error::Domain(format!(
            "accumulator of {acc_width} wires exceeds the 63-bit readout range"
        ))));
    }

    let accumulator: Vec<usize> = (0..acc_width).collect();
    let addends: Vec<Vec<usize>> = (0..addend_count)
        .map(|i| {
            let base = acc_width + i * bits;
            (base..base + bits).collect()
        })
        .collect();
    let total = acc_width + addend_count * bits;
    let plan = AdderPlan::with_carry_count(accumulator.clone(), addends.clone(), carries)?;
    let circuit = parallel_adder(&plan, total)?;

    let mut bits_init = vec![false; total];
    for (b, slot) in bits_init.iter_mut().enumerate().take(acc_width) {
        *slot = (values[0] >> b) & 1 == 1;
    }
    for (i, reg) in addends.iter().enumerate() {
        for (b, &wire) in reg.iter().enumerate() {
            bits_init[wire] = (values[i + 1] >> b) & 1 == 1;
        }
    }

    let limit = dense_limit()?;
    let (sum, probability) = if total <= limit.min(63) {
        let value = bits_init
            .iter()
            .enumerate()
            .fold(0u64, |acc, (q, &b)| acc | ((b as u64) << q));
        let mut state = StateVector::basis_with_limit(total, value, limit)?;
        state.run(&circuit)?;
        state.readout(&accumulator)
    } else {
        let mut state = HybridState::from_bits(bits_init)?;
        state.run(&circuit)?;
        state.readout(&accumulator)?
    };

    let rendered: Vec<String> = values.iter().map(u64::to_string).collect();
    println!("{} = {sum} (p={probability:.6})", rendered.join(" + "));
    Ok(ExitCode::SUCCESS)
}

fn verify(
    n: usize,
    exhaustive: bool,
    samples: Option<usize>,
    seed: u64,
    mode: ModeArg,
    out: Option<PathBuf>,
) -> Result<ExitCode, AppError> {
    let limit = dense_limit()?;
    let mult = build_multiplier_with(n, QftStyle::default())?;
    let mode = resolve_mode(mode, mult.layout().total_qubits(), limit);
    let sampling = if exhaustive {
        Sampling::Exhaustive
    } else if let Some(count) = samples {
        Sampling::Random { count, seed }
    } else if n <= 6 {
        Sampling::Exhaustive
    } else {
        Sampling::Random { count: 1000, seed }
    };

    let report = run_suite(
        n,
        &SuiteOptions {
            mode,
            sampling,
            dense_limit: limit,
        },
    )?;

    let mode_name = match mode {
        SimMode::Dense => "dense",
        SimMode::Hybrid => "hybrid",
    };
    if report.passed() {
        println!(
            "verified {} products at n={n} ({mode_name}): all match",
            report.cases_run
        );
    } else {
        println!(
            "verified {} products at n={n} ({mode_name}): {} FAILED",
            report.cases_run,
            report.failures.len()
        );
        for f in report.failures.iter().take(5) {
            println!(
                "  {} \u{00d7} {} expected {} got {} (p={:.6})",
                f.x, f.y, f.expected, f.got, f.probability
            );
        }
    }
    println!(
        "  transform pairs saved vs sequential baseline: {}",
        report.transform_pairs_saved
    );
    println!("  elapsed: {:.3} s", report.elapsed_seconds);

    if let Some(path) = out {
        let json = serde_json::to_string_pretty(&report)
            .map_err(|e| AppError::Core(Error::Serialization(e.to_string())))?;
        std::fs::write(&path, json + "\n")?;
        println!("  report written to {}", path.display());
    }

    Ok(if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn metrics(n: usize) -> Result<ExitCode, AppError> {
    let rows = [
        ("proposed, swap-free", false, QftStyle::SwapFree),
        ("proposed, with swaps", false, QftStyle::WithSwaps),
        ("baseline, swap-free", true, QftStyle::SwapFree),
        ("baseline, with swaps", true, QftStyle::WithSwaps),
    ];
    let mut qubits = 0;
    let mut table = Vec::new();
    for (label, baseline, style) in rows {
        let mult = if baseline {
            build_baseline_multiplier_with(n, style)?
        } else {
            build_multiplier_with(n, style)?
        };
        let m = compute_metrics(mult.circuit());
        qubits = m.qubit_count;
        table.push((label, m));
    }

    println!("multiplier metrics at n={n} ({qubits} qubits)");
    println!(
        "{:<22} {:>6} {:>6} {:>5} {:>7} {:>5} {:>8} {:>4} {:>5}",
        "design", "gates", "depth", "h", "cphase", "swap", "toffoli", "qft", "iqft"
    );
    for (label, m) in table {
        println!(
            "{:<22} {:>6} {:>6} {:>5} {:>7} {:>5} {:>8} {:>4} {:>5}",
            label, m.gate_count, m.depth, m.h, m.cphase, m.swap, m.toffoli, m.qft_blocks,
            m.iqft_blocks
        );
    }
    Ok(ExitCode::SUCCESS)
}

fn emit(
    n: usize,
    format: EmitFormat,
    out: Option<PathBuf>,
    swaps: bool,
) -> Result<ExitCode, AppError> {
    let style = if swaps {
        QftStyle::WithSwaps
    } else {
        QftStyle::SwapFree
    };
    let mult = build_multiplier_with(n, style)?;
    let text = match format {
        EmitFormat::Json => render_json(mult.circuit())?,
        EmitFormat::Qasm => to_qasm(mult.circuit()),
    };
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn render_json(circuit: &Circuit) -> Result<String, AppError> {
    Ok(circuit.to_json()? + "\n")
}
