//! Command-line reports over the entropy-accounting library.
//!
//! One subcommand, one report document on stdout. Exit codes: 0 on success,
//! 2 on usage errors, 1 on computation errors. Joule figures appear only
//! when `--temp` supplies a temperature.

mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::error::ErrorKind;
use clap::{CommandFactory, Parser, Subcommand, ValueEnum};

use landauer::bounds::{self, BoundReport, ProblemSpec};
use landauer::demon::{self, DemonConfig, DemonMode};
use landauer::entropy::{bits_to_joules, EntropyBits, Temperature};
use landauer::gate::{reduction_bits, standard_report, GateReport, StandardGate, TruthMap};
use landauer::ledger::{self, AlgorithmSpec};

use report::{Format, ReportDocument};

#[derive(Parser)]
#[command(
    name = "landauer",
    version,
    about = "Entropy accounting for computation: gate irreversibility, problem energy bounds, metered algorithm profiles, Maxwell demon experiments"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Report format
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,

    /// Temperature in kelvins; adds joule figures to the report
    #[arg(long, global = true)]
    temp: Option<f64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum ProblemArg {
    /// Max of n unordered numbers
    Max,
    /// Sorting n numbers
    Sort,
    /// Searching n sorted numbers
    Search,
    /// Multiplying two n x n matrices (element width --m required)
    Matmul,
    /// Adding two n-bit numbers
    Add,
    /// Multiplying two n-bit numbers
    Mul,
    /// Comparing two n-bit numbers
    Compare,
}

#[derive(Clone, Copy, ValueEnum)]
enum GateArg {
    CompareGt,
    Add,
    Mul,
    Toffoli,
    Fredkin,
    Identity,
    Erase,
}

impl From<GateArg> for StandardGate {
    fn from(arg: GateArg) -> StandardGate {
        match arg {
            GateArg::CompareGt => StandardGate::CompareGt,
            GateArg::Add => StandardGate::Add,
            GateArg::Mul => StandardGate::Mul,
            GateArg::Toffoli => StandardGate::Toffoli,
            GateArg::Fredkin => StandardGate::Fredkin,
            GateArg::Identity => StandardGate::Identity,
            GateArg::Erase => StandardGate::Erase,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgorithmArg {
    /// Linear scan for the maximum
    MaxScan,
    /// Bubble sort (no early exit)
    Bubble,
    /// Top-down merge sort
    Merge,
    /// Binary search over a sorted input
    Binary,
    /// LSD radix sort (see --buckets / --passes)
    Radix,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    /// Two half-domains, one bit per particle
    TwoDomain,
    /// N cells, log2(N) bits per particle
    NCells,
}

#[derive(Subcommand)]
enum Command {
    /// Entropy and comparison-model lower bounds for a problem family
    Bound {
        #[arg(long)]
        problem: ProblemArg,
        /// Element count (max/sort/search), matrix dimension (matmul) or
        /// operand bits (add/mul/compare)
        #[arg(long)]
        n: u64,
        /// Bits per element; enables the explicit-encoding entropies
        #[arg(long)]
        m: Option<u32>,
    },
    /// Entropy reduction of a truth map, from a file or a standard gate
    Gate {
        /// Truth-table file: lines "<in-bits> -> <out-bits>", '#' comments
        #[arg(long)]
        file: Option<PathBuf>,
        /// Analyze a built-in gate instead of a file
        #[arg(long)]
        standard: Option<GateArg>,
        /// Size parameter of the standard gate (operand bits)
        #[arg(long, default_value_t = 1)]
        width: u32,
    },
    /// Run a metered algorithm over seeded pseudo-random instances
    Profile {
        #[arg(long)]
        problem: ProblemArg,
        #[arg(long)]
        algorithm: AlgorithmArg,
        /// Element count
        #[arg(long)]
        n: u64,
        /// Bits per element
        #[arg(long, default_value_t = 16)]
        m: u32,
        #[arg(long)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Radix bucket count (default: element count)
        #[arg(long)]
        buckets: Option<u64>,
        /// Radix digit passes
        #[arg(long, default_value_t = 1)]
        passes: u32,
        /// Charge erasure for clearing radix buckets between passes
        #[arg(long)]
        charge_clear: bool,
    },
    /// Maxwell demon separation experiment
    Demon {
        #[arg(long)]
        particles: u64,
        #[arg(long, value_enum, default_value_t = ModeArg::TwoDomain)]
        mode: ModeArg,
        /// Monte Carlo samples; 0 reports analytic values only
        #[arg(long, default_value_t = 0)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Per-iteration energy capacity ratio for unstructured quantum search
    Grover {
        #[arg(long)]
        n: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = match cli.format {
        FormatArg::Json => Format::Json,
        FormatArg::Csv => Format::Csv,
    };
    let temperature = match cli.temp.map(Temperature::new).transpose() {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    match run(cli.command, temperature) {
        Ok(mut doc) => {
            doc.temperature_kelvin = temperature.map(Temperature::kelvin);
            print!("{}", doc.write(format));
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn usage_error(message: &str) -> ! {
    Cli::command().error(ErrorKind::ArgumentConflict, message).exit()
}

fn run(command: Command, temperature: Option<Temperature>) -> Result<ReportDocument> {
    match command {
        Command::Bound { problem, n, m } => bound_report(problem, n, m, temperature),
        Command::Gate { file, standard, width } => gate_report(file, standard, width, temperature),
        Command::Profile {
            problem,
            algorithm,
            n,
            m,
            trials,
            seed,
            buckets,
            passes,
            charge_clear,
        } => profile_report(
            problem,
            algorithm,
            n,
            m,
            trials,
            seed,
            buckets,
            passes,
            charge_clear,
            temperature,
        ),
        Command::Demon { particles, mode, samples, seed } => {
            demon_report(particles, mode, samples, seed, temperature)
        }
        Command::Grover { n } => grover_report(n),
    }
}

fn problem_spec(problem: ProblemArg, n: u64, m: Option<u32>) -> ProblemSpec {
    let elem_bits = m.unwrap_or(1);
    let operand_bits = || match u32::try_from(n) {
        Ok(bits) => bits,
        Err(_) => usage_error("--n is an operand bit count here and must fit in 32 bits"),
    };
    match problem {
        ProblemArg::Max => ProblemSpec::MaxOfN { count: n, elem_bits },
        ProblemArg::Sort => ProblemSpec::Sort { count: n, elem_bits },
        ProblemArg::Search => ProblemSpec::OrderedSearch { count: n, elem_bits },
        ProblemArg::Matmul => match m {
            Some(elem_bits) => ProblemSpec::MatMul { dim: n, elem_bits },
            None => usage_error("--problem matmul requires --m (element bits)"),
        },
        ProblemArg::Add => ProblemSpec::Add { operand_bits: operand_bits() },
        ProblemArg::Mul => ProblemSpec::Mul { operand_bits: operand_bits() },
        ProblemArg::Compare => ProblemSpec::Compare { operand_bits: operand_bits() },
    }
}

fn bound_report(
    problem: ProblemArg,
    n: u64,
    m: Option<u32>,
    temperature: Option<Temperature>,
) -> Result<ReportDocument> {
    let spec = problem_spec(problem, n, m);
    let report = BoundReport::for_problem(&spec)?;

    let mut doc = ReportDocument::new("bound");
    doc.param("problem", spec.kind_name()).param("n", n);
    if let Some(m) = m {
        doc.param("m", m);
    }
    doc.result_num("entropy_bound_bits", report.entropy_bound_bits.value(), "bits");
    if let Some(ops) = report.classical_bound_ops {
        doc.result_int("classical_bound_ops", ops, "comparisons");
    }
    if let Some(steps) = report.time_steps_lower {
        doc.result_num("time_steps_lower", steps, "steps");
    }
    if m.is_some() {
        if let Ok((s1, s2)) = bounds::encoding_entropy(&spec) {
            doc.result_num("encoding_s1_bits", s1.value(), "bits");
            doc.result_num("encoding_s2_bits", s2.value(), "bits");
        }
    }
    if let Some(t) = temperature {
        doc.result_num("energy_joules", bits_to_joules(report.entropy_bound_bits, t), "joules");
    }
    Ok(doc)
}

fn gate_report(
    file: Option<PathBuf>,
    standard: Option<GateArg>,
    width: u32,
    temperature: Option<Temperature>,
) -> Result<ReportDocument> {
    let mut doc = ReportDocument::new("gate");
    let report: GateReport = match (file, standard) {
        (Some(path), None) => {
            let text = std::fs::read_to_string(&path)
                .with_context(|| format!("reading truth table {}", path.display()))?;
            let map = TruthMap::parse(&text)
                .map_err(|e| anyhow!("parsing truth table {}: {e}", path.display()))?;
            doc.param("file", path.display().to_string());
            reduction_bits(&map)
        }
        (None, Some(gate)) => {
            let kind = StandardGate::from(gate);
            doc.param("standard", kind.name()).param("width", width);
            standard_report(kind, width)?
        }
        _ => usage_error("gate needs exactly one of --file or --standard"),
    };
    doc.result_num("entropy_in", report.entropy_in.value(), "bits");
    doc.result_num("entropy_out", report.entropy_out.value(), "bits");
    doc.result_num("reduction", report.reduction.value(), "bits");
    doc.result_value("bijective", report.bijective);
    doc.result_value("analytic", report.analytic);
    if let Some(t) = temperature {
        doc.result_num("energy_joules", bits_to_joules(report.reduction, t), "joules");
    }
    Ok(doc)
}

#[allow(clippy::too_many_arguments)]
fn profile_report(
    problem: ProblemArg,
    algorithm: AlgorithmArg,
    n: u64,
    m: u32,
    trials: u64,
    seed: u64,
    buckets: Option<u64>,
    passes: u32,
    charge_clear: bool,
    temperature: Option<Temperature>,
) -> Result<ReportDocument> {
    let spec = problem_spec(problem, n, Some(m));
    let algorithm = match algorithm {
        AlgorithmArg::MaxScan => AlgorithmSpec::MaxScan,
        AlgorithmArg::Bubble => AlgorithmSpec::BubbleSort,
        AlgorithmArg::Merge => AlgorithmSpec::MergeSort,
        AlgorithmArg::Binary => AlgorithmSpec::BinarySearch,
        AlgorithmArg::Radix => {
            AlgorithmSpec::RadixSort { buckets: buckets.unwrap_or(n.max(2)), passes, charge_clear }
        }
    };
    let report = ledger::profile(&spec, algorithm, trials, seed)?;

    let mut doc = ReportDocument::new("profile");
    doc.param("problem", spec.kind_name())
        .param("n", n)
        .param("m", m)
        .param("algorithm", report.algorithm)
        .param("trials", trials)
        .param("seed", seed);
    if let AlgorithmSpec::RadixSort { buckets, passes, charge_clear } = algorithm {
        doc.param("buckets", buckets).param("passes", passes).param("charge_clear", charge_clear);
    }
    doc.seed = Some(seed);
    doc.result_group(
        "measured_bits",
        &[
            ("min", report.measured_bits.min),
            ("mean", report.measured_bits.mean),
            ("max", report.measured_bits.max),
        ],
        "bits",
    );
    doc.result_num("entropy_bound_bits", report.entropy_bound_bits, "bits");
    match report.classical_bound_ops {
        Some(ops) => doc.result_int("classical_bound_ops", ops, "comparisons"),
        None => doc.result_value("classical_bound_ops", serde_json::Value::Null),
    };
    match report.ratio_to_entropy_bound {
        Some(ratio) => doc.result_num("ratio_to_entropy_bound", ratio, "ratio"),
        None => doc.result_value("ratio_to_entropy_bound", serde_json::Value::Null),
    };
    doc.result_value("rng", report.rng);
    doc.result_value("charge_model", report.charge_model);
    if let Some(t) = temperature {
        let mean = EntropyBits::new(report.measured_bits.mean)?;
        doc.result_num("energy_mean_joules", bits_to_joules(mean, t), "joules");
    }
    Ok(doc)
}

fn demon_report(
    particles: u64,
    mode: ModeArg,
    samples: u64,
    seed: u64,
    temperature: Option<Temperature>,
) -> Result<ReportDocument> {
    let mode = match mode {
        ModeArg::TwoDomain => DemonMode::TwoDomain,
        ModeArg::NCells => DemonMode::NCells,
    };
    let config = DemonConfig { particles, mode, samples, seed };
    let result = demon::simulate_demon(&config)?;

    let mut doc = ReportDocument::new("demon");
    doc.param("particles", particles)
        .param("mode", mode.name())
        .param("samples", samples)
        .param("seed", seed);
    doc.seed = Some(seed);
    doc.result_num("entropy_before_bits", result.entropy_before_bits.value(), "bits");
    doc.result_num("entropy_after_bits", result.entropy_after_bits.value(), "bits");
    if let Some(estimate) = result.entropy_estimate_bits {
        doc.result_num("entropy_estimate_bits", estimate, "bits");
    }
    if let Some(observed) = result.observed_states {
        doc.result_int("observed_states", observed, "states");
    }
    if let Some(t) = temperature {
        doc.result_num("work_joules", result.work_joules(t), "joules");
    }
    Ok(doc)
}

fn grover_report(n: u64) -> Result<ReportDocument> {
    let ratio = bounds::grover_energy_ratio(n)?;
    let mut doc = ReportDocument::new("grover");
    doc.param("n", n);
    doc.result_num("energy_ratio", ratio, "ratio");
    Ok(doc)
}
