//! Command-line front end.
//!
//! Exit codes: 0 success, 1 I/O failure, 2 invalid arguments, 3 degenerate
//! strategy, 4 verification failure.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::Serialize;

use crate::bases::{BasisParameter, ChannelParameter};
use crate::efficiency::{
    cpro_monte_carlo_with, haar_sample, sample_rng, EfficiencyReport, MonteCarloOptions,
};
use crate::error::QstsError;
use crate::format::{g17, to_json};
use crate::protocols::{
    choose_m, verify_table1_with, verify_table2_with, ChannelParams, ClassicalBits, Correction,
    CorrectionTable, MRule, MStrategy, ProtocolConfig, ProtocolKind, ProtocolRun, Receiver,
};
use crate::qstate::InputQubit;

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_DEGENERATE: i32 = 3;
pub const EXIT_VERIFICATION: i32 = 4;

/// Environment variable capping the sampler's worker threads (0 = automatic).
pub const THREADS_ENV: &str = "QSTS_THREADS";

#[derive(Debug, Parser)]
#[command(
    name = "qsts",
    version,
    about = "Probabilistic quantum state sharing over partially entangled channels"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run one protocol on one input and list every branch.
    Run(RunArgs),
    /// Check the receiver's corrected states against the closed-form tables.
    VerifyTables(VerifyArgs),
    /// Haar-averaged protocol efficiency.
    Efficiency(EfficiencyArgs),
    /// Efficiency over a range of one parameter, as CSV.
    Sweep(SweepArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ProtocolArg {
    P1,
    P2,
    NpartyGhz,
    NpartyBell,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
}

#[derive(Debug, Clone, Args)]
pub struct ProtocolArgs {
    #[arg(long, value_enum)]
    pub protocol: ProtocolArg,
    /// GHZ channel weight (p1, nparty-ghz); complex values as `a+bi`.
    #[arg(long, allow_hyphen_values = true)]
    pub n: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub n1: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub n2: Option<String>,
    /// Participants including the sender (nparty-ghz).
    #[arg(long)]
    pub parties: Option<usize>,
    /// Comma-separated pair weights, one per receiving party (nparty-bell).
    #[arg(long, allow_hyphen_values = true)]
    pub ns: Option<String>,
    /// Basis parameter: a number or `strategy:<name>`.
    #[arg(long, allow_hyphen_values = true)]
    pub m: String,
    /// `bob`, `charlie`, or a party index; defaults to the last party.
    #[arg(long)]
    pub receiver: Option<String>,
}

#[derive(Debug, Clone, Args)]
pub struct RunArgs {
    #[command(flatten)]
    pub protocol: ProtocolArgs,
    /// `a_re,a_im,b_re,b_im`, `haar`, or `haar:<seed>`.
    #[arg(long, default_value = "1,0,0,0", allow_hyphen_values = true)]
    pub input: String,
    #[arg(long, value_enum, default_value = "json")]
    pub format: OutputFormat,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 1e-10)]
    pub tolerance: f64,
    /// Seed of the Haar inputs used on the grid.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Negative control: replace one correction, `table:alice:bob:pauli`.
    #[arg(long, hide = true)]
    pub corrupt: Option<String>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct EfficiencyArgs {
    #[command(flatten)]
    pub protocol: ProtocolArgs,
    #[arg(long, default_value_t = 10_000)]
    pub samples: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Print only the closed form.
    #[arg(long)]
    pub analytic_only: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub protocol: ProtocolArgs,
    /// Swept parameter: n, n1, n2 or m.
    #[arg(long)]
    pub param: String,
    #[arg(long, allow_hyphen_values = true)]
    pub from: f64,
    #[arg(long, allow_hyphen_values = true)]
    pub to: f64,
    #[arg(long)]
    pub steps: usize,
    /// Further parameters set equal to the swept value, comma-separated.
    #[arg(long)]
    pub link: Option<String>,
    /// Monte-Carlo samples per row; 0 writes only the closed form.
    #[arg(long, default_value_t = 1000)]
    pub samples: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug)]
enum CliError {
    Lib(QstsError),
    Io(String),
    Failed(String),
}

impl From<QstsError> for CliError {
    fn from(e: QstsError) -> Self {
        CliError::Lib(e)
    }
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Lib(QstsError::DegenerateChannel(_)) => EXIT_DEGENERATE,
            CliError::Lib(QstsError::Verification { .. }) | CliError::Failed(_) => {
                EXIT_VERIFICATION
            }
            CliError::Lib(_) => EXIT_INVALID,
            CliError::Io(_) => EXIT_IO,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Io(e) | CliError::Failed(e) => f.write_str(e),
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

fn invalid(msg: impl Into<String>) -> CliError {
    CliError::Lib(QstsError::Argument(msg.into()))
}

/// Parses `a`, `a+bi`, `a-bi`, `bi`.
pub fn parse_complex(s: &str) -> Result<Complex64, QstsError> {
    let t = s.trim();
    let bad = || QstsError::Argument(format!("cannot parse '{s}' as a number"));
    let Some(body) = t.strip_suffix('i') else {
        return t
            .parse::<f64>()
            .map(|re| Complex64::new(re, 0.0))
            .map_err(|_| bad());
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let imag = |x: &str| -> Result<f64, QstsError> {
        match x {
            "" | "+" => Ok(1.0),
            "-" => Ok(-1.0),
            v => v.parse::<f64>().map_err(|_| bad()),
        }
    };
    match split {
        Some(k) => {
            let re = body[..k].parse::<f64>().map_err(|_| bad())?;
            Ok(Complex64::new(re, imag(&body[k..])?))
        }
        None => Ok(Complex64::new(0.0, imag(body)?)),
    }
}

fn parse_input(text: &str, seed: u64) -> CliResult<InputQubit> {
    if text == "haar" {
        return Ok(haar_sample(&mut sample_rng(seed, 0)));
    }
    if let Some(s) = text.strip_prefix("haar:") {
        let seed = s
            .parse::<u64>()
            .map_err(|_| invalid(format!("bad Haar seed '{s}'")))?;
        return Ok(haar_sample(&mut sample_rng(seed, 0)));
    }
    let parts: Vec<f64> = text
        .split(',')
        .map(|p| p.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|_| invalid(format!("bad input '{text}'")))?;
    let [ar, ai, br, bi] = parts[..] else {
        return Err(invalid("input needs four numbers: a_re,a_im,b_re,b_im"));
    };
    Ok(InputQubit::new(
        Complex64::new(ar, ai),
        Complex64::new(br, bi),
    )?)
}

fn parse_receiver(s: Option<&str>, parties: usize) -> CliResult<Receiver> {
    match s.map(str::to_ascii_lowercase).as_deref() {
        None if parties == 3 => Ok(Receiver::Charlie),
        None => Ok(Receiver::Party(parties - 1)),
        Some("bob") => Ok(Receiver::Bob),
        Some("charlie") => Ok(Receiver::Charlie),
        Some(other) => {
            let k = other
                .trim_start_matches("party")
                .parse::<usize>()
                .map_err(|_| invalid(format!("unknown receiver '{other}'")))?;
            Ok(Receiver::Party(k))
        }
    }
}

fn weight(value: &Option<String>, name: &str) -> CliResult<ChannelParameter> {
    let s = value
        .as_deref()
        .ok_or_else(|| invalid(format!("--{name} is required for this protocol")))?;
    Ok(ChannelParameter::new(parse_complex(s)?)?)
}

/// A fully resolved protocol configuration plus the strategy that fixed `m`, if any.
struct Resolved {
    config: ProtocolConfig,
    strategy: Option<String>,
}

fn strategy_for(kind: ProtocolKind, name: &str, parties: usize) -> CliResult<MStrategy> {
    Ok(match kind {
        ProtocolKind::P1 | ProtocolKind::P2 => {
            let s = MStrategy::named(name)?;
            if s.protocol != kind {
                return Err(invalid(format!(
                    "strategy '{name}' does not apply to {}",
                    kind.name()
                )));
            }
            s
        }
        ProtocolKind::NPartyGhz => MStrategy::nparty_ghz(name)?,
        ProtocolKind::NPartyBell => {
            let rule = match name {
                "ghz-minus" | "h-minus" => MRule::Equal,
                "ghz-plus" | "h-plus" => MRule::ConjInverse,
                _ => {
                    return Err(invalid(format!(
                        "strategy '{name}' has no {}-party form",
                        parties
                    )))
                }
            };
            MStrategy::nparty_bell(rule, parties)?
        }
    })
}

/// Builds the configuration; `overrides` replace named real parameters.
fn resolve(args: &ProtocolArgs, overrides: &[(&str, f64)]) -> CliResult<Resolved> {
    let mut args = args.clone();
    for (name, v) in overrides {
        let s = Some(g17(*v));
        match *name {
            "n" if args.protocol == ProtocolArg::NpartyBell => {
                let k = args
                    .ns
                    .as_deref()
                    .map(|l| l.split(',').count())
                    .ok_or_else(|| invalid("--ns is required for nparty-bell"))?;
                args.ns = Some(vec![g17(*v); k].join(","));
            }
            "n" => args.n = s,
            "n1" => args.n1 = s,
            "n2" => args.n2 = s,
            "m" => args.m = g17(*v),
            other => return Err(invalid(format!("unknown parameter '{other}'"))),
        }
    }
    let channel = match args.protocol {
        ProtocolArg::P1 => ChannelParams::Ghz {
            n: weight(&args.n, "n")?,
        },
        ProtocolArg::P2 => ChannelParams::BellPair {
            n1: weight(&args.n1, "n1")?,
            n2: weight(&args.n2, "n2")?,
        },
        ProtocolArg::NpartyGhz => ChannelParams::GhzN {
            parties: args
                .parties
                .ok_or_else(|| invalid("--parties is required for nparty-ghz"))?,
            n: weight(&args.n, "n")?,
        },
        ProtocolArg::NpartyBell => {
            let list = args
                .ns
                .as_deref()
                .ok_or_else(|| invalid("--ns is required for nparty-bell"))?;
            let ns = list
                .split(',')
                .map(|s| parse_complex(s).and_then(ChannelParameter::new))
                .collect::<Result<Vec<_>, _>>()?;
            ChannelParams::BellN { ns }
        }
    };
    let parties = channel.parties();
    let receiver = parse_receiver(args.receiver.as_deref(), parties)?;
    let (m, strategy) = match args.m.strip_prefix("strategy:") {
        Some(name) => {
            let s = strategy_for(channel.kind(), name, parties)?;
            (choose_m(&s, &channel)?, Some(name.to_string()))
        }
        None => (BasisParameter::new(parse_complex(&args.m)?)?, None),
    };
    Ok(Resolved {
        config: ProtocolConfig::new(channel, m, receiver),
        strategy,
    })
}

/// Real numbers serialize as plain numbers, complex ones as `{re, im}`.
#[derive(Serialize)]
#[serde(untagged)]
enum Num {
    Real(f64),
    Complex { re: f64, im: f64 },
}

impl From<Complex64> for Num {
    fn from(z: Complex64) -> Self {
        if z.im == 0.0 {
            Num::Real(z.re)
        } else {
            Num::Complex { re: z.re, im: z.im }
        }
    }
}

#[derive(Serialize)]
struct ParamsOut {
    #[serde(skip_serializing_if = "Option::is_none")]
    n: Option<Num>,
    #[serde(skip_serializing_if = "Option::is_none")]
    n1: Option<Num>,
    #[serde(skip_serializing_if = "Option::is_none")]
    n2: Option<Num>,
    #[serde(skip_serializing_if = "Option::is_none")]
    ns: Option<Vec<Num>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    parties: Option<usize>,
    m: Num,
    #[serde(skip_serializing_if = "Option::is_none")]
    m_strategy: Option<String>,
}

#[derive(Serialize)]
struct InputOut {
    alpha: Num,
    beta: Num,
}

#[derive(Serialize)]
struct BranchOut<'a> {
    alice: &'a str,
    bob_or_helpers: &'a [String],
    correction: Correction,
    probability: f64,
    fidelity: f64,
}

#[derive(Serialize)]
struct RunOut<'a> {
    protocol: &'static str,
    params: ParamsOut,
    input: InputOut,
    receiver: String,
    branches: Vec<BranchOut<'a>>,
    success_probability: f64,
    classical_bits: ClassicalBits,
}

fn params_out(config: &ProtocolConfig, strategy: Option<String>) -> ParamsOut {
    let mut p = ParamsOut {
        n: None,
        n1: None,
        n2: None,
        ns: None,
        parties: None,
        m: config.m.0.into(),
        m_strategy: strategy,
    };
    match &config.channel {
        ChannelParams::Ghz { n } => p.n = Some(n.0.into()),
        ChannelParams::BellPair { n1, n2 } => {
            p.n1 = Some(n1.0.into());
            p.n2 = Some(n2.0.into());
        }
        ChannelParams::GhzN { parties, n } => {
            p.n = Some(n.0.into());
            p.parties = Some(*parties);
        }
        ChannelParams::BellN { ns } => {
            p.ns = Some(ns.iter().map(|n| n.0.into()).collect());
            p.parties = Some(ns.len() + 1);
        }
    }
    p
}

fn run_json(
    run: &ProtocolRun,
    strategy: Option<String>,
    config: &ProtocolConfig,
) -> CliResult<String> {
    let out = RunOut {
        protocol: run.kind.name(),
        params: params_out(config, strategy),
        input: InputOut {
            alpha: run.input.alpha.into(),
            beta: run.input.beta.into(),
        },
        receiver: run.receiver.name(),
        branches: run
            .branches
            .iter()
            .map(|b| BranchOut {
                alice: &b.alice_label,
                bob_or_helpers: &b.helper_labels,
                correction: b.correction,
                probability: b.probability,
                fidelity: b.fidelity,
            })
            .collect(),
        success_probability: run.success_probability,
        classical_bits: run.classical_bits,
    };
    to_json(&out).map_err(|e| CliError::Io(e.to_string()))
}

fn run_csv(run: &ProtocolRun) -> String {
    let mut s = String::from("alice,helpers,correction,probability,fidelity\n");
    for b in &run.branches {
        s.push_str(&format!(
            "{},{},{},{},{}\n",
            b.alice_label,
            b.helper_labels.join(";"),
            b.correction,
            g17(b.probability),
            g17(b.fidelity)
        ));
    }
    s
}

fn emit(text: &str, out: &Option<PathBuf>, stdout: &mut dyn Write) -> CliResult<()> {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display()))),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Io(e.to_string())),
    }
}

fn cmd_run(args: &RunArgs, stdout: &mut dyn Write) -> CliResult<()> {
    let r = resolve(&args.protocol, &[])?;
    let input = parse_input(&args.input, args.seed)?;
    let run = r.config.run(&input)?;
    let text = match args.format {
        OutputFormat::Json => run_json(&run, r.strategy, &r.config)?,
        OutputFormat::Csv => run_csv(&run),
    };
    emit(&text, &args.out, stdout)
}

const VERIFY_GRID: [f64; 3] = [0.3, 0.7, 1.0];
const VERIFY_INPUTS: u64 = 2;

struct RowSummary {
    table: &'static str,
    name: String,
    correction: Correction,
    min_fidelity: f64,
    points: usize,
    passed: bool,
}

fn merge_rows(summary: &mut Vec<RowSummary>, report: &crate::protocols::TableReport) {
    for row in &report.rows {
        let name = row.name();
        match summary
            .iter_mut()
            .find(|s| s.table == report.table && s.name == name)
        {
            Some(s) => {
                s.min_fidelity = s.min_fidelity.min(row.fidelity);
                s.points += 1;
                s.passed &= row.passed;
            }
            None => summary.push(RowSummary {
                table: report.table,
                name,
                correction: row.correction,
                min_fidelity: row.fidelity,
                points: 1,
                passed: row.passed,
            }),
        }
    }
}

fn corrupted_tables(corrupt: Option<&str>) -> CliResult<(CorrectionTable, CorrectionTable)> {
    let mut t1 = CorrectionTable::table1();
    let mut t2 = CorrectionTable::table2();
    if let Some(corrupt) = corrupt {
        let parts: Vec<&str> = corrupt.split(':').collect();
        let [table, alice, bob, pauli] = parts[..] else {
            return Err(invalid("--corrupt expects table:alice:bob:pauli"));
        };
        let c = Correction::from_name(pauli)
            .ok_or_else(|| invalid(format!("unknown Pauli '{pauli}'")))?;
        let helpers = [bob.to_string()];
        let target = match table {
            "table1" => &mut t1,
            "table2" => &mut t2,
            _ => return Err(invalid(format!("unknown table '{table}'"))),
        };
        if target.get(alice, &helpers).is_none() {
            return Err(invalid(format!("no row {alice}/{bob} in {table}")));
        }
        *target = target.with_override(alice, &helpers, c);
    }
    Ok((t1, t2))
}

fn cmd_verify(args: &VerifyArgs, stdout: &mut dyn Write) -> CliResult<()> {
    if args.tolerance.is_nan() || args.tolerance <= 0.0 {
        return Err(invalid("tolerance must be positive"));
    }
    let (t1, t2) = corrupted_tables(args.corrupt.as_deref())?;
    let inputs: Vec<InputQubit> = (0..VERIFY_INPUTS)
        .map(|i| haar_sample(&mut sample_rng(args.seed, i)))
        .collect();
    let p = |v: f64| ChannelParameter::real(v);
    let b = |v: f64| BasisParameter::real(v);
    let mut summary = Vec::new();
    for input in &inputs {
        for &n in &VERIFY_GRID {
            for &m in &VERIFY_GRID {
                merge_rows(
                    &mut summary,
                    &verify_table1_with(p(n)?, b(m)?, input, args.tolerance, &t1)?,
                );
            }
        }
        for &n1 in &VERIFY_GRID {
            for &n2 in &VERIFY_GRID {
                for &m in &VERIFY_GRID {
                    merge_rows(
                        &mut summary,
                        &verify_table2_with(p(n1)?, p(n2)?, b(m)?, input, args.tolerance, &t2)?,
                    );
                }
            }
        }
    }
    let mut text = String::new();
    for s in &summary {
        text.push_str(&format!(
            "{} {} {} correction={} min_fidelity={} points={}\n",
            if s.passed { "PASS" } else { "FAIL" },
            s.table,
            s.name,
            s.correction,
            g17(s.min_fidelity),
            s.points
        ));
    }
    let passed = summary.iter().filter(|s| s.passed).count();
    text.push_str(&format!(
        "{passed}/{} rows passed at tolerance {}\n",
        summary.len(),
        g17(args.tolerance)
    ));
    emit(&text, &args.out, stdout)?;
    match summary.iter().find(|s| !s.passed) {
        None => Ok(()),
        Some(s) => Err(CliError::Failed(format!(
            "row {} {} failed",
            s.table, s.name
        ))),
    }
}

fn threads_from_env() -> CliResult<usize> {
    match std::env::var(THREADS_ENV) {
        Err(_) => Ok(0),
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .map_err(|_| invalid(format!("{THREADS_ENV} must be a non-negative integer"))),
    }
}

#[derive(Serialize)]
struct AnalyticOnly {
    analytic: f64,
}

fn estimate(config: &ProtocolConfig, samples: u64, seed: u64) -> CliResult<EfficiencyReport> {
    let options = MonteCarloOptions {
        threads: threads_from_env()?,
        ..Default::default()
    };
    Ok(cpro_monte_carlo_with(config, samples, seed, options)?)
}

fn cmd_efficiency(args: &EfficiencyArgs, stdout: &mut dyn Write) -> CliResult<()> {
    let r = resolve(&args.protocol, &[])?;
    let text = if args.analytic_only {
        let analytic = crate::efficiency::analytic_efficiency(&r.config).ok_or_else(|| {
            invalid("no closed form for these parameters (complex or more than three parties)")
        })?;
        to_json(&AnalyticOnly { analytic })
    } else {
        to_json(&estimate(&r.config, args.samples, args.seed)?)
    }
    .map_err(|e| CliError::Io(e.to_string()))?;
    emit(&text, &args.out, stdout)
}

/// CSV header written by `sweep`.
pub const SWEEP_HEADER: &str = "param,value,analytic,estimate,std_error";

fn cmd_sweep(args: &SweepArgs, stdout: &mut dyn Write) -> CliResult<()> {
    if args.steps == 0 {
        return Err(invalid("steps must be at least 1"));
    }
    if args.from.is_nan() || args.to.is_nan() || args.from > args.to {
        return Err(invalid("--from must not exceed --to"));
    }
    let mut names = vec![args.param.as_str()];
    if let Some(link) = &args.link {
        names.extend(link.split(',').map(str::trim).filter(|s| !s.is_empty()));
    }
    let mut text = format!("{SWEEP_HEADER}\n");
    for i in 0..args.steps {
        let value = if args.steps == 1 {
            args.from
        } else {
            args.from + (args.to - args.from) * i as f64 / (args.steps - 1) as f64
        };
        let overrides: Vec<(&str, f64)> = names.iter().map(|n| (*n, value)).collect();
        let r = resolve(&args.protocol, &overrides)?;
        let analytic = crate::efficiency::analytic_efficiency(&r.config);
        let (est, se) = if args.samples == 0 {
            (String::new(), String::new())
        } else {
            let rep = estimate(&r.config, args.samples, args.seed)?;
            (g17(rep.estimate), g17(rep.std_error))
        };
        text.push_str(&format!(
            "{},{},{},{},{}\n",
            args.param,
            g17(value),
            analytic.map(g17).unwrap_or_default(),
            est,
            se
        ));
    }
    emit(&text, &args.out, stdout)
}

/// Runs the CLI on `args` (program name first) and returns the exit code.
pub fn run_cli<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{e}");
            return if e.use_stderr() {
                EXIT_INVALID
            } else {
                EXIT_OK
            };
        }
    };
    let result = match &cli.command {
        Command::Run(a) => cmd_run(a, stdout),
        Command::VerifyTables(a) => cmd_verify(a, stdout),
        Command::Efficiency(a) => cmd_efficiency(a, stdout),
        Command::Sweep(a) => cmd_sweep(a, stdout),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.code()
        }
    }
}
