//! Command-line front end: detuning sweeps, the metrics table, and
//! Fisher-information scans, emitted as self-describing CSV (plus
//! optional SVG plots).

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use qudit_ramsey::{
    default_rabi, fringe_metrics, qfi, run_sweep, table_one, Protocol, ProtocolKind, SweepError,
    SweepSpec, WmSystem, DEFAULT_PULSE_DURATION, DEFAULT_TAU, REFERENCE_TABLE,
};

use crate::plot::{self, Series};

#[derive(Parser)]
#[command(
    name = "qudit-ramsey",
    version,
    about = "Ramsey fringe simulation for ladder-coupled qudits"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sweep the detuning and write the fringe signal as CSV
    Sweep(SweepArgs),
    /// Resolution/contrast/RCI table over the reference protocols
    Table(TableArgs),
    /// Quantum Fisher information columns over a detuning range
    Qfi(QfiArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    /// Pulse-based ladder Ramsey sequence
    Wm,
    /// Ideal discrete-Fourier gates around free evolution
    Qft,
    /// Ideal √X gates around free evolution
    Sqrtx,
}

impl From<KindArg> for ProtocolKind {
    fn from(kind: KindArg) -> Self {
        match kind {
            KindArg::Wm => ProtocolKind::WmRamsey,
            KindArg::Qft => ProtocolKind::Qft,
            KindArg::Sqrtx => ProtocolKind::SqrtX,
        }
    }
}

impl KindArg {
    fn token(self) -> &'static str {
        match self {
            KindArg::Wm => "wm",
            KindArg::Qft => "qft",
            KindArg::Sqrtx => "sqrtx",
        }
    }
}

#[derive(Args)]
struct SweepArgs {
    /// Protocol kind
    #[arg(long, value_enum)]
    protocol: KindArg,
    /// Number of basis states D
    #[arg(long)]
    dim: usize,
    /// Interrogation time τ
    #[arg(long, default_value_t = DEFAULT_TAU)]
    tau: f64,
    /// Rabi frequency Ω; defaults to the π/2-pulse calibration π/(2T)
    #[arg(long)]
    rabi: Option<f64>,
    /// Square-pulse duration T
    #[arg(long, default_value_t = DEFAULT_PULSE_DURATION)]
    pulse: f64,
    /// Lower edge of the detuning window
    #[arg(long = "from", allow_hyphen_values = true, default_value_t = -1.0)]
    delta_min: f64,
    /// Upper edge of the detuning window
    #[arg(long = "to", allow_hyphen_values = true, default_value_t = 1.0)]
    delta_max: f64,
    /// Grid points (odd, so the midpoint is sampled)
    #[arg(long, default_value_t = 4001)]
    points: usize,
    /// Output CSV path
    #[arg(long, short)]
    output: PathBuf,
    /// Also write an SVG line plot to this path
    #[arg(long, value_name = "PATH")]
    svg: Option<PathBuf>,
    /// Print resolution/contrast/RCI for the sweep
    #[arg(long)]
    metrics: bool,
    /// Overwrite existing output files
    #[arg(long)]
    force: bool,
}

#[derive(Args)]
struct TableArgs {
    /// Grid points per sweep (odd, at least 2001)
    #[arg(long, default_value_t = 4001)]
    points: usize,
    /// Output CSV path
    #[arg(long, short, default_value = "rci_table.csv")]
    output: PathBuf,
    /// Overwrite existing output files
    #[arg(long)]
    force: bool,
}

#[derive(Args)]
struct QfiArgs {
    /// Comma-separated protocol columns, e.g. wm2,wm3,qft3,sqrtx3
    #[arg(long, value_delimiter = ',', default_values_t = [
        "wm2".to_string(), "wm3".to_string(), "wm4".to_string(), "wm5".to_string()
    ])]
    protocols: Vec<String>,
    /// Interrogation time τ
    #[arg(long, default_value_t = DEFAULT_TAU)]
    tau: f64,
    /// Rabi frequency Ω; defaults to π/(2T)
    #[arg(long)]
    rabi: Option<f64>,
    /// Square-pulse duration T
    #[arg(long, default_value_t = DEFAULT_PULSE_DURATION)]
    pulse: f64,
    /// Lower edge of the detuning range
    #[arg(long = "from", allow_hyphen_values = true, default_value_t = -5.0)]
    delta_min: f64,
    /// Upper edge of the detuning range
    #[arg(long = "to", allow_hyphen_values = true, default_value_t = 5.0)]
    delta_max: f64,
    /// Grid points
    #[arg(long, default_value_t = 1001)]
    points: usize,
    /// Output CSV path
    #[arg(long, short)]
    output: PathBuf,
    /// Also write an SVG line plot to this path
    #[arg(long, value_name = "PATH")]
    svg: Option<PathBuf>,
    /// Overwrite existing output files
    #[arg(long)]
    force: bool,
}

#[derive(Debug)]
enum CliError {
    /// Bad argument values: exit 2, like a parse failure.
    Usage(String),
    /// Computation or I/O failure: exit 1.
    Failure(String),
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Failure(e.to_string())
    }
}

pub fn run() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn execute(command: Command) -> Result<(), CliError> {
    match command {
        Command::Sweep(args) => cmd_sweep(args),
        Command::Table(args) => cmd_table(args),
        Command::Qfi(args) => cmd_qfi(args),
    }
}

/// Argument-level validation failures exit with the usage code.
fn usage_error(e: SweepError) -> CliError {
    CliError::Usage(e.to_string())
}

fn cmd_sweep(args: SweepArgs) -> Result<(), CliError> {
    let protocol = Protocol::new(args.protocol.into(), args.dim)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let spec = SweepSpec::new(
        protocol,
        args.tau,
        args.rabi,
        args.pulse,
        args.delta_min,
        args.delta_max,
        args.points,
    )
    .map_err(usage_error)?;
    let signal = run_sweep(&spec).map_err(|e| CliError::Failure(e.to_string()))?;

    let mut csv = String::new();
    csv.push_str(&format!(
        "# command: qudit-ramsey sweep --protocol {} --dim {} --tau {} --rabi {} --pulse {} \
         --from {} --to {} --points {} --output {}\n",
        args.protocol.token(),
        args.dim,
        spec.tau,
        spec.rabi,
        spec.pulse_duration,
        spec.delta_min,
        spec.delta_max,
        spec.points,
        args.output.display(),
    ));
    csv.push_str(&format!("# protocol={} dim={}\n", args.protocol.token(), args.dim));
    csv.push_str(&format!(
        "# tau={} rabi={} pulse={}\n",
        spec.tau, spec.rabi, spec.pulse_duration
    ));
    csv.push_str(&format!(
        "# delta_min={} delta_max={} points={}\n",
        spec.delta_min, spec.delta_max, spec.points
    ));
    csv.push_str("delta,probability\n");
    for (delta, prob) in signal.deltas().iter().zip(signal.probs()) {
        csv.push_str(&format!("{delta:.9},{prob:.9}\n"));
    }
    write_output(&args.output, csv.as_bytes(), args.force)?;

    if let Some(svg_path) = &args.svg {
        let svg = plot::line_plot(
            &format!("{protocol} fringe signal"),
            "detuning",
            "probability",
            signal.deltas(),
            &[Series { label: protocol.to_string(), values: signal.probs() }],
            &format!(
                "tau={} rabi={:.6} pulse={}",
                spec.tau, spec.rabi, spec.pulse_duration
            ),
        );
        write_output(svg_path, svg.as_bytes(), args.force)?;
    }

    if args.metrics {
        let m = fringe_metrics(&signal).map_err(|e| CliError::Failure(e.to_string()))?;
        println!(
            "protocol={} resolution={:.6} contrast={:.6} rci={:.6}",
            protocol, m.resolution, m.contrast, m.rci
        );
    }
    Ok(())
}

fn cmd_table(args: TableArgs) -> Result<(), CliError> {
    let rows = table_one(args.points).map_err(|e| match e {
        SweepError::TooFewTablePoints { .. } | SweepError::EvenPoints(_) => usage_error(e),
        other => CliError::Failure(other.to_string()),
    })?;

    println!(
        "{:<8} {:>10} {:>10} {:>10} {:>8} {:>8} {:>8} {:>8} {:>8}",
        "protocol", "resolution", "contrast", "rci", "ref_re", "ref_co", "ref_rci", "d_re%", "d_rci%"
    );
    for (row, (label, ref_re, ref_co, ref_rci)) in rows.iter().zip(REFERENCE_TABLE) {
        debug_assert_eq!(row.label, label);
        println!(
            "{:<8} {:>10.4} {:>10.4} {:>10.4} {:>8.3} {:>8.3} {:>8.3} {:>+8.2} {:>+8.2}",
            row.label,
            row.resolution,
            row.contrast,
            row.rci,
            ref_re,
            ref_co,
            ref_rci,
            100.0 * (row.resolution / ref_re - 1.0),
            100.0 * (row.rci / ref_rci - 1.0),
        );
    }

    let mut csv = String::new();
    csv.push_str(&format!(
        "# command: qudit-ramsey table --points {} --output {}\n",
        args.points,
        args.output.display()
    ));
    csv.push_str(&format!(
        "# tau={} rabi={} pulse={} delta_min=-1 delta_max=1 points={}\n",
        DEFAULT_TAU,
        default_rabi(DEFAULT_PULSE_DURATION),
        DEFAULT_PULSE_DURATION,
        args.points
    ));
    csv.push_str("protocol,resolution,contrast,rci\n");
    for row in &rows {
        csv.push_str(&format!(
            "{},{:.9},{:.9},{:.9}\n",
            row.label, row.resolution, row.contrast, row.rci
        ));
    }
    write_output(&args.output, csv.as_bytes(), args.force)?;
    Ok(())
}

fn parse_protocol_token(token: &str) -> Result<(String, Protocol), CliError> {
    let (kind, dim_str) = if let Some(rest) = token.strip_prefix("sqrtx") {
        (ProtocolKind::SqrtX, rest)
    } else if let Some(rest) = token.strip_prefix("qft") {
        (ProtocolKind::Qft, rest)
    } else if let Some(rest) = token.strip_prefix("wm") {
        (ProtocolKind::WmRamsey, rest)
    } else {
        return Err(CliError::Usage(format!(
            "unknown protocol token '{token}'; expected wm<D>, qft<D> or sqrtx<D>"
        )));
    };
    let dim: usize = dim_str
        .parse()
        .map_err(|_| CliError::Usage(format!("bad dimension in protocol token '{token}'")))?;
    let protocol = Protocol::new(kind, dim).map_err(|e| CliError::Usage(e.to_string()))?;
    Ok((token.to_string(), protocol))
}

fn cmd_qfi(args: QfiArgs) -> Result<(), CliError> {
    if args.protocols.is_empty() {
        return Err(CliError::Usage("at least one protocol column is required".into()));
    }
    if args.points < 2 {
        return Err(CliError::Usage(format!("need at least 2 grid points, got {}", args.points)));
    }
    if !(args.delta_min.is_finite() && args.delta_max.is_finite()) || args.delta_min >= args.delta_max
    {
        return Err(CliError::Usage(format!(
            "invalid detuning range [{}, {}]",
            args.delta_min, args.delta_max
        )));
    }
    let columns: Vec<(String, Protocol)> = args
        .protocols
        .iter()
        .map(|t| parse_protocol_token(t))
        .collect::<Result<_, _>>()?;

    let rabi = args.rabi.unwrap_or_else(|| default_rabi(args.pulse));
    let systems: Vec<WmSystem> = columns
        .iter()
        .map(|(_, p)| WmSystem::new(p.dim, rabi, args.pulse, 0.0))
        .collect::<Result<_, _>>()
        .map_err(|e| CliError::Usage(e.to_string()))?;

    let deltas: Vec<f64> = (0..args.points)
        .map(|i| {
            args.delta_min
                + (args.delta_max - args.delta_min) * (i as f64 / (args.points as f64 - 1.0))
        })
        .collect();
    let mut table: Vec<Vec<f64>> = vec![Vec::with_capacity(deltas.len()); columns.len()];
    for &delta in &deltas {
        for (col, ((_, protocol), sys)) in columns.iter().zip(&systems).enumerate() {
            let value = qfi(*protocol, sys, args.tau, delta)
                .map_err(|e| CliError::Failure(e.to_string()))?;
            table[col].push(value);
        }
    }

    let mut csv = String::new();
    csv.push_str(&format!(
        "# command: qudit-ramsey qfi --protocols {} --tau {} --rabi {} --pulse {} --from {} \
         --to {} --points {} --output {}\n",
        args.protocols.join(","),
        args.tau,
        rabi,
        args.pulse,
        args.delta_min,
        args.delta_max,
        args.points,
        args.output.display(),
    ));
    csv.push_str(&format!("# tau={} rabi={} pulse={}\n", args.tau, rabi, args.pulse));
    csv.push_str(&format!(
        "# delta_min={} delta_max={} points={}\n",
        args.delta_min, args.delta_max, args.points
    ));
    csv.push_str("delta");
    for (label, _) in &columns {
        csv.push_str(&format!(",{label}"));
    }
    csv.push('\n');
    for (i, delta) in deltas.iter().enumerate() {
        csv.push_str(&format!("{delta:.9}"));
        for col in &table {
            csv.push_str(&format!(",{:.9}", col[i]));
        }
        csv.push('\n');
    }
    write_output(&args.output, csv.as_bytes(), args.force)?;

    if let Some(svg_path) = &args.svg {
        let series: Vec<Series> = columns
            .iter()
            .zip(&table)
            .map(|((label, _), values)| Series { label: label.clone(), values })
            .collect();
        let svg = plot::line_plot(
            "quantum Fisher information",
            "detuning",
            "QFI",
            &deltas,
            &series,
            &format!("tau={} rabi={rabi:.6} pulse={}", args.tau, args.pulse),
        );
        write_output(svg_path, svg.as_bytes(), args.force)?;
    }
    Ok(())
}

/// Create parent directories as needed; refuse to overwrite without force.
fn write_output(path: &Path, bytes: &[u8], force: bool) -> Result<(), CliError> {
    if path.exists() && !force {
        return Err(CliError::Failure(format!(
            "refusing to overwrite {}; pass --force to replace it",
            path.display()
        )));
    }
    if let Some(parent) = path.parent() {
        if !parent.as_os_str().is_empty() {
            fs::create_dir_all(parent)?;
        }
    }
    let mut file = fs::File::create(path)?;
    file.write_all(bytes)?;
    Ok(())
}
