use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use phasor_julia::imaging::{colorize, overlay_marker, write_ppm, PaletteSpec};
use phasor_julia::iteration::MAX_BUDGET;
use phasor_julia::study::{run_quadrants, run_sweep, StudyOptions, StudyOutcome, SweepAxis, SweepPreset};
use phasor_julia::{
    check_conjugation_relation, check_negation_symmetry, classify, julia_connectivity,
    to_parameter, ComplexValue, Error, FieldMode, GridSpec, IterationConfig, PowerPhasor,
    ScalingConfig, ScalingMode,
};

/// Complex power mapped onto Mandelbrot and Julia sets.
#[derive(Parser, Debug)]
#[command(name = "phasor-julia", version)]
struct Cli {
    /// Cap on rendering worker threads.
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    threads: Option<u16>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Render the Mandelbrot set, optionally marking a power value.
    Mandelbrot(MandelbrotArgs),
    /// Render the filled Julia set for a power value and print its connectivity.
    Julia(JuliaArgs),
    /// Print quadrant, power factor and connectivity for a power value.
    Classify(ClassifyArgs),
    /// Sweep real or reactive power, rendering one Julia image per value.
    Sweep(SweepArgs),
    /// Run the four sign combinations (+-M, +-M).
    Quadrants(QuadrantArgs),
    /// Check the negation and conjugation symmetries of escape time.
    Symmetry(SymmetryArgs),
}

#[derive(Args, Debug, Clone)]
struct WindowArgs {
    /// Real part of the window center.
    #[arg(long, allow_hyphen_values = true)]
    center_re: Option<f64>,
    /// Imaginary part of the window center.
    #[arg(long, allow_hyphen_values = true)]
    center_im: Option<f64>,
    /// Window width in complex-plane units.
    #[arg(long)]
    width: Option<f64>,
    #[arg(long, default_value_t = 512)]
    cols: usize,
    #[arg(long, default_value_t = 512)]
    rows: usize,
}

impl WindowArgs {
    fn grid(&self, default: GridSpec) -> Result<GridSpec, CliError> {
        let c = default.center();
        let center = ComplexValue::new(
            self.center_re.unwrap_or(c.re()),
            self.center_im.unwrap_or(c.im()),
        )
        .map_err(CliError::usage)?;
        GridSpec::new(center, self.width.unwrap_or(default.width()), self.cols, self.rows)
            .map_err(CliError::usage)
    }
}

#[derive(Args, Debug, Clone)]
struct IterArgs {
    /// Iteration budget for rendering.
    #[arg(long, default_value_t = IterationConfig::RENDER_BUDGET, value_parser = budget_parser())]
    max_iter: u32,
    /// Iteration budget for connectivity verdicts.
    #[arg(long, default_value_t = IterationConfig::CLASSIFY_BUDGET, value_parser = budget_parser())]
    classify_iter: u32,
    #[arg(long, default_value_t = 2.0)]
    bailout: f64,
}

fn budget_parser() -> clap::builder::RangedI64ValueParser<u32> {
    clap::value_parser!(u32).range(1..=MAX_BUDGET as i64)
}

impl IterArgs {
    fn render(&self) -> Result<IterationConfig, CliError> {
        IterationConfig::new(self.bailout, self.max_iter).map_err(CliError::usage)
    }

    fn classify(&self) -> Result<IterationConfig, CliError> {
        IterationConfig::new(self.bailout, self.classify_iter).map_err(CliError::usage)
    }
}

#[derive(Args, Debug, Clone)]
struct ScalingArgs {
    /// How P and Q become the parameter c.
    #[arg(long, default_value = "direct")]
    scaling: ScalingMode,
    #[arg(long, default_value_t = ScalingConfig::C_X)]
    cx: f64,
    #[arg(long, default_value_t = ScalingConfig::C_Y)]
    cy: f64,
    #[arg(long, default_value_t = 1.0)]
    p_base: f64,
    #[arg(long, default_value_t = 1.0)]
    q_base: f64,
}

impl ScalingArgs {
    fn config(&self) -> Result<ScalingConfig, CliError> {
        ScalingConfig::new(self.scaling, self.cx, self.cy, self.p_base, self.q_base)
            .map_err(CliError::usage)
    }
}

#[derive(Args, Debug, Clone)]
struct PowerArgs {
    /// Real power P.
    #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
    p: f64,
    /// Reactive power Q.
    #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
    q: f64,
}

impl PowerArgs {
    fn phasor(&self) -> Result<PowerPhasor, CliError> {
        PowerPhasor::new(self.p, self.q).map_err(CliError::usage)
    }
}

#[derive(Args, Debug)]
struct MandelbrotArgs {
    #[command(flatten)]
    window: WindowArgs,
    #[command(flatten)]
    iter: IterArgs,
    #[command(flatten)]
    scaling: ScalingArgs,
    /// Mark the power value P,Q with a yellow square.
    #[arg(long, value_name = "P,Q", allow_hyphen_values = true, value_parser = parse_pair)]
    mark: Option<(f64, f64)>,
    #[arg(long, short)]
    out: PathBuf,
}

#[derive(Args, Debug)]
struct JuliaArgs {
    #[command(flatten)]
    power: PowerArgs,
    #[command(flatten)]
    window: WindowArgs,
    #[command(flatten)]
    iter: IterArgs,
    #[command(flatten)]
    scaling: ScalingArgs,
    #[arg(long, short)]
    out: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum Format {
    Line,
    Json,
}

#[derive(Args, Debug)]
struct ClassifyArgs {
    #[command(flatten)]
    power: PowerArgs,
    #[command(flatten)]
    scaling: ScalingArgs,
    #[arg(long, default_value_t = IterationConfig::CLASSIFY_BUDGET, value_parser = budget_parser())]
    max_iter: u32,
    #[arg(long, value_enum, default_value = "line")]
    format: Format,
}

#[derive(Args, Debug)]
struct SweepArgs {
    /// Named preset: fig3 (real power) or fig4 (reactive power).
    #[arg(long, conflicts_with_all = ["axis", "values"])]
    preset: Option<String>,
    /// Swept axis when no preset is given.
    #[arg(long, requires = "values")]
    axis: Option<SweepAxis>,
    /// Comma-separated sweep values.
    #[arg(long, allow_hyphen_values = true, value_delimiter = ',', requires = "axis")]
    values: Option<Vec<f64>>,
    /// Fixed real power for a reactive sweep.
    #[arg(long, allow_hyphen_values = true)]
    p: Option<f64>,
    /// Fixed reactive power for a real sweep.
    #[arg(long, allow_hyphen_values = true)]
    q: Option<f64>,
    #[command(flatten)]
    window: WindowArgs,
    #[command(flatten)]
    iter: IterArgs,
    #[command(flatten)]
    scaling: ScalingArgs,
    #[arg(long)]
    out_dir: PathBuf,
}

#[derive(Args, Debug)]
struct QuadrantArgs {
    #[arg(long, default_value_t = 0.22)]
    magnitude: f64,
    /// Julia window.
    #[command(flatten)]
    window: WindowArgs,
    /// Real part of the Mandelbrot window center.
    #[arg(long, allow_hyphen_values = true)]
    m_center_re: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    m_center_im: Option<f64>,
    #[arg(long)]
    m_width: Option<f64>,
    #[command(flatten)]
    iter: IterArgs,
    #[command(flatten)]
    scaling: ScalingArgs,
    #[arg(long)]
    out_dir: PathBuf,
}

#[derive(Args, Debug)]
struct SymmetryArgs {
    #[command(flatten)]
    power: PowerArgs,
    #[command(flatten)]
    scaling: ScalingArgs,
    #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
    samples: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = IterationConfig::RENDER_BUDGET, value_parser = budget_parser())]
    max_iter: u32,
}

fn parse_pair(s: &str) -> Result<(f64, f64), String> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| format!("expected P,Q but got '{s}'"))?;
    let parse = |t: &str| {
        t.trim()
            .parse::<f64>()
            .map_err(|e| format!("'{t}': {e}"))
    };
    Ok((parse(a)?, parse(b)?))
}

enum CliError {
    Usage(String),
    Runtime(Error),
}

impl CliError {
    fn usage(e: Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Runtime(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let workers = cli.threads.map(usize::from);
    if let Some(n) = workers {
        // only fails if the pool was already built
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    let result = match cli.command {
        Command::Mandelbrot(args) => cmd_mandelbrot(args, workers),
        Command::Julia(args) => cmd_julia(args, workers),
        Command::Classify(args) => cmd_classify(args),
        Command::Sweep(args) => cmd_sweep(args, workers),
        Command::Quadrants(args) => cmd_quadrants(args, workers),
        Command::Symmetry(args) => cmd_symmetry(args),
    };
    match result {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            eprintln!("For more information, try '--help'.");
            ExitCode::from(2)
        }
        Err(CliError::Runtime(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn options(workers: Option<usize>) -> StudyOptions {
    StudyOptions {
        workers,
        ..StudyOptions::default()
    }
}

fn cmd_mandelbrot(args: MandelbrotArgs, workers: Option<usize>) -> Result<ExitCode, CliError> {
    let spec = args.window.grid(GridSpec::mandelbrot_default())?;
    let scaling = args.scaling.config()?;
    let opts = StudyOptions {
        render: args.iter.render()?,
        ..options(workers)
    };
    let mut img = colorize(&opts.field(&spec, FieldMode::Mandelbrot), &PaletteSpec::default());
    if let Some((p, q)) = args.mark {
        let s = PowerPhasor::new(p, q).map_err(CliError::usage)?;
        let c = to_parameter(&s, &scaling)?;
        img = overlay_marker(&img, &spec, c)?;
        println!("marked S = {p}{q:+}j at c = {c}");
    }
    write_ppm(&img, &args.out)?;
    println!("wrote {}", args.out.display());
    Ok(ExitCode::SUCCESS)
}

fn cmd_julia(args: JuliaArgs, workers: Option<usize>) -> Result<ExitCode, CliError> {
    let spec = args.window.grid(GridSpec::julia_default())?;
    let scaling = args.scaling.config()?;
    let opts = StudyOptions {
        render: args.iter.render()?,
        ..options(workers)
    };
    let c = to_parameter(&args.power.phasor()?, &scaling)?;
    let field = opts.field(&spec, FieldMode::Julia(c));
    write_ppm(&colorize(&field, &opts.palette), &args.out)?;
    let verdict = julia_connectivity(c, &args.iter.classify()?);
    println!("c = {c}  verdict {verdict}");
    println!("wrote {}", args.out.display());
    Ok(ExitCode::SUCCESS)
}

fn cmd_classify(args: ClassifyArgs) -> Result<ExitCode, CliError> {
    let cfg = IterationConfig::with_budget(args.max_iter).map_err(CliError::usage)?;
    let record = classify(args.power.phasor()?, &args.scaling.config()?, &cfg)?;
    match args.format {
        Format::Line => println!("{}", record.line()),
        Format::Json => println!("{}", record.json()),
    }
    Ok(ExitCode::SUCCESS)
}

fn print_outcome(outcome: &StudyOutcome) {
    for w in &outcome.warnings {
        eprintln!("warning: {w}");
    }
    println!(
        "{:<12} {:<18} {:<9} {:<13} {:<16} {:>6}  image",
        "label", "c", "quadrant", "verdict", "evidence", "escape"
    );
    for e in &outcome.entries {
        let r = &e.record;
        let images: Vec<_> = e.images.iter().map(|p| p.display().to_string()).collect();
        println!(
            "{:<12} {:<18} {:<9} {:<13} {:<16} {:>6}  {}",
            e.label,
            format!("{:.6}", r.parameter),
            r.quadrant.to_string(),
            r.verdict.decision.to_string(),
            r.verdict.evidence.to_string(),
            r.verdict.escape_index().map_or("-".into(), |t| t.to_string()),
            images.join(" ")
        );
        if let Some(note) = &e.note {
            println!("  note: {note}");
        }
    }
    println!("wrote {}", outcome.report.display());
}

fn cmd_sweep(args: SweepArgs, workers: Option<usize>) -> Result<ExitCode, CliError> {
    let preset = match (&args.preset, args.axis, &args.values) {
        (Some(name), _, _) => SweepPreset::by_name(name)
            .ok_or_else(|| CliError::Usage(format!("unknown preset '{name}' (expected fig3 or fig4)")))?,
        (None, Some(axis), Some(values)) => {
            let fixed = match axis {
                SweepAxis::Real => args.q.unwrap_or(0.0),
                SweepAxis::Reactive => args.p.unwrap_or(0.0),
            };
            SweepPreset::new(axis, values.clone(), fixed).map_err(CliError::usage)?
        }
        _ => {
            return Err(CliError::Usage(
                "either --preset or both --axis and --values are required".into(),
            ))
        }
    };
    let opts = StudyOptions {
        julia_window: args.window.grid(GridSpec::julia_default())?,
        render: args.iter.render()?,
        classify: args.iter.classify()?,
        scaling: args.scaling.config()?,
        ..options(workers)
    };
    let outcome = run_sweep(&preset, &opts, &args.out_dir)?;
    print_outcome(&outcome);
    Ok(ExitCode::SUCCESS)
}

fn cmd_quadrants(args: QuadrantArgs, workers: Option<usize>) -> Result<ExitCode, CliError> {
    if !(args.magnitude.is_finite() && args.magnitude >= 0.0) {
        return Err(CliError::Usage(format!(
            "--magnitude must be non-negative, got {}",
            args.magnitude
        )));
    }
    let m_default = GridSpec::mandelbrot_default();
    let m_window = WindowArgs {
        center_re: args.m_center_re,
        center_im: args.m_center_im,
        width: args.m_width,
        ..args.window.clone()
    }
    .grid(m_default)?;
    let opts = StudyOptions {
        julia_window: args.window.grid(GridSpec::julia_default())?,
        mandelbrot_window: m_window,
        render: args.iter.render()?,
        classify: args.iter.classify()?,
        scaling: args.scaling.config()?,
        ..options(workers)
    };
    let outcome = run_quadrants(args.magnitude, &opts, &args.out_dir)?;
    print_outcome(&outcome);
    Ok(ExitCode::SUCCESS)
}

fn cmd_symmetry(args: SymmetryArgs) -> Result<ExitCode, CliError> {
    let cfg = IterationConfig::with_budget(args.max_iter).map_err(CliError::usage)?;
    let c = to_parameter(&args.power.phasor()?, &args.scaling.config()?)?;
    let n = args.samples as usize;
    let reports = [
        check_negation_symmetry(c, n, args.seed, &cfg),
        check_conjugation_relation(c, n, args.seed, &cfg),
    ];
    for r in &reports {
        println!("{r}");
    }
    if reports.iter().all(|r| r.passed()) {
        Ok(ExitCode::SUCCESS)
    } else {
        eprintln!("error: symmetry mismatch detected");
        Ok(ExitCode::from(1))
    }
}
