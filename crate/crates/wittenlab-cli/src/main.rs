//! `wittenlab`: batch front end for the verification suites.
//!
//! Subcommands run one family of checks and print a report; the exit status
//! is `0` exactly when every check passed, `1` when some check failed and
//! `2` for usage or input errors.

mod args;
mod render;

use anyhow::{Context, Result};
use args::{RegionGrid, ScaleGrid, ToleranceOverride};
use clap::error::ErrorKind;
use clap::{ArgGroup, Args, CommandFactory, Parser, Subcommand, ValueEnum};
use render::Format;
use std::path::PathBuf;
use std::process::ExitCode;
use wittenlab::elliptic_complexes::Sign;
use wittenlab::model_operators::OperatorKind;
use wittenlab::morse_homology::MorseDocument;
use wittenlab::numerics::Rational;
use wittenlab::verify::{self, Group, Report, RunReport, Tolerances, VerifyConfig, DEFAULT_SEED};

#[derive(Debug, Parser)]
#[command(name = "wittenlab", version, about = "Witten-deformation spectra, region checks and stratified Morse inequalities")]
struct Cli {
    #[command(flatten)]
    output: OutputArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct OutputArgs {
    /// Rendering of the report.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    format: Format,
    /// Write the rendered report to this file; a table summary still goes
    /// to standard output.
    #[arg(long, value_name = "PATH", global = true)]
    report: Option<PathBuf>,
    /// Override a tolerance, e.g. `growth_band=0.2` (repeatable).
    #[arg(long = "tol", value_name = "NAME=VALUE", value_parser = args::tolerance_override, global = true)]
    tolerances: Vec<ToleranceOverride>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Model-operator and elliptic-complex spectra.
    Spectra(SpectraArgs),
    /// Exact region, exclusion and perversity-range equivalences.
    Regions(RegionsArgs),
    /// Morse inequalities of a critical-point document.
    Morse(MorseArgs),
    /// The acceptance suites.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Component {
    #[value(name = "P")]
    P,
    #[value(name = "Q")]
    Q,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("mode").required(true).args(["kind", "complex1", "evodd"])))]
struct SpectraArgs {
    /// Growth exponent of one perturbed component.
    #[arg(long, value_enum)]
    kind: Option<Component>,
    /// Spectra of the length-one complex against the sign table.
    #[arg(long)]
    complex1: bool,
    /// Even/odd matching of the length-two complex.
    #[arg(long)]
    evodd: bool,
    /// Galerkin basis size (at least 8).
    #[arg(short = 'K', long = "basis-size", value_name = "K", value_parser = args::basis_size, default_value = "60")]
    basis_size: usize,
    /// Comma list of scales, positive and ascending [default: 1,10,100,1000
    /// for growth, 1 otherwise].
    #[arg(short = 's', long = "s", value_name = "LIST", value_parser = args::scale_grid)]
    s: Option<ScaleGrid>,
    /// Weight of the component (σ for P, τ for Q).
    #[arg(long, alias = "tau", default_value_t = 1.0)]
    sigma: f64,
    /// Exponent u as `p/q`.
    #[arg(long, value_parser = args::rational, default_value = "1/2")]
    u: Rational,
    /// Perturbation strength ξ.
    #[arg(long, default_value_t = 1.0)]
    xi: f64,
    /// Eigenvalue indices of the growth study.
    #[arg(long = "k", value_delimiter = ',', default_value = "0,2")]
    indices: Vec<usize>,
    /// κ as `p/q` (length-one and length-two complexes).
    #[arg(long, value_parser = args::rational, allow_hyphen_values = true)]
    kappa: Option<Rational>,
    /// Sign of the Morse function (+ or -).
    #[arg(long, default_value = "+", allow_hyphen_values = true)]
    sign: Sign,
    /// Coupling μ of the length-two complex.
    #[arg(long, default_value_t = 1.0)]
    mu: f64,
    /// Eigenvalues listed per operator of the length-one complex.
    #[arg(long, default_value_t = 4)]
    count: usize,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("mode").required(true).args(["w21", "exclusion", "association"])))]
struct RegionsArgs {
    /// 𝒲₂₁'s region and the operator-table validity conditions on a grid.
    #[arg(long)]
    w21: bool,
    /// The exclusion lemma.
    #[arg(long)]
    exclusion: bool,
    /// Ranges of exponents associated to a perversity.
    #[arg(long)]
    association: bool,
    /// Rational grid `kappa=start:end:step,u=start:end:step`.
    #[arg(long, value_parser = args::region_grid, allow_hyphen_values = true,
          default_value = "kappa=-2:2:1/40,u=1/10:9/10:1/10")]
    grid: RegionGrid,
    /// Largest dimension n of the exclusion lemma.
    #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u64).range(1..=64))]
    nmax: u64,
    /// Largest denominator of the exponents u of the exclusion lemma.
    #[arg(long = "max-den", default_value_t = 24, value_parser = clap::value_parser!(i64).range(1..=1000))]
    max_den: i64,
    /// Largest codimension k of the association check.
    #[arg(long, default_value_t = 9, value_parser = clap::value_parser!(u64).range(2..=32))]
    kmax: u64,
}

#[derive(Debug, Args)]
struct MorseArgs {
    /// JSON document with `space`, `points` and optional `perversities`.
    input: PathBuf,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Run only these suite groups (comma list of spectra, regions, morse,
    /// oracle).
    #[arg(long, value_delimiter = ',')]
    only: Vec<Group>,
    /// Seed of the randomized suites.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// List passing checks in the table as well.
    #[arg(long)]
    all: bool,
}

/// A failed run before any check: bad input rather than a failed check.
fn usage(kind: ErrorKind, message: String) -> ! {
    Cli::command().error(kind, message).exit()
}

fn spectra(a: &SpectraArgs, t: &Tolerances) -> Result<Report> {
    let need_kappa = || {
        a.kappa.clone().unwrap_or_else(|| {
            usage(ErrorKind::MissingRequiredArgument, "--kappa is required with --complex1 and --evodd".into())
        })
    };
    if let Some(kind) = a.kind {
        let s = a.s.clone().map_or_else(|| vec![1.0, 10.0, 100.0, 1000.0], |g| g.0);
        if s.len() < 4 {
            usage(ErrorKind::ValueValidation, "--s: the growth fit needs at least four scales".into());
        }
        let kind = match kind {
            Component::P => OperatorKind::P,
            Component::Q => OperatorKind::Q,
        };
        Ok(verify::growth_study(kind, a.sigma, &a.u, a.xi, &a.indices, &s, a.basis_size, t)?)
    } else if a.complex1 {
        let s = a.s.clone().map_or_else(|| vec![1.0], |g| g.0);
        Ok(verify::complex1_study(&need_kappa(), a.sign, &s, a.count)?)
    } else {
        let s = a.s.clone().map_or_else(|| vec![1.0], |g| g.0);
        Ok(verify::evodd_study(&need_kappa(), &a.u, a.mu, &s, a.basis_size, t)?)
    }
}

fn regions(a: &RegionsArgs) -> Report {
    if a.w21 {
        verify::w21_study(&a.grid.kappa, &a.grid.u)
    } else if a.exclusion {
        verify::exclusion_study(a.nmax as usize, a.max_den)
    } else {
        verify::association_study(a.kmax as usize)
    }
}

fn morse(a: &MorseArgs) -> Result<Report> {
    let text = std::fs::read_to_string(&a.input).with_context(|| format!("cannot read {}", a.input.display()))?;
    let doc: MorseDocument =
        serde_json::from_str(&text).with_context(|| format!("malformed document {}", a.input.display()))?;
    verify::morse_document_study(&doc).with_context(|| format!("invalid document {}", a.input.display()))
}

/// Runs the command; `Ok(true)` when every check passed.
fn run(cli: &Cli) -> Result<bool> {
    let tolerances = args::apply_overrides(Tolerances::default(), &cli.output.tolerances);
    let (name, reports, show_passing) = match &cli.command {
        Command::Spectra(a) => ("spectra", vec![spectra(a, &tolerances)?], true),
        Command::Regions(a) => ("regions", vec![regions(a)], true),
        Command::Morse(a) => ("morse", vec![morse(a)?], true),
        Command::Verify(a) => {
            let groups = if a.only.is_empty() { Group::ALL.to_vec() } else { a.only.clone() };
            let config = VerifyConfig {
                tolerances,
                seed: a.seed,
                ..VerifyConfig::default()
            };
            ("verify", verify::run_groups(&groups, &config)?, a.all)
        }
    };
    let run = RunReport::new(name, reports);
    match &cli.output.report {
        Some(path) => {
            let text = render::render(&run, cli.output.format, show_passing)?;
            std::fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))?;
            print!("{}", render::render(&run, Format::Table, false)?);
        }
        None => print!("{}", render::render(&run, cli.output.format, show_passing)?),
    }
    Ok(run.passed())
}

fn main() -> ExitCode {
    env_logger::init();
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
