use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use geocomplexity::analysis::{compute_profile, correlation_matrix, pca, Measure, ProfileTable};
use geocomplexity::cli::batch::{default_jobs, run_batch, write_outputs, Manifest};
use geocomplexity::cli::exit;
use geocomplexity::cli::format::{
    correlation_to_csv, dataset_to_csv, plot_data, profiles_to_csv, read_profiles_csv,
};
use geocomplexity::cli::{all_pairs, parse_csv, restrict, whole, RawTable};
use geocomplexity::linprog::l1_error_distance;
use geocomplexity::synth::GeneratorSpec;
use geocomplexity::{Dataset, Error};

#[derive(Parser)]
#[command(name = "geocomplexity", version, about = "Geometrical complexity of two-class classification problems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    RandomLabeling,
    LinearMargin,
    Checkerboard,
    Rings,
}

#[derive(clap::Args)]
struct Input {
    /// CSV file with a header row
    csv: PathBuf,
    /// Label column, by header name or zero-based index
    #[arg(long)]
    label: String,
    /// Code non-numeric feature columns as integers by first appearance
    #[arg(long)]
    encode: bool,
    /// Write categorical encodings to this JSON file
    #[arg(long)]
    mapping: Option<PathBuf>,
    /// Z-score every feature before measuring
    #[arg(long)]
    standardize: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Compute all twelve measures for one two-class problem
    Measure {
        #[command(flatten)]
        input: Input,
        /// Restrict a multi-class file to two labels, e.g. `--classes a,b`
        #[arg(long, value_delimiter = ',')]
        classes: Option<Vec<String>>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Profile every pairwise problem of a multi-class file
    Pairs {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Write a synthetic problem as CSV
    Generate {
        #[arg(value_enum)]
        kind: Kind,
        #[arg(long, default_value_t = 2)]
        dim: usize,
        /// Points per class
        #[arg(long, default_value_t = 1000)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0.1)]
        margin: f64,
        #[arg(long, default_value_t = 4)]
        cells: usize,
        #[arg(long, default_value_t = 1.0)]
        r_inner: f64,
        #[arg(long, default_value_t = 3.0)]
        r_outer: f64,
        #[arg(long, default_value_t = 1.0)]
        gap: f64,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Profile every problem of a JSON manifest
    Batch {
        manifest: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Pearson correlation between measures of a profile table
    Correlate {
        profiles: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Principal components of a profile table
    Pca {
        profiles: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Two-measure scatter data from a profile table
    PlotData {
        profiles: PathBuf,
        #[arg(long)]
        x: Measure,
        #[arg(long)]
        y: Measure,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Report whether a problem is linearly separable
    Separable {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_delimiter = ',')]
        classes: Option<Vec<String>>,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
}

enum Failure {
    Invalid(String),
    Io(String),
    Partial,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_io() {
            Failure::Io(e.to_string())
        } else {
            Failure::Invalid(e.to_string())
        }
    }
}

fn emit(output: Option<&Path>, text: &str) -> Result<(), Failure> {
    match output {
        Some(path) => std::fs::write(path, text).map_err(|e| Failure::Io(format!("{}: {e}", path.display()))),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Io(e.to_string())),
    }
}

fn load(input: &Input) -> Result<RawTable, Failure> {
    let raw = parse_csv(&input.csv, &input.label, input.encode)?;
    eprintln!(
        "read {} rows, {} features from {}",
        raw.rows.len(),
        raw.feature_names.len(),
        input.csv.display()
    );
    if !raw.encodings.is_empty() {
        let text = serde_json::to_string_pretty(&raw.encodings).map_err(Error::from)?;
        match &input.mapping {
            Some(path) => emit(Some(path), &text)?,
            None => eprintln!("categorical encodings: {text}"),
        }
    }
    Ok(raw)
}

fn problem(input: &Input, raw: &RawTable, classes: &Option<Vec<String>>) -> Result<Dataset, Failure> {
    let ds = match classes {
        Some(pair) if pair.len() == 2 => restrict(raw, &pair[0], &pair[1])?,
        Some(_) => return Err(Failure::Invalid("--classes takes exactly two labels, e.g. --classes a,b".into())),
        None => whole(raw)?,
    };
    Ok(if input.standardize { ds.standardized() } else { ds })
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Measure {
            input,
            classes,
            seed,
            format,
        } => {
            let raw = load(&input)?;
            let ds = problem(&input, &raw, &classes)?;
            let profile = compute_profile(&ds, seed)?;
            let text = match format {
                Format::Json => {
                    let mut s = serde_json::to_string_pretty(&profile).map_err(Error::from)?;
                    s.push('\n');
                    s
                }
                Format::Csv => profiles_to_csv(&ProfileTable::new(vec![profile]))?,
            };
            emit(None, &text)
        }
        Command::Pairs {
            input,
            seed,
            output,
            jobs,
        } => {
            let raw = load(&input)?;
            let mut problems = all_pairs(&raw)?;
            if input.standardize {
                problems = problems.iter().map(Dataset::standardized).collect();
            }
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs.unwrap_or_else(default_jobs))
                .build()
                .map_err(|e| Failure::Invalid(e.to_string()))?;
            use rayon::prelude::*;
            let profiles = pool.install(|| {
                problems
                    .par_iter()
                    .enumerate()
                    .map(|(k, ds)| compute_profile(ds, geocomplexity::rng::derive_seed(seed, k as u64)))
                    .collect::<Result<Vec<_>, _>>()
            })?;
            emit(output.as_deref(), &profiles_to_csv(&ProfileTable::new(profiles))?)
        }
        Command::Generate {
            kind,
            dim,
            n,
            seed,
            margin,
            cells,
            r_inner,
            r_outer,
            gap,
            output,
        } => {
            let spec = match kind {
                Kind::RandomLabeling => GeneratorSpec::RandomLabeling { dim, n_per_class: n, seed },
                Kind::LinearMargin => GeneratorSpec::LinearMargin { dim, n_per_class: n, margin, seed },
                Kind::Checkerboard => {
                    if dim != 2 {
                        return Err(Failure::Invalid("checkerboard problems are two-dimensional".into()));
                    }
                    GeneratorSpec::Checkerboard { cells_per_side: cells, n_per_class: n, seed }
                }
                Kind::Rings => {
                    if dim != 2 {
                        return Err(Failure::Invalid("ring problems are two-dimensional".into()));
                    }
                    GeneratorSpec::Rings { n_per_class: n, r_inner, r_outer, gap, seed }
                }
            };
            let ds = spec.generate()?;
            emit(Some(&output), &dataset_to_csv(&ds))
        }
        Command::Batch {
            manifest,
            output,
            jobs,
        } => {
            let m = Manifest::load(&manifest)?;
            let dir = output
                .or_else(|| m.output.clone())
                .ok_or_else(|| Failure::Invalid("no output directory: pass -o or set \"output\"".into()))?;
            let base = manifest.parent().unwrap_or(Path::new("."));
            let outcome = run_batch(&m, base, jobs.unwrap_or_else(default_jobs))?;
            write_outputs(&outcome, &dir)?;
            eprintln!(
                "{} profiles, {} failed entries -> {}",
                outcome.table.len(),
                outcome.failures.len(),
                dir.display()
            );
            for f in &outcome.failures {
                eprintln!("entry {} ({}): {}", f.entry, f.name, f.error);
            }
            if outcome.failures.is_empty() {
                Ok(())
            } else {
                Err(Failure::Partial)
            }
        }
        Command::Correlate { profiles, output } => {
            let table = read_profiles_csv(&profiles)?;
            let c = correlation_matrix(&table)?;
            for (a, row) in c.excluded.iter().enumerate() {
                for (b, &k) in row.iter().enumerate().skip(a) {
                    if k > 0 {
                        eprintln!("{}-{}: {k} rows excluded (infinite values)", Measure::ALL[a], Measure::ALL[b]);
                    }
                }
            }
            emit(output.as_deref(), &correlation_to_csv(&c))
        }
        Command::Pca { profiles, output } => {
            let table = read_profiles_csv(&profiles)?;
            let result = pca(&table)?;
            for w in &result.warnings {
                eprintln!("warning: {w}");
            }
            let mut text = serde_json::to_string_pretty(&result).map_err(Error::from)?;
            text.push('\n');
            emit(output.as_deref(), &text)
        }
        Command::PlotData {
            profiles,
            x,
            y,
            output,
        } => {
            let table = read_profiles_csv(&profiles)?;
            emit(output.as_deref(), &plot_data(&table, x, y))
        }
        Command::Separable { input, classes, tol } => {
            let raw = load(&input)?;
            let ds = problem(&input, &raw, &classes)?;
            let l1 = l1_error_distance(&ds)?;
            emit(None, if l1 <= tol { "yes\n" } else { "no\n" })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(()) => exit::SUCCESS,
        Err(Failure::Partial) => exit::PARTIAL_FAILURE,
        Err(Failure::Invalid(msg)) => {
            eprintln!("error: {msg}");
            exit::INVALID_INVOCATION
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            exit::IO_ERROR
        }
    };
    ExitCode::from(code as u8)
}
