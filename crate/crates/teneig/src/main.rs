use clap::{Parser, Subcommand};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use teneig::doc::{parse_tensor_file, TensorDocument};
use teneig::report::{self, Report};
use teneig::TensorError;

#[derive(Parser)]
#[command(
    name = "teneig",
    version,
    about = "Eigenvalue spectra, bounds and definiteness certificates for symmetric tensors"
)]
struct Cli {
    /// Emit machine-readable JSON instead of the text report
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact real spectrum with eigenvector residual classification
    Spectrum { file: PathBuf },

    /// Invariant-based eigenvalue bounds at a chosen index
    Bounds {
        file: PathBuf,
        /// Bound index (how many extreme eigenvalues), default 1
        #[arg(long)]
        k: Option<usize>,
        /// Upper run index for bracket bounds, default k
        #[arg(long)]
        l: Option<usize>,
    },

    /// Bounds against the actual spectrum, with optional figure datasets
    Compare {
        file: PathBuf,
        /// Write <stem>_hierarchy/_distribution/_intervals.csv here
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Write the same three datasets as SVG charts
        #[arg(long)]
        svg: Option<PathBuf>,
    },

    /// Positive definiteness certificate plus Lyapunov gradient-flow check
    Certify {
        file: PathBuf,
        /// Unit-sphere sample count for the stability check
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        /// Seed for the sample generator
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

fn load(path: &Path) -> teneig::Result<TensorDocument> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| TensorError::Validation(format!("cannot read {}: {e}", path.display())))?;
    let mut doc = parse_tensor_file(&text)?;
    if doc.name.is_none() {
        doc.name = path.file_stem().map(|s| s.to_string_lossy().into_owned());
    }
    Ok(doc)
}

/// `--csv out/run.csv` and `--csv out/run` both mean the stem `out/run`.
fn stem_of(path: &Path) -> PathBuf {
    match path.extension() {
        Some(e) if e == "csv" || e == "svg" => path.with_extension(""),
        _ => path.to_path_buf(),
    }
}

fn write_files(files: &[(PathBuf, String)]) -> teneig::Result<()> {
    for (path, contents) in files {
        if let Some(parent) = path.parent() {
            if !parent.as_os_str().is_empty() {
                std::fs::create_dir_all(parent).map_err(|e| {
                    TensorError::Validation(format!("cannot create {}: {e}", parent.display()))
                })?;
            }
        }
        std::fs::write(path, contents).map_err(|e| {
            TensorError::Validation(format!("cannot write {}: {e}", path.display()))
        })?;
    }
    Ok(())
}

fn run(cli: &Cli) -> teneig::Result<Report> {
    Ok(match &cli.command {
        Command::Spectrum { file } => report::cmd_spectrum(&load(file)?)?,
        Command::Bounds { file, k, l } => report::cmd_bounds(&load(file)?, *k, *l)?,
        Command::Compare { file, csv, svg } => {
            let report = report::cmd_compare(&load(file)?)?;
            let data = report
                .compare_data
                .as_ref()
                .expect("compare always carries datasets");
            if let Some(path) = csv {
                write_files(&report::compare_csv_files(data, &stem_of(path)))?;
            }
            if let Some(path) = svg {
                write_files(&report::compare_svg_files(data, &stem_of(path)))?;
            }
            report
        }
        Command::Certify {
            file,
            samples,
            seed,
        } => report::cmd_certify(&load(file)?, *samples, *seed)?,
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report.json)
                        .expect("report JSON always serializes")
                );
            } else {
                print!("{}", report.text);
            }
            ExitCode::from(report.exit_code as u8)
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
