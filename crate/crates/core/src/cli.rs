//! Command-line front end. The `dsf-share` binary is a thin wrapper around
//! [`run`].
//!
//! Exit codes: 0 success, 1 usage error, 2 data or format error, 3 corrupted
//! carriers detected during recovery. Failures print one `error: ...` line
//! on stderr.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::bench;
use crate::bitplane::BitPlane;
use crate::decomposition::{
    reconstruct, DecompositionSet, DsfMatrix, ErrorMatrix, MappingParams, SignMatrix,
};
use crate::error::Error;
use crate::image::GrayImage;
use crate::manifest::{self, ParamsRecord};
use crate::metrics::{self, classify, LinearStrength, MetricReport};
use crate::pgm;
use crate::pipeline::{self, MANIFEST_VERSION};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DATA: i32 = 2;
pub const EXIT_CORRUPTION: i32 = 3;

pub const DSF_FILE: &str = "dsf.pgm";
pub const ERROR_FILE: &str = "error.pgm";
pub const SIGN_FILE: &str = "sign.pgm";
pub const PARAMS_FILE: &str = "params.txt";
pub const MANIFEST_FILE: &str = "manifest.txt";

#[derive(Debug, Parser)]
#[command(
    name = "dsf-share",
    version,
    about = "Grayscale secret image sharing over 17 cover images"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write the DSF, error and sign matrices of a payload as PGM files
    Decompose {
        #[arg(long)]
        payload: PathBuf,
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(1..=8))]
        eta: u32,
        #[arg(long)]
        out: PathBuf,
    },
    /// Rebuild a payload from a directory written by `decompose`
    Reconstruct {
        #[arg(long)]
        dir: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Embed a payload into 17 covers; writes 17 stegos and a manifest
    Share {
        #[arg(long)]
        payload: PathBuf,
        #[arg(long, num_args = 1.., required = true)]
        covers: Vec<PathBuf>,
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(1..=8))]
        eta: u32,
        #[arg(long)]
        out: PathBuf,
    },
    /// Recover the payload from the stegos listed in a manifest
    Recover {
        #[arg(long)]
        manifest: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Print MSE, PSNR, correlation and histograms of two images
    Metrics {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
    },
    /// Time decomposition and reconstruction and check operation counts
    Bench {
        #[arg(long, value_delimiter = ',', default_values_t = [64usize, 128, 256, 512])]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 5)]
        trials: usize,
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(1..=8))]
        eta: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        let code = match err {
            Error::InvalidEta(_) | Error::Arity { .. } => EXIT_USAGE,
            Error::Corruption { .. } => EXIT_CORRUPTION,
            _ => EXIT_DATA,
        };
        Failure {
            code,
            message: err.to_string(),
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            if matches!(
                err.kind(),
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion
            ) {
                let _ = write!(stdout, "{err}");
                return EXIT_OK;
            }
            let rendered = err.to_string();
            let first = rendered.lines().next().unwrap_or("invalid arguments");
            let first = first.strip_prefix("error: ").unwrap_or(first);
            let _ = writeln!(stderr, "error: usage: {first}");
            return EXIT_USAGE;
        }
    };
    match execute(cli.command, stdout) {
        Ok(()) => EXIT_OK,
        Err(failure) => {
            let message = failure.message.replace('\n', " ");
            let _ = writeln!(stderr, "error: {message}");
            failure.code
        }
    }
}

pub fn execute(command: Command, stdout: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::Decompose { payload, eta, out } => cmd_decompose(&payload, eta, &out),
        Command::Reconstruct { dir, out } => cmd_reconstruct(&dir, &out),
        Command::Share {
            payload,
            covers,
            eta,
            out,
        } => cmd_share(&payload, &covers, eta, &out),
        Command::Recover { manifest, out } => cmd_recover(&manifest, &out),
        Command::Metrics { a, b } => cmd_metrics(&a, &b, stdout),
        Command::Bench {
            sizes,
            trials,
            eta,
            seed,
        } => cmd_bench(&sizes, trials, eta, seed, stdout),
    }
}

fn create_dir(dir: &Path) -> Result<(), Failure> {
    fs::create_dir_all(dir).map_err(|e| Error::Io {
        path: dir.to_path_buf(),
        source: e,
    })?;
    Ok(())
}

fn cmd_decompose(payload: &Path, eta: u32, out: &Path) -> Result<(), Failure> {
    let params = MappingParams::new(eta)?;
    let image = pgm::load(payload)?;
    let set = pipeline::decompose_for_inspection(&image, params);
    create_dir(out)?;
    pgm::write(out.join(DSF_FILE), set.dsf().as_image())?;
    pgm::write(out.join(ERROR_FILE), set.error().as_image())?;
    pgm::write(out.join(SIGN_FILE), &set.sign().to_gray())?;
    let record = ParamsRecord {
        version: MANIFEST_VERSION,
        width: image.width(),
        height: image.height(),
        eta,
    };
    let path = out.join(PARAMS_FILE);
    fs::write(&path, record.to_text()).map_err(|e| Error::Io { path, source: e })?;
    Ok(())
}

fn cmd_reconstruct(dir: &Path, out: &Path) -> Result<(), Failure> {
    let path = dir.join(PARAMS_FILE);
    let text = fs::read_to_string(&path).map_err(|e| Error::Io {
        path: path.clone(),
        source: e,
    })?;
    let record = ParamsRecord::parse(&text)?;
    let dsf = pgm::load(dir.join(DSF_FILE))?;
    let error = pgm::load(dir.join(ERROR_FILE))?;
    let sign = BitPlane::from_gray(&pgm::load(dir.join(SIGN_FILE))?)?;
    crate::image::check_dimensions((record.width, record.height), dsf.dimensions(), DSF_FILE)?;
    let set = DecompositionSet::new(
        DsfMatrix::from_image(dsf),
        ErrorMatrix::from_image(error),
        SignMatrix::from_plane(sign),
        MappingParams::new(record.eta)?,
    )?;
    pgm::write(out, &reconstruct(&set)?)?;
    Ok(())
}

fn cmd_share(payload: &Path, covers: &[PathBuf], eta: u32, out: &Path) -> Result<(), Failure> {
    let params = MappingParams::new(eta)?;
    if covers.len() != pipeline::CARRIER_COUNT {
        return Err(Error::Arity {
            what: "cover images",
            expected: pipeline::CARRIER_COUNT,
            found: covers.len(),
        }
        .into());
    }
    let payload = pgm::load(payload)?;
    let covers = covers
        .iter()
        .map(pgm::load)
        .collect::<Result<Vec<GrayImage>, Error>>()?;
    let (stegos, manifest) = pipeline::share(&payload, &covers, params)?;
    create_dir(out)?;
    for (stego, entry) in stegos.iter().zip(&manifest.entries) {
        pgm::write(out.join(&entry.stego), stego)?;
    }
    manifest::write(out.join(MANIFEST_FILE), &manifest)?;
    Ok(())
}

fn cmd_recover(manifest_path: &Path, out: &Path) -> Result<(), Failure> {
    let manifest = manifest::read(manifest_path)?;
    let stegos = manifest::load_stegos(manifest_path, &manifest)?;
    let payload = pipeline::recover(&stegos, &manifest)?;
    pgm::write(out, &payload)?;
    Ok(())
}

fn write_out(stdout: &mut dyn Write, text: std::fmt::Arguments<'_>) -> Result<(), Failure> {
    stdout.write_fmt(text).map_err(|e| Failure {
        code: EXIT_DATA,
        message: format!("writing output: {e}"),
    })
}

fn format_histogram(hist: &[u64; 256]) -> String {
    hist.iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn cmd_metrics(a: &Path, b: &Path, stdout: &mut dyn Write) -> Result<(), Failure> {
    let a = pgm::load(a)?;
    let b = pgm::load(b)?;
    let report = MetricReport::compute(&a, &b)?;
    let (correlation, strength) = match report.correlation {
        Some(r) => (
            r.to_string(),
            match classify(r) {
                LinearStrength::Weak => "weak",
                LinearStrength::Strong => "strong",
            },
        ),
        None => ("undefined".to_string(), "undefined"),
    };
    let psnr = if report.psnr_db.is_infinite() {
        "inf".to_string()
    } else {
        report.psnr_db.to_string()
    };
    write_out(
        stdout,
        format_args!(
            "mse: {}\npsnr_db: {psnr}\ncorrelation: {correlation}\nstrength: {strength}\nhistogram_a: {}\nhistogram_b: {}\n",
            report.mse,
            format_histogram(&metrics::histogram(&a)),
            format_histogram(&metrics::histogram(&b)),
        ),
    )
}

fn cmd_bench(
    sizes: &[usize],
    trials: usize,
    eta: u32,
    seed: u64,
    stdout: &mut dyn Write,
) -> Result<(), Failure> {
    let params = MappingParams::new(eta)?;
    if sizes.is_empty() || sizes.contains(&0) || trials == 0 {
        return Err(Failure {
            code: EXIT_USAGE,
            message: "usage: sizes and trials must be at least 1".into(),
        });
    }
    let rows = bench::run(sizes, trials, params, seed)?;
    for row in &rows {
        let d = &row.decompose_ops;
        write_out(
            stdout,
            format_args!(
                "size: {n}x{n} eta: {eta} decompose_mean_s: {:.6} reconstruct_mean_s: {:.6} \
                 comparisons: {} division_steps: {} subtractions: {} decompose_ops: {} \
                 decompose_bound: {} reconstruct_ops: {} reconstruct_bound: {}\n",
                row.decompose_mean.as_secs_f64(),
                row.reconstruct_mean.as_secs_f64(),
                d.comparisons,
                d.division_steps,
                d.subtractions,
                d.total(),
                row.decompose_bound,
                row.reconstruct_ops.total(),
                row.reconstruct_bound,
                n = row.side,
            ),
        )?;
    }
    for (pair, ratio) in rows.windows(2).zip(bench::growth_ratios(&rows)) {
        write_out(
            stdout,
            format_args!(
                "growth: {} -> {} ratio: {ratio:.4}\n",
                pair[0].side, pair[1].side
            ),
        )?;
    }
    Ok(())
}
