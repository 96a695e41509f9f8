//! Command-line interface.
//!
//! Exit codes: 0 success, 1 verification failure, 2 invalid input,
//! 3 internal invariant violation.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use geopierce::instance::PointsFile;
use geopierce::svg::render_svg;
use geopierce::{generate_instance, selftest, verify_piercing, HarnessError, Instance};
use geopierce_core::piercing::compute_piercing_set;
use geopierce_core::Error as GeomError;

#[derive(Parser)]
#[command(
    name = "geopierce",
    version,
    about = "Pierce pairwise intersecting geodesic disks in a simple polygon with at most five points"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a piercing set for an instance file.
    Pierce {
        instance: PathBuf,
        /// Write the piercing points as JSON.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Render the instance and result as SVG.
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Piercing tolerance used by the built-in verification.
        #[arg(long, default_value_t = 1e-7)]
        tol: f64,
    },
    /// Verify a points file against an instance; exit 0 iff all pierced.
    Verify {
        instance: PathBuf,
        points: PathBuf,
        #[arg(long, default_value_t = 1e-7)]
        tol: f64,
    },
    /// Generate a random instance.
    Gen {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        vertices: usize,
        #[arg(long)]
        disks: usize,
        #[arg(long)]
        out: PathBuf,
        /// Construct the disks around a common witness point.
        #[arg(long, default_value_t = false)]
        helly: bool,
    },
    /// Run the numeric self-tests and module invariant suites.
    Selftest,
    /// Render an instance (optionally with a points file) as SVG.
    Render {
        instance: PathBuf,
        #[arg(long)]
        points: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
    },
}

const EXIT_VERIFY: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_INTERNAL: u8 = 3;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(classify(&err))
        }
    }
}

fn classify(err: &HarnessError) -> u8 {
    match err {
        HarnessError::Geometry(
            GeomError::OptimizerStalled { .. }
            | GeomError::TangencyNotFound(_)
            | GeomError::DegenerateTangentTriangle(_, _)
            | GeomError::BothLarge
            | GeomError::PiercingPointOutside { .. }
            | GeomError::NoEarFound(_),
        ) => EXIT_INTERNAL,
        HarnessError::SelfTestFailed(_) => EXIT_VERIFY,
        _ => EXIT_INPUT,
    }
}

fn run(cli: Cli) -> Result<ExitCode, HarnessError> {
    match cli.command {
        Command::Pierce {
            instance,
            out,
            svg,
            tol,
        } => {
            let inst = Instance::load(&instance)?;
            let set =
                compute_piercing_set(&inst.polygon, &inst.disks).map_err(HarnessError::Geometry)?;
            let report = verify_piercing(&inst, &set.points, set.case.as_str(), tol)?;
            if let Some(path) = out {
                PointsFile::from_set(&set).save(&path)?;
            } else {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&PointsFile::from_set(&set))?
                );
            }
            if let Some(path) = svg {
                std::fs::write(&path, render_svg(&inst, Some(&set), Some(&report))?)?;
            }
            eprint!("{}", report.table());
            if report.all_pierced() {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(EXIT_VERIFY))
            }
        }
        Command::Verify {
            instance,
            points,
            tol,
        } => {
            let inst = Instance::load(&instance)?;
            let pf = PointsFile::load(&points)?;
            if pf.points.is_empty() {
                return Err(HarnessError::InvalidInstance("points file is empty".into()));
            }
            let report = verify_piercing(&inst, &pf.to_points(), &pf.case, tol)?;
            print!("{}", report.table());
            if report.all_pierced() {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(EXIT_VERIFY))
            }
        }
        Command::Gen {
            seed,
            vertices,
            disks,
            out,
            helly,
        } => {
            let inst = if helly {
                geopierce::generate_helly_instance(seed, vertices, disks)?
            } else {
                generate_instance(seed, vertices, disks)?
            };
            inst.save(&out)?;
            println!(
                "wrote {} ({} vertices, {} disks)",
                out.display(),
                vertices,
                disks
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Selftest => {
            let report = selftest::run();
            print!("{}", report.render());
            match report.items.iter().find(|i| !i.passed) {
                None => Ok(ExitCode::SUCCESS),
                Some(item) => Err(HarnessError::SelfTestFailed(item.name.to_string())),
            }
        }
        Command::Render {
            instance,
            points,
            out,
        } => {
            let inst = Instance::load(&instance)?;
            let set = match points {
                Some(path) => {
                    // Re-run the pipeline to recover provenance-rich data for
                    // drawing; the points file is authoritative for geometry.
                    let pf = PointsFile::load(&path)?;
                    let set = compute_piercing_set(&inst.polygon, &inst.disks)
                        .map_err(HarnessError::Geometry)?;
                    let drawn = PointsFile::from_set(&set);
                    if drawn.points != pf.points {
                        eprintln!("note: points file differs from a fresh pierce run");
                    }
                    Some(set)
                }
                None => None,
            };
            std::fs::write(&out, render_svg(&inst, set.as_ref(), None)?)?;
            println!("wrote {}", out.display());
            Ok(ExitCode::SUCCESS)
        }
    }
}
