//! Command-line surface for the lattice-triangle geometry library: exact
//! center queries, condition classification, bounded scans, implication
//! verification and mining, and deterministic SVG figure rendering.
//!
//! The heavy lifting lives in the `trilat` core crate; this crate adds
//! argument parsing, output formats (text, JSON, CSV, SVG), a tiny boolean
//! expression language for scan filters, and a work-stealing parallel driver
//! for the exhaustive searches.

pub mod expr;
pub mod output;
pub mod parallel;
pub mod svg;

use std::fmt;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand};
use trilat::{classify, EnumSpec, ImplicationMiner, Triangle};

use output::OutputFormat;
use svg::{FigureElement, FigureSpec};

/// Failures that terminate the process with a distinct exit code.
#[derive(Debug)]
pub enum CliError {
    /// The input vertices are collinear or coincident (exit code 3).
    Degenerate,
    /// A condition expression failed to parse (exit code 2, like other
    /// argument errors).
    ExprParse(String),
    /// Verification found counterexamples (exit code 4).
    Counterexample(usize),
    /// Reading or writing output failed (exit code 5).
    Io(std::io::Error),
}

impl CliError {
    /// The process exit code for this failure.
    pub fn code(&self) -> i32 {
        match self {
            CliError::ExprParse(_) => 2,
            CliError::Degenerate => 3,
            CliError::Counterexample(_) => 4,
            CliError::Io(_) => 5,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Degenerate => write!(f, "the vertices are collinear: no triangle"),
            CliError::ExprParse(msg) => write!(f, "bad condition expression: {msg}"),
            CliError::Counterexample(n) => write!(f, "{n} claim(s) refuted within the bound"),
            CliError::Io(e) => write!(f, "{e}"),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> CliError {
        CliError::Io(e)
    }
}

#[derive(Parser)]
#[command(
    name = "trilat",
    version,
    about = "Exact centers, Euler lines and integrality conditions of lattice triangles",
    arg_required_else_help = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format (the figure subcommand always emits SVG).
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,

    /// Write the output to this file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Exact circumcenter, centroid, orthocenter, area, circumradius and
    /// Euler line of a lattice triangle.
    Centers {
        /// Vertex coordinates: x1 y1 x2 y2 x3 y3.
        #[arg(num_args = 6, required = true, allow_negative_numbers = true, value_name = "COORD")]
        coords: Vec<i128>,
    },

    /// The six lattice/integrality conditions and the side-coordinate gcd.
    Classify {
        /// Vertex coordinates: x1 y1 x2 y2 x3 y3.
        #[arg(num_args = 6, required = true, allow_negative_numbers = true, value_name = "COORD")]
        coords: Vec<i128>,
    },

    /// List enumerated triangles whose condition vector matches an
    /// expression.
    Scan {
        /// Coordinate bound of the enumeration box.
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        bound: u32,

        /// Condition filter over the six flags, e.g. "h & !f" or
        /// "(g | even) & area". Default: match everything.
        #[arg(long = "where", value_name = "EXPR")]
        filter: Option<String>,

        /// Stop after this many matches.
        #[arg(long, value_name = "N")]
        limit: Option<u64>,

        /// Only triangles whose four side coordinates have gcd 1.
        #[arg(long)]
        primitive: bool,

        /// One representative per congruence class.
        #[arg(long)]
        dedupe: bool,
    },

    /// Re-check the five proved condition implications exhaustively up to a
    /// bound; exits nonzero if any counterexample is found.
    Verify {
        /// Coordinate bound of the enumeration box.
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        bound: u32,

        /// Worker threads for the enumeration.
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        threads: u32,
    },

    /// Mine the full 192-cell implication table (every subset of the six
    /// conditions against every remaining condition) up to a bound.
    Implications {
        /// Coordinate bound of the enumeration box.
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        bound: u32,

        /// Worker threads for the enumeration.
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        threads: u32,

        /// Count one representative per congruence class instead of every
        /// placement (runs single-threaded).
        #[arg(long)]
        dedupe: bool,
    },

    /// Render a triangle with grid, circumcircle, Euler line and centers as
    /// a deterministic SVG document.
    Figure {
        /// Vertex coordinates: x1 y1 x2 y2 x3 y3.
        #[arg(num_args = 6, required = true, allow_negative_numbers = true, value_name = "COORD")]
        coords: Vec<i128>,

        /// Canvas width in pixels.
        #[arg(long, default_value_t = 480, value_parser = clap::value_parser!(u32).range(1..))]
        width: u32,

        /// Canvas height in pixels.
        #[arg(long, default_value_t = 360, value_parser = clap::value_parser!(u32).range(1..))]
        height: u32,

        /// Elements to leave out (comma-separated).
        #[arg(long, value_enum, value_delimiter = ',')]
        hide: Vec<FigureElement>,
    },
}

/// Parses the arguments from the environment, runs the selected command and
/// returns the process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        // clap prints its own message; usage errors exit 2, --help and
        // --version exit 0.
        Err(e) => e.exit(),
    };
    match dispatch(cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.code()
        }
    }
}

fn dispatch(cli: Cli) -> Result<(), CliError> {
    let format = cli.format;
    let out = cli.out.as_deref();
    match cli.command {
        Command::Centers { coords } => {
            let t = parse_triangle(&coords)?;
            emit(out, &output::centers_report(&t, format))
        }
        Command::Classify { coords } => {
            let t = parse_triangle(&coords)?;
            emit(out, &output::classify_report(&t, format))
        }
        Command::Scan {
            bound,
            filter,
            limit,
            primitive,
            dedupe,
        } => {
            let expr = match filter {
                Some(src) => expr::parse(&src).map_err(CliError::ExprParse)?,
                None => expr::FlagExpr::always_true(),
            };
            let spec = EnumSpec::new(bound).primitive_only(primitive).dedupe(dedupe);
            let rows = spec
                .iter()
                .map(|t| (t, classify(&t)))
                .filter(|(_, cv)| expr.eval(cv))
                .take(limit.map_or(usize::MAX, |n| n as usize));
            let mut sink = open_sink(out)?;
            output::write_scan(&mut sink, format, rows)?;
            sink.flush().map_err(CliError::Io)
        }
        Command::Verify { bound, threads } => {
            let started = Instant::now();
            let reports = if threads <= 1 {
                trilat::verify_all(bound)
            } else {
                parallel::verify_all_parallel(bound, threads as usize)
            };
            eprintln!(
                "verify: bound {bound}, {threads} thread(s), {:.3}s",
                started.elapsed().as_secs_f64()
            );
            let refuted = reports.iter().filter(|r| !r.holds()).count();
            emit(out, &output::verify_report(&reports, format))?;
            if refuted > 0 {
                return Err(CliError::Counterexample(refuted));
            }
            Ok(())
        }
        Command::Implications {
            bound,
            threads,
            dedupe,
        } => {
            let started = Instant::now();
            let table = if dedupe {
                let mut miner = ImplicationMiner::new();
                for t in EnumSpec::new(bound).dedupe(true).iter() {
                    miner.observe(&t);
                }
                miner.finish(bound)
            } else if threads <= 1 {
                trilat::mine_implications(bound)
            } else {
                parallel::mine_parallel(bound, threads as usize)
            };
            eprintln!(
                "implications: bound {bound}, {:.3}s",
                started.elapsed().as_secs_f64()
            );
            table
                .self_check()
                .expect("mined implication table failed its self-check");
            emit(out, &output::implications_report(&table, format))
        }
        Command::Figure {
            coords,
            width,
            height,
            hide,
        } => {
            let t = parse_triangle(&coords)?;
            let mut spec = FigureSpec::new(t);
            spec.width = width;
            spec.height = height;
            for element in hide {
                spec.hide(element);
            }
            emit(out, &svg::render_figure(&spec))
        }
    }
}

fn parse_triangle(coords: &[i128]) -> Result<Triangle, CliError> {
    let c: [i128; 6] = coords.try_into().expect("clap enforces six coordinates");
    Triangle::from_coords(c).map_err(|_| CliError::Degenerate)
}

fn emit(out: Option<&Path>, content: &str) -> Result<(), CliError> {
    match out {
        None => std::io::stdout()
            .write_all(content.as_bytes())
            .map_err(CliError::Io),
        Some(path) => std::fs::write(path, content).map_err(CliError::Io),
    }
}

fn open_sink(out: Option<&Path>) -> Result<Box<dyn Write>, CliError> {
    match out {
        None => Ok(Box::new(std::io::stdout().lock())),
        Some(path) => Ok(Box::new(std::io::BufWriter::new(
            std::fs::File::create(path).map_err(CliError::Io)?,
        ))),
    }
}
