//! `axis-vc` command line front end.
//!
//! Exit codes: 0 on success or a shattered configuration, 1 when a
//! configuration is not shattered (or a freshly built witness fails its own
//! check), 2 on any usage or input error.

use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;

use crate::config_file::{read_config, write_config, write_config_csv, ConfigFileError};
use crate::shattering::{build_shattered_config, is_shattered, Verdict};
use crate::vcdim::{stirling_bounds, vc_dim, vc_dim_big, vc_table, VcReport};

pub const EXIT_OK: u8 = 0;
pub const EXIT_NEGATIVE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "axis-vc",
    version,
    about = "VC dimension of axis-parallel half-spaces in R^d"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the VC dimension for dimension d (any size)
    Vcdim {
        #[arg(value_parser = parse_positive_big)]
        d: BigUint,
    },
    /// Print the log-scale lower bound, the VC dimension and the upper bound
    Bounds {
        #[arg(value_parser = clap::value_parser!(u64).range(2..))]
        d: u64,
    },
    /// Print the d-vs-VC table for d = 1..=d_max
    Table {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        d_max: u64,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
    },
    /// Build a shattered configuration of vc_dim(d) points in R^d
    Construct {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        d: u64,
        /// Write to this file instead of standard output
        #[arg(long)]
        out: Option<PathBuf>,
        /// Export the points as CSV instead of the JSON witness format
        #[arg(long)]
        csv: bool,
    },
    /// Check whether a JSON configuration file is shattered
    Verify { path: PathBuf },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

fn parse_positive_big(s: &str) -> Result<BigUint, String> {
    let d: BigUint = s
        .parse()
        .map_err(|_| format!("`{s}` is not a nonnegative base-10 integer"))?;
    if d.bits() == 0 {
        return Err("d must be at least 1".into());
    }
    Ok(d)
}

/// Bound values are printed with four decimals.
pub fn format_bound(x: f64) -> String {
    format!("{x:.4}")
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Negative(String),
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Io(e.into())
    }
}

impl From<crate::Error> for Failure {
    fn from(e: crate::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<ConfigFileError> for Failure {
    fn from(e: ConfigFileError) -> Self {
        match e {
            ConfigFileError::Io(io) => Failure::Io(io),
            other => Failure::Usage(other.to_string()),
        }
    }
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                EXIT_USAGE
            } else {
                let _ = write!(out, "{}", e.render());
                EXIT_OK
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Negative(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_NEGATIVE
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<u8, Failure> {
    match command {
        Command::Vcdim { d } => {
            writeln!(out, "{}", vc_dim_big(&d)?)?;
            Ok(EXIT_OK)
        }
        Command::Bounds { d } => {
            let b = stirling_bounds(d)?;
            let vc = vc_dim(d)?;
            writeln!(
                out,
                "{} {} {}",
                format_bound(b.lower),
                vc,
                format_bound(b.upper)
            )?;
            Ok(EXIT_OK)
        }
        Command::Table { d_max, format } => {
            let mut w = BufWriter::new(out);
            match format {
                TableFormat::Csv => write_table_csv(d_max, &mut w)?,
                TableFormat::Json => write_table_json(d_max, &mut w)?,
            }
            w.flush()?;
            Ok(EXIT_OK)
        }
        Command::Construct { d, out: path, csv } => construct(d, path, csv, out),
        Command::Verify { path } => {
            let file = File::open(&path)
                .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
            let config = read_config(BufReader::new(file))?;
            match is_shattered(&config)? {
                Verdict::Shattered => {
                    writeln!(out, "SHATTERED")?;
                    Ok(EXIT_OK)
                }
                Verdict::NotShattered { missing } => {
                    writeln!(out, "NOT SHATTERED missing={missing}")?;
                    Ok(EXIT_NEGATIVE)
                }
            }
        }
    }
}

fn construct(d: u64, path: Option<PathBuf>, csv: bool, out: &mut dyn Write) -> Result<u8, Failure> {
    let config = build_shattered_config(d)?;
    if !is_shattered(&config)?.is_shattered() {
        return Err(Failure::Negative(format!(
            "internal error: the configuration built for d = {d} is not shattered"
        )));
    }
    let write = |w: &mut dyn Write| -> Result<(), ConfigFileError> {
        let mut w = BufWriter::new(w);
        if csv {
            write_config_csv(&config, &mut w)?;
        } else {
            write_config(&config, &mut w)?;
        }
        w.flush()?;
        Ok(())
    };
    match path {
        Some(path) => {
            let mut file = File::create(&path)
                .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
            write(&mut file)?;
        }
        None => write(out)?,
    }
    Ok(EXIT_OK)
}

fn bound_cells(row: &VcReport) -> (String, String) {
    match row.stirling {
        Some(b) => (format_bound(b.lower), format_bound(b.upper)),
        None => (String::new(), String::new()),
    }
}

fn write_table_csv<W: Write>(d_max: u64, out: W) -> Result<(), Failure> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["d", "vc", "lower", "upper"])?;
    for row in vc_table(d_max) {
        let (lower, upper) = bound_cells(&row);
        w.write_record([row.d.to_string(), row.vc.to_string(), lower, upper])?;
    }
    w.flush()?;
    Ok(())
}

fn write_table_json<W: Write>(d_max: u64, mut out: W) -> Result<(), Failure> {
    writeln!(out, "[")?;
    for row in vc_table(d_max) {
        let (lower, upper) = match row.stirling {
            Some(_) => bound_cells(&row),
            None => ("null".to_string(), "null".to_string()),
        };
        let sep = if row.d < d_max { "," } else { "" };
        writeln!(
            out,
            "  {{\"d\": {}, \"vc\": {}, \"lower\": {}, \"upper\": {}}}{sep}",
            row.d, row.vc, lower, upper
        )?;
    }
    writeln!(out, "]")?;
    Ok(())
}
