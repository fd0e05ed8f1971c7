// SPDX-License-Identifier: Apache-2.0

//! `spatialgen` command line.
//!
//! Exit codes: 0 on success, 2 on usage or validation errors, 1 on I/O
//! errors.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, Write};
use std::net::{IpAddr, SocketAddr};
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use spatialgen::{CompoundDescriptor, OutputFormat, SAMPLE_DESCRIPTORS};
use spatialgen_service::{ServiceConfig, DEFAULT_PORT, PORT_ENV};

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "spatialgen", version, about = "Deterministic synthetic spatial data generator")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a dataset from one or more descriptors (several make a compound dataset).
    Generate {
        /// Descriptor text, e.g. "uniform,1000,2,0.02,0.02,1,0,0,0,1,0".
        #[arg(value_name = "DESCRIPTOR")]
        descriptors: Vec<String>,
        /// Additional descriptor, appended after the positional ones.
        #[arg(short = 'd', long = "descriptor", value_name = "DESCRIPTOR")]
        extra: Vec<String>,
        /// Seed for every part without its own seed=K.
        #[arg(short, long, default_value_t = 0)]
        seed: u64,
        /// csv, wkt or geojson.
        #[arg(short, long, default_value = "csv")]
        format: OutputFormat,
        /// Output file; standard output when omitted or "-".
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run the HTTP service.
    Serve {
        #[arg(short, long, env = PORT_ENV, default_value_t = DEFAULT_PORT)]
        port: u16,
        #[arg(long, default_value = "127.0.0.1")]
        bind: IpAddr,
        /// Origin allowed by CORS (any origin when omitted).
        #[arg(long)]
        allow_origin: Option<String>,
    },
    /// Print the six reference sample descriptors.
    Samples,
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match cli.command {
        Command::Generate {
            descriptors,
            extra,
            seed,
            format,
            output,
        } => {
            let texts: Vec<String> = descriptors.into_iter().chain(extra).collect();
            generate(&texts, seed, format, output)
        }
        Command::Serve {
            port,
            bind,
            allow_origin,
        } => serve(SocketAddr::new(bind, port), allow_origin),
        Command::Samples => {
            let mut out = io::stdout().lock();
            for d in SAMPLE_DESCRIPTORS {
                if let Err(e) = writeln!(out, "{d}") {
                    eprintln!("error: {e}");
                    return EXIT_IO;
                }
            }
            EXIT_OK
        }
    }
}

fn generate(texts: &[String], seed: u64, format: OutputFormat, output: Option<PathBuf>) -> i32 {
    if texts.is_empty() {
        eprintln!("error: at least one descriptor is required");
        return EXIT_USAGE;
    }
    let parts = match CompoundDescriptor::parse_parts(texts) {
        Ok(parts) => parts,
        Err((i, e)) => {
            eprintln!("error: descriptor {} ('{}'): {e}", i + 1, texts[i]);
            return EXIT_USAGE;
        }
    };
    let stream = parts.generate(seed);
    let result = match output.as_deref() {
        Some(path) if path.as_os_str() != "-" => match File::create(path) {
            Ok(file) => format.write(stream, file),
            Err(e) => {
                eprintln!("error: cannot create {}: {e}", path.display());
                return EXIT_IO;
            }
        },
        _ => format.write(stream, io::stdout().lock()),
    };
    match result {
        Ok(_) => EXIT_OK,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_IO
        }
    }
}

fn serve(addr: SocketAddr, allow_origin: Option<String>) -> i32 {
    let allowed_origin = match allow_origin.map(|o| o.parse()) {
        None => None,
        Some(Ok(v)) => Some(v),
        Some(Err(_)) => {
            eprintln!("error: invalid --allow-origin value");
            return EXIT_USAGE;
        }
    };
    let runtime = match tokio::runtime::Runtime::new() {
        Ok(rt) => rt,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_IO;
        }
    };
    match runtime.block_on(spatialgen_service::serve(addr, ServiceConfig { allowed_origin })) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_IO
        }
    }
}
