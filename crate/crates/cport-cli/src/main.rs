//! `cport` - C-Port Vector analytics from the command line.

mod commands;
mod human;
mod report;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Json,
}

#[derive(Parser)]
#[command(
    name = "cport",
    version,
    about = "Compute, compare, and rank C-Port Vectors; query the C-Port service catalog",
    after_help = "Exit status: 0 success, 2 input validation, 3 undefined mathematical \
                  operation, 4 unknown reference.\n\
                  Set CPORT_NO_COLOR to disable styled human output."
)]
pub struct Cli {
    /// Output format for reports
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    pub format: Format,

    /// Omit the timestamp so identical inputs yield byte-identical JSON
    #[arg(long, global = true)]
    pub reproducible: bool,

    /// Weights file {"a_raw":[..4],"w_raw":[..3]}; defaults to uniform
    /// weights a = (2,2,2,2), w = (sqrt 3, sqrt 3, sqrt 3)
    #[arg(long, global = true, value_name = "PATH")]
    pub weights: Option<PathBuf>,

    /// Standards ledger file {"applicable":[..],"adopted":[..]}
    #[arg(long, global = true, value_name = "PATH")]
    pub ledger: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Parse and validate a portfolio file, reporting every violation
    IngestCheck {
        /// Portfolio file (.csv or .json)
        portfolio: PathBuf,
    },

    /// Compute one port snapshot: matrix, rho, C-PV, shares, total
    Compute {
        /// Portfolio file (.csv or .json)
        portfolio: PathBuf,
        /// Port identifier the records belong to
        #[arg(long)]
        port: String,
        /// Window spec START:END (years, inclusive)
        #[arg(long)]
        window: String,
        /// Explicit merit factor in [0,1] instead of a ledger
        #[arg(long)]
        rho: Option<f64>,
    },

    /// Angle between two snapshots (two --window specs; optional second
    /// portfolio/port/ledger for cross-port comparison)
    Compare {
        /// Portfolio file (.csv or .json)
        portfolio: PathBuf,
        /// Port identifier the records belong to
        #[arg(long)]
        port: String,
        /// Window spec START:END; pass exactly twice
        #[arg(long = "window", value_name = "SPEC")]
        windows: Vec<String>,
        /// Explicit merit factor in [0,1] instead of a ledger
        #[arg(long)]
        rho: Option<f64>,
        /// Portfolio for the second snapshot (defaults to the first)
        #[arg(long)]
        portfolio2: Option<PathBuf>,
        /// Port for the second snapshot (defaults to the first)
        #[arg(long)]
        port2: Option<String>,
        /// Ledger for the second snapshot (defaults to --ledger)
        #[arg(long)]
        ledger2: Option<PathBuf>,
        /// Merit factor for the second snapshot (defaults to --rho)
        #[arg(long)]
        rho2: Option<f64>,
        /// Weights for the second snapshot (defaults to --weights)
        #[arg(long)]
        weights2: Option<PathBuf>,
    },

    /// Rank the ports of a manifest by |C-PV|
    Rank {
        /// Manifest JSON: {"window":..,"weights":..,"ports":[{"id","portfolio","ledger"|"rho",..}]}
        manifest: PathBuf,
    },

    /// Snapshot sequence over several windows with consecutive angles
    Trajectory {
        /// Portfolio file (.csv or .json)
        portfolio: PathBuf,
        /// Port identifier the records belong to
        #[arg(long)]
        port: String,
        /// Window spec START:END; pass at least twice, in order
        #[arg(long = "window", value_name = "SPEC")]
        windows: Vec<String>,
        /// Explicit merit factor in [0,1] instead of a ledger
        #[arg(long)]
        rho: Option<f64>,
        /// Also write the plot data as flat CSV to this path
        #[arg(long, value_name = "PATH")]
        csv: Option<PathBuf>,
    },

    /// Query the embedded C-Port service catalog
    Catalog {
        #[command(subcommand)]
        command: CatalogCommand,
    },
}

#[derive(Subcommand)]
pub enum CatalogCommand {
    /// List services, optionally filtered (filters are conjunctive)
    List {
        /// Day class: 1, 1.5, or 2
        #[arg(long)]
        day: Option<String>,
        /// Bundle code: Nv, Fr, Mb, or St
        #[arg(long)]
        bundle: Option<String>,
        /// Stakeholder label, e.g. "PORT AUTHORITY" (case-insensitive)
        #[arg(long)]
        stakeholder: Option<String>,
        /// Key enabling technology, e.g. 5G, IoT, AI/ML
        #[arg(long)]
        ket: Option<String>,
    },
    /// Show one service in full
    Show {
        /// Service code, e.g. A.2
        code: String,
    },
    /// Readiness gap report against a capability manifest
    Gap {
        /// Capability manifest JSON: {"capabilities":[tokens]}
        #[arg(long, value_name = "PATH")]
        capabilities: PathBuf,
    },
    /// Emit the full registry as JSON
    Export,
}

fn main() {
    let cli = Cli::parse();
    if let Err(error) = commands::run(&cli) {
        eprintln!("cport: {}", error.message);
        std::process::exit(error.code);
    }
}
