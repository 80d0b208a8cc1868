use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "jacobi-cells",
    version,
    about = "Semi-modules, cell dimensions and q,t-Catalan polynomials for the pair (p, q)"
)]
pub struct Cli {
    /// Write the report to FILE instead of standard output
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,

    /// Worker threads for `verify` (defaults to the number of cores)
    #[arg(long, global = true, value_name = "N")]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List every semi-module over <p, q> with its diagrams and generators
    Enumerate {
        p: i64,
        q: i64,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Poincaré polynomial, compared with the area generating function
    Poincare {
        p: i64,
        q: i64,
        #[arg(long, value_enum, default_value_t = PolyFormat::Text)]
        format: PolyFormat,
    },
    /// The q,t-Catalan polynomial C_n(q, t)
    Catalan {
        n: u32,
        #[arg(long, value_enum, default_value_t = PolyFormat::Text)]
        format: PolyFormat,
    },
    /// Cell polynomial of the area-h stratum: sum of t^(2(h + h+(D)))
    Hilbert {
        p: i64,
        q: i64,
        h: i64,
        #[arg(long, value_enum, default_value_t = PolyFormat::Text)]
        format: PolyFormat,
    },
    /// Run invariant suites over every coprime pair within a bound
    Verify {
        #[arg(value_enum)]
        scope: Scope,
        /// Largest p + q to visit (for `catalan`: largest n)
        bound: Option<i64>,
        #[arg(long, value_enum, default_value_t = PolyFormat::Text)]
        format: PolyFormat,
    },
    /// Emit the pairing certificate for one diagram as JSON
    Certify {
        p: i64,
        q: i64,
        /// Column heights, comma separated (`-` for the empty diagram)
        columns: String,
    },
    /// Tabulate the dual map on all subdiagrams as JSON
    Gmap { p: i64, q: i64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PolyFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Scope {
    Dim,
    Uv,
    Gmap,
    Catalan,
    All,
}
