//! `intersect`: certify intersective polynomials and inspect the pieces.
//!
//! Exit codes: 0 success or certified, 2 usage or input error,
//! 3 inconclusive, 4 refuted (or a covering check failed), 5 resource limit.

mod commands;
mod input;
mod text;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "intersect", version, about = "Certify that a product of irreducible polynomials has a root modulo every integer")]
pub struct Cli {
    #[command(flatten)]
    pub run: RunConfig,

    #[command(subcommand)]
    pub command: Command,
}

/// Options shared by every subcommand.
#[derive(Args, Debug, Clone)]
pub struct RunConfig {
    /// Report format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Pollard-rho iterations per composite when factoring discriminants
    #[arg(long, global = true, env = "INTERSECT_BUDGET", default_value_t = 10_000_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub budget: u64,

    /// Seed for every randomized routine
    #[arg(long, global = true, env = "INTERSECT_SEED", default_value_t = 0)]
    pub seed: u64,

    /// Worker threads (default: all cores)
    #[arg(long, global = true, env = "INTERSECT_THREADS", value_parser = clap::value_parser!(u64).range(1..))]
    pub threads: Option<u64>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Certify that the product of the given factors is intersective
    Certify(CertifyArgs),
    /// Count and witness the roots of a monic polynomial in Z_p
    PadicRoots {
        /// Polynomial file (JSON) or expression in x
        #[arg(long)]
        poly: String,
        #[arg(long)]
        prime: u64,
    },
    /// Newton polygon of f(x + shift) at p
    Newton {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        prime: u64,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        shift: i64,
    },
    /// Factor over Z, or over F_q with --prime
    Factor {
        #[arg(long)]
        poly: String,
        /// Field order (a prime or prime power)
        #[arg(long)]
        prime: Option<u64>,
    },
    /// Permutation group tools
    #[command(subcommand)]
    Group(GroupCommand),
    /// Built-in polynomial families
    #[command(subcommand)]
    Family(FamilyCommand),
}

#[derive(Args, Debug)]
pub struct CertifyArgs {
    /// A factor: polynomial file (JSON) or expression in x; repeat per factor
    #[arg(long = "poly", required = true)]
    pub polys: Vec<String>,

    /// Claimed Galois group: a name (m11, psl3_2, pgl2_7, c2xc2, ...) or a group file
    #[arg(long)]
    pub group: Option<String>,

    /// Frobenius screening runs over unramified primes up to this bound
    #[arg(long, env = "INTERSECT_PRIME_BOUND", default_value_t = 10_000, value_parser = clap::value_parser!(u64).range(2..))]
    pub prime_bound: u64,

    /// Newton polygon hint p:factor:shift, tried first at p
    #[arg(long = "hint", value_parser = input::parse_hint)]
    pub hints: Vec<intersective::certify::PolygonHint>,
}

#[derive(Subcommand, Debug)]
pub enum GroupCommand {
    /// Check that every conjugacy class meets a conjugate of U1 or U2
    Cover(GroupSource),
    /// Check that every metacyclic subgroup lies in a conjugate of U1 or U2
    Metacyclic(GroupSource),
    /// Subgroups up to conjugacy, with containment in U1, U2
    Subgroups {
        #[command(flatten)]
        source: GroupSource,
        /// Only solvable subgroups up to this order (for larger groups)
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        solvable_max: Option<u64>,
    },
}

#[derive(Args, Debug)]
pub struct GroupSource {
    /// Named group with its two distinguished subgroups (pgl2_7, agl2_3, psl3_2, m11, ...)
    #[arg(long, conflicts_with = "file", required_unless_present = "file")]
    pub name: Option<String>,
    /// Group file (JSON)
    #[arg(long, requires = "subgroup")]
    pub file: Option<PathBuf>,
    /// Subgroup file (JSON); repeat for each covering subgroup
    #[arg(long)]
    pub subgroup: Vec<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum FamilyCommand {
    /// Run the scripted checks for a family at a specialization
    Verify {
        name: String,
        /// Parameter values, e.g. "t=1" or "a=1,b=1,c=1,t=3"
        #[arg(long, default_value = "t=1")]
        spec: String,
    },
    /// Write f and g as polynomial files
    Export {
        name: String,
        /// Specialize first; without it the parametric files are written
        #[arg(long)]
        spec: Option<String>,
        /// Directory for f.json and g.json (default: print one JSON object)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Families with degrees, predicates and claimed groups
    List,
}

/// Exit status with a message for stderr.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_INCONCLUSIVE: u8 = 3;
pub const EXIT_REFUTED: u8 = 4;
pub const EXIT_RESOURCE: u8 = 5;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.run.threads {
        // Only fails if a pool already exists.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n as usize).build_global();
    }
    match commands::run(&cli) {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
