mod commands;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use commands::Output;

/// Approximations, groupoids, image algebras and lattices of finite relations.
#[derive(Parser, Debug)]
#[command(name = "drs", version)]
pub struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,

    /// Exit with status 2 when any verdict of the report fails.
    #[arg(long, global = true)]
    pub expect_hold: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug)]
pub struct SpaceArg {
    /// Space document: JSON, or an edge list with one pair per line.
    #[arg(long)]
    pub space: PathBuf,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Relation properties with a violating tuple for each one that fails.
    Classify(SpaceArg),
    /// Plain, inverse and symmetric neighborhoods of every element.
    Granules(SpaceArg),
    /// Approximations of a set.
    Approx {
        #[command(flatten)]
        space: SpaceArg,
        /// Comma-separated labels; empty for the empty set.
        #[arg(long, allow_hyphen_values = true)]
        set: String,
        /// An operator name such as `u`, `tri_up`, `li_plus`, or `all`.
        #[arg(long, default_value = "all")]
        op: String,
    },
    /// Groupoids realizing a relation.
    Groupoid {
        #[command(subcommand)]
        action: GroupoidAction,
    },
    /// Image algebras and their laws.
    Algebra {
        #[arg(value_enum)]
        kind: AlgebraArg,
        #[command(flatten)]
        space: SpaceArg,
        /// Audit the laws of this algebra.
        #[arg(long)]
        audit: bool,
    },
    /// Lifted products on subsets and their split parts.
    Powgrp {
        #[command(flatten)]
        space: SpaceArg,
        /// Operation table to lift; the canonical groupoid when absent.
        #[arg(long)]
        table: Option<PathBuf>,
        /// Left factor (comma-separated labels).
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        /// Right factor (comma-separated labels).
        #[arg(long, allow_hyphen_values = true)]
        b: Option<String>,
        /// Audit every lifted-product law.
        #[arg(long)]
        audit: bool,
    },
    /// The powerset partitioned by rough equality.
    Quotient {
        #[command(flatten)]
        space: SpaceArg,
        /// `standard`, `l` or `u`.
        #[arg(long, default_value = "standard")]
        kind: String,
        /// Apply a quotient operation, e.g. `union`, `n`, `L`.
        #[arg(long)]
        rpa_op: Option<String>,
        /// Operands of `--rpa-op`, each a member set of its class
        /// (comma-separated labels; repeat the flag per operand).
        #[arg(long = "arg", allow_hyphen_values = true)]
        args: Vec<String>,
    },
    /// Lattice of images of a local operator.
    Lattice {
        #[command(flatten)]
        space: SpaceArg,
        /// `tri_up`, `tri_down`, `btri_up` or `btri_down`.
        #[arg(long)]
        op: String,
        /// Complete distributivity.
        #[arg(long)]
        cd: bool,
        /// The first-order condition on the relation equivalent to distributivity.
        #[arg(long)]
        tr23: bool,
        /// Irreducible granules against the successor granules.
        #[arg(long, conflicts_with = "ei4")]
        ei3: bool,
        /// Irreducible granules against the predecessor granules.
        #[arg(long)]
        ei4: bool,
        /// Groupoid form of the distributivity condition.
        #[arg(long)]
        triagrp: bool,
        /// Complement duality with the order-dual family.
        #[arg(long)]
        dual: bool,
    },
    /// Formal context of the complemented relation.
    Fca {
        #[command(flatten)]
        space: SpaceArg,
        /// Distributivity condition on the context.
        #[arg(long)]
        th40: bool,
    },
    /// Audit claims over one or more spaces.
    Audit {
        /// Space documents (repeat the flag).
        #[arg(long = "space", required = true)]
        spaces: Vec<PathBuf>,
        /// Claim ids, `module:id`, module names or `all` (comma-separated).
        #[arg(long, value_delimiter = ',', required = true)]
        claims: Vec<String>,
        #[arg(long, value_enum, default_value = "exhaustive")]
        mode: ModeArg,
        /// Assignments per space in sampled mode.
        #[arg(long, default_value_t = 1000)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Evaluate claims on spaces outside their hypothesis too.
        #[arg(long)]
        ignore_hypotheses: bool,
    },
    /// Equivalence relation of an information table.
    Table {
        /// Information table document.
        #[arg(long)]
        table: PathBuf,
        /// Attributes to compare (comma-separated).
        #[arg(long, value_delimiter = ',', required = true)]
        attributes: Vec<String>,
    },
    /// Graphviz rendering.
    ExportDot {
        #[arg(long, value_enum)]
        what: DotArg,
        #[arg(long)]
        space: Option<PathBuf>,
        /// Operation table, for `groupoid-order`.
        #[arg(long)]
        table: Option<PathBuf>,
        /// Local operator, for `lattice`.
        #[arg(long, default_value = "tri_up")]
        op: String,
    },
    /// Re-emit a space document in canonical JSON or edge-list form.
    Emit {
        #[command(flatten)]
        space: SpaceArg,
        #[arg(long)]
        edges: bool,
    },
}

#[derive(Subcommand, Debug)]
pub enum GroupoidAction {
    /// Canonical realizing groupoid (least admissible element per cell).
    Build(SpaceArg),
    /// Number of realizing groupoids.
    Count(SpaceArg),
    /// Cells where a table disagrees with the relation.
    Check {
        #[command(flatten)]
        space: SpaceArg,
        #[arg(long)]
        table: PathBuf,
    },
    /// Correspondence between relation properties and groupoid identities.
    Bridge(SpaceArg),
    /// Directoid of a poset with a top-compatible choice.
    Directoid(SpaceArg),
    /// Whether every compatible tolerance of a table is a congruence.
    Tolerance {
        #[arg(long)]
        table: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum AlgebraArg {
    Uua,
    Ua,
    #[value(name = "ua*")]
    UaStar,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ModeArg {
    Exhaustive,
    Sampled,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum DotArg {
    Space,
    GroupoidOrder,
    Lattice,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    match commands::run(&cli.command) {
        Ok(output) => {
            let (text, holds) = match output {
                Output::Report(r) if cli.json => (r.to_json() + "\n", r.all_hold()),
                Output::Report(r) => (r.to_text(), r.all_hold()),
                Output::Raw(text) => (text, true),
            };
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(text.as_bytes());
            if cli.expect_hold && !holds {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
