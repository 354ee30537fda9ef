use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use hopfchar::{Flavor, ModelKind};
use hopfchar_cli::commands;
use hopfchar_cli::Document;

#[derive(Parser)]
#[command(name = "hopfchar", version, about = "Near-primitive characteristic classes and MMM invariants")]
struct Cli {
    /// Output format on stdout.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Also write the JSON document to this file.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Degree bound; defaults to 40 for `so` and 24 for `u`.
    #[arg(long = "max-degree", global = true)]
    max_degree: Option<u32>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Near-primitive subspaces of H*(BSO) or H*(BU).
    Nearprim {
        #[command(subcommand)]
        command: NearprimCommand,
    },
    /// The restricted slice NP_d.
    Npd {
        #[arg(long, value_parser = parse_kind)]
        model: ModelKind,
        #[arg(short = 'd')]
        d: u32,
        #[arg(long)]
        degree: u32,
    },
    /// Bordism invariants among MMM classes.
    Mmm {
        #[command(subcommand)]
        command: MmmCommand,
    },
    /// The L-class component L_k.
    Lclass {
        #[arg(short = 'k')]
        k: usize,
    },
    /// Projective bundle examples.
    Bundle {
        #[command(subcommand)]
        command: BundleCommand,
    },
    /// Seeded checks of the Hopf algebra axioms.
    Hopf {
        #[command(subcommand)]
        command: HopfCommand,
    },
}

#[derive(Subcommand)]
enum NearprimCommand {
    /// Explicit basis of the order-d near-primitives in degree M.
    Basis {
        #[arg(long, value_parser = parse_kind)]
        model: ModelKind,
        #[arg(long)]
        degree: u32,
        #[arg(long)]
        order: u32,
    },
    /// Compares the explicit basis and the restricted kernel with the
    /// defining kernel for every (m, d) up to --max-degree.
    Verify {
        #[arg(long, value_parser = parse_kind)]
        model: ModelKind,
    },
}

#[derive(Subcommand)]
enum MmmCommand {
    /// The bordism-invariant slice in degree N.
    Space {
        #[arg(long, value_parser = ["so", "u"])]
        flavor: String,
        #[arg(short = 'd')]
        d: u32,
        #[arg(long)]
        degree: u32,
    },
    /// Decides whether a class is a bordism invariant.
    Test {
        #[arg(long, value_parser = ["so", "u"])]
        flavor: String,
        #[arg(short = 'd')]
        d: u32,
        #[arg(long)]
        expr: String,
        #[arg(long)]
        degree: Option<u32>,
    },
}

#[derive(Subcommand)]
enum BundleCommand {
    /// F_k = P(O + O(k)) over CP^1.
    Hirzebruch {
        #[arg(short = 'k', allow_negative_numbers = true)]
        k: i64,
        /// Include MMM and total-space characteristic numbers.
        #[arg(long)]
        numbers: bool,
    },
    /// P(V) for V a sum of line bundles over pt, cp<n> or a product.
    Custom {
        #[arg(long)]
        base: String,
        #[arg(long, allow_hyphen_values = true)]
        twist: String,
        #[arg(long)]
        numbers: bool,
    },
}

#[derive(Subcommand)]
enum HopfCommand {
    Check {
        #[arg(long, value_parser = parse_kind)]
        model: ModelKind,
        #[arg(long, default_value_t = commands::DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = 16)]
        samples: usize,
    },
}

fn parse_kind(s: &str) -> Result<ModelKind, String> {
    s.parse().map_err(|e: hopfchar::Error| e.to_string())
}

fn flavor(token: &str, d: u32) -> Result<Flavor> {
    Ok(Flavor::parse(token, d)?)
}

/// Runs the command; the flag says whether it is a verification whose
/// failed checks should fail the process.
fn run(cli: &Cli) -> Result<(Document, bool)> {
    let max = cli.max_degree;
    Ok(match &cli.command {
        Command::Nearprim { command } => match command {
            NearprimCommand::Basis { model, degree, order } => {
                (commands::nearprim_basis(*model, *degree, *order, max)?, false)
            }
            NearprimCommand::Verify { model } => (commands::nearprim_verify(*model, max)?, true),
        },
        Command::Npd { model, d, degree } => (commands::npd_slice(*model, *d, *degree, max)?, false),
        Command::Mmm { command } => match command {
            MmmCommand::Space { flavor: f, d, degree } => (commands::mmm_space(flavor(f, *d)?, *degree, max)?, false),
            MmmCommand::Test {
                flavor: f,
                d,
                expr,
                degree,
            } => (commands::mmm_test(flavor(f, *d)?, expr, *degree, max)?, false),
        },
        Command::Lclass { k } => (commands::lclass(*k, max)?, false),
        Command::Bundle { command } => match command {
            BundleCommand::Hirzebruch { k, numbers } => (commands::bundle_hirzebruch(*k, *numbers)?, false),
            BundleCommand::Custom { base, twist, numbers } => {
                (commands::bundle_custom(base, twist, *numbers)?, false)
            }
        },
        Command::Hopf {
            command: HopfCommand::Check { model, seed, samples },
        } => (commands::hopf_check(*model, max, *seed, *samples)?, true),
    })
}

fn emit(cli: &Cli, doc: &Document) -> Result<()> {
    let json = serde_json::to_string_pretty(doc)?;
    if let Some(path) = &cli.out {
        std::fs::write(path, format!("{json}\n")).with_context(|| format!("cannot write {}", path.display()))?;
    }
    match cli.format {
        Format::Json => println!("{json}"),
        Format::Table => print!("{}", doc.render_table()),
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = run(&cli).and_then(|(doc, verify)| emit(&cli, &doc).map(|()| verify && !doc.all_pass()));
    match outcome {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
