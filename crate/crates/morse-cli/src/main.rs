//! Command-line front door.
//!
//! Exit codes: 0 for success or a passing verdict, 1 for a failing verdict
//! (a comparison or verification that ran and said "no"), 2 for malformed
//! input, violated preconditions, or usage errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use morse_algebra::{
    descriptor_from_json, descriptor_to_json, CobordismInvariant, ExtraMiddlePair,
    MorseDescriptor,
};

#[derive(Parser)]
#[command(
    name = "morse-cli",
    about = "Morse-function cobordism invariants, product obstruction tables, and a numerical \
             index-additivity lab",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
enum ExtraPairArg {
    #[default]
    Auto,
    On,
    Off,
}

impl From<ExtraPairArg> for ExtraMiddlePair {
    fn from(arg: ExtraPairArg) -> Self {
        match arg {
            ExtraPairArg::Auto => ExtraMiddlePair::Auto,
            ExtraPairArg::On => ExtraMiddlePair::On,
            ExtraPairArg::Off => ExtraMiddlePair::Off,
        }
    }
}

#[derive(Clone, Copy)]
struct Weights(f64, f64);

fn parse_weights(text: &str) -> Result<Weights, String> {
    let (a, b) = text
        .split_once(',')
        .ok_or_else(|| "expected two comma-separated weights, e.g. 0.7071,0.7071".to_string())?;
    let a: f64 = a.trim().parse().map_err(|e| format!("bad weight `{a}`: {e}"))?;
    let b: f64 = b.trim().parse().map_err(|e| format!("bad weight `{b}`: {e}"))?;
    Ok(Weights(a, b))
}

#[derive(Subcommand)]
enum Command {
    /// List every violated structural invariant of a descriptor file.
    Validate { file: PathBuf },

    /// Print the cobordism invariant: class token, phi vector, and the
    /// mod-2 component for oriented dimensions 4k+1.
    Invariant {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },

    /// Print phi_j = C_j - C_{m-j} of a descriptor.
    Phi {
        file: PathBuf,
        #[arg(long)]
        j: usize,
    },

    /// Diagonal product of two descriptors, as canonical descriptor JSON.
    Product {
        file1: PathBuf,
        file2: PathBuf,
        /// Write the product descriptor here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },

    /// Evaluate the closed product formula for phi_{m1+m2-j} from the
    /// factor counts (smaller dimension first, 0 <= j < m1).
    Theorem3 {
        file1: PathBuf,
        file2: PathBuf,
        #[arg(long)]
        j: usize,
    },

    /// Add k cancelling handle pairs at every index step.
    Stabilize {
        file: PathBuf,
        #[arg(long)]
        k: u32,
        #[arg(long, value_enum, default_value_t)]
        extra_middle_pair: ExtraPairArg,
        /// Write the stabilized descriptor here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },

    /// Compare two descriptors' invariants; prints true/false and exits
    /// 0/1 accordingly.
    Cobordant { file1: PathBuf, file2: PathBuf },

    /// Build the stabilization family of FILE_PRIME, tabulate its diagonal
    /// products with FILE, and verify the obstruction.
    Obstruct {
        file: PathBuf,
        file_prime: PathBuf,
        /// Largest stabilization step; the family is f_0..f_K.
        #[arg(long = "K")]
        cap: u32,
        #[arg(long, value_enum, default_value_t)]
        extra_middle_pair: ExtraPairArg,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },

    /// Find critical points of two catalog functions and of their weighted
    /// product, and verify that the product's critical points are pairs
    /// with Morse indices adding.
    #[command(name = "verify-lemma1")]
    VerifyLemma1 {
        /// Catalog spec: circle_cos:<n>, sphere_height, or torus_height.
        #[arg(long)]
        f1: String,
        #[arg(long)]
        f2: String,
        /// Positive projection weights a,b.
        #[arg(long, value_parser = parse_weights,
              default_value = "0.7071067811865476,0.7071067811865476")]
        weights: Weights,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

enum Outcome {
    Success,
    VerdictFail,
    InvalidInput,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Outcome::Success) => ExitCode::SUCCESS,
        Ok(Outcome::VerdictFail) => ExitCode::from(1),
        Ok(Outcome::InvalidInput) => ExitCode::from(2),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<Outcome> {
    match command {
        Command::Validate { file } => {
            let descriptor = load_descriptor(&file)?;
            let violations = descriptor.validate();
            if violations.is_empty() {
                println!("valid");
                Ok(Outcome::Success)
            } else {
                for violation in &violations {
                    println!("violation: {violation}");
                }
                Ok(Outcome::InvalidInput)
            }
        }

        Command::Invariant { file, format } => {
            let descriptor = load_valid_descriptor(&file)?;
            let invariant = descriptor.cobordism_invariant()?;
            match format {
                Format::Text => print!("{}", invariant_text(&invariant)),
                Format::Json => {
                    let mut text = serde_json::to_string_pretty(&invariant)?;
                    text.push('\n');
                    print!("{text}");
                }
                Format::Csv => bail!("csv output is not defined for `invariant`"),
            }
            Ok(Outcome::Success)
        }

        Command::Phi { file, j } => {
            let descriptor = load_valid_descriptor(&file)?;
            println!("{}", descriptor.phi(j)?);
            Ok(Outcome::Success)
        }

        Command::Product {
            file1,
            file2,
            output,
        } => {
            let left = load_valid_descriptor(&file1)?;
            let right = load_valid_descriptor(&file2)?;
            let product = left.diagonal_product(&right)?;
            emit_descriptor(&product, output.as_deref())
        }

        Command::Theorem3 { file1, file2, j } => {
            let left = load_valid_descriptor(&file1)?;
            let right = load_valid_descriptor(&file2)?;
            println!("{}", left.product_phi_formula(&right, j)?);
            Ok(Outcome::Success)
        }

        Command::Stabilize {
            file,
            k,
            extra_middle_pair,
            output,
        } => {
            let descriptor = load_valid_descriptor(&file)?;
            let stabilized = descriptor.stabilize(k, extra_middle_pair.into())?;
            emit_descriptor(&stabilized, output.as_deref())
        }

        Command::Cobordant { file1, file2 } => {
            let left = load_valid_descriptor(&file1)?;
            let right = load_valid_descriptor(&file2)?;
            if left.is_cobordant(&right)? {
                println!("true");
                Ok(Outcome::Success)
            } else {
                println!("false");
                Ok(Outcome::VerdictFail)
            }
        }

        Command::Obstruct {
            file,
            file_prime,
            cap,
            extra_middle_pair,
            format,
        } => {
            let fixed = load_valid_descriptor(&file)?;
            let base = load_valid_descriptor(&file_prime)?;
            let report =
                obstruction_demo::verify_obstruction(&fixed, &base, cap, extra_middle_pair.into())?;
            match format {
                Format::Text => println!("{report}"),
                Format::Json => print!("{}", report.to_json()),
                Format::Csv => print!("{}", report.to_csv()?),
            }
            Ok(if report.pass {
                Outcome::Success
            } else {
                Outcome::VerdictFail
            })
        }

        Command::VerifyLemma1 {
            f1,
            f2,
            weights,
            format,
        } => {
            let left = numerical_lab::catalog(&f1)?;
            let right = numerical_lab::catalog(&f2)?;
            let report =
                numerical_lab::verify_index_additivity(&left, &right, (weights.0, weights.1))?;
            match format {
                Format::Text => println!("{report}"),
                Format::Json => print!("{}", report.to_json()),
                Format::Csv => bail!("csv output is not defined for `verify-lemma1`"),
            }
            Ok(if report.pass {
                Outcome::Success
            } else {
                Outcome::VerdictFail
            })
        }
    }
}

fn load_descriptor(path: &Path) -> Result<MorseDescriptor> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("cannot read descriptor file {}", path.display()))?;
    descriptor_from_json(&text)
        .with_context(|| format!("cannot parse descriptor file {}", path.display()))
}

/// Load a descriptor and insist it passes validation.
fn load_valid_descriptor(path: &Path) -> Result<MorseDescriptor> {
    let descriptor = load_descriptor(path)?;
    let violations = descriptor.validate();
    if violations.is_empty() {
        Ok(descriptor)
    } else {
        Err(anyhow!(
            "descriptor {} is invalid:\n  {}",
            path.display(),
            violations.join("\n  ")
        ))
    }
}

fn emit_descriptor(descriptor: &MorseDescriptor, output: Option<&Path>) -> Result<Outcome> {
    let text = descriptor_to_json(descriptor);
    match output {
        Some(path) => fs::write(path, text)
            .with_context(|| format!("cannot write descriptor to {}", path.display()))?,
        None => print!("{text}"),
    }
    Ok(Outcome::Success)
}

fn invariant_text(invariant: &CobordismInvariant) -> String {
    let mut out = String::new();
    out.push_str(&format!("dimension: {}\n", invariant.dimension));
    out.push_str(&format!("oriented: {}\n", invariant.oriented));
    out.push_str(&format!("token: {}\n", invariant.token));
    let phis: Vec<String> = invariant.phis.iter().map(i64::to_string).collect();
    out.push_str(&format!("phis: [{}]\n", phis.join(", ")));
    if let Some(z2) = invariant.z2 {
        out.push_str(&format!("z2: {z2}\n"));
    }
    out
}
