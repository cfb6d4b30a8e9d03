use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};

use qcong_core::congruence::ClaimId;
use qcong_core::Rational;

use crate::identity::IdentityId;
use crate::report::Format;

#[derive(Debug, Parser)]
#[command(name = "qcong", version, about = "Exact verification of central binomial supercongruences and their q-analogues")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check identities or congruences over a range of instances
    #[command(subcommand)]
    Verify(Verify),
    /// Evaluate the weighted double sum and its closed form at a rational q
    Eval(EvalArgs),
}

#[derive(Debug, Subcommand)]
pub enum Verify {
    /// Closed forms against direct summation
    Identity(IdentityArgs),
    /// Supercongruences mod p, p^2 and q-congruences mod [n]
    Congruence(CongruenceArgs),
}

#[derive(Debug, Args)]
pub struct IdentityArgs {
    /// Identity ids, comma separated or repeated
    #[arg(long = "id", value_delimiter = ',', required = true, ignore_case = true)]
    pub ids: Vec<IdentityId>,
    /// Largest instance checked
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_n: u64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct CongruenceArgs {
    /// Congruence ids (eq1 to eq8), comma separated or repeated
    #[arg(long = "id", value_delimiter = ',', required = true)]
    pub ids: Vec<ClaimId>,
    /// Largest prime or odd n checked
    #[arg(long, value_parser = clap::value_parser!(u64).range(3..))]
    pub limit: u64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the report here instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Worker threads; defaults to one per core
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub jobs: Option<u64>,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub n: u64,
    /// Rational point such as 2, -1/2 or 3/7
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
    pub q: Rational,
}

pub fn parse_rational(s: &str) -> Result<Rational, String> {
    Rational::from_str(s.trim()).map_err(|e| format!("`{s}` is not a rational number: {e}"))
}
