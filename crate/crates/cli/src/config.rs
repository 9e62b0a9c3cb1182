use std::fmt;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use hochschild_core::{AlgebraParams, Backend, FieldSpec};

#[derive(Parser, Debug)]
#[command(
    name = "hochschild",
    version,
    about = "Hochschild cohomology of the algebras A_T(q0,q1,q2,q3)"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// The integer T ≥ 0; the socle sits in path length 4T+2.
    #[arg(long = "T", global = true, default_value_t = 0)]
    pub t: u32,

    #[arg(long, global = true, value_enum, default_value_t = Field::Rational)]
    pub field: Field,

    /// Characteristic of F_p(t); required with `--field ratfunc`.
    #[arg(long, global = true)]
    pub p: Option<u64>,

    /// Comma-separated q0,q1,q2,q3. Over F_p(t) entries may use `t`.
    #[arg(long, global = true, default_value = "2,1,1,1")]
    pub q: String,

    #[arg(long = "max-n", global = true, default_value_t = 12)]
    pub max_n: u32,

    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,

    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Worker threads for the per-degree parallel stages.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
}

#[derive(Subcommand, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    /// HH^n dimensions next to the closed forms.
    Dims,
    /// Check ∂∂ = 0, minimality and (at T = 0) linearity.
    VerifyComplex,
    /// Like `dims`, failing on any disagreement with the closed forms.
    OracleCheck,
    /// Check the explicit kernel bases against the computed kernels.
    KernelBasisCheck,
    /// Dimension, hom-space sizes and center of the algebra.
    AlgebraInfo,
    /// Emit the differential tables.
    ResolutionDump,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Field {
    Rational,
    Ratfunc,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Debug)]
pub struct RunConfig {
    pub command: Command,
    pub params: AlgebraParams,
    pub max_n: u32,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub jobs: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfigError(pub String);

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl RunConfig {
    pub fn from_cli(cli: Cli) -> Result<Self, ConfigError> {
        let backend = match (cli.field, cli.p) {
            (Field::Rational, None) => Backend::Rational,
            (Field::Rational, Some(_)) => {
                return Err(ConfigError("--p requires --field ratfunc".into()))
            }
            (Field::Ratfunc, Some(p)) => Backend::RationalFunction { p },
            (Field::Ratfunc, None) => {
                return Err(ConfigError("--field ratfunc requires --p".into()))
            }
        };
        let q: Vec<&str> = cli.q.split(',').map(str::trim).collect();
        if q.len() != 4 {
            return Err(ConfigError(format!(
                "--q needs 4 comma-separated values, got {}",
                q.len()
            )));
        }
        let spec = FieldSpec::parse(backend, &q).map_err(|e| ConfigError(e.to_string()))?;
        if cli.jobs == Some(0) {
            return Err(ConfigError("--jobs must be at least 1".into()));
        }
        if cli.command == Command::VerifyComplex && cli.max_n == 0 {
            return Err(ConfigError("verify-complex needs --max-n ≥ 1".into()));
        }
        Ok(RunConfig {
            command: cli.command,
            params: AlgebraParams::new(cli.t, spec),
            max_n: cli.max_n,
            format: cli.format,
            out: cli.out,
            jobs: cli.jobs,
        })
    }
}
