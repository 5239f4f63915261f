//! Run configuration and its validation.

use std::fmt;

use clap::ValueEnum;

use mubell_core::galois::{Field, FieldError, DEFAULT_MAX_ORDER};

/// Environment variable overriding the p^n construction bound.
pub const MAX_DIM_ENV: &str = "MUBELL_MAX_DIM";

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum BasisChoice {
    Polynomial,
    Selfdual,
    /// Alias for the selfdual search result on fields without a selfdual basis.
    AlmostSelfdual,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum BellMode {
    Multiqudit,
    SingleParticle,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum VerifyLevelArg {
    Fast,
    Exhaustive,
}

#[derive(Debug)]
pub enum CliError {
    /// Invalid configuration: exit code 2.
    Config(String),
    /// A mathematical check failed: exit code 1.
    Check(String),
    /// Output could not be written: exit code 2.
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Check(_) => 1,
            CliError::Config(_) | CliError::Io(_) => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Config(msg) => write!(f, "{}", msg),
            CliError::Check(msg) => write!(f, "{}", msg),
            CliError::Io(msg) => write!(f, "{}", msg),
        }
    }
}

/// Validated configuration for the construction commands.
pub struct RunConfig {
    pub field: Field,
    pub basis: BasisChoice,
    pub mode: BellMode,
    pub format: OutputFormat,
    pub output: Option<String>,
}

fn max_order() -> Result<u64, CliError> {
    match std::env::var(MAX_DIM_ENV) {
        Ok(v) => v
            .parse::<u64>()
            .map_err(|_| CliError::Config(format!("{} must be a positive integer", MAX_DIM_ENV))),
        Err(_) => Ok(DEFAULT_MAX_ORDER),
    }
}

impl RunConfig {
    pub fn construction(
        p: u64,
        n: usize,
        basis: BasisChoice,
        format: OutputFormat,
        output: Option<String>,
    ) -> Result<RunConfig, CliError> {
        let bound = max_order()?;
        let field = Field::with_max_order(p, n, bound).map_err(|e| match e {
            FieldError::NotPrime(p) => CliError::Config(format!("{} is not prime", p)),
            FieldError::InvalidDegree(n) => CliError::Config(format!("invalid degree {}", n)),
            FieldError::TooLarge { order, max } => CliError::Config(format!(
                "field order {} exceeds the supported bound {} (override with {})",
                order, max, MAX_DIM_ENV
            )),
            other => CliError::Config(format!("{}", other)),
        })?;
        Ok(RunConfig { field, basis, mode: BellMode::Multiqudit, format, output })
    }

    pub fn set_mode(&mut self, mode: BellMode) -> Result<(), CliError> {
        if mode == BellMode::SingleParticle && self.field.order() != 4 {
            return Err(CliError::Config(format!(
                "single-particle mode is defined for dimension 4 only, got {}",
                self.field.order()
            )));
        }
        self.mode = mode;
        Ok(())
    }
}
