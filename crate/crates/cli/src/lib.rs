//! Command-line front end: job files, reports and the bundled corpus.

pub mod commands;
pub mod corpus;
pub mod jobfile;
pub mod report;

use std::fmt;

/// Failures mapped to exit codes: `Input` is 2, `Failed` is 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CliError {
    Input(String),
    Failed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Failed(_) => 1,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Failed(m) => m,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.message())
    }
}

impl std::error::Error for CliError {}

impl From<limitcyc::Error> for CliError {
    fn from(e: limitcyc::Error) -> Self {
        use limitcyc::Error as E;
        let m = e.to_string();
        match e {
            E::Syntax { .. }
            | E::UnknownVariable { .. }
            | E::BadExponent { .. }
            | E::ZeroPolynomial(_)
            | E::ReservedVariable(_)
            | E::StepLimit(_)
            | E::NotHomogeneous(_)
            | E::CommonFactor(_)
            | E::InvalidFamily(_)
            | E::Precondition(_)
            | E::InvalidPoint(_)
            | E::NotSquare { .. }
            | E::DimensionMismatch(_) => CliError::Input(m),
            E::ZeroDivisor
            | E::InexactDivision(_)
            | E::NotZeroDimensional(_)
            | E::NumberField(_)
            | E::NotDivisible { .. }
            | E::Internal(_)
            | E::InvalidCertificate(_)
            | E::NotLiftable { .. }
            | E::SearchFailed(_)
            | E::HypothesisViolated(_) => CliError::Failed(m),
        }
    }
}
