use trace_ideals::calculus::CalculusError;
use trace_ideals::enumerate::EnumError;
use trace_ideals::lattice::LatticeError;
use trace_ideals::ring::RingError;
use trace_ideals::scalars::FieldError;
use trace_ideals::series::SeriesError;

/// Errors with their exit codes: 2 parse, 3 precision, 4 cap exceeded,
/// 1 everything else (including fixture mismatches).
#[derive(Debug)]
pub enum CliError {
    Parse(String),
    Precision(String),
    Cap(String),
    Mismatch(String),
    Other(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Precision(_) => 3,
            CliError::Cap(_) => 4,
            CliError::Mismatch(_) | CliError::Other(_) => 1,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            CliError::Parse(_) => "parse",
            CliError::Precision(_) => "precision",
            CliError::Cap(_) => "cap_exceeded",
            CliError::Mismatch(_) => "fixture_mismatch",
            CliError::Other(_) => "error",
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Parse(m)
            | CliError::Precision(m)
            | CliError::Cap(m)
            | CliError::Mismatch(m)
            | CliError::Other(m) => m,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::json!({
            "error": self.kind(),
            "exit_code": self.exit_code(),
            "message": self.message(),
        })
        .to_string()
    }
}

impl From<FieldError> for CliError {
    fn from(e: FieldError) -> Self {
        CliError::Parse(e.to_string())
    }
}

impl From<SeriesError> for CliError {
    fn from(e: SeriesError) -> Self {
        match e {
            SeriesError::Precision { .. } => CliError::Precision(e.to_string()),
            _ => CliError::Parse(e.to_string()),
        }
    }
}

impl From<LatticeError> for CliError {
    fn from(e: LatticeError) -> Self {
        match e {
            LatticeError::InsufficientPrecision { .. } => CliError::Precision(e.to_string()),
            LatticeError::Series(s) => s.into(),
            _ => CliError::Other(e.to_string()),
        }
    }
}

impl From<RingError> for CliError {
    fn from(e: RingError) -> Self {
        match e {
            RingError::Lattice(l) => l.into(),
            RingError::NoStabilization { .. } | RingError::HilbertUnstable(_) => {
                CliError::Precision(e.to_string())
            }
            RingError::Semigroup(_)
            | RingError::ConstantNotInBase(_)
            | RingError::NotAnExtension => CliError::Parse(e.to_string()),
            _ => CliError::Other(e.to_string()),
        }
    }
}

impl From<CalculusError> for CliError {
    fn from(e: CalculusError) -> Self {
        match e {
            CalculusError::Ring(r) => r.into(),
            CalculusError::Lattice(l) => l.into(),
            _ => CliError::Other(e.to_string()),
        }
    }
}

impl From<EnumError> for CliError {
    fn from(e: EnumError) -> Self {
        match e {
            EnumError::Calculus(c) => c.into(),
            EnumError::CapExceeded { .. } | EnumError::TooManySubsets { .. } => {
                CliError::Cap(e.to_string())
            }
            _ => CliError::Other(e.to_string()),
        }
    }
}
