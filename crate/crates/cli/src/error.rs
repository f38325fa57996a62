use std::fmt;

/// Errors with their process exit codes.
#[derive(Debug)]
pub enum CliError {
    /// Bad arguments or unreadable input (exit 1).
    Usage(String),
    /// Malformed graph data (exit 1).
    Parse(String),
    /// Graph larger than a configured limit (exit 2).
    Limit(String),
    /// Internal invariant broken or bound violated (exit 3).
    Invariant(String),
    /// `--verify` disagreement (exit 4).
    Verify(String),
}

impl CliError {
    pub fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Parse(_) => 1,
            CliError::Limit(_) => 2,
            CliError::Invariant(_) => 3,
            CliError::Verify(_) => 4,
        }
    }

    pub fn from_core(e: powdom::Error) -> CliError {
        use powdom::Error as E;
        let msg = e.to_string();
        match e {
            E::TooLarge { .. } => CliError::Limit(msg),
            E::Parse { .. } | E::VertexOutOfRange { .. } | E::SelfLoop(_) => CliError::Parse(msg),
            E::NotPowerDominating(_) | E::InvalidPartition(_) => CliError::Invariant(msg),
            E::Disconnected => CliError::Usage(format!("{msg} (use --per-component)")),
            E::EmptySource | E::EmptyGraph | E::NotZeroForcing(_) | E::InvalidParameter(_) => {
                CliError::Usage(msg)
            }
        }
    }

    pub fn context(self, prefix: &str) -> CliError {
        let wrap = |m: String| format!("{prefix}: {m}");
        match self {
            CliError::Usage(m) => CliError::Usage(wrap(m)),
            CliError::Parse(m) => CliError::Parse(wrap(m)),
            CliError::Limit(m) => CliError::Limit(wrap(m)),
            CliError::Invariant(m) => CliError::Invariant(wrap(m)),
            CliError::Verify(m) => CliError::Verify(wrap(m)),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "error: {m}"),
            CliError::Parse(m) => write!(f, "parse error: {m}"),
            CliError::Limit(m) => write!(f, "size limit: {m}"),
            CliError::Invariant(m) => write!(f, "invariant violation: {m}"),
            CliError::Verify(m) => write!(f, "verification failed: {m}"),
        }
    }
}
