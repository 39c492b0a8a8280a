use std::process::ExitCode;

/// Exit status when some check failed.
pub const CHECK_FAILED: u8 = 1;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("malformed input: {0}")]
    Input(String),
    #[error("out of range: {0}")]
    Range(String),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

impl CliError {
    /// 2 is taken by clap for unknown flags and bad syntax.
    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(match self {
            CliError::Input(_) => 3,
            CliError::Range(_) => 4,
            CliError::Io { .. } => 5,
        })
    }
}

pub fn in_range<T: PartialOrd + std::fmt::Display>(name: &str, v: T, lo: T, hi: T) -> Result<T, CliError> {
    if v < lo || v > hi {
        return Err(CliError::Range(format!("{name} = {v} must lie in [{lo}, {hi}]")));
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn range_errors_name_the_flag() {
        assert_eq!(in_range("--n", 3, 2, 3).unwrap(), 3);
        let e = in_range("--n", 4, 2, 3).unwrap_err();
        assert_eq!(e.to_string(), "out of range: --n = 4 must lie in [2, 3]");
        assert_eq!(e.exit_code(), ExitCode::from(4));
    }
}
