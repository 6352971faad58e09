use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("numerical failure: {0}")]
    Numerical(wbcu::Error),
    #[error("i/o: {0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Numerical(_) => 3,
            CliError::Io(_) => 4,
        }
    }
}

impl From<wbcu::Error> for CliError {
    fn from(e: wbcu::Error) -> Self {
        if e.is_numerical() {
            CliError::Numerical(e)
        } else {
            CliError::Usage(e.to_string())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use wbcu::error::Location;

    #[test]
    fn exit_codes() {
        let neg = wbcu::Error::NonPositivePressure { at: Location::Cell(3), value: -1.0 };
        let aborted = wbcu::Error::Aborted { t: 0.1, step: 4, source: Box::new(neg.clone()) };
        assert_eq!(CliError::from(neg).exit_code(), 3);
        assert_eq!(CliError::from(aborted).exit_code(), 3);
        assert_eq!(CliError::from(wbcu::Error::StepLimit { max_steps: 1, t: 0.0 }).exit_code(), 3);
        assert_eq!(CliError::from(wbcu::Error::InvalidParameter("x".into())).exit_code(), 2);
        assert_eq!(CliError::Io("x".into()).exit_code(), 4);
    }
}
