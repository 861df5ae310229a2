use std::fmt;

use tropbasis_core::Error;

/// A failed command. Prints as a single `error[kind]: message` line.
#[derive(Debug)]
pub struct CliError {
    kind: &'static str,
    message: String,
    code: i32,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INPUT: i32 = 3;
pub const EXIT_LIMIT: i32 = 4;

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError {
            kind: "usage",
            message: message.into(),
            code: EXIT_USAGE,
        }
    }

    pub fn input(kind: &'static str, message: impl Into<String>) -> Self {
        CliError {
            kind,
            message: message.into(),
            code: EXIT_INPUT,
        }
    }

    pub fn exit_code(&self) -> i32 {
        self.code
    }

    pub fn kind(&self) -> &'static str {
        self.kind
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // keep it on one line whatever the library message contains
        let msg = self.message.replace('\n', " ");
        write!(f, "error[{}]: {}", self.kind, msg)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let (kind, code) = match &e {
            Error::LimitExceeded { .. } => ("limit-exceeded", EXIT_LIMIT),
            Error::AxiomViolation { axiom, .. } => (
                match axiom.number() {
                    1 => "axiom-1",
                    2 => "axiom-2",
                    _ => "axiom-3",
                },
                EXIT_INPUT,
            ),
            Error::OutOfRange { .. } => ("out-of-range", EXIT_INPUT),
            Error::DuplicateElement { .. } => ("duplicate-element", EXIT_INPUT),
            Error::NotACircuit { .. } => ("not-a-circuit", EXIT_INPUT),
            Error::NotASubset { .. } => ("not-a-subset", EXIT_INPUT),
            Error::NotSimple { .. } => ("not-simple", EXIT_INPUT),
            Error::SmallCircuit { .. } | Error::EmptyCircuit => ("small-circuit", EXIT_INPUT),
            Error::PointLength { .. } | Error::AllBottom => ("bad-point", EXIT_INPUT),
            Error::BadPermutation { .. } => ("bad-permutation", EXIT_INPUT),
            Error::InvalidParams(_) => ("invalid-params", EXIT_INPUT),
            Error::NotSimpleGraph(_) => ("not-simple-graph", EXIT_INPUT),
            Error::NotConnected => ("not-connected", EXIT_INPUT),
            Error::UnknownName(_) => ("unknown-name", EXIT_USAGE),
            Error::MethodDisagreement { .. } | Error::Fingerprint { .. } => ("internal", EXIT_INTERNAL),
        };
        CliError {
            kind,
            message: e.to_string(),
            code,
        }
    }
}
