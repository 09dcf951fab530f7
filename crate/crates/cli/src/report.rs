use std::collections::BTreeMap;

use serde::Serialize;
use torilab_core::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One command's result: echoed inputs, typed output, and its text form.
#[derive(Debug, Serialize)]
pub struct Envelope {
    pub command: String,
    pub inputs: BTreeMap<String, String>,
    pub status: Status,
    pub output: serde_json::Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
    #[serde(skip)]
    pub text: String,
}

impl Envelope {
    pub fn new<T: Serialize>(command: &str, inputs: &[(&str, String)], output: &T, text: String) -> Self {
        Envelope {
            command: command.to_string(),
            inputs: inputs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
            status: Status::Pass,
            output: serde_json::to_value(output).expect("reports serialize"),
            timing_ms: None,
            text,
        }
    }

    pub fn failed(mut self) -> Self {
        self.status = Status::Fail;
        self
    }

    pub fn exit_code(&self) -> u8 {
        match self.status {
            Status::Pass => 0,
            Status::Fail => 2,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize") + "\n"
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ErrorKind {
    Usage,
    Parse,
    Invalid,
    Verification,
    Internal,
}

#[derive(Debug, Serialize)]
pub struct CliError {
    pub kind: ErrorKind,
    pub message: String,
    /// The flag whose value failed to parse or validate.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub field: Option<String>,
    /// Byte offset of a parse error within that value.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub offset: Option<usize>,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError { kind: ErrorKind::Usage, message: message.into(), field: None, offset: None }
    }

    pub fn invalid(field: &str, message: impl Into<String>) -> Self {
        CliError { kind: ErrorKind::Invalid, message: message.into(), field: Some(field.into()), offset: None }
    }

    /// Attaches the flag name to a library error.
    pub fn from_core(field: &str, e: Error) -> Self {
        let mut err = CliError::from(e);
        err.field = Some(field.into());
        err
    }

    pub fn exit_code(&self) -> u8 {
        match self.kind {
            ErrorKind::Verification => 2,
            _ => 1,
        }
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Wrapper<'a> {
            status: &'static str,
            error: &'a CliError,
        }
        let status = if self.kind == ErrorKind::Verification { "fail" } else { "error" };
        serde_json::to_string_pretty(&Wrapper { status, error: self }).expect("errors serialize") + "\n"
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let (kind, offset) = match &e {
            Error::Parse { offset, .. } => (ErrorKind::Parse, Some(*offset)),
            Error::Verification(_) => (ErrorKind::Verification, None),
            Error::Internal(_) => (ErrorKind::Internal, None),
            _ => (ErrorKind::Invalid, None),
        };
        CliError { kind, message: e.to_string(), field: None, offset }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        let env = Envelope::new("x", &[], &1, String::new());
        assert_eq!(env.exit_code(), 0);
        assert_eq!(env.failed().exit_code(), 2);
        assert_eq!(CliError::usage("u").exit_code(), 1);
        assert_eq!(CliError::from(Error::Verification("v".into())).exit_code(), 2);
    }

    #[test]
    fn parse_offset_survives() {
        let e = "X1 + ?".parse::<torilab_core::CharacterPolynomial>().unwrap_err();
        let cli = CliError::from_core("--poly", e);
        assert_eq!(cli.kind, ErrorKind::Parse);
        assert_eq!(cli.offset, Some(5));
        assert!(cli.to_json().contains("\"field\": \"--poly\""));
    }

    #[test]
    fn text_is_not_serialized() {
        let env = Envelope::new("x", &[("n", "2".into())], &"out", "hidden".into());
        let json = env.to_json();
        assert!(!json.contains("hidden"));
        assert!(!json.contains("timing_ms"));
    }
}
