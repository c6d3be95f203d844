use std::fmt;

use eiscong::serde_rational::to_json;
use eiscong::{Error, Rational};
use serde_json::Value;

pub struct Output {
    pub text: String,
    pub code: u8,
}

impl Output {
    pub fn ok(text: String) -> Self {
        Output { text, code: 0 }
    }
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Compute(Error),
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Compute(Error::Parse { .. }) => 2,
            CliError::Compute(Error::BudgetExceeded { .. }) => 4,
            CliError::Compute(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => f.write_str(m),
            CliError::Compute(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Compute(e)
    }
}

pub fn json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values are always serializable");
    s.push('\n');
    s
}

pub fn rationals(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(to_json).collect())
}

pub fn no_csv(cmd: &str) -> CliError {
    CliError::Usage(format!("{cmd}: CSV output is only available for lvalue"))
}
