//! Library side of the `explab` command-line tool: corpus ingestion, batch runs, output
//! formatting and the published JSON schemas.

pub mod app;
pub mod batch;
pub mod corpus;
pub mod render;
pub mod schema;
pub mod settings;
pub mod views;

use serde::Serialize;

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const INTERNAL: i32 = 1;
    pub const INADMISSIBLE: i32 = 2;
    pub const CHECK_FAILED: i32 = 3;
}

/// Machine-readable description of a failed input.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Diagnostic {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<String>,
    pub error: String,
    pub message: String,
}

impl Diagnostic {
    pub fn from_error(input: Option<&str>, err: &explab_core::Error) -> Self {
        Diagnostic { input: input.map(str::to_string), error: err.kind().to_string(), message: err.to_string() }
    }

    pub fn exit_code(err: &explab_core::Error) -> i32 {
        if err.is_inadmissible() {
            exit::INADMISSIBLE
        } else {
            exit::INTERNAL
        }
    }
}
