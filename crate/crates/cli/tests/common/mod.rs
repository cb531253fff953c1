#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;

use explab_cli::schema;
use serde_json::Value;

pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Run {
    pub fn json(&self) -> Value {
        serde_json::from_str(&self.stdout).unwrap_or_else(|e| panic!("stdout is not JSON ({e}):\n{}", self.stdout))
    }
}

pub fn explab_with_env(args: &[&str], env: &[(&str, &str)]) -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_explab"));
    cmd.args(args).env_remove("EXPLAB_ORDER").env_remove("EXPLAB_BUDGET");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("spawn explab");
    Run {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

pub fn explab(args: &[&str]) -> Run {
    explab_with_env(args, &[])
}

pub fn corpus(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus").join(name)
}

/// Validates `instance` against a published schema, resolving cross-schema references.
pub fn validate(schema_name: &str, instance: &Value) -> Result<(), Vec<String>> {
    let mut options = jsonschema::options();
    for (name, text) in schema::SCHEMAS {
        let contents: Value = serde_json::from_str(text).unwrap();
        let resource = jsonschema::Resource::from_contents(contents).unwrap();
        options = options.with_resource(format!("json-schema:///{}", schema::id(name)), resource);
    }
    let root: Value = serde_json::from_str(schema::get(schema_name).unwrap()).unwrap();
    let validator = options.build(&root).unwrap_or_else(|e| panic!("schema {schema_name}: {e}"));
    let errors: Vec<String> =
        validator.iter_errors(instance).map(|e| format!("{} at {}", e, e.instance_path)).collect();
    if errors.is_empty() {
        Ok(())
    } else {
        Err(errors)
    }
}

pub fn assert_valid(schema_name: &str, instance: &Value) {
    if let Err(errors) = validate(schema_name, instance) {
        panic!("{schema_name} validation failed:\n{}\n{instance:#}", errors.join("\n"));
    }
}
