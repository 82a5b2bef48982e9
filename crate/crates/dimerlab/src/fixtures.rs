//! Built-in fixture catalog and input resolution.
//!
//! An input argument is tried as a file path first, then as a fixture name.
//! Names resolve against the directory in `DIMERLAB_FIXTURES` when that
//! variable is set, and against the compiled-in catalog otherwise.

use std::env;
use std::fs;
use std::path::Path;

use crate::CliError;

pub const BUILTIN: &[(&str, &str)] = &[
    ("conifold", include_str!("../fixtures/conifold.json")),
    ("k-plus-xs", include_str!("../fixtures/k-plus-xs.json")),
    (
        "split-conifold",
        include_str!("../fixtures/split-conifold.json"),
    ),
];

pub fn builtin_names() -> Vec<&'static str> {
    BUILTIN.iter().map(|(name, _)| *name).collect()
}

/// Resolves an input argument to JSON text.
pub fn resolve(input: &str) -> Result<String, CliError> {
    let path = Path::new(input);
    if path.is_file() {
        return fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read {input}: {e}")));
    }
    if input.contains('/') || input.ends_with(".json") {
        return Err(CliError::Usage(format!("no such file: {input}")));
    }
    if let Ok(dir) = env::var("DIMERLAB_FIXTURES") {
        let p = Path::new(&dir).join(format!("{input}.json"));
        return fs::read_to_string(&p).map_err(|_| {
            CliError::Usage(format!(
                "fixture {input:?} not found in DIMERLAB_FIXTURES ({dir})"
            ))
        });
    }
    BUILTIN
        .iter()
        .find(|(name, _)| *name == input)
        .map(|(_, text)| String::from(*text))
        .ok_or_else(|| {
            CliError::Usage(format!(
                "unknown fixture {input:?}; built-ins: {}",
                builtin_names().join(", ")
            ))
        })
}
