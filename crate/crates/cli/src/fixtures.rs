use std::path::{Path, PathBuf};

use serde::Deserialize;
use serde_json::Value;
use trace_ideals::enumerate::EnumOptions;

use crate::dispatch::{self, EnumerateTask};
use crate::errors::CliError;
use crate::GlobalOpts;

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct FixtureArgs {
    pub monomial_only: bool,
    pub scan: bool,
    pub floor_check: i64,
    pub max_dim: Option<usize>,
}

/// A golden record: a ring, how to enumerate it and the expected fragment
/// of the enumeration report.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Fixture {
    pub name: String,
    pub ring: String,
    pub field: String,
    pub note: String,
    #[serde(default)]
    pub args: FixtureArgs,
    pub expect: Value,
}

impl Fixture {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Other(format!("{}: {e}", path.display())))?;
        serde_json::from_str(&text).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
    }

    pub fn options(&self) -> EnumOptions {
        EnumOptions {
            max_dim: self.args.max_dim,
            paranoid: false,
            scan_overrings: self.args.scan,
            monomial_only: self.args.monomial_only,
            floor_check_width: self.args.floor_check,
        }
    }
}

pub fn default_dir() -> PathBuf {
    std::env::var_os("TRACE_IDEALS_FIXTURES")
        .map(PathBuf::from)
        .unwrap_or_else(|| Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures"))
}

pub fn load_dir(dir: &Path) -> Result<Vec<Fixture>, CliError> {
    let entries =
        std::fs::read_dir(dir).map_err(|e| CliError::Other(format!("{}: {e}", dir.display())))?;
    let mut paths: Vec<PathBuf> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    paths.iter().map(|p| Fixture::load(p)).collect()
}

/// Differences between an expected fragment and the actual value: objects
/// only need the expected keys, arrays and scalars must match exactly.
pub fn compare(expected: &Value, actual: &Value) -> Vec<String> {
    let mut diffs = Vec::new();
    walk(expected, actual, "$", &mut diffs);
    diffs
}

fn walk(expected: &Value, actual: &Value, path: &str, diffs: &mut Vec<String>) {
    match (expected, actual) {
        (Value::Object(e), Value::Object(a)) => {
            for (k, ev) in e {
                match a.get(k) {
                    Some(av) => walk(ev, av, &format!("{path}.{k}"), diffs),
                    None => diffs.push(format!("{path}.{k}: missing")),
                }
            }
        }
        (Value::Array(e), Value::Array(a)) => {
            if e.len() != a.len() {
                diffs.push(format!(
                    "{path}: expected {} entries, got {}",
                    e.len(),
                    a.len()
                ));
                return;
            }
            for (i, (ev, av)) in e.iter().zip(a).enumerate() {
                walk(ev, av, &format!("{path}[{i}]"), diffs);
            }
        }
        _ if expected == actual => {}
        _ => diffs.push(format!("{path}: expected {expected}, got {actual}")),
    }
}

pub fn mismatch_message(f: &Fixture, diffs: &[String]) -> String {
    format!("{} ({}): {}", f.name, f.note, diffs.join("; "))
}

pub fn run_one(g: &GlobalOpts, f: &Fixture) -> Result<Vec<String>, CliError> {
    let mut g = g.clone();
    g.field = f.field.clone();
    let report = dispatch::with_ring(&g, &f.ring, EnumerateTask { opts: f.options() })?;
    let value = serde_json::to_value(&report).expect("serializable");
    Ok(compare(&f.expect, &value))
}

pub fn run_all(g: &GlobalOpts, all: &[Fixture], filter: Option<&str>) -> Result<(), CliError> {
    let mut failed = Vec::new();
    for f in all
        .iter()
        .filter(|f| filter.is_none_or(|s| f.name.contains(s)))
    {
        let start = std::time::Instant::now();
        match run_one(g, f) {
            Ok(d) if d.is_empty() => {
                crate::say(&format!("PASS {} ({:.2?})", f.name, start.elapsed()))
            }
            Ok(d) => {
                crate::say(&format!("FAIL {}", mismatch_message(f, &d)));
                failed.push(f.name.clone());
            }
            Err(e) => {
                crate::say(&format!("FAIL {}: {}", f.name, e.to_json()));
                failed.push(f.name.clone());
            }
        }
    }
    if failed.is_empty() {
        Ok(())
    } else {
        Err(CliError::Mismatch(format!(
            "{} fixture(s) failed: {}",
            failed.len(),
            failed.join(", ")
        )))
    }
}
