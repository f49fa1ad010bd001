//! Run manifests and their replay.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::CliError;

pub const MANIFEST_SUFFIX: &str = ".manifest.json";

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Manifest {
    /// Arguments after the program name, exactly as given.
    pub argv: Vec<String>,
    pub command: String,
    pub cwd: PathBuf,
    /// Input path (as given) to SHA-256.
    pub inputs: BTreeMap<String, String>,
    /// Output path (as given) to SHA-256; the manifest itself is not listed.
    pub outputs: BTreeMap<String, String>,
    pub parameters: Value,
    pub seed: Option<u64>,
    pub version: String,
    pub wall_clock_ms: u64,
}

impl Manifest {
    /// Sorted keys, two-space indent, trailing newline.
    pub fn to_json(&self) -> String {
        let v = serde_json::to_value(self).expect("manifest is plain data");
        let mut s = serde_json::to_string_pretty(&v).expect("manifest is plain data");
        s.push('\n');
        s
    }
}

pub fn digest(bytes: &[u8]) -> String {
    format!("{:x}", Sha256::digest(bytes))
}

/// `group verb` from the serialized command tree.
pub fn command_name(parameters: &Value) -> String {
    let single = |v: &Value| match v {
        Value::Object(m) if m.len() == 1 => m.iter().next().map(|(k, v)| (k.clone(), v.clone())),
        _ => None,
    };
    let Some((group, inner)) = single(parameters) else {
        return String::new();
    };
    match single(&inner) {
        Some((verb, body)) if body.is_object() => format!("{group} {verb}"),
        _ => group,
    }
}

const INPUT_KEYS: [&str; 6] = ["input", "f", "g", "h", "pattern", "cliques"];

/// Every file the command reads, in key order.
pub fn input_paths(parameters: &Value) -> Vec<String> {
    fn walk(v: &Value, out: &mut Vec<String>) {
        if let Value::Object(m) = v {
            for (k, inner) in m {
                match inner {
                    Value::String(s) if INPUT_KEYS.contains(&k.as_str()) => out.push(s.clone()),
                    _ => walk(inner, out),
                }
            }
        }
    }
    let mut out = Vec::new();
    walk(parameters, &mut out);
    out
}

fn out_position(argv: &[String]) -> Option<(usize, bool)> {
    argv.iter().enumerate().find_map(|(i, a)| {
        if a == "--out" {
            Some((i + 1, false))
        } else if a.starts_with("--out=") {
            Some((i, true))
        } else {
            None
        }
    })
}

/// Reruns the recorded command with `--out` moved into a scratch directory
/// and compares every recorded output by digest. Returns the mismatches.
pub fn replay(path: &Path) -> Result<Vec<String>, CliError> {
    let text = fs::read_to_string(path).map_err(erogers::Error::from)?;
    let m: Manifest =
        serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("{}: not a manifest: {e}", path.display())))?;
    let mut problems = Vec::new();

    for (p, want) in &m.inputs {
        match fs::read(m.cwd.join(p)) {
            Ok(bytes) if digest(&bytes) == *want => {}
            Ok(_) => problems.push(format!("input {p} changed since the recorded run")),
            Err(e) => problems.push(format!("input {p} unreadable: {e}")),
        }
    }

    let mut argv = m.argv.clone();
    let (pos, inline) = out_position(&argv).ok_or_else(|| CliError::Usage("manifest argv has no --out".into()))?;
    let original = if inline { argv[pos]["--out=".len()..].to_string() } else { argv[pos].clone() };
    let scratch = tempfile::tempdir().map_err(erogers::Error::from)?;
    let name = Path::new(&original).file_name().ok_or_else(|| CliError::Usage("--out has no file name".into()))?;
    let fresh = scratch.path().join(name).display().to_string();
    argv[pos] = if inline { format!("--out={fresh}") } else { fresh.clone() };
    // the default seed is spelled out so REQUIRE_SEED cannot reject the rerun
    if let Some(seed) = m.seed {
        if !argv.iter().any(|a| a == "--seed" || a.starts_with("--seed=")) {
            argv.push("--seed".into());
            argv.push(seed.to_string());
        }
    }

    let exe = std::env::current_exe().map_err(erogers::Error::from)?;
    let run = Command::new(exe).args(&argv).current_dir(&m.cwd).output().map_err(erogers::Error::from)?;
    if !matches!(run.status.code(), Some(0 | 1)) {
        problems.push(format!(
            "rerun exited with {:?}: {}",
            run.status.code(),
            String::from_utf8_lossy(&run.stderr).trim()
        ));
        return Ok(problems);
    }

    for (p, want) in &m.outputs {
        let Some(suffix) = p.strip_prefix(&original) else {
            problems.push(format!("output {p} is not derived from --out"));
            continue;
        };
        let candidate = format!("{fresh}{suffix}");
        match fs::read(&candidate) {
            Ok(bytes) if digest(&bytes) == *want => {}
            Ok(_) => problems.push(format!("output {p} differs")),
            Err(_) => problems.push(format!("output {p} was not produced")),
        }
    }
    Ok(problems)
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn names_and_inputs_come_from_the_command_tree() {
        let p = json!({"search": {"max-ffree": {"input": "c5.g", "f": "p3.g", "budget_nodes": null}}});
        assert_eq!(command_name(&p), "search max-ffree");
        assert_eq!(input_paths(&p), vec!["p3.g".to_string(), "c5.g".to_string()]);
        assert_eq!(command_name(&json!({"replay": {"manifest": "m.json"}})), "replay");
    }

    #[test]
    fn sha256_of_empty_input() {
        assert_eq!(digest(b""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    }

    #[test]
    fn out_flag_in_both_spellings() {
        let a: Vec<String> = ["construct", "efr", "--out", "x.hg"].map(String::from).to_vec();
        assert_eq!(out_position(&a), Some((3, false)));
        let b: Vec<String> = ["--out=x.hg"].map(String::from).to_vec();
        assert_eq!(out_position(&b), Some((0, true)));
    }
}
