//! The bundled corpus: worked examples with recorded expectations, a flex
//! instance, and seeds for the random-job generator.

use std::path::Path;

use limitcyc::limits::{compare, random_jobs, Transcript};
use serde::Deserialize;

use crate::commands::{run_flex, run_job, JobCommand};
use crate::jobfile::JobFile;
use crate::report::Status;
use crate::CliError;

/// `(file name, contents)`, sorted by name.
pub const BUNDLED: &[(&str, &str)] = &[
    ("ex51_pencils.json", include_str!("../corpus/ex51_pencils.json")),
    ("ex52_D.json", include_str!("../corpus/ex52_D.json")),
    ("ex52_Dminus.json", include_str!("../corpus/ex52_Dminus.json")),
    ("ex52_Dplus.json", include_str!("../corpus/ex52_Dplus.json")),
    ("ex53_flex.json", include_str!("../corpus/ex53_flex.json")),
    ("seed_1.json", include_str!("../corpus/seed_1.json")),
    ("seed_2.json", include_str!("../corpus/seed_2.json")),
];

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FlexFile {
    pub kind: String,
    #[serde(default)]
    pub name: Option<String>,
    pub g: String,
    pub f1: String,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SeedFile {
    pub kind: String,
    #[serde(default)]
    pub name: Option<String>,
    pub seed: u64,
    pub count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub file: String,
    pub kind: String,
    pub pass: bool,
    pub summary: String,
    /// Timing-free report text; identical across runs.
    pub canonical: String,
}

fn kind_of(text: &str) -> Result<String, CliError> {
    let v: serde_json::Value = serde_json::from_str(text).map_err(|e| CliError::Input(e.to_string()))?;
    Ok(v.get("kind").and_then(|k| k.as_str()).unwrap_or("job").to_string())
}

fn parse<T: for<'a> Deserialize<'a>>(text: &str) -> Result<T, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Input(e.to_string()))
}

/// Runs one corpus file given its name and contents.
pub fn run_entry(file: &str, text: &str) -> Outcome {
    let fail = |kind: &str, e: CliError| Outcome {
        file: file.into(),
        kind: kind.into(),
        pass: false,
        summary: format!("error: {e}"),
        canonical: format!("error: {e}"),
    };
    let kind = match kind_of(text) {
        Ok(k) => k,
        Err(e) => return fail("?", e),
    };
    match kind.as_str() {
        "job" => match JobFile::from_json(text) {
            Ok(jf) if jf.expected.is_some() => {
                let r = run_job(JobCommand::Compare, &jf);
                let pass = r.status == Status::Ok;
                let summary = match (&r.limit_cycle, &r.error) {
                    (_, Some(e)) => format!("error: {e}"),
                    (Some(c), None) if pass => format!("{} (degree {})", c.text, c.degree),
                    _ => r.notes.join("; "),
                };
                Outcome {
                    file: file.into(),
                    kind,
                    pass,
                    summary,
                    canonical: r.canonical_json(),
                }
            }
            Ok(_) => fail("job", CliError::Input("corpus jobs must record an expected cycle".into())),
            Err(e) => fail("job", e),
        },
        "flex" => match parse::<FlexFile>(text) {
            Ok(f) => {
                let r = run_flex(&f.g, &f.f1);
                let pass = r.status == Status::Ok;
                let summary = match (&r.r, &r.error) {
                    (_, Some(e)) => format!("error: {e}"),
                    (Some(c), None) => format!("verified = {}, R = {}", r.verified, c.text),
                    _ => String::new(),
                };
                Outcome {
                    file: file.into(),
                    kind,
                    pass,
                    summary,
                    canonical: r.canonical_json(),
                }
            }
            Err(e) => fail("flex", e),
        },
        "seed" => match parse::<SeedFile>(text) {
            Ok(s) => run_seed(file, &s),
            Err(e) => fail("seed", e),
        },
        other => fail(other, CliError::Input(format!("unknown kind `{other}`"))),
    }
}

fn run_seed(file: &str, s: &SeedFile) -> Outcome {
    let mut lines = Vec::new();
    let mut equal = 0;
    for (i, job) in random_jobs(s.seed, s.count).iter().enumerate() {
        match compare(job, &mut Transcript::default()) {
            Ok(c) if c.is_equal() => {
                equal += 1;
                lines.push(format!("job {i}: EQUAL {}", c.theorem));
            }
            Ok(c) => lines.push(format!("job {i}: MISMATCH theorem - oracle = {}", c.difference())),
            Err(e) => lines.push(format!("job {i}: error {e}")),
        }
    }
    Outcome {
        file: file.into(),
        kind: "seed".into(),
        pass: equal == s.count,
        summary: format!("seed {}: {equal}/{} jobs EQUAL", s.seed, s.count),
        canonical: lines.join("\n"),
    }
}

/// Runs entries in parallel; the result is ordered by file name.
pub fn run_all(entries: &[(String, String)]) -> Vec<Outcome> {
    let mut out: Vec<Outcome> = std::thread::scope(|scope| {
        let handles: Vec<_> = entries
            .iter()
            .map(|(name, text)| scope.spawn(move || run_entry(name, text)))
            .collect();
        handles.into_iter().map(|h| h.join().expect("corpus worker panicked")).collect()
    });
    out.sort_by(|a, b| a.file.cmp(&b.file));
    out
}

pub fn bundled() -> Vec<(String, String)> {
    BUNDLED.iter().map(|(n, t)| (n.to_string(), t.to_string())).collect()
}

/// Every `*.json` in `dir`, sorted by name.
pub fn load_dir(dir: &Path) -> Result<Vec<(String, String)>, CliError> {
    let read = std::fs::read_dir(dir).map_err(|e| CliError::Input(format!("{}: {e}", dir.display())))?;
    let mut entries = Vec::new();
    for entry in read {
        let path = entry.map_err(|e| CliError::Input(e.to_string()))?.path();
        if path.extension().is_some_and(|e| e == "json") {
            let text = std::fs::read_to_string(&path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
            let name = path.file_name().unwrap_or_default().to_string_lossy().into_owned();
            entries.push((name, text));
        }
    }
    entries.sort();
    Ok(entries)
}

/// Fixed-width pass/fail table.
pub fn table(outcomes: &[Outcome]) -> String {
    let width = outcomes.iter().map(|o| o.file.len()).max().unwrap_or(4).max(4);
    let mut s = format!("{:<width$}  {:<4}  {:<4}  detail\n", "file", "kind", "pass");
    for o in outcomes {
        s.push_str(&format!(
            "{:<width$}  {:<4}  {:<4}  {}\n",
            o.file,
            o.kind,
            if o.pass { "PASS" } else { "FAIL" },
            o.summary
        ));
    }
    s
}
