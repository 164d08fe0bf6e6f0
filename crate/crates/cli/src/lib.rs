//! Verification suites behind the `gieseker verify` command and the report
//! format they produce.

use std::fmt;
use std::time::Instant;

use serde::Serialize;

mod suites;

pub use suites::run_suite;

/// Name of each suite as accepted on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    MainTheorem,
    SymmetricCenter,
    Calogero,
    Wreath,
    Hecke,
    Appendix,
    CoulombRank1,
    Dimensions,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::MainTheorem => "main-theorem",
            Suite::SymmetricCenter => "symmetric-center",
            Suite::Calogero => "calogero",
            Suite::Wreath => "wreath",
            Suite::Hecke => "hecke",
            Suite::Appendix => "appendix",
            Suite::CoulombRank1 => "coulomb-rank1",
            Suite::Dimensions => "dimensions",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ms: Option<u64>,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            status: Status::Pass,
            witness: None,
            ms: None,
        }
    }

    pub fn fail(name: impl Into<String>, witness: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            status: Status::Fail,
            witness: Some(witness.into()),
            ms: None,
        }
    }

    pub fn skipped(name: impl Into<String>, reason: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            status: Status::Skipped,
            witness: Some(reason.into()),
            ms: None,
        }
    }

    /// Pass when `ok`, otherwise fail with `witness`.
    pub fn expect(name: impl Into<String>, ok: bool, witness: impl FnOnce() -> String) -> Self {
        if ok {
            Check::pass(name)
        } else {
            Check::fail(name, witness())
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        if self.witness.is_none() {
            self.witness = Some(note.into());
        }
        self
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

/// Runs `f`, turning an error into a failed check and recording the time.
pub(crate) fn timed<E: fmt::Display>(
    f: impl FnOnce() -> Result<Vec<Check>, E>,
    name: &str,
) -> Vec<Check> {
    let start = Instant::now();
    let mut checks = match f() {
        Ok(c) => c,
        Err(e) => vec![Check::fail(name, format!("error: {e}"))],
    };
    let ms = start.elapsed().as_millis() as u64;
    for c in &mut checks {
        c.ms = Some(ms);
    }
    checks
}

/// Parameters of one invocation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Params {
    pub n: usize,
    pub r: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cutoff: Option<u32>,
    pub seed: u64,
    /// `name=value` pairs in variable order.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub point: Option<String>,
    #[serde(skip)]
    pub dump_matrices: bool,
}

impl Params {
    pub fn new(n: usize, r: u32) -> Self {
        Params {
            n,
            r,
            cutoff: None,
            seed: 0,
            point: None,
            dump_matrices: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum UsageError {
    #[error("{0}")]
    Invalid(String),
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: u32,
    pub command: String,
    pub params: Params,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub total_ms: Option<u64>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub dumps: Vec<String>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn count(&self, s: Status) -> usize {
        self.checks.iter().filter(|c| c.status == s).count()
    }

    /// Drops every timing so the report depends only on the inputs.
    pub fn strip_timings(&mut self) {
        self.total_ms = None;
        for c in &mut self.checks {
            c.ms = None;
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_csv(&self) -> Result<String, csv::Error> {
        #[derive(Serialize)]
        struct Row<'a> {
            command: &'a str,
            name: &'a str,
            status: Status,
            witness: &'a str,
            ms: Option<u64>,
        }
        let mut w = csv::Writer::from_writer(Vec::new());
        for c in &self.checks {
            w.serialize(Row {
                command: &self.command,
                name: &c.name,
                status: c.status,
                witness: c.witness.as_deref().unwrap_or(""),
                ms: c.ms,
            })?;
        }
        let bytes = w.into_inner().map_err(|e| e.into_error())?;
        Ok(String::from_utf8(bytes).expect("csv is utf-8"))
    }

    pub fn human(&self) -> String {
        let mut out = String::new();
        let p = &self.params;
        out.push_str(&format!("{} (n={}, r={}", self.command, p.n, p.r));
        if let Some(c) = p.cutoff {
            out.push_str(&format!(", cutoff={c}"));
        }
        if let Some(pt) = &p.point {
            out.push_str(&format!(", point={pt}"));
        }
        out.push_str(&format!(", seed={})\n", p.seed));
        for c in &self.checks {
            out.push_str(&format!("{}  {}", c.status, c.name));
            if let Some(w) = &c.witness {
                out.push_str(&format!(": {w}"));
            }
            if let Some(ms) = c.ms {
                out.push_str(&format!(" [{ms} ms]"));
            }
            out.push('\n');
        }
        for d in &self.dumps {
            out.push_str(d);
            out.push('\n');
        }
        out.push_str(&format!(
            "{} passed, {} failed, {} skipped",
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Skipped)
        ));
        if let Some(t) = self.total_ms {
            out.push_str(&format!(" in {t} ms"));
        }
        out.push('\n');
        out
    }
}

/// Runs a suite and assembles its report, timings included.
pub fn verify(suite: Suite, params: Params) -> Result<Report, UsageError> {
    let start = Instant::now();
    let (checks, dumps, params) = run_suite(suite, params)?;
    Ok(Report {
        schema: 1,
        command: format!("verify {}", suite.name()),
        params,
        checks,
        total_ms: Some(start.elapsed().as_millis() as u64),
        dumps,
    })
}
