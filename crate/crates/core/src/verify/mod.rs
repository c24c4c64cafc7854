//! The identity catalogue and its runner.
//!
//! Every identity is a check over a finite parameter range. The checks of
//! all selected suites are spread over a small worker pool; the report is
//! assembled afterwards in catalogue order, so the output does not depend
//! on scheduling.
//!
//! A printed formula that turns out to be wrong is reported as `erratum`:
//! the printed reading must fail and the corrected one must hold.

mod catalogue;
mod data;

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::str::FromStr;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use serde::Serialize;

use crate::algebra::Rational;
use crate::chebyshev::check_q_value;
use crate::error::{Error, Result};

pub use data::Data;

/// Largest admissible oracle cap.
pub const MAX_ORACLE_CAP: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Chebyshev,
    Tilings,
    Moments,
    TangentGenocchi,
    Q1Classical,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Chebyshev,
        Suite::Tilings,
        Suite::Moments,
        Suite::TangentGenocchi,
        Suite::Q1Classical,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Chebyshev => "chebyshev",
            Suite::Tilings => "tilings",
            Suite::Moments => "moments",
            Suite::TangentGenocchi => "tangent-genocchi",
            Suite::Q1Classical => "q1-classical",
        }
    }

    pub fn default_max_n(self) -> usize {
        match self {
            Suite::Chebyshev => 20,
            Suite::Tilings => 12,
            Suite::Moments => 14,
            Suite::TangentGenocchi => 6,
            Suite::Q1Classical => 12,
        }
    }

    /// Largest `max_n` accepted; the tiling suite is limited by the
    /// oracle cap instead.
    pub fn limit(self) -> usize {
        match self {
            Suite::Chebyshev => 40,
            Suite::Tilings => MAX_ORACLE_CAP,
            Suite::Moments => 24,
            Suite::TangentGenocchi => 10,
            Suite::Q1Classical => 30,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Config(format!("unknown suite `{s}`")))
    }
}

/// How `q` is treated.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub enum QMode {
    #[default]
    Symbolic,
    /// An identity counts as holding when its residual vanishes at this
    /// value of `q`.
    At(Rational),
}

impl FromStr for QMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "symbolic" {
            return Ok(QMode::Symbolic);
        }
        s.parse::<Rational>()
            .map(QMode::At)
            .map_err(|_| Error::Config(format!("`{s}` is neither `symbolic` nor a rational number")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Output {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub max_n: BTreeMap<Suite, usize>,
    pub q_mode: QMode,
    pub oracle_cap: usize,
    pub output: Output,
    pub suites: Vec<Suite>,
    /// Perturbs one coefficient of `T_5` in the shared tables. Only meant
    /// for testing that failures are caught.
    #[doc(hidden)]
    pub inject_fault: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            max_n: Suite::ALL.into_iter().map(|s| (s, s.default_max_n())).collect(),
            q_mode: QMode::Symbolic,
            oracle_cap: crate::tiling::DEFAULT_CAP,
            output: Output::Text,
            suites: Suite::ALL.to_vec(),
            inject_fault: false,
        }
    }
}

impl VerifyConfig {
    pub fn max_n(&self, suite: Suite) -> usize {
        self.max_n.get(&suite).copied().unwrap_or_else(|| suite.default_max_n())
    }

    /// Sets the same bound for every suite.
    pub fn with_max_n(mut self, n: usize) -> Self {
        for s in Suite::ALL {
            self.max_n.insert(s, n);
        }
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.oracle_cap > MAX_ORACLE_CAP {
            return Err(Error::Config(format!(
                "oracle cap {} exceeds {MAX_ORACLE_CAP}",
                self.oracle_cap
            )));
        }
        if let QMode::At(q) = &self.q_mode {
            check_q_value(q)?;
        }
        if self.suites.is_empty() {
            return Err(Error::Config("no suite selected".into()));
        }
        for &s in &self.suites {
            let n = self.max_n(s);
            if n > s.limit() {
                return Err(Error::Config(format!("max-n {n} exceeds the limit {} of suite {s}", s.limit())));
            }
            if s == Suite::Tilings && n > self.oracle_cap {
                return Err(Error::OracleBound { n, cap: self.oracle_cap });
            }
            if s == Suite::TangentGenocchi && n == 0 {
                return Err(Error::Config("the tangent-genocchi suite needs max-n >= 1".into()));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Erratum,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Erratum => "erratum",
            Status::Fail => "FAIL",
        })
    }
}

/// The first failing parameters and the full residual.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<i64>,
    pub what: String,
    pub residual: String,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.n, self.m) {
            (Some(n), Some(m)) => write!(f, "at (n, m) = ({n}, {m}): ")?,
            (Some(n), None) => write!(f, "at n = {n}: ")?,
            _ => {}
        }
        f.write_str(&self.what)?;
        if !self.residual.is_empty() {
            write!(f, ": residual {}", self.residual)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Record {
    pub id: String,
    pub suite: Suite,
    pub bound: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub suite: String,
    pub identities: Vec<Record>,
}

impl VerifyReport {
    pub fn count(&self, status: Status) -> usize {
        self.identities.iter().filter(|r| r.status == status).count()
    }

    pub fn all_hold(&self) -> bool {
        self.count(Status::Fail) == 0
    }

    /// 0 when nothing failed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.all_hold() {
            0
        } else {
            1
        }
    }

    pub fn record(&self, id: &str) -> Option<&Record> {
        self.identities.iter().find(|r| r.id == id)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.identities {
            let _ = writeln!(out, "{:<22} {:<17} {:<20} {}", r.id, r.suite.name(), r.bound, r.status);
            if let Some(c) = &r.counterexample {
                let label = if r.status == Status::Erratum { "printed form fails" } else { "counterexample" };
                let _ = writeln!(out, "    {label} {c}");
            }
            if let Some(n) = &r.note {
                let _ = writeln!(out, "    note: {n}");
            }
        }
        let _ = writeln!(
            out,
            "{} identities: {} pass, {} erratum, {} fail",
            self.identities.len(),
            self.count(Status::Pass),
            self.count(Status::Erratum),
            self.count(Status::Fail)
        );
        out
    }

    pub fn render(&self, output: Output) -> String {
        match output {
            Output::Text => self.to_text(),
            Output::Json => self.to_json() + "\n",
        }
    }
}

/// One identity's parameter point.
pub(crate) type Param = (i64, Option<i64>);

pub(crate) type CheckFn<'a> = Box<dyn Fn(i64, Option<i64>) -> Result<()> + Send + Sync + 'a>;

pub(crate) struct Sweep<'a> {
    pub params: Vec<Param>,
    pub check: CheckFn<'a>,
}

impl<'a> Sweep<'a> {
    pub fn new<F>(params: Vec<Param>, check: F) -> Self
    where
        F: Fn(i64, Option<i64>) -> Result<()> + Send + Sync + 'a,
    {
        Self { params, check: Box::new(check) }
    }

    /// First parameter point where the check fails.
    fn run(&self, mode: &QMode) -> std::result::Result<(), Counterexample> {
        for &(n, m) in &self.params {
            if let Err(e) = (self.check)(n, m) {
                if let Some(c) = counterexample(mode, n, m, e) {
                    return Err(c);
                }
            }
        }
        Ok(())
    }
}

/// `None` when, at a numeric `q`, the residual vanishes after all.
fn counterexample(mode: &QMode, n: i64, m: Option<i64>, e: Error) -> Option<Counterexample> {
    let (what, residual) = match e {
        Error::Mismatch { what, residual } => match mode {
            QMode::Symbolic => (what, residual.to_string()),
            QMode::At(q) => match residual.at_q(q) {
                Ok(v) if v.is_zero() => return None,
                Ok(v) => (format!("{what} (at q = {q})"), v.to_string()),
                Err(_) => (format!("{what} (pole at q = {q})"), residual.to_string()),
            },
        },
        other => (other.to_string(), String::new()),
    };
    Some(Counterexample { n: Some(n), m, what, residual })
}

pub(crate) enum Job<'a> {
    Holds(Sweep<'a>),
    Erratum { printed: Sweep<'a>, corrected: Sweep<'a> },
}

pub(crate) struct Entry<'a> {
    pub id: &'static str,
    pub suite: Suite,
    pub bound: String,
    pub job: Job<'a>,
    pub note: Option<&'static str>,
}

impl Entry<'_> {
    fn run(&self, mode: &QMode) -> Record {
        let (status, counterexample, note) = match &self.job {
            Job::Holds(s) => match s.run(mode) {
                Ok(()) => (Status::Pass, None, self.note.map(String::from)),
                Err(c) => (Status::Fail, Some(c), self.note.map(String::from)),
            },
            Job::Erratum { printed, corrected } => match (printed.run(mode), corrected.run(mode)) {
                (_, Err(c)) => (Status::Fail, Some(c), Some("the corrected form fails".to_string())),
                (Err(c), Ok(())) => (Status::Erratum, Some(c), self.note.map(String::from)),
                (Ok(()), Ok(())) => (
                    Status::Pass,
                    None,
                    Some("the printed form holds as well in this range".to_string()),
                ),
            },
        };
        Record {
            id: self.id.to_string(),
            suite: self.suite,
            bound: self.bound.clone(),
            status,
            counterexample,
            note,
        }
    }
}

/// Runs the selected suites. Configuration errors come back as `Err`;
/// failing identities are part of the report.
pub fn run(config: &VerifyConfig) -> Result<VerifyReport> {
    config.validate()?;
    let data = Data::new(config);
    let mut entries = Vec::new();
    for suite in Suite::ALL {
        if config.suites.contains(&suite) {
            catalogue::push_suite(&data, suite, &mut entries);
        }
    }
    let results: Vec<Mutex<Option<Record>>> = entries.iter().map(|_| Mutex::new(None)).collect();
    let next = AtomicUsize::new(0);
    let workers = std::thread::available_parallelism().map_or(4, |n| n.get()).min(entries.len().max(1));
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(entry) = entries.get(i) else { break };
                let record = entry.run(&config.q_mode);
                *results[i].lock().expect("no poisoned slot") = Some(record);
            });
        }
    });
    let mut identities: Vec<Record> = results
        .into_iter()
        .map(|m| m.into_inner().expect("no poisoned slot").expect("every entry ran"))
        .collect();
    identities.sort_by_key(|a| id_key(&a.id));
    let suite = Suite::ALL
        .into_iter()
        .filter(|s| config.suites.contains(s))
        .map(Suite::name)
        .collect::<Vec<_>>()
        .join(",");
    Ok(VerifyReport { suite, identities })
}

/// `(section, number)` of the first `a.b` in an id, then the id itself.
/// The sort is stable, so ties keep catalogue order.
fn id_key(id: &str) -> (u32, u32, bool, String) {
    let bytes = id.as_bytes();
    for i in 0..bytes.len() {
        if !bytes[i].is_ascii_digit() || (i > 0 && bytes[i - 1].is_ascii_digit()) {
            continue;
        }
        let rest = &id[i..];
        let a: String = rest.chars().take_while(char::is_ascii_digit).collect();
        let tail = &rest[a.len()..];
        if let Some(tail) = tail.strip_prefix('.') {
            let b: String = tail.chars().take_while(char::is_ascii_digit).collect();
            if let (Ok(a), Ok(b)) = (a.parse(), b.parse()) {
                return (a, b, !id.starts_with('('), id.to_string());
            }
        }
    }
    (u32::MAX, u32::MAX, true, id.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn id_order() {
        let mut ids = vec!["(2.10)", "Thm. 2.1", "(2.1)", "(1.35)", "(3.13) mu", "(3.13)", "(2.9)"];
        ids.sort_by_key(|a| id_key(a));
        assert_eq!(ids, ["(1.35)", "(2.1)", "Thm. 2.1", "(2.9)", "(2.10)", "(3.13)", "(3.13) mu"]);
    }

    #[test]
    fn config_errors() {
        let mut c = VerifyConfig::default();
        c.q_mode = "-1".parse().unwrap();
        assert_eq!(c.validate(), Err(Error::ExcludedQ));
        let c = VerifyConfig { oracle_cap: 21, ..Default::default() };
        assert!(matches!(c.validate(), Err(Error::Config(_))));
        assert!("chebychev".parse::<Suite>().is_err());
        assert_eq!("1/2".parse::<QMode>().unwrap(), QMode::At(Rational::new(1.into(), 2.into())));
        assert!("x".parse::<QMode>().is_err());
    }
}
