use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::{self, Write};

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Fail,
    Pass,
    SkippedGuard,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Fail => "fail",
            Status::Pass => "pass",
            Status::SkippedGuard => "skipped-guard",
        }
    }
}

/// An integer parameter or a `[G_0, G_1]` seed pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ParamValue {
    Int(i64),
    Seed([i64; 2]),
}

impl std::fmt::Display for ParamValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ParamValue::Int(v) => write!(f, "{v}"),
            ParamValue::Seed([a, b]) => write!(f, "{a},{b}"),
        }
    }
}

/// One evaluated (or guard-skipped) identity instance. `lhs` and `rhs` are
/// canonical `num/den` text and absent for skipped records; `guard` carries
/// the reason a record was skipped.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationRecord {
    pub identity: String,
    pub params: BTreeMap<String, ParamValue>,
    pub lhs: Option<String>,
    pub rhs: Option<String>,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub guard: Option<String>,
}

impl VerificationRecord {
    /// `m=1 n=2 g=0,1` with parameters in `m n r k g h` order.
    pub fn params_text(&self) -> String {
        let mut out = String::new();
        for key in ["m", "n", "r", "k", "g", "h"] {
            if let Some(v) = self.params.get(key) {
                if !out.is_empty() {
                    out.push(' ');
                }
                let _ = write!(out, "{key}={v}");
            }
        }
        out
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridReport {
    pub summary: Summary,
    pub records: Vec<VerificationRecord>,
}

impl GridReport {
    pub fn new(records: Vec<VerificationRecord>) -> Self {
        let mut summary = Summary::default();
        for r in &records {
            match r.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::SkippedGuard => summary.skipped += 1,
            }
        }
        GridReport { summary, records }
    }

    /// `{"summary":{..},"records":[..]}` with one record per line.
    pub fn write_json<W: Write>(&self, mut w: W) -> io::Result<()> {
        w.write_all(b"{\"summary\":")?;
        serde_json::to_writer(&mut w, &self.summary)?;
        w.write_all(b",\"records\":[")?;
        for (i, r) in self.records.iter().enumerate() {
            w.write_all(if i == 0 { b"\n" } else { b",\n" })?;
            serde_json::to_writer(&mut w, r)?;
        }
        w.write_all(b"\n]}\n")
    }

    pub fn to_json(&self) -> Result<String> {
        let mut buf = Vec::new();
        self.write_json(&mut buf).map_err(|e| Error::Report(e.to_string()))?;
        String::from_utf8(buf).map_err(|e| Error::Report(e.to_string()))
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Report(e.to_string()))
    }

    /// Columns `identity,params,lhs,rhs,status`.
    pub fn write_csv<W: Write>(&self, w: W) -> Result<()> {
        let err = |e: csv::Error| Error::Report(e.to_string());
        let mut out = csv::Writer::from_writer(w);
        out.write_record(["identity", "params", "lhs", "rhs", "status"]).map_err(err)?;
        for r in &self.records {
            out.write_record([
                r.identity.as_str(),
                &r.params_text(),
                r.lhs.as_deref().unwrap_or(""),
                r.rhs.as_deref().unwrap_or(""),
                r.status.as_str(),
            ])
            .map_err(err)?;
        }
        out.flush().map_err(|e| Error::Report(e.to_string()))
    }

    /// Human-readable lines, failures first, then a summary line.
    pub fn write_text<W: Write>(&self, mut w: W) -> io::Result<()> {
        let mut order: Vec<&VerificationRecord> = self.records.iter().collect();
        order.sort_by_key(|r| r.status);
        for r in order {
            match r.status {
                Status::SkippedGuard => writeln!(
                    w,
                    "SKIP {} {} ({})",
                    r.identity,
                    r.params_text(),
                    r.guard.as_deref().unwrap_or("guard")
                )?,
                s => writeln!(
                    w,
                    "{} {} {} lhs={} rhs={}",
                    if s == Status::Fail { "FAIL" } else { "PASS" },
                    r.identity,
                    r.params_text(),
                    r.lhs.as_deref().unwrap_or(""),
                    r.rhs.as_deref().unwrap_or(""),
                )?,
            }
        }
        writeln!(
            w,
            "summary: pass={} fail={} skipped={}",
            self.summary.pass, self.summary.fail, self.summary.skipped
        )
    }
}
