//! Serializable reports. Every rational is an exact `a/b` string.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use incidence_core::bounds::ScanResult;
use incidence_core::rational::format_rational;
use incidence_core::{Arrangement, Interval, TheoremCheck, TheoremReport};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaxPointLines {
    pub index: usize,
    pub count: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalyzeReport {
    pub input: String,
    pub n: usize,
    pub l: usize,
    pub num_lines: usize,
    pub s: BTreeMap<usize, u64>,
    pub incidences: u64,
    pub max_point_lines: MaxPointLines,
    pub per_point_lines: Vec<u64>,
}

impl AnalyzeReport {
    pub fn new(input: &str, arr: &Arrangement) -> Self {
        let (index, count) = arr.max_lines_through_point();
        Self {
            input: input.to_string(),
            n: arr.n(),
            l: arr.max_collinear(),
            num_lines: arr.num_lines(),
            s: arr.histogram().clone(),
            incidences: arr.incidences(),
            max_point_lines: MaxPointLines { index, count },
            per_point_lines: arr.per_point_lines().to_vec(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let hist: Vec<String> = self.s.iter().map(|(i, c)| format!("{i}:{c}")).collect();
        let _ = writeln!(out, "input: {}", self.input);
        let _ = writeln!(out, "n: {}", self.n);
        let _ = writeln!(out, "lines: {}", self.num_lines);
        let _ = writeln!(out, "l: {}", self.l);
        let _ = writeln!(out, "incidences: {}", self.incidences);
        let _ = writeln!(out, "s: {}", hist.join(" "));
        let _ = writeln!(
            out,
            "max_point_lines: {} (point {})",
            self.max_point_lines.count, self.max_point_lines.index
        );
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckEntry {
    pub name: String,
    pub applicable: bool,
    pub lhs: String,
    pub rhs: String,
    pub holds: bool,
}

impl From<&TheoremCheck> for CheckEntry {
    fn from(c: &TheoremCheck) -> Self {
        Self {
            name: c.name.clone(),
            applicable: c.applicable,
            lhs: format_rational(&c.lhs),
            rhs: format_rational(&c.rhs),
            holds: c.holds,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub input: String,
    pub n: usize,
    pub l: usize,
    pub num_lines: usize,
    pub s: BTreeMap<usize, u64>,
    pub incidences: u64,
    pub max_point_lines: MaxPointLines,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub cross_check: Option<bool>,
    pub checks: Vec<CheckEntry>,
    pub all_hold: bool,
}

impl VerifyReport {
    pub fn new(
        input: &str,
        arr: &Arrangement,
        report: &TheoremReport,
        cross_check: Option<bool>,
    ) -> Self {
        let stats = AnalyzeReport::new(input, arr);
        Self {
            input: stats.input,
            n: stats.n,
            l: stats.l,
            num_lines: stats.num_lines,
            s: stats.s,
            incidences: stats.incidences,
            max_point_lines: stats.max_point_lines,
            cross_check,
            checks: report.checks.iter().map(CheckEntry::from).collect(),
            all_hold: report.all_hold(),
        }
    }
}

pub fn verify_text(report: &VerifyReport, theorems: &TheoremReport) -> String {
    let mut out = String::new();
    let hist: Vec<String> = report.s.iter().map(|(i, c)| format!("{i}:{c}")).collect();
    let _ = writeln!(out, "input: {}", report.input);
    let _ = writeln!(
        out,
        "n: {}  l: {}  lines: {}  incidences: {}  s: {}",
        report.n,
        report.l,
        report.num_lines,
        report.incidences,
        hist.join(" ")
    );
    if let Some(ok) = report.cross_check {
        let _ = writeln!(
            out,
            "cross_check: {}",
            if ok { "match" } else { "MISMATCH" }
        );
    }
    for check in &theorems.checks {
        let _ = writeln!(out, "{check}");
    }
    let failed = theorems.failures().count();
    if failed == 0 {
        let _ = writeln!(out, "result: all applicable checks hold");
    } else {
        let _ = writeln!(out, "result: {failed} applicable check(s) FAILED");
    }
    out
}

/// `[lo, hi]` as two exact rational strings.
pub fn pair(iv: &Interval) -> [String; 2] {
    [format_rational(iv.lo()), format_rational(iv.hi())]
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct WdRow {
    pub c: u64,
    pub h: String,
    pub x: String,
    pub y: String,
    pub f: [String; 2],
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub delta: Option<[String; 2]>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub r: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FewRow {
    pub c: u64,
    pub h: String,
    pub x: String,
    pub a: [String; 2],
    pub b: String,
    pub eps: [String; 2],
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Rows {
    Wd(Vec<WdRow>),
    Few(Vec<FewRow>),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ConstantsReport {
    pub family: String,
    pub alpha: String,
    pub beta: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub eps: Option<String>,
    /// Cutoff at which the maximum was isolated.
    pub cutoff: u64,
    pub argmax: u64,
    pub rows: Rows,
}

impl ConstantsReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "family: {}  alpha: {}  beta: {}  cutoff: {}",
            self.family, self.alpha, self.beta, self.cutoff
        );
        match &self.rows {
            Rows::Wd(rows) => {
                for row in rows {
                    let _ = write!(
                        out,
                        "c={:<4} h={:<12} X={:<12} Y={:<14} f=[{}, {}]",
                        row.c, row.h, row.x, row.y, row.f[0], row.f[1]
                    );
                    if let (Some(d), Some(r)) = (&row.delta, &row.r) {
                        let _ = write!(out, " delta=[{}, {}] r={}", d[0], d[1], r);
                    }
                    out.push('\n');
                }
            }
            Rows::Few(rows) => {
                for row in rows {
                    let _ = writeln!(
                        out,
                        "c={:<4} h={:<12} X={:<12} B={:<14} A=[{}, {}] 2A/(1+2B)=[{}, {}]",
                        row.c, row.h, row.x, row.b, row.a[0], row.a[1], row.eps[0], row.eps[1]
                    );
                }
            }
        }
        let _ = writeln!(out, "argmax: c={}", self.argmax);
        out
    }
}

/// Row enclosure for `c` from a scan.
pub fn scan_row(scan: &ScanResult, c: u64) -> &Interval {
    scan.row(c).expect("scan covers its whole range")
}
