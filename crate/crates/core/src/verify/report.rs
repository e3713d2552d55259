use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::{Point, Witness};
use crate::zeta::Status;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING-KEBAB-CASE")]
pub enum Outcome {
    Pass,
    Fail,
    ConjectureFalsified,
    Skipped,
    Error,
}

impl Outcome {
    fn tag(&self) -> &'static str {
        match self {
            Outcome::Pass => "PASS",
            Outcome::Fail => "FAIL",
            Outcome::ConjectureFalsified => "CONJECTURE-FALSIFIED",
            Outcome::Skipped => "SKIPPED",
            Outcome::Error => "ERROR",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointResult {
    pub check: String,
    pub point: Point,
    pub status: Status,
    pub outcome: Outcome,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    /// The left-hand value when short, or the error message.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Totals {
    pub pass: usize,
    pub fail: usize,
    pub conjecture_falsified: usize,
    pub skipped: usize,
    pub error: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub results: Vec<PointResult>,
    pub totals: Totals,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<u64>,
}

impl Report {
    /// Sorts the results so the report does not depend on evaluation order.
    pub fn new(suite: &str, mut results: Vec<PointResult>, wall_ms: Option<u64>) -> Self {
        results.sort_by(|a, b| (&a.check, &a.point).cmp(&(&b.check, &b.point)));
        let mut totals = Totals::default();
        for r in &results {
            match r.outcome {
                Outcome::Pass => totals.pass += 1,
                Outcome::Fail => totals.fail += 1,
                Outcome::ConjectureFalsified => totals.conjecture_falsified += 1,
                Outcome::Skipped => totals.skipped += 1,
                Outcome::Error => totals.error += 1,
            }
        }
        Report { suite: suite.to_string(), results, totals, wall_ms }
    }

    pub fn all_passed(&self) -> bool {
        self.totals.pass == self.results.len()
    }

    /// 0 all pass, 1 theorem failure or engine error, 2 conjecture falsified,
    /// 3 something was skipped by the resource guard.
    pub fn exit_code(&self) -> i32 {
        let t = &self.totals;
        if t.fail > 0 || t.error > 0 {
            1
        } else if t.conjecture_falsified > 0 {
            2
        } else if t.skipped > 0 {
            3
        } else {
            0
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let rows: Vec<[String; 5]> = self
            .results
            .iter()
            .map(|r| {
                let detail = match (&r.witness, &r.value) {
                    (Some(w), _) => format!("witness {w}"),
                    (None, Some(v)) => v.clone(),
                    (None, None) => String::new(),
                };
                [r.check.clone(), r.point.to_string(), r.status.to_string(), r.outcome.tag().to_string(), detail]
            })
            .collect();
        let header = ["check", "point", "status", "outcome", "detail"].map(String::from);
        let mut widths = [0usize; 4];
        for row in std::iter::once(&header).chain(&rows) {
            for (w, cell) in widths.iter_mut().zip(row.iter()) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let mut out = String::new();
        writeln!(out, "suite {}", self.suite).unwrap();
        for row in std::iter::once(&header).chain(&rows) {
            let mut line = String::new();
            for (i, cell) in row.iter().enumerate() {
                if i < 4 {
                    write!(line, "{:<width$}  ", cell, width = widths[i]).unwrap();
                } else {
                    line.push_str(cell);
                }
            }
            writeln!(out, "{}", line.trim_end()).unwrap();
        }
        let t = &self.totals;
        write!(
            out,
            "total {}: {} pass, {} fail, {} conjecture-falsified, {} skipped, {} error",
            self.results.len(),
            t.pass,
            t.fail,
            t.conjecture_falsified,
            t.skipped,
            t.error
        )
        .unwrap();
        if let Some(ms) = self.wall_ms {
            write!(out, " ({ms} ms)").unwrap();
        }
        out.push('\n');
        out
    }
}
