//! Problem files, schedule notation and front reports.
//!
//! Problem files are TOML:
//!
//! ```toml
//! workday_hours = 8
//! savings = [
//!   [0.00, 4.00],
//!   [4.00, 0.00],
//! ]
//!
//! [[jobs]]
//! id = 1
//! due_days = 8
//! processing = "17:40"
//!
//! [[jobs]]
//! id = 2
//! due_days = 2
//! processing = "24:00"
//! ```
//!
//! Savings are decimals with at most two fraction digits and are stored as
//! exact hundredths. Schedules are written as in `(2-5)-(1-4)-3`: jobs in
//! sequence order, paired jobs in parentheses.

use std::io::{Read, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::domain::{
    check_permutation, format_duration, format_hundredths, parse_duration, Job, JobInstance,
    SavingsMatrix, Solution,
};
use crate::error::{Error, Result};
use crate::pairing::Pairing;

#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    #[serde(default = "default_workday_hours")]
    pub workday_hours: u32,
    pub savings: Vec<Vec<f64>>,
    pub jobs: Vec<JobEntry>,
}

#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct JobEntry {
    pub id: usize,
    pub due_days: u32,
    pub processing: String,
}

fn default_workday_hours() -> u32 {
    8
}

impl ProblemFile {
    pub fn into_instance(self) -> Result<JobInstance> {
        let mut jobs = Vec::with_capacity(self.jobs.len());
        for (row, entry) in self.jobs.iter().enumerate() {
            let processing = parse_duration(&entry.processing).map_err(|e| {
                Error::ProblemFile(format!("job at row {} (id {}): {e}", row + 1, entry.id))
            })?;
            jobs.push(Job {
                id: entry.id,
                due: entry.due_days,
                processing,
            });
        }
        let mut rows = Vec::with_capacity(self.savings.len());
        for (i, row) in self.savings.iter().enumerate() {
            let mut out = Vec::with_capacity(row.len());
            for (j, &value) in row.iter().enumerate() {
                out.push(to_hundredths(value).map_err(|reason| Error::SavingsValue {
                    row: i + 1,
                    col: j + 1,
                    reason,
                })?);
            }
            rows.push(out);
        }
        let workday = self
            .workday_hours
            .checked_mul(60)
            .filter(|&m| m > 0)
            .ok_or_else(|| {
                Error::ProblemFile("workday_hours must be a positive hour count".into())
            })?;
        JobInstance::new(jobs, SavingsMatrix::from_rows(rows)?, workday)
    }

    /// Inverse of [`into_instance`](Self::into_instance). Fails when the
    /// workday is not a whole number of hours.
    pub fn from_instance(instance: &JobInstance) -> Result<Self> {
        if !instance.workday().is_multiple_of(60) {
            return Err(Error::ProblemFile(format!(
                "workday of {} minutes is not a whole number of hours",
                instance.workday()
            )));
        }
        Ok(Self {
            workday_hours: instance.workday() / 60,
            savings: instance
                .savings()
                .rows()
                .map(|r| r.iter().map(|&v| f64::from(v) / 100.0).collect())
                .collect(),
            jobs: instance
                .jobs()
                .iter()
                .map(|j| JobEntry {
                    id: j.id,
                    due_days: j.due,
                    processing: format_duration(j.processing),
                })
                .collect(),
        })
    }
}

fn to_hundredths(value: f64) -> std::result::Result<u32, String> {
    if !value.is_finite() || value < 0.0 {
        return Err(format!("{value} is not a non-negative number"));
    }
    let scaled = value * 100.0;
    let rounded = scaled.round();
    if (scaled - rounded).abs() > 1e-6 {
        return Err(format!("{value} has more than two fraction digits"));
    }
    if rounded > f64::from(u32::MAX) {
        return Err(format!("{value} is too large"));
    }
    Ok(rounded as u32)
}

pub fn parse_problem(text: &str) -> Result<JobInstance> {
    let file: ProblemFile = toml::from_str(text).map_err(|e| Error::ProblemFile(e.to_string()))?;
    file.into_instance()
}

pub fn load_problem(path: impl AsRef<Path>) -> Result<JobInstance> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::ProblemFile(format!("{}: {e}", path.display())))?;
    parse_problem(&text).map_err(|e| match e {
        Error::ProblemFile(msg) => Error::ProblemFile(format!("{}: {msg}", path.display())),
        other => other,
    })
}

pub fn problem_to_toml(instance: &JobInstance) -> Result<String> {
    let file = ProblemFile::from_instance(instance)?;
    toml::to_string(&file).map_err(|e| Error::ProblemFile(e.to_string()))
}

/// Formats a schedule, e.g. `(2-5)-(1-4)-3`.
pub fn format_schedule(sequence: &[usize], pairing: &Pairing) -> String {
    let mut parts = Vec::with_capacity(sequence.len());
    let mut pos = 0;
    while pos < sequence.len() {
        if pairing.starts_pair_at(pos) {
            parts.push(format!("({}-{})", sequence[pos], sequence[pos + 1]));
            pos += 2;
        } else {
            parts.push(sequence[pos].to_string());
            pos += 1;
        }
    }
    parts.join("-")
}

/// Parses the notation produced by [`format_schedule`]. The sequence must
/// be a permutation of `1..=len` and the pairing must be valid.
pub fn parse_schedule(text: &str) -> Result<(Vec<usize>, Pairing)> {
    let fail = |reason: &str| Error::Notation {
        text: text.to_string(),
        reason: reason.into(),
    };
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut sequence = Vec::new();
    let mut starts = Vec::new();
    let mut rest = compact.as_str();
    loop {
        if let Some(inner) = rest.strip_prefix('(') {
            let close = inner
                .find(')')
                .ok_or_else(|| fail("unclosed parenthesis"))?;
            let (a, b) = inner[..close]
                .split_once('-')
                .ok_or_else(|| fail("pair needs two jobs"))?;
            starts.push(sequence.len());
            sequence.push(parse_job(a).ok_or_else(|| fail("bad job number"))?);
            sequence.push(parse_job(b).ok_or_else(|| fail("bad job number"))?);
            rest = &inner[close + 1..];
        } else {
            let end = rest.find('-').unwrap_or(rest.len());
            sequence.push(parse_job(&rest[..end]).ok_or_else(|| fail("bad job number"))?);
            rest = &rest[end..];
        }
        if rest.is_empty() {
            break;
        }
        rest = rest
            .strip_prefix('-')
            .ok_or_else(|| fail("expected `-` between groups"))?;
        if rest.is_empty() {
            return Err(fail("trailing `-`"));
        }
    }
    check_permutation(&sequence, sequence.len()).map_err(|e| Error::Notation {
        text: text.to_string(),
        reason: e.to_string(),
    })?;
    let pairing = Pairing::from_starts(starts, sequence.len()).map_err(|e| Error::Notation {
        text: text.to_string(),
        reason: e.to_string(),
    })?;
    Ok((sequence, pairing))
}

fn parse_job(token: &str) -> Option<usize> {
    if token.is_empty() || !token.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    token.parse().ok()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportRow {
    pub notation: String,
    pub sequence: Vec<usize>,
    pub pairing: Pairing,
    pub tardiness: u64,
    pub savings: u64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ReportMeta {
    pub method: String,
    pub seed: Option<u64>,
    pub iterations: Option<usize>,
    pub evaluations: Option<u64>,
    pub wall_time_ms: Option<u128>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrontReport {
    pub rows: Vec<ReportRow>,
    pub meta: ReportMeta,
}

/// One line of the comma-separated front export.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExportRecord {
    /// Job ids in order, space separated.
    pub sequence: String,
    /// 1-based paired positions, e.g. `1-2 3-4`.
    pub pairing: String,
    #[serde(rename = "T_days")]
    pub tardiness_days: u64,
    #[serde(rename = "C_hundredths")]
    pub savings_hundredths: u64,
}

impl FrontReport {
    /// Rows sorted by tardiness, savings, then sequence and pairing.
    pub fn new<'a>(solutions: impl IntoIterator<Item = &'a Solution>, meta: ReportMeta) -> Self {
        let mut sorted: Vec<&Solution> = solutions.into_iter().collect();
        sorted.sort_by(|a, b| {
            (a.objectives(), a.sequence(), a.pairing()).cmp(&(
                b.objectives(),
                b.sequence(),
                b.pairing(),
            ))
        });
        let rows = sorted
            .into_iter()
            .map(|s| ReportRow {
                notation: format_schedule(s.sequence(), s.pairing()),
                sequence: s.sequence().to_vec(),
                pairing: s.pairing().clone(),
                tardiness: s.objectives().tardiness,
                savings: s.objectives().savings,
            })
            .collect();
        Self { rows, meta }
    }

    /// Human-readable table: metadata as `#` lines, then `schedule, T, C`.
    pub fn render_table(&self) -> String {
        let mut out = String::new();
        let m = &self.meta;
        out.push_str(&format!("# method: {}\n", m.method));
        if let Some(seed) = m.seed {
            out.push_str(&format!("# seed: {seed}\n"));
        }
        if let Some(it) = m.iterations {
            out.push_str(&format!("# iterations: {it}\n"));
        }
        if let Some(ev) = m.evaluations {
            out.push_str(&format!("# evaluations: {ev}\n"));
        }
        if let Some(ms) = m.wall_time_ms {
            out.push_str(&format!("# wall time: {ms} ms\n"));
        }
        out.push_str(&format!("# {} solutions\n", self.rows.len()));
        out.push_str("schedule, T, C\n");
        for row in &self.rows {
            out.push_str(&format!(
                "{}, {}, {}\n",
                row.notation,
                row.tardiness,
                format_hundredths(row.savings)
            ));
        }
        out
    }

    pub fn records(&self) -> Vec<ExportRecord> {
        self.rows
            .iter()
            .map(|r| ExportRecord {
                sequence: r
                    .sequence
                    .iter()
                    .map(usize::to_string)
                    .collect::<Vec<_>>()
                    .join(" "),
                pairing: r
                    .pairing
                    .pairs()
                    .map(|(a, b)| format!("{}-{}", a + 1, b + 1))
                    .collect::<Vec<_>>()
                    .join(" "),
                tardiness_days: r.tardiness,
                savings_hundredths: r.savings,
            })
            .collect()
    }

    /// Writes `sequence,pairing,T_days,C_hundredths` with a header row.
    pub fn write_csv(&self, writer: impl Write) -> Result<()> {
        let mut w = csv::Writer::from_writer(writer);
        for record in self.records() {
            w.serialize(record)?;
        }
        w.flush()?;
        Ok(())
    }
}

/// One exported row: sequence, pairing, T in days, C in hundredths.
pub type ExportRow = (Vec<usize>, Pairing, u64, u64);

/// Reads an export written by [`FrontReport::write_csv`] back into rows.
pub fn read_front_csv(reader: impl Read) -> Result<Vec<ExportRow>> {
    let mut out = Vec::new();
    for (line, record) in csv::Reader::from_reader(reader)
        .deserialize::<ExportRecord>()
        .enumerate()
    {
        let record = record?;
        let bad = |what: &str| Error::ProblemFile(format!("export row {}: bad {what}", line + 1));
        let sequence = record
            .sequence
            .split_whitespace()
            .map(|t| parse_job(t).ok_or_else(|| bad("sequence")))
            .collect::<Result<Vec<_>>>()?;
        let starts = record
            .pairing
            .split_whitespace()
            .map(|t| {
                let (a, b) = t.split_once('-').ok_or_else(|| bad("pairing"))?;
                match (parse_job(a), parse_job(b)) {
                    (Some(a), Some(b)) if a >= 1 && b == a + 1 => Ok(a - 1),
                    _ => Err(bad("pairing")),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        let pairing = Pairing::from_starts(starts, sequence.len())?;
        out.push((
            sequence,
            pairing,
            record.tardiness_days,
            record.savings_hundredths,
        ));
    }
    Ok(out)
}
