//! Problem data and objective evaluation.
//!
//! Jobs run back to back on a single machine in sequence order. Durations are
//! integer minutes, tardiness is measured in whole days, and savings are
//! integer hundredths of a cost unit, so every objective comparison is exact.

use std::fmt;

use crate::error::{Error, Result};
use crate::pairing::Pairing;

/// Minutes in a default eight-hour workday.
pub const DEFAULT_WORKDAY_MINUTES: u32 = 480;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Job {
    /// 1-based index, unique within an instance.
    pub id: usize,
    /// Due date in days.
    pub due: u32,
    /// Processing time in minutes.
    pub processing: u32,
}

/// Symmetric pairwise savings in hundredths of a cost unit, zero on the
/// diagonal. Indexed by 1-based job id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SavingsMatrix {
    n: usize,
    entries: Vec<u32>,
}

impl SavingsMatrix {
    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::SavingsShape {
                    expected: n,
                    row: i + 1,
                    found: row.len(),
                });
            }
            entries.extend_from_slice(row);
        }
        for i in 0..n {
            if entries[i * n + i] != 0 {
                return Err(Error::NonzeroDiagonal { index: i + 1 });
            }
            for j in (i + 1)..n {
                if entries[i * n + j] != entries[j * n + i] {
                    return Err(Error::AsymmetricSavings {
                        row: i + 1,
                        col: j + 1,
                    });
                }
            }
        }
        Ok(Self { n, entries })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Savings for pairing jobs `a` and `b` (1-based ids).
    #[inline]
    pub fn get(&self, a: usize, b: usize) -> u32 {
        self.entries[(a - 1) * self.n + (b - 1)]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u32]> {
        self.entries.chunks(self.n.max(1)).take(self.n)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JobInstance {
    jobs: Vec<Job>,
    savings: SavingsMatrix,
    workday: u32,
}

impl JobInstance {
    /// Validates that job ids run 1..=n in order, the matrix matches the job
    /// count, and the workday is positive.
    pub fn new(jobs: Vec<Job>, savings: SavingsMatrix, workday: u32) -> Result<Self> {
        if jobs.is_empty() {
            return Err(Error::Jobs("instance has no jobs".into()));
        }
        for (i, job) in jobs.iter().enumerate() {
            if job.id != i + 1 {
                return Err(Error::Jobs(format!(
                    "job at row {} has id {}, expected {}",
                    i + 1,
                    job.id,
                    i + 1
                )));
            }
        }
        if savings.len() != jobs.len() {
            return Err(Error::Jobs(format!(
                "savings matrix is {}x{} but there are {} jobs",
                savings.len(),
                savings.len(),
                jobs.len()
            )));
        }
        if workday == 0 {
            return Err(Error::Jobs("workday length must be positive".into()));
        }
        Ok(Self {
            jobs,
            savings,
            workday,
        })
    }

    pub fn len(&self) -> usize {
        self.jobs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.jobs.is_empty()
    }

    pub fn jobs(&self) -> &[Job] {
        &self.jobs
    }

    /// Job by 1-based id.
    #[inline]
    pub fn job(&self, id: usize) -> &Job {
        &self.jobs[id - 1]
    }

    pub fn savings(&self) -> &SavingsMatrix {
        &self.savings
    }

    /// Minutes per workday.
    pub fn workday(&self) -> u32 {
        self.workday
    }
}

/// `(T, C)`: total tardiness in days (minimized) and total savings in
/// hundredths (maximized).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ObjectiveVector {
    pub tardiness: u64,
    pub savings: u64,
}

impl ObjectiveVector {
    pub const fn new(tardiness: u64, savings: u64) -> Self {
        Self { tardiness, savings }
    }
}

impl fmt::Display for ObjectiveVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(T={}, C={})",
            self.tardiness,
            format_hundredths(self.savings)
        )
    }
}

/// Formats hundredths as a two-decimal string, e.g. `831` as `8.31`.
pub fn format_hundredths(value: u64) -> String {
    format!("{}.{:02}", value / 100, value % 100)
}

/// A job sequence with its pairing and evaluated objectives.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Solution {
    sequence: Vec<usize>,
    pairing: Pairing,
    objectives: ObjectiveVector,
}

impl Solution {
    /// Validates the sequence and pairing, then evaluates them.
    pub fn new(sequence: Vec<usize>, pairing: Pairing, instance: &JobInstance) -> Result<Self> {
        check_permutation(&sequence, instance.len())?;
        pairing.validate(sequence.len())?;
        let objectives = evaluate(&sequence, &pairing, instance);
        Ok(Self {
            sequence,
            pairing,
            objectives,
        })
    }

    /// Caller guarantees the objectives belong to `(sequence, pairing)`.
    pub(crate) fn from_parts(
        sequence: Vec<usize>,
        pairing: Pairing,
        objectives: ObjectiveVector,
    ) -> Self {
        Self {
            sequence,
            pairing,
            objectives,
        }
    }

    pub fn sequence(&self) -> &[usize] {
        &self.sequence
    }

    pub fn pairing(&self) -> &Pairing {
        &self.pairing
    }

    pub fn objectives(&self) -> ObjectiveVector {
        self.objectives
    }

    /// Same sequence and same pairing.
    pub fn same_schedule(&self, other: &Solution) -> bool {
        self.sequence == other.sequence && self.pairing == other.pairing
    }
}

/// Parses `H:MM` or `HH:MM` into minutes.
pub fn parse_duration(text: &str) -> Result<u32> {
    let bad = || Error::Duration {
        token: text.to_string(),
    };
    let (hours, minutes) = text.trim().split_once(':').ok_or_else(bad)?;
    if hours.is_empty()
        || minutes.len() != 2
        || !hours.bytes().all(|b| b.is_ascii_digit())
        || !minutes.bytes().all(|b| b.is_ascii_digit())
    {
        return Err(bad());
    }
    let hours: u32 = hours.parse().map_err(|_| bad())?;
    let minutes: u32 = minutes.parse().map_err(|_| bad())?;
    if minutes >= 60 {
        return Err(bad());
    }
    hours
        .checked_mul(60)
        .and_then(|h| h.checked_add(minutes))
        .ok_or_else(bad)
}

/// Formats minutes as `H:MM`.
pub fn format_duration(minutes: u32) -> String {
    format!("{}:{:02}", minutes / 60, minutes % 60)
}

/// Day on which a job finishes after `cumulative_minutes` of machine time:
/// the ceiling of the elapsed workdays.
#[inline]
pub fn completion_day(cumulative_minutes: u64, workday: u32) -> u64 {
    debug_assert!(workday > 0);
    cumulative_minutes.div_ceil(u64::from(workday))
}

/// `Σ max(0, c_j − d_j)` over the sequence. Pairing never affects timing.
pub fn total_tardiness(sequence: &[usize], instance: &JobInstance) -> u64 {
    let mut elapsed = 0u64;
    let mut total = 0u64;
    for &id in sequence {
        let job = instance.job(id);
        elapsed += u64::from(job.processing);
        let done = completion_day(elapsed, instance.workday);
        total += done.saturating_sub(u64::from(job.due));
    }
    total
}

/// Sum of the savings of every paired couple of jobs.
pub fn total_savings(sequence: &[usize], pairing: &Pairing, savings: &SavingsMatrix) -> u64 {
    pairing
        .starts()
        .iter()
        .map(|&p| u64::from(savings.get(sequence[p], sequence[p + 1])))
        .sum()
}

pub fn evaluate(sequence: &[usize], pairing: &Pairing, instance: &JobInstance) -> ObjectiveVector {
    ObjectiveVector {
        tardiness: total_tardiness(sequence, instance),
        savings: total_savings(sequence, pairing, &instance.savings),
    }
}

/// Checks that `sequence` holds each of `1..=n` exactly once.
pub fn check_permutation(sequence: &[usize], n: usize) -> Result<()> {
    if sequence.len() != n {
        return Err(Error::Permutation {
            n,
            detail: format!("length {} differs from {}", sequence.len(), n),
        });
    }
    let mut seen = vec![false; n + 1];
    for &id in sequence {
        if id == 0 || id > n {
            return Err(Error::Permutation {
                n,
                detail: format!("job {id} out of range"),
            });
        }
        if std::mem::replace(&mut seen[id], true) {
            return Err(Error::Permutation {
                n,
                detail: format!("job {id} repeated"),
            });
        }
    }
    Ok(())
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    fn build(due: &[u32], processing: &[&str], savings: &[&[f64]]) -> JobInstance {
        let jobs = due
            .iter()
            .zip(processing)
            .enumerate()
            .map(|(i, (&due, p))| Job {
                id: i + 1,
                due,
                processing: parse_duration(p).unwrap(),
            })
            .collect();
        let rows = savings
            .iter()
            .map(|r| r.iter().map(|v| (v * 100.0).round() as u32).collect())
            .collect();
        JobInstance::new(
            jobs,
            SavingsMatrix::from_rows(rows).unwrap(),
            DEFAULT_WORKDAY_MINUTES,
        )
        .unwrap()
    }

    /// The five-job benchmark.
    pub fn five_jobs() -> JobInstance {
        build(
            &[8, 2, 11, 3, 3],
            &["17:40", "24:00", "19:20", "25:00", "14:40"],
            &[
                &[0.0, 4.0, 2.64, 4.08, 3.9],
                &[4.0, 0.0, 3.64, 4.72, 4.23],
                &[2.64, 3.64, 0.0, 2.65, 2.87],
                &[4.08, 4.72, 2.65, 0.0, 3.84],
                &[3.9, 4.23, 2.87, 3.84, 0.0],
            ],
        )
    }
}
