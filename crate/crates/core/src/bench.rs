//! Seeded multi-run experiments measuring how much of the exact front the
//! search recovers.

use std::collections::BTreeSet;
use std::io::Write;
use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::Serialize;

use crate::domain::{Job, JobInstance, ObjectiveVector, SavingsMatrix, DEFAULT_WORKDAY_MINUTES};
use crate::error::{Error, Result};
use crate::operators::OperatorParams;
use crate::pareto::dominates;
use crate::rng::RandomSource;
use crate::solver::{run, SolverConfig};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExperimentSpec {
    pub seeds: Vec<u64>,
    pub iterations: usize,
    pub params: OperatorParams,
}

impl ExperimentSpec {
    /// Seeds `first..first + runs`.
    pub fn consecutive(first: u64, runs: usize, iterations: usize) -> Self {
        Self {
            seeds: (first..first + runs as u64).collect(),
            iterations,
            params: OperatorParams::default(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.seeds.is_empty() {
            return Err(Error::Argument(
                "an experiment needs at least one run".into(),
            ));
        }
        let distinct: BTreeSet<u64> = self.seeds.iter().copied().collect();
        if distinct.len() != self.seeds.len() {
            return Err(Error::Argument("experiment seeds must be distinct".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunMetrics {
    pub seed: u64,
    /// Oracle points present in the archive.
    pub found: usize,
    pub front_size: usize,
    /// `found / front_size`.
    pub recovery: f64,
    pub complete: bool,
    /// Archive points strictly dominated by some oracle point.
    pub dominated: usize,
    pub evaluations: u64,
    pub wall_time_ms: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentSummary {
    pub runs: Vec<RunMetrics>,
    pub mean_recovery: f64,
    pub min_recovery: f64,
    pub complete_runs: usize,
}

impl ExperimentSummary {
    fn from_runs(runs: Vec<RunMetrics>) -> Self {
        let mean_recovery = runs.iter().map(|r| r.recovery).sum::<f64>() / runs.len() as f64;
        let min_recovery = runs
            .iter()
            .map(|r| r.recovery)
            .fold(f64::INFINITY, f64::min);
        let complete_runs = runs.iter().filter(|r| r.complete).count();
        Self {
            runs,
            mean_recovery,
            min_recovery,
            complete_runs,
        }
    }

    pub fn complete_rate(&self) -> f64 {
        self.complete_runs as f64 / self.runs.len() as f64
    }

    /// One row per run followed by nothing else; aggregate with
    /// [`summary_line`](Self::summary_line).
    pub fn write_runs_csv(&self, writer: impl Write) -> Result<()> {
        let mut w = csv::Writer::from_writer(writer);
        for r in &self.runs {
            w.serialize(r)?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn summary_line(&self) -> String {
        format!(
            "runs={} mean_recovery={:.4} min_recovery={:.4} complete={}/{}",
            self.runs.len(),
            self.mean_recovery,
            self.min_recovery,
            self.complete_runs,
            self.runs.len()
        )
    }
}

/// Recovery of one archive against the exact objective points.
pub fn recovery(archive_points: &[ObjectiveVector], front: &[ObjectiveVector]) -> (usize, f64) {
    let found = front.iter().filter(|p| archive_points.contains(p)).count();
    let rate = if front.is_empty() {
        1.0
    } else {
        found as f64 / front.len() as f64
    };
    (found, rate)
}

/// Runs every seed in parallel against a precomputed exact front.
pub fn run_experiment(
    instance: &JobInstance,
    front: &[ObjectiveVector],
    spec: &ExperimentSpec,
) -> Result<ExperimentSummary> {
    spec.validate()?;
    let runs = spec
        .seeds
        .par_iter()
        .map(|&seed| {
            let config = SolverConfig {
                params: spec.params,
                iterations: spec.iterations,
                seed,
            };
            let result = run(instance, &config)?;
            let points = result.archive.objective_points();
            let (found, rate) = recovery(&points, front);
            let dominated = points
                .iter()
                .filter(|p| front.iter().any(|f| dominates(*f, **p)))
                .count();
            Ok(RunMetrics {
                seed,
                found,
                front_size: front.len(),
                recovery: rate,
                complete: found == front.len(),
                dominated,
                evaluations: result.evaluations,
                wall_time_ms: result.wall_time.as_secs_f64() * 1e3,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ExperimentSummary::from_runs(runs))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstanceRanges {
    /// Due dates in days.
    pub due: RangeInclusive<u32>,
    /// Processing times in minutes.
    pub processing: RangeInclusive<u32>,
    /// Savings in hundredths.
    pub savings: RangeInclusive<u32>,
}

impl Default for InstanceRanges {
    /// Roughly the scale of the bundled instances.
    fn default() -> Self {
        Self {
            due: 1..=15,
            processing: 480..=1500,
            savings: 100..=500,
        }
    }
}

/// Seeded random instance with a symmetric, zero-diagonal savings matrix.
pub fn random_instance(n: usize, seed: u64, ranges: &InstanceRanges) -> Result<JobInstance> {
    if n < 2 {
        return Err(Error::Argument(format!(
            "random instances need n >= 2, got {n}"
        )));
    }
    if ranges.due.is_empty() || ranges.processing.is_empty() || ranges.savings.is_empty() {
        return Err(Error::Argument("instance ranges must be non-empty".into()));
    }
    let mut rng = RandomSource::new(seed);
    let mut draw = |r: &RangeInclusive<u32>| {
        *r.start() + rng.between(0, (*r.end() - *r.start()) as usize) as u32
    };
    let jobs = (1..=n)
        .map(|id| Job {
            id,
            due: draw(&ranges.due),
            processing: draw(&ranges.processing),
        })
        .collect();
    let mut rows = vec![vec![0u32; n]; n];
    #[allow(clippy::needless_range_loop)]
    for i in 0..n {
        for j in (i + 1)..n {
            let v = draw(&ranges.savings);
            rows[i][j] = v;
            rows[j][i] = v;
        }
    }
    JobInstance::new(
        jobs,
        SavingsMatrix::from_rows(rows)?,
        DEFAULT_WORKDAY_MINUTES,
    )
}
