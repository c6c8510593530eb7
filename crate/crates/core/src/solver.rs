//! The state transition search loop.
//!
//! The state is a job sequence. Each iteration applies swap, shift and
//! symmetry in turn; every operator step draws a candidate set around the
//! incumbent, expands each candidate over all valid pairings, picks the new
//! incumbent by least domination count, and offers every evaluated schedule
//! to the archive.

use std::time::{Duration, Instant};

use rand::seq::SliceRandom;

use crate::domain::{total_tardiness, JobInstance, ObjectiveVector, Solution};
use crate::error::{Error, Result};
use crate::operators::{candidates, Operator, OperatorParams};
use crate::pairing::enumerate_pairings;
use crate::pareto::{dominates, select_best_index, ParetoArchive};
use crate::rng::RandomSource;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverConfig {
    pub params: OperatorParams,
    pub iterations: usize,
    pub seed: u64,
}

impl SolverConfig {
    /// Default parameters with an iteration budget scaled to the instance:
    /// 100 up to five jobs, 1000 beyond.
    pub fn for_instance(instance: &JobInstance, seed: u64) -> Self {
        let iterations = if instance.len() <= 5 { 100 } else { 1000 };
        Self {
            params: OperatorParams::default(),
            iterations,
            seed,
        }
    }
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            params: OperatorParams::default(),
            iterations: 100,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone)]
pub struct RunResult {
    pub archive: ParetoArchive,
    /// Schedules evaluated inside the loop.
    pub evaluations: u64,
    pub wall_time: Duration,
}

/// Progress of a run, reported after every operator step.
#[derive(Debug, Clone, Copy)]
pub struct StepInfo<'a> {
    pub iteration: usize,
    pub operator: Operator,
    pub best: &'a Solution,
    /// Domination count of `best` within the expanded candidate pool.
    pub best_count: usize,
    pub archive: &'a ParetoArchive,
}

pub fn run(instance: &JobInstance, config: &SolverConfig) -> Result<RunResult> {
    run_observed(instance, config, |_| {})
}

/// [`run`] with a callback invoked after every operator step.
pub fn run_observed(
    instance: &JobInstance,
    config: &SolverConfig,
    mut observe: impl FnMut(&StepInfo<'_>),
) -> Result<RunResult> {
    let n = instance.len();
    if n < 2 {
        return Err(Error::Argument(format!(
            "the search needs at least two jobs, got {n}; use exhaustive enumeration instead"
        )));
    }
    if config.iterations < 1 {
        return Err(Error::Argument(
            "iteration budget must be at least 1".into(),
        ));
    }
    config.params.validate()?;

    let started = Instant::now();
    let mut rng = RandomSource::new(config.seed);
    let pairings = enumerate_pairings(n)?;

    let mut sequence: Vec<usize> = (1..=n).collect();
    sequence.shuffle(&mut rng);
    let pairing = pairings[rng.below(pairings.len())].clone();
    let mut best = Solution::new(sequence, pairing, instance)?;

    let mut archive = ParetoArchive::new();
    let mut evaluations = 0u64;
    let mut pool: Vec<ObjectiveVector> = Vec::new();
    let mut adjacent: Vec<u64> = vec![0; n - 1];

    for iteration in 0..config.iterations {
        for op in Operator::ALL {
            let states = candidates(best.sequence(), op, &config.params, &mut rng);
            pool.clear();
            for state in &states {
                let tardiness = total_tardiness(state, instance);
                for (slot, w) in adjacent.iter_mut().zip(state.windows(2)) {
                    *slot = u64::from(instance.savings().get(w[0], w[1]));
                }
                for pairing in &pairings {
                    let savings = pairing.starts().iter().map(|&p| adjacent[p]).sum();
                    let objectives = ObjectiveVector { tardiness, savings };
                    archive.offer(state, pairing, objectives);
                    pool.push(objectives);
                }
            }
            evaluations += pool.len() as u64;

            let chosen = select_best_index(&pool, &mut rng)?;
            let best_count = pool.iter().filter(|&&p| dominates(p, pool[chosen])).count();
            let state = &states[chosen / pairings.len()];
            let pairing = &pairings[chosen % pairings.len()];
            best = Solution::from_parts(state.clone(), pairing.clone(), pool[chosen]);

            observe(&StepInfo {
                iteration,
                operator: op,
                best: &best,
                best_count,
                archive: &archive,
            });
        }
    }

    Ok(RunResult {
        archive,
        evaluations,
        wall_time: started.elapsed(),
    })
}
