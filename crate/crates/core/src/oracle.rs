//! Exact Pareto fronts by exhaustive enumeration of every sequence and
//! pairing.
//!
//! Tardiness does not depend on the pairing, so it is computed once per
//! sequence; only pairings reaching the sequence's best savings can be on
//! the front, and only those are offered to the archive.

use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;

use crate::domain::{total_savings, total_tardiness, JobInstance, ObjectiveVector, Solution};
use crate::error::{Error, Result};
use crate::pairing::{enumerate_pairings, greedy_pairing, Pairing};
use crate::pareto::ParetoArchive;

/// Largest instance enumerated unless the caller raises the bound.
pub const DEFAULT_ENUMERATION_LIMIT: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactFront {
    /// Non-dominated schedules, sorted by sequence then pairing.
    pub solutions: Vec<Solution>,
    /// Distinct objective points, sorted by tardiness.
    pub objective_points: Vec<ObjectiveVector>,
}

impl ExactFront {
    fn from_archive(archive: ParetoArchive) -> Self {
        let objective_points = archive.objective_points();
        let mut solutions = archive.into_members();
        solutions.sort_by(|a, b| (a.sequence(), a.pairing()).cmp(&(b.sequence(), b.pairing())));
        Self {
            solutions,
            objective_points,
        }
    }

    pub fn to_archive(&self) -> ParetoArchive {
        let mut archive = ParetoArchive::new();
        for s in &self.solutions {
            archive.update(s);
        }
        archive
    }
}

/// Called with `(done, total)` sequence counts roughly every 1% of the work.
pub type Progress<'a> = &'a (dyn Fn(u64, u64) + Sync);

#[derive(Clone, Copy)]
enum PairingRule {
    All,
    Greedy,
}

pub fn enumerate_front(instance: &JobInstance, limit_n: usize) -> Result<ExactFront> {
    enumerate_with(instance, limit_n, PairingRule::All, None)
}

pub fn enumerate_front_with_progress(
    instance: &JobInstance,
    limit_n: usize,
    progress: Progress<'_>,
) -> Result<ExactFront> {
    enumerate_with(instance, limit_n, PairingRule::All, Some(progress))
}

/// Front when every sequence is paired greedily instead of exhaustively.
pub fn greedy_front(instance: &JobInstance, limit_n: usize) -> Result<ExactFront> {
    enumerate_with(instance, limit_n, PairingRule::Greedy, None)
}

pub fn greedy_front_with_progress(
    instance: &JobInstance,
    limit_n: usize,
    progress: Progress<'_>,
) -> Result<ExactFront> {
    enumerate_with(instance, limit_n, PairingRule::Greedy, Some(progress))
}

fn enumerate_with(
    instance: &JobInstance,
    limit_n: usize,
    rule: PairingRule,
    progress: Option<Progress<'_>>,
) -> Result<ExactFront> {
    let n = instance.len();
    if n > limit_n {
        return Err(Error::EnumerationBound { n, limit: limit_n });
    }
    let pairings = enumerate_pairings(n)?;
    let total: u64 = (1..=n as u64).product();
    let tick = (total / 100).max(1);
    let done = AtomicU64::new(0);

    // one independent block per leading job, merged in order
    let blocks: Vec<ParetoArchive> = (1..=n)
        .into_par_iter()
        .map(|first| {
            let mut sequence: Vec<usize> = std::iter::once(first)
                .chain((1..=n).filter(|&j| j != first))
                .collect();
            let mut archive = ParetoArchive::new();
            let mut adjacent = vec![0u64; n.saturating_sub(1)];
            let mut since_report = 0u64;
            loop {
                let tardiness = total_tardiness(&sequence, instance);
                match rule {
                    PairingRule::All => {
                        for (slot, w) in adjacent.iter_mut().zip(sequence.windows(2)) {
                            *slot = u64::from(instance.savings().get(w[0], w[1]));
                        }
                        let sums: Vec<u64> = pairings
                            .iter()
                            .map(|p| p.starts().iter().map(|&s| adjacent[s]).sum())
                            .collect();
                        let top = sums.iter().copied().max().unwrap_or(0);
                        for (pairing, &savings) in pairings.iter().zip(&sums) {
                            if savings == top {
                                let point = ObjectiveVector { tardiness, savings };
                                archive.offer(&sequence, pairing, point);
                            }
                        }
                    }
                    PairingRule::Greedy => {
                        let pairing = greedy_pairing(&sequence, instance.savings());
                        let savings = total_savings(&sequence, &pairing, instance.savings());
                        archive.offer(&sequence, &pairing, ObjectiveVector { tardiness, savings });
                    }
                }
                since_report += 1;
                if since_report == tick {
                    let now = done.fetch_add(since_report, Ordering::Relaxed) + since_report;
                    since_report = 0;
                    if let Some(report) = progress {
                        report(now, total);
                    }
                }
                if !next_permutation(&mut sequence[1..]) {
                    break;
                }
            }
            done.fetch_add(since_report, Ordering::Relaxed);
            archive
        })
        .collect();

    let mut merged = ParetoArchive::new();
    for block in &blocks {
        merged.merge(block);
    }
    if let Some(report) = progress {
        report(total, total);
    }
    Ok(ExactFront::from_archive(merged))
}

/// Advances to the next lexicographic permutation; returns `false` (leaving
/// the slice sorted ascending) after the last one.
pub(crate) fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        v.reverse();
        return false;
    };
    let j = (i..v.len())
        .rev()
        .find(|&j| v[j] > v[i - 1])
        .expect("pivot has a successor");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Schedules on the front at `point`.
pub fn witnesses_at(front: &ExactFront, point: ObjectiveVector) -> Vec<(&[usize], &Pairing)> {
    front
        .solutions
        .iter()
        .filter(|s| s.objectives() == point)
        .map(|s| (s.sequence(), s.pairing()))
        .collect()
}
