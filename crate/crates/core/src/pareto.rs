//! Dominance, domination counts, best-state selection and the archive.

use crate::domain::{ObjectiveVector, Solution};
use crate::error::{Error, Result};
use crate::pairing::Pairing;
use crate::rng::RandomSource;

/// `a` dominates `b` when it has no more tardiness, no less savings, and is
/// strictly better in at least one of the two.
#[inline]
pub fn dominates(a: ObjectiveVector, b: ObjectiveVector) -> bool {
    a.tardiness <= b.tardiness
        && a.savings >= b.savings
        && (a.tardiness < b.tardiness || a.savings > b.savings)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DominationRecord<'a> {
    pub solution: &'a Solution,
    /// Number of set members dominating `solution`.
    pub count: usize,
}

/// Number of members dominating each point (plain double loop).
pub fn domination_counts_of(points: &[ObjectiveVector]) -> Vec<usize> {
    points
        .iter()
        .map(|&s| points.iter().filter(|&&t| dominates(t, s)).count())
        .collect()
}

pub fn domination_counts(set: &[Solution]) -> Vec<DominationRecord<'_>> {
    let points: Vec<ObjectiveVector> = set.iter().map(Solution::objectives).collect();
    set.iter()
        .zip(domination_counts_of(&points))
        .map(|(solution, count)| DominationRecord { solution, count })
        .collect()
}

/// Index of a member with the least domination count; ties are broken
/// uniformly at random.
pub fn select_best_index(points: &[ObjectiveVector], rng: &mut RandomSource) -> Result<usize> {
    if points.is_empty() {
        return Err(Error::Argument(
            "cannot select from an empty candidate set".into(),
        ));
    }
    let counts = domination_counts_of(points);
    let least = *counts.iter().min().expect("non-empty");
    let tied: Vec<usize> = (0..counts.len()).filter(|&i| counts[i] == least).collect();
    Ok(tied[rng.below(tied.len())])
}

pub fn select_best<'a>(set: &'a [Solution], rng: &mut RandomSource) -> Result<&'a Solution> {
    let points: Vec<ObjectiveVector> = set.iter().map(Solution::objectives).collect();
    select_best_index(&points, rng).map(|i| &set[i])
}

/// Mutually non-dominated solutions, each schedule stored once. Distinct
/// schedules sharing an objective point are all kept.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ParetoArchive {
    members: Vec<Solution>,
}

impl ParetoArchive {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn members(&self) -> &[Solution] {
        &self.members
    }

    pub fn into_members(self) -> Vec<Solution> {
        self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Offers `best`: members it dominates are dropped, and it is inserted
    /// unless a member dominates it or already holds the same schedule.
    /// Returns whether it was inserted.
    pub fn update(&mut self, best: &Solution) -> bool {
        self.offer(best.sequence(), best.pairing(), best.objectives())
    }

    /// Same as [`update`](Self::update) but only allocates a `Solution` when
    /// the schedule is actually inserted. `objectives` must belong to the
    /// schedule.
    pub(crate) fn offer(
        &mut self,
        sequence: &[usize],
        pairing: &Pairing,
        objectives: ObjectiveVector,
    ) -> bool {
        if self.members.iter().any(|m| {
            dominates(m.objectives(), objectives)
                || (m.objectives() == objectives
                    && m.pairing() == pairing
                    && m.sequence() == sequence)
        }) {
            return false;
        }
        self.members
            .retain(|m| !dominates(objectives, m.objectives()));
        self.members.push(Solution::from_parts(
            sequence.to_vec(),
            pairing.clone(),
            objectives,
        ));
        true
    }

    /// Folds every member of `other` into this archive.
    pub fn merge(&mut self, other: &ParetoArchive) {
        for m in &other.members {
            self.update(m);
        }
    }

    /// Distinct objective points, sorted by tardiness then savings.
    pub fn objective_points(&self) -> Vec<ObjectiveVector> {
        let mut points: Vec<ObjectiveVector> =
            self.members.iter().map(Solution::objectives).collect();
        points.sort_unstable();
        points.dedup();
        points
    }

    /// Members sorted by objectives, then sequence and pairing.
    pub fn sorted(&self) -> Vec<Solution> {
        let mut out = self.members.clone();
        out.sort_by(|a, b| {
            (a.objectives(), a.sequence(), a.pairing()).cmp(&(
                b.objectives(),
                b.sequence(),
                b.pairing(),
            ))
        });
        out
    }

    /// Full pairwise check of the archive invariants.
    pub fn check_invariants(&self) -> Result<()> {
        for (i, a) in self.members.iter().enumerate() {
            for (j, b) in self.members.iter().enumerate() {
                if i == j {
                    continue;
                }
                if dominates(a.objectives(), b.objectives()) {
                    return Err(Error::Argument(format!(
                        "archive member {} dominates member {}",
                        a.objectives(),
                        b.objectives()
                    )));
                }
                if a.same_schedule(b) {
                    return Err(Error::Argument("archive holds a duplicate schedule".into()));
                }
            }
        }
        Ok(())
    }
}

/// By-value form of [`ParetoArchive::update`].
pub fn archive_update(mut archive: ParetoArchive, best: &Solution) -> ParetoArchive {
    archive.update(best);
    archive
}
