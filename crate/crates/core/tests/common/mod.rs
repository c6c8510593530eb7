//! Shared fixtures and an exhaustive reference front that shares no code
//! with the library's evaluation or enumeration paths.

#![allow(dead_code)]

use std::path::PathBuf;

use dsta_core::problem::load_problem;
use dsta_core::JobInstance;

pub fn data_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
}

pub fn example1() -> JobInstance {
    load_problem(data_path("example1.toml")).unwrap()
}

pub fn example2() -> JobInstance {
    load_problem(data_path("example2.toml")).unwrap()
}

pub fn example2_due5() -> JobInstance {
    load_problem(data_path("example2-due5.toml")).unwrap()
}

/// Published STA rows for the five-job instance: schedule, T, C·100.
pub const FIVE_JOB_STA: [(&str, u64, u64); 5] = [
    ("(5-2)-(1-4)-3", 13, 831),
    ("(2-5)-(1-4)-3", 13, 831),
    ("(2-5)-(4-1)-3", 13, 831),
    ("(5-2)-(4-1)-3", 13, 831),
    ("(2-4)-(5-1)-3", 15, 862),
];

/// Published enumeration-with-greedy-pairing rows for the five-job instance.
pub const FIVE_JOB_GREEDY: [(&str, u64, u64); 4] = [
    ("(2-5)-(1-4)-3", 13, 831),
    ("(5-2)-(1-4)-3", 13, 831),
    ("(2-5)-(4-1)-3", 13, 831),
    ("(2-4)-(5-1)-3", 15, 862),
];

/// Published STA rows for the ten-job instance.
pub const TEN_JOB_STA: [(&str, u64, u64); 10] = [
    ("(5-7)-(2-6)-(1-3)-(4-10)-(8-9)", 39, 1645),
    ("(5-7)-(2-6)-(1-3)-(4-10)-(9-8)", 39, 1645),
    ("(5-7)-(2-6)-(1-3)-(4-8)-(10-9)", 40, 1664),
    ("(5-7)-(2-6)-(1-3)-(4-8)-(9-10)", 40, 1664),
    ("(5-7)-(2-6)-(1-4)-(3-8)-(10-9)", 41, 1734),
    ("(5-7)-(2-6)-(1-4)-(3-8)-(9-10)", 41, 1734),
    ("(5-2)-(7-4)-(6-1)-(3-8)-(10-9)", 43, 1806),
    ("(5-2)-(7-4)-(6-1)-(3-8)-(9-10)", 43, 1806),
    ("(2-5)-(7-4)-(6-1)-(3-8)-(10-9)", 43, 1806),
    ("(2-5)-(7-4)-(6-1)-(3-8)-(9-10)", 43, 1806),
];

/// Published enumeration-with-greedy-pairing rows for the ten-job instance.
pub const TEN_JOB_GREEDY: [(&str, u64, u64); 9] = [
    ("(5-7)-(2-6)-(1-3)-(4-10)-(8-9)", 39, 1645),
    ("(5-7)-(2-6)-(1-3)-(4-8)-(10-9)", 40, 1664),
    ("(5-7)-(2-6)-(1-3)-(4-8)-(9-10)", 40, 1664),
    ("(5-7)-(2-6)-(1-4)-(3-8)-(10-9)", 41, 1734),
    ("(5-7)-(2-6)-(1-4)-(3-8)-(9-10)", 41, 1734),
    ("(5-2)-(7-4)-(6-1)-(3-8)-(10-9)", 43, 1806),
    ("(5-2)-(7-4)-(6-1)-(3-8)-(9-10)", 43, 1806),
    ("(2-5)-(7-4)-(6-1)-(3-8)-(10-9)", 43, 1806),
    ("(2-5)-(7-4)-(6-1)-(3-8)-(9-10)", 43, 1806),
];

/// Published row from the cuckoo-search comparison that is not on any front.
pub const TEN_JOB_CS_EXTRA: (&str, u64, u64) = ("2-(7-5)-(6-1)-3-(4-10)-(8-9)", 39, 1426);

/// A schedule as plain data: sequence, 0-based pair starts, T, C.
pub type Row = (Vec<usize>, Vec<usize>, u64, u64);

/// Raw instance data copied out of the library types.
pub struct RawInstance {
    pub due: Vec<u64>,
    pub processing: Vec<u64>,
    pub savings: Vec<Vec<u64>>,
    pub workday: u64,
}

impl RawInstance {
    pub fn of(instance: &JobInstance) -> Self {
        let n = instance.len();
        Self {
            due: instance.jobs().iter().map(|j| j.due as u64).collect(),
            processing: instance
                .jobs()
                .iter()
                .map(|j| j.processing as u64)
                .collect(),
            savings: (1..=n)
                .map(|a| {
                    (1..=n)
                        .map(|b| instance.savings().get(a, b) as u64)
                        .collect()
                })
                .collect(),
            workday: instance.workday() as u64,
        }
    }

    pub fn tardiness(&self, seq: &[usize]) -> u64 {
        let mut clock = 0;
        let mut total = 0;
        for &job in seq {
            clock += self.processing[job - 1];
            let day = clock.div_ceil(self.workday);
            if day > self.due[job - 1] {
                total += day - self.due[job - 1];
            }
        }
        total
    }

    pub fn savings_of(&self, seq: &[usize], starts: &[usize]) -> u64 {
        starts
            .iter()
            .map(|&p| self.savings[seq[p] - 1][seq[p + 1] - 1])
            .sum()
    }
}

/// All subsets of adjacent-pair starts that are disjoint and leave no two
/// neighbouring positions uncovered, found by testing every bitmask.
pub fn brute_pairings(n: usize) -> Vec<Vec<usize>> {
    let slots = n.saturating_sub(1);
    let mut out = Vec::new();
    for mask in 0u32..(1 << slots) {
        let starts: Vec<usize> = (0..slots).filter(|&i| mask & (1 << i) != 0).collect();
        let mut covered = vec![false; n];
        let mut clash = false;
        for &s in &starts {
            clash |= covered[s] || covered[s + 1];
            covered[s] = true;
            covered[s + 1] = true;
        }
        let gap = (1..n).any(|i| !covered[i - 1] && !covered[i]);
        if !clash && !gap {
            out.push(starts);
        }
    }
    out
}

fn all_permutations(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == items.len() {
        out.push(items.clone());
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        all_permutations(items, k + 1, out);
        items.swap(k, i);
    }
}

/// Every non-dominated schedule by a full double loop over the whole
/// search space, sorted.
pub fn reference_front(instance: &JobInstance) -> Vec<Row> {
    let raw = RawInstance::of(instance);
    let n = instance.len();
    let mut perms = Vec::new();
    all_permutations(&mut (1..=n).collect(), 0, &mut perms);
    let pairings = brute_pairings(n);
    let mut all: Vec<Row> = Vec::new();
    for p in &perms {
        let t = raw.tardiness(p);
        for starts in &pairings {
            all.push((p.clone(), starts.clone(), t, raw.savings_of(p, starts)));
        }
    }
    let mut front: Vec<Row> = all
        .iter()
        .filter(|a| {
            !all.iter()
                .any(|b| b.2 <= a.2 && b.3 >= a.3 && (b.2 < a.2 || b.3 > a.3))
        })
        .cloned()
        .collect();
    front.sort();
    front
}
