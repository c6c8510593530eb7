//! Pairings of adjacent positions in a fixed job sequence.
//!
//! A pairing couples disjoint adjacent positions `(p, p + 1)` and must leave
//! no two adjacent positions unpaired, i.e. it is a maximal matching on the
//! path `0 - 1 - ... - n-1`. Positions here are 0-based.

use std::fmt;

use crate::domain::SavingsMatrix;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pairing {
    /// First position of every pair, strictly increasing.
    starts: Vec<usize>,
}

impl Pairing {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a pairing from pair start positions and checks it against a
    /// sequence of `n` positions.
    pub fn from_starts(starts: Vec<usize>, n: usize) -> Result<Self> {
        let pairing = Self { starts };
        pairing.validate(n)?;
        Ok(pairing)
    }

    #[cfg(test)]
    pub(crate) fn from_starts_unchecked(starts: Vec<usize>) -> Self {
        Self { starts }
    }

    pub fn starts(&self) -> &[usize] {
        &self.starts
    }

    /// Number of pairs.
    pub fn len(&self) -> usize {
        self.starts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.starts.is_empty()
    }

    /// 0-based position pairs.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.starts.iter().map(|&p| (p, p + 1))
    }

    /// Whether position `pos` is the first member of a pair.
    pub fn starts_pair_at(&self, pos: usize) -> bool {
        self.starts.binary_search(&pos).is_ok()
    }

    pub fn validate(&self, n: usize) -> Result<()> {
        let err = |detail: String| Err(Error::Pairing { n, detail });
        let mut next_free = 0usize;
        for &p in &self.starts {
            if p + 1 >= n {
                return err(format!("pair ({}, {}) exceeds the sequence", p + 1, p + 2));
            }
            if p < next_free {
                return err(format!(
                    "pair starting at {} overlaps or is out of order",
                    p + 1
                ));
            }
            if p >= next_free + 2 {
                return err(format!("positions {} and {} are both unpaired", p - 1, p));
            }
            next_free = p + 2;
        }
        if n >= next_free + 2 {
            return err(format!("positions {} and {} are both unpaired", n - 1, n));
        }
        Ok(())
    }

    pub fn is_valid_for(&self, n: usize) -> bool {
        self.validate(n).is_ok()
    }
}

impl fmt::Display for Pairing {
    /// 1-based, e.g. `{(1,2),(3,4)}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (a, b)) in self.pairs().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "({},{})", a + 1, b + 1)?;
        }
        f.write_str("}")
    }
}

/// Every valid pairing of `n` positions, lexicographic by start positions.
pub fn enumerate_pairings(n: usize) -> Result<Vec<Pairing>> {
    if n == 0 {
        return Err(Error::Argument("cannot pair an empty sequence".into()));
    }
    let mut out = Vec::new();
    let mut starts = Vec::new();
    extend_pairings(n, 0, &mut starts, &mut out);
    Ok(out)
}

// Position `pos` is the first one not yet covered and its left neighbour
// (if any) is paired.
fn extend_pairings(n: usize, pos: usize, starts: &mut Vec<usize>, out: &mut Vec<Pairing>) {
    if pos + 1 >= n {
        out.push(Pairing {
            starts: starts.clone(),
        });
        return;
    }
    starts.push(pos);
    extend_pairings(n, pos + 2, starts, out);
    starts.pop();
    // leave `pos` alone, so `pos + 1` must pair forward
    if pos + 2 < n {
        starts.push(pos + 1);
        extend_pairings(n, pos + 3, starts, out);
        starts.pop();
    }
}

/// Pairing counts for a sequence of a given length.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairCounts {
    /// Pairings in which the first two positions are paired.
    pub p1: u64,
    /// Pairings in which the first position is unpaired.
    pub p2: u64,
    pub p: u64,
}

/// Counts valid pairings via `P1(n+1) = P(n-1)`, `P2(n+1) = P1(n)`, seeded
/// with `P1(2) = 1, P2(2) = 0, P1(3) = 1, P2(3) = 1`.
pub fn count_pairings(n: usize) -> Result<PairCounts> {
    Ok(*count_table(n)?.last().expect("table is never empty"))
}

/// Counts for every length `2..=n`.
pub fn count_table(n: usize) -> Result<Vec<PairCounts>> {
    if n < 2 {
        return Err(Error::Argument(format!("pair counts need n >= 2, got {n}")));
    }
    let mut table = vec![
        PairCounts { p1: 1, p2: 0, p: 1 },
        PairCounts { p1: 1, p2: 1, p: 2 },
    ];
    while table.len() < n - 1 {
        let k = table.len();
        let p1 = table[k - 2].p;
        let p2 = table[k - 1].p1;
        let p = p1
            .checked_add(p2)
            .ok_or_else(|| Error::Argument(format!("pair count overflows at n = {}", k + 2)))?;
        table.push(PairCounts { p1, p2, p });
    }
    table.truncate(n - 1);
    Ok(table)
}

/// Repeatedly fixes the free adjacent pair with the highest savings (ties to
/// the smaller position) until no two adjacent positions are unpaired.
pub fn greedy_pairing(sequence: &[usize], savings: &SavingsMatrix) -> Pairing {
    let n = sequence.len();
    let mut taken = vec![false; n];
    let mut starts = Vec::new();
    loop {
        let mut pick: Option<(usize, u32)> = None;
        for p in 0..n.saturating_sub(1) {
            if taken[p] || taken[p + 1] {
                continue;
            }
            let value = savings.get(sequence[p], sequence[p + 1]);
            if pick.is_none_or(|(_, best)| value > best) {
                pick = Some((p, value));
            }
        }
        match pick {
            Some((p, _)) => {
                taken[p] = true;
                taken[p + 1] = true;
                starts.push(p);
            }
            None => break,
        }
    }
    starts.sort_unstable();
    Pairing { starts }
}
