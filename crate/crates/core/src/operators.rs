//! Swap, shift and symmetry transformations of a job sequence.
//!
//! Each transformation is split into a random draw (a `*Move` value) and a
//! deterministic `apply`, so a specific move can be replayed or tested
//! without a generator.

use std::fmt;

use rand::seq::{index, SliceRandom};

use crate::error::{Error, Result};
use crate::rng::RandomSource;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OperatorParams {
    /// Maximum number of positions exchanged by a swap.
    pub ma: usize,
    /// Maximum block length moved by a shift.
    pub mb: usize,
    /// Maximum length of the fixed center of a symmetry window.
    pub mc: usize,
    /// Candidates drawn per transformation (search enforcement).
    pub se: usize,
}

impl Default for OperatorParams {
    fn default() -> Self {
        Self {
            ma: 2,
            mb: 1,
            mc: 0,
            se: 20,
        }
    }
}

impl OperatorParams {
    pub fn validate(&self) -> Result<()> {
        if self.ma < 2 {
            return Err(Error::Argument(format!(
                "swap factor must be >= 2, got {}",
                self.ma
            )));
        }
        if self.mb < 1 {
            return Err(Error::Argument(format!(
                "shift factor must be >= 1, got {}",
                self.mb
            )));
        }
        if self.se < 1 {
            return Err(Error::Argument(format!(
                "search enforcement must be >= 1, got {}",
                self.se
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Operator {
    Swap,
    Shift,
    Symmetry,
}

impl Operator {
    /// Application order within one iteration.
    pub const ALL: [Operator; 3] = [Operator::Swap, Operator::Shift, Operator::Symmetry];

    /// Draws and applies one move of this kind.
    pub fn transform(
        self,
        sequence: &[usize],
        params: &OperatorParams,
        rng: &mut RandomSource,
    ) -> Vec<usize> {
        match self {
            Operator::Swap => swap(sequence, params.ma, rng),
            Operator::Shift => shift(sequence, params.mb, rng),
            Operator::Symmetry => symmetry(sequence, params.mc, rng),
        }
    }
}

impl fmt::Display for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Operator::Swap => "swap",
            Operator::Shift => "shift",
            Operator::Symmetry => "symmetry",
        })
    }
}

/// Rearranges the values at `positions`: the value at `positions[i]` is
/// taken from `positions[source[i]]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SwapMove {
    pub positions: Vec<usize>,
    pub source: Vec<usize>,
}

impl SwapMove {
    /// Plain exchange of two positions.
    pub fn pair(a: usize, b: usize) -> Self {
        Self {
            positions: vec![a, b],
            source: vec![1, 0],
        }
    }

    pub fn draw(n: usize, ma: usize, rng: &mut RandomSource) -> Option<Self> {
        if n < 2 {
            return None;
        }
        let m = rng.between(2, ma.clamp(2, n));
        let mut positions = index::sample(rng, n, m).into_vec();
        positions.sort_unstable();
        let mut source: Vec<usize> = (0..m).collect();
        loop {
            source.shuffle(rng);
            if source.iter().enumerate().any(|(i, &s)| i != s) {
                break;
            }
        }
        Some(Self { positions, source })
    }

    pub fn apply(&self, sequence: &[usize]) -> Vec<usize> {
        let mut out = sequence.to_vec();
        for (&pos, &src) in self.positions.iter().zip(&self.source) {
            out[pos] = sequence[self.positions[src]];
        }
        out
    }
}

/// Removes the block `start..start + len` and reinserts it at index `gap`
/// of the remaining sequence (`0` is the front). `gap == start` is the
/// identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ShiftMove {
    pub start: usize,
    pub len: usize,
    pub gap: usize,
}

impl ShiftMove {
    pub fn draw(n: usize, mb: usize, rng: &mut RandomSource) -> Option<Self> {
        if n < 2 {
            return None;
        }
        let len = rng.between(1, mb.clamp(1, n - 1));
        let start = rng.between(0, n - len);
        let gap = rng.between(0, n - len);
        Some(Self { start, len, gap })
    }

    pub fn apply(&self, sequence: &[usize]) -> Vec<usize> {
        let block = &sequence[self.start..self.start + self.len];
        let mut rest: Vec<usize> = sequence[..self.start]
            .iter()
            .chain(&sequence[self.start + self.len..])
            .copied()
            .collect();
        rest.splice(self.gap..self.gap, block.iter().copied());
        rest
    }
}

/// Reverses the window `start..start + len`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SymmetryMove {
    pub start: usize,
    pub len: usize,
}

impl SymmetryMove {
    /// Window of `radius` elements on each side of a center block of
    /// `center_len` elements beginning at `center_start`.
    pub fn around(center_start: usize, center_len: usize, radius: usize) -> Self {
        Self {
            start: center_start - radius,
            len: 2 * radius + center_len,
        }
    }

    /// Center length is drawn from `0..=mc` (capped so at least one element
    /// fits on each side), then the center placement, then the radius.
    pub fn draw(n: usize, mc: usize, rng: &mut RandomSource) -> Option<Self> {
        if n < 2 {
            return None;
        }
        let center_len = rng.between(0, mc.min(n - 2));
        // one element on each side of the center
        let center_start = rng.between(1, n - 1 - center_len);
        let max_radius = center_start.min(n - center_start - center_len);
        let radius = rng.between(1, max_radius);
        Some(Self::around(center_start, center_len, radius))
    }

    pub fn apply(&self, sequence: &[usize]) -> Vec<usize> {
        let mut out = sequence.to_vec();
        out[self.start..self.start + self.len].reverse();
        out
    }
}

pub fn swap(sequence: &[usize], ma: usize, rng: &mut RandomSource) -> Vec<usize> {
    match SwapMove::draw(sequence.len(), ma, rng) {
        Some(mv) => mv.apply(sequence),
        None => sequence.to_vec(),
    }
}

pub fn shift(sequence: &[usize], mb: usize, rng: &mut RandomSource) -> Vec<usize> {
    match ShiftMove::draw(sequence.len(), mb, rng) {
        Some(mv) => mv.apply(sequence),
        None => sequence.to_vec(),
    }
}

pub fn symmetry(sequence: &[usize], mc: usize, rng: &mut RandomSource) -> Vec<usize> {
    match SymmetryMove::draw(sequence.len(), mc, rng) {
        Some(mv) => mv.apply(sequence),
        None => sequence.to_vec(),
    }
}

/// `params.se` independent transforms of `best`, followed by `best` itself.
pub fn candidates(
    best: &[usize],
    op: Operator,
    params: &OperatorParams,
    rng: &mut RandomSource,
) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(params.se + 1);
    for _ in 0..params.se {
        out.push(op.transform(best, params, rng));
    }
    out.push(best.to_vec());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const BASE: [usize; 5] = [1, 2, 3, 4, 5];

    #[test]
    fn two_swap() {
        assert_eq!(SwapMove::pair(1, 3).apply(&BASE), vec![1, 4, 3, 2, 5]);
    }

    #[test]
    fn three_cycle() {
        let mv = SwapMove {
            positions: vec![0, 2, 4],
            source: vec![1, 2, 0],
        };
        assert_eq!(mv.apply(&BASE), vec![3, 2, 5, 4, 1]);
    }

    #[test]
    fn single_element_shift() {
        // element 2 moved behind element 4
        let mv = ShiftMove {
            start: 1,
            len: 1,
            gap: 3,
        };
        assert_eq!(mv.apply(&BASE), vec![1, 3, 4, 2, 5]);
        assert_eq!(
            ShiftMove {
                start: 1,
                len: 1,
                gap: 1
            }
            .apply(&BASE),
            BASE.to_vec()
        );
        assert_eq!(
            ShiftMove {
                start: 3,
                len: 2,
                gap: 0
            }
            .apply(&BASE),
            vec![4, 5, 1, 2, 3]
        );
    }

    #[test]
    fn window_reversal() {
        // boundary after position 2, radius 2
        let mv = SymmetryMove::around(2, 0, 2);
        assert_eq!(mv, SymmetryMove { start: 0, len: 4 });
        let once = mv.apply(&BASE);
        assert_eq!(once, vec![4, 3, 2, 1, 5]);
        assert_eq!(mv.apply(&once), BASE.to_vec());
        // odd window keeps its middle element fixed
        assert_eq!(
            SymmetryMove::around(2, 1, 1).apply(&BASE),
            vec![1, 4, 3, 2, 5]
        );
    }

    #[test]
    fn degenerate_sequences_pass_through() {
        let mut rng = RandomSource::new(1);
        for op in Operator::ALL {
            assert_eq!(
                op.transform(&[7], &OperatorParams::default(), &mut rng),
                vec![7]
            );
            assert!(op
                .transform(&[], &OperatorParams::default(), &mut rng)
                .is_empty());
        }
    }

    #[test]
    fn draws_stay_in_bounds() {
        let mut rng = RandomSource::new(99);
        for n in 2..12 {
            for _ in 0..500 {
                let s = SwapMove::draw(n, 4, &mut rng).unwrap();
                assert!(s.positions.len() >= 2 && s.positions.len() <= 4.min(n));
                let sh = ShiftMove::draw(n, 3, &mut rng).unwrap();
                assert!(sh.len >= 1 && sh.len <= 3.min(n - 1));
                assert!(sh.start + sh.len <= n && sh.gap <= n - sh.len);
                let sy = SymmetryMove::draw(n, 2, &mut rng).unwrap();
                assert!(sy.len >= 2 && sy.start + sy.len <= n);
                let sy0 = SymmetryMove::draw(n, 0, &mut rng).unwrap();
                assert_eq!(sy0.len % 2, 0);
            }
        }
    }

    #[test]
    fn candidate_set_shape() {
        let params = OperatorParams::default();
        let seq: Vec<usize> = (1..=8).collect();
        for op in Operator::ALL {
            let a = candidates(&seq, op, &params, &mut RandomSource::new(5));
            let b = candidates(&seq, op, &params, &mut RandomSource::new(5));
            assert_eq!(a.len(), 21);
            assert_eq!(a, b);
            assert_eq!(a.last().unwrap(), &seq);
            for c in &a {
                let mut sorted = c.clone();
                sorted.sort_unstable();
                assert_eq!(sorted, seq);
            }
        }
    }

    #[test]
    fn param_validation() {
        assert!(OperatorParams::default().validate().is_ok());
        assert!(OperatorParams {
            ma: 1,
            ..Default::default()
        }
        .validate()
        .is_err());
        assert!(OperatorParams {
            mb: 0,
            ..Default::default()
        }
        .validate()
        .is_err());
        assert!(OperatorParams {
            se: 0,
            ..Default::default()
        }
        .validate()
        .is_err());
    }
}
