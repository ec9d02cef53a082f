use num_bigint::BigUint;
use num_traits::Pow;

use crate::error::{Error, Result};
use crate::model::{Color, KIntervalAssignment};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Hash)]
pub enum UniverseMode {
    /// Intervals contained in `{1, …, n}`.
    #[default]
    PaperLiteral,
    /// Every assignment of length-`k` intervals up to translation, with
    /// gaps between consecutive distinct starts clipped to `k`.
    Normalized,
}

/// Candidate interval start positions for an `n`-vertex graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalUniverse {
    pub mode: UniverseMode,
    pub n: usize,
    pub k: usize,
    pub starts: Vec<Color>,
}

/// The `n - k + 1` windows `{i, …, i + k - 1}` inside `{1, …, n}`.
pub fn interval_universe(n: usize, k: usize) -> Result<IntervalUniverse> {
    if k < 1 || k > n {
        return Err(Error::InvalidIntervalLength { k, n });
    }
    Ok(IntervalUniverse {
        mode: UniverseMode::PaperLiteral,
        n,
        k,
        starts: (1..=(n - k + 1) as Color).collect(),
    })
}

impl IntervalUniverse {
    /// Any assignment of length-`k` intervals can be translated so the
    /// smallest start is 1, and a gap of `k` or more between consecutive
    /// sorted starts can be shrunk to exactly `k` without changing which
    /// intervals overlap or how. Such normalized starts lie in
    /// `1..=1 + (n - 1)k`.
    pub fn normalized(n: usize, k: usize) -> Result<IntervalUniverse> {
        if k < 1 {
            return Err(Error::InvalidIntervalLength { k, n });
        }
        Ok(IntervalUniverse {
            mode: UniverseMode::Normalized,
            n,
            k,
            starts: (1..=(1 + n.saturating_sub(1) * k) as Color).collect(),
        })
    }

    pub fn windows(&self) -> impl Iterator<Item = (Color, Color)> + '_ {
        self.starts.iter().map(|&s| (s, s + self.k as Color - 1))
    }

    fn admits(&self, starts: &[Color]) -> bool {
        match self.mode {
            UniverseMode::PaperLiteral => true,
            UniverseMode::Normalized => {
                let mut sorted = starts.to_vec();
                sorted.sort_unstable();
                sorted.first().is_none_or(|&s| s == 1) && sorted.windows(2).all(|w| w[1] - w[0] <= self.k as Color)
            }
        }
    }
}

/// Assignments of universe windows to vertices `1..=n`, in lexicographic order
/// of the start tuple with vertex 1 most significant.
#[derive(Debug, Clone)]
pub struct AssignmentStream<'a> {
    universe: &'a IntervalUniverse,
}

pub fn enumerate_assignments(universe: &IntervalUniverse) -> AssignmentStream<'_> {
    AssignmentStream { universe }
}

impl<'a> AssignmentStream<'a> {
    /// Size of the raw index space, `|starts|^n`. For the paper-literal
    /// universe this is exactly the number of assignments, `(n - k + 1)^n`.
    pub fn raw_len(&self) -> BigUint {
        BigUint::from(self.universe.starts.len()).pow(self.universe.n)
    }

    /// Assignment at raw `index`, or `None` if the universe filters it out.
    pub fn decode(&self, mut index: u64) -> Option<KIntervalAssignment> {
        let base = self.universe.starts.len() as u64;
        let n = self.universe.n;
        let mut starts = vec![0; n];
        for slot in starts.iter_mut().rev() {
            *slot = self.universe.starts[(index % base) as usize];
            index /= base;
        }
        self.universe
            .admits(&starts)
            .then(|| KIntervalAssignment::from_starts(&starts, self.universe.k).expect("k >= 1"))
    }

    /// Admitted assignments with raw index in `range`.
    pub fn range(&self, range: std::ops::Range<u64>) -> impl Iterator<Item = KIntervalAssignment> + 'a {
        let this = self.clone();
        range.filter_map(move |i| this.decode(i))
    }

    pub fn iter(&self) -> impl Iterator<Item = KIntervalAssignment> + 'a {
        let total = u64::try_from(self.raw_len()).expect("enumeration too large to index");
        self.range(0..total)
    }
}
