//! Universal deciders: "does every assignment of a given shape admit a
//! proper coloring?"
//!
//! Assignments are enumerated by index in a fixed order, and each one is
//! checked with the list coloring solver. With more than one worker the
//! index range is split into contiguous chunks. The verdict, counterexample,
//! `assignments_checked` and `stats` are those of a serial run no matter
//! how the chunks are scheduled: chunks past the first failure are
//! discarded.

mod classical;
mod engine;
mod universe;

pub use classical::{
    coloring_from_selection, is_k1_choosable, is_k_choosable, is_valid_selection, k_subsets, selection_from_coloring,
};
pub use universe::{enumerate_assignments, interval_universe, AssignmentStream, IntervalUniverse, UniverseMode};

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::model::KIntervalAssignment;
use crate::solve::{search_lists, SolveStats, SolverMode};

pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChooseConfig {
    pub universe: UniverseMode,
    pub solver: SolverMode,
    /// Largest number of candidate assignments a run may enumerate.
    pub budget: BigUint,
    /// Ignore `budget`.
    pub force: bool,
    pub workers: usize,
}

impl Default for ChooseConfig {
    fn default() -> Self {
        ChooseConfig {
            universe: UniverseMode::PaperLiteral,
            solver: SolverMode::Pruned,
            budget: BigUint::from(DEFAULT_BUDGET),
            force: false,
            workers: 1,
        }
    }
}

impl ChooseConfig {
    fn admit(&self, count: &BigUint) -> Result<u64> {
        let index_limit = BigUint::from(u64::MAX);
        if !self.force && count > &self.budget {
            return Err(Error::BudgetExceeded {
                count: count.clone(),
                cap: self.budget.clone(),
            });
        }
        u64::try_from(count).map_err(|_| Error::BudgetExceeded {
            count: count.clone(),
            cap: index_limit,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChoosabilityVerdict<A> {
    pub choosable: bool,
    /// First failing assignment in enumeration order.
    pub counterexample: Option<A>,
    /// Position of the counterexample in the raw enumeration.
    pub counterexample_index: Option<u64>,
    /// Assignments tested, up to and including the counterexample.
    pub assignments_checked: u64,
    /// Solver effort summed over the tested assignments.
    pub stats: SolveStats,
}

/// Where the search for the smallest choosable `k` begins.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum StartPolicy {
    #[default]
    FromOne,
    /// Start at `k = 2`, as the original exhaustive procedure does.
    FromTwo,
}

impl StartPolicy {
    fn first(self) -> usize {
        match self {
            StartPolicy::FromOne => 1,
            StartPolicy::FromTwo => 2,
        }
    }
}

/// Does `g` admit a proper coloring from every assignment of length-`k`
/// integer intervals drawn from the configured universe?
pub fn is_k_gamma_mu_choosable(
    g: &Graph,
    k: usize,
    config: &ChooseConfig,
) -> Result<ChoosabilityVerdict<KIntervalAssignment>> {
    let n = g.vertex_count();
    let universe = match config.universe {
        UniverseMode::PaperLiteral => interval_universe(n, k)?,
        UniverseMode::Normalized => IntervalUniverse::normalized(n, k)?,
    };
    let stream = enumerate_assignments(&universe);
    let total = config.admit(&stream.raw_len())?;
    let k_color = k as u64;
    Ok(engine::search(
        total,
        config.workers,
        |i| stream.decode(i),
        |a: &KIntervalAssignment| {
            let lists: Vec<Vec<u64>> = a.starts().iter().map(|&s| (s..s + k_color).collect()).collect();
            search_lists(g, &lists, config.solver)
        },
    ))
}

/// Smallest `k` for which `g` is `k`-(γ,μ)-choosable.
pub fn gamma_mu_choosability_number(g: &Graph, config: &ChooseConfig, start: StartPolicy) -> Result<usize> {
    if g.vertex_count() == 0 {
        return Err(Error::InvalidParameter("graph has no vertices".into()));
    }
    let mut k = start.first();
    while !is_k_gamma_mu_choosable(g, k, config)?.choosable {
        k += 1;
    }
    Ok(k)
}
