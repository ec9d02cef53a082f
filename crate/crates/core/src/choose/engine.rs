use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;

use super::ChoosabilityVerdict;
use crate::solve::{SolveResult, SolveStats};

struct Chunk<A> {
    checked: u64,
    stats: SolveStats,
    failure: Option<(u64, A)>,
}

fn run_chunk<A, D, C>(range: std::ops::Range<u64>, best: &AtomicU64, decode: &D, check: &C) -> Chunk<A>
where
    D: Fn(u64) -> Option<A>,
    C: Fn(&A) -> SolveResult,
{
    let mut out = Chunk {
        checked: 0,
        stats: SolveStats::default(),
        failure: None,
    };
    for i in range {
        // A failure at a smaller index is already known; this chunk's
        // results will be discarded.
        if i > best.load(Ordering::Relaxed) {
            break;
        }
        let Some(a) = decode(i) else { continue };
        let r = check(&a);
        out.checked += 1;
        out.stats += r.stats;
        if !r.satisfiable {
            best.fetch_min(i, Ordering::Relaxed);
            out.failure = Some((i, a));
            break;
        }
    }
    out
}

/// Tests indices `0..total`; `decode` returns `None` for indices that are
/// not part of the enumeration.
pub(super) fn search<A, D, C>(total: u64, workers: usize, decode: D, check: C) -> ChoosabilityVerdict<A>
where
    A: Send,
    D: Fn(u64) -> Option<A> + Sync,
    C: Fn(&A) -> SolveResult + Sync,
{
    let best = AtomicU64::new(u64::MAX);
    let chunks: Vec<Chunk<A>> = if workers <= 1 {
        vec![run_chunk(0..total, &best, &decode, &check)]
    } else {
        let pieces = (workers as u64 * 16).min(total.max(1));
        let size = total.div_ceil(pieces).max(1);
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .expect("thread pool");
        pool.install(|| {
            (0..pieces)
                .into_par_iter()
                .map(|p| {
                    let start = (p * size).min(total);
                    let end = (start + size).min(total);
                    run_chunk(start..end, &best, &decode, &check)
                })
                .collect()
        })
    };

    // Chunks that lie entirely before the first failure ran to completion,
    // so folding in order up to it reproduces the serial totals.
    let mut verdict = ChoosabilityVerdict {
        choosable: true,
        counterexample: None,
        counterexample_index: None,
        assignments_checked: 0,
        stats: SolveStats::default(),
    };
    for chunk in chunks {
        verdict.assignments_checked += chunk.checked;
        verdict.stats += chunk.stats;
        if let Some((i, a)) = chunk.failure {
            verdict.choosable = false;
            verdict.counterexample = Some(a);
            verdict.counterexample_index = Some(i);
            break;
        }
    }
    verdict
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fake(sat: bool) -> SolveResult {
        SolveResult {
            satisfiable: sat,
            witness: None,
            stats: SolveStats { nodes: 1, leaves: 1 },
        }
    }

    #[test]
    fn minimal_failure_wins() {
        for workers in [1, 2, 4, 7] {
            let v = search(1000, workers, Some, |&i| fake(!(i == 613 || i == 977 || i == 700)));
            assert_eq!(v.counterexample, Some(613));
            assert_eq!(v.assignments_checked, 614);
            assert_eq!(v.stats.nodes, 614);
        }
    }

    #[test]
    fn filtered_indices_are_not_counted() {
        for workers in [1, 3] {
            let v = search(100, workers, |i| (i % 2 == 0).then_some(i), |_| fake(true));
            assert!(v.choosable);
            assert_eq!(v.assignments_checked, 50);
        }
    }

    #[test]
    fn empty_range() {
        let v = search(0, 4, Some, |_| fake(false));
        assert!(v.choosable);
        assert_eq!(v.assignments_checked, 0);
    }
}
