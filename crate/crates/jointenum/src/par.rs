//! Deterministic work splitting for the outer tuple loops.  The thread count
//! comes from `JOINTENUM_THREADS` (default 1); per-chunk outputs are handed
//! back in ascending chunk order, so the outcome never depends on the split.

pub(crate) fn thread_count() -> usize {
    std::env::var("JOINTENUM_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&n| n >= 1)
        .unwrap_or(1)
        .min(64)
}

/// Map every index in 0..total through `work`, returning the results grouped
/// by chunk, chunks in ascending index order.
pub(crate) fn indexed_map<R, W>(total: u128, work: W) -> Vec<Vec<R>>
where
    R: Send,
    W: Fn(u128) -> R + Sync,
{
    let threads = thread_count();
    if threads <= 1 || total < 2 {
        return vec![(0..total).map(&work).collect()];
    }
    let chunk = total.div_ceil(threads as u128);
    let ranges: Vec<(u128, u128)> = (0..threads as u128)
        .map(|t| (t * chunk, ((t + 1) * chunk).min(total)))
        .filter(|(lo, hi)| lo < hi)
        .collect();
    std::thread::scope(|scope| {
        let work = &work;
        let handles: Vec<_> = ranges
            .iter()
            .map(|&(lo, hi)| scope.spawn(move || (lo..hi).map(work).collect::<Vec<R>>()))
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    })
}
