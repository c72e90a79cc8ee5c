//! Unrestricted integer partition enumeration.

/// Calls `f` with every partition of `n` into positive addends, in
/// descending-addend order (so `parts[0]` is the largest addend and
/// `parts[len-1]` the smallest).
pub(crate) fn for_each_partition<F: FnMut(&[u64])>(n: u64, f: &mut F) {
    let mut addends = Vec::new();
    descend(n, n, &mut addends, f);
}

fn descend<F: FnMut(&[u64])>(remaining: u64, cap: u64, addends: &mut Vec<u64>, f: &mut F) {
    if remaining == 0 {
        f(addends);
        return;
    }
    let first = cap.min(remaining);
    for addend in (1..=first).rev() {
        addends.push(addend);
        descend(remaining - addend, addend, addends, f);
        addends.pop();
    }
}

/// `(addend count, smallest addend, largest addend)` of a partition.
pub(crate) type Stat = (u64, u64, u64);

/// The distinct `(count, min, max)` statistics over all partitions of
/// `n`, sorted. The acceptance predicate for equitable colorings only
/// depends on these statistics, so partitions sharing them are
/// interchangeable.
pub(crate) fn partition_stats(n: u64) -> Vec<Stat> {
    let mut stats = Vec::new();
    for_each_partition(n, &mut |addends| {
        let count = addends.len() as u64;
        let max = addends[0];
        let min = addends[addends.len() - 1];
        stats.push((count, min, max));
    });
    stats.sort_unstable();
    stats.dedup();
    stats
}
