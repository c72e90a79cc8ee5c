//! Exhaustive-search ground truth for equitable colorings of complete
//! multipartite graphs.
//!
//! This crate answers one question — does `K_{n_1,...,n_l}` have an
//! equitable k-coloring? — by brute force, straight from the definition,
//! at two levels:
//!
//! * [`k_colorable`] enumerates, per part, every integer partition of the
//!   part size (arbitrary positive addends) and accepts iff some choice
//!   of one partition per part yields at most `k` classes whose sizes,
//!   padded with zeros up to `k`, differ by at most one. The only graph
//!   fact it uses is that a color class must stay inside one part.
//! * [`vertex_level_k_colorable`] does not even use that: it builds the
//!   explicit graph and tries every set partition of the vertex set into
//!   at most `k` blocks, checking block independence edge by edge.
//!
//! [`chi_star`] and [`chi_eq`] scan `k` to find the exact equitable
//! chromatic threshold and equitable chromatic number. Everything is
//! deliberately independent of the closed-form machinery it is used to
//! check, and budgets keep the search spaces at desk size.

use std::collections::HashMap;

use thiserror::Error;

mod partitions;
mod vertex;

use partitions::Stat;

/// Input size caps for the two search levels.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Largest vertex count accepted by the per-part partition search.
    pub max_total: u64,
    /// Largest vertex count accepted by the set-partition search.
    pub max_vertex_level: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Self {
            max_total: 60,
            max_vertex_level: 10,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum Error {
    #[error("instance has {total} vertices, over the oracle budget of {limit}")]
    BudgetExceeded { total: u64, limit: u64 },
}

fn checked_total(parts: &[u64], limit: u64) -> Result<u64, Error> {
    assert!(!parts.is_empty(), "parts must be nonempty");
    assert!(parts.iter().all(|&n| n >= 1), "part sizes must be positive");
    let total = parts
        .iter()
        .try_fold(0u64, |acc, &n| acc.checked_add(n))
        .unwrap_or(u64::MAX);
    if total > limit {
        return Err(Error::BudgetExceeded { total, limit });
    }
    Ok(total)
}

/// The `(class count, min size, max size)` statistics reachable by
/// choosing one integer partition per part. Statistics whose sizes
/// already spread by more than one are dropped along the way — no
/// completion of them can become equitable, since the spread of a
/// combination never shrinks.
fn reachable_combinations(parts: &[u64], stats_cache: &mut HashMap<u64, Vec<Stat>>) -> Vec<Stat> {
    let total: u64 = parts.iter().sum();
    let side = total as usize + 2;
    // Dense reachability table indexed by (count, min, max - min).
    let mut reachable = vec![false; side * side * 2];
    let index = |count: u64, min: u64, spread: u64| -> usize {
        (count as usize * side + min as usize) * 2 + spread as usize
    };

    let mut stats_of = |n: u64| -> Vec<Stat> {
        stats_cache
            .entry(n)
            .or_insert_with(|| partitions::partition_stats(n))
            .iter()
            .copied()
            .filter(|&(_, min, max)| max - min <= 1)
            .collect()
    };

    for &(count, min, max) in &stats_of(parts[0]) {
        reachable[index(count, min, max - min)] = true;
    }
    for &n in &parts[1..] {
        let mut next = vec![false; side * side * 2];
        let stats = stats_of(n);
        for count in 1..=total {
            for min in 1..=total {
                for spread in 0..2u64 {
                    if !reachable[index(count, min, spread)] {
                        continue;
                    }
                    let max = min + spread;
                    for &(c2, mn2, mx2) in &stats {
                        let new_min = min.min(mn2);
                        let new_max = max.max(mx2);
                        if new_max - new_min <= 1 {
                            next[index(count + c2, new_min, new_max - new_min)] = true;
                        }
                    }
                }
            }
        }
        reachable = next;
    }

    let mut out = Vec::new();
    for count in 1..=total {
        for min in 1..=total {
            for spread in 0..2u64 {
                if reachable[index(count, min, spread)] {
                    out.push((count, min, min + spread));
                }
            }
        }
    }
    out
}

// A combination of per-part partitions with statistics (m, min, max) is an
// equitable k-coloring iff m <= k and the m sizes plus (k - m) zeros stay
// within one of each other: for m = k that is max - min <= 1, for m < k
// the zeros force max <= 1.
fn accepts(stat: Stat, k: u64) -> bool {
    let (count, min, max) = stat;
    if count > k {
        return false;
    }
    if count == k {
        max - min <= 1
    } else {
        max <= 1
    }
}

impl Budget {
    /// Equitable k-colorability via per-part partition search.
    pub fn k_colorable(&self, parts: &[u64], k: u64) -> Result<bool, Error> {
        assert!(k >= 1, "k must be positive");
        checked_total(parts, self.max_total)?;
        let mut cache = HashMap::new();
        let states = reachable_combinations(parts, &mut cache);
        Ok(states.into_iter().any(|stat| accepts(stat, k)))
    }

    /// Equitable k-colorability via explicit set-partition search.
    pub fn vertex_level_k_colorable(&self, parts: &[u64], k: u64) -> Result<bool, Error> {
        assert!(k >= 1, "k must be positive");
        checked_total(parts, self.max_vertex_level)?;
        Ok(vertex::k_colorable(parts, k))
    }

    /// Exact equitable chromatic threshold: one past the largest
    /// infeasible `k`, or 1 if every `k` works.
    ///
    /// Only `k` in `[1, N]` need scanning: at `k = N` the all-singletons
    /// coloring always works (checked here), and larger `k` only add
    /// empty classes to it.
    pub fn chi_star(&self, parts: &[u64]) -> Result<u64, Error> {
        let total = checked_total(parts, self.max_total)?;
        let mut cache = HashMap::new();
        let states = reachable_combinations(parts, &mut cache);
        let feasible = |k: u64| states.iter().any(|&stat| accepts(stat, k));
        assert!(feasible(total), "k = N must always be colorable");
        let largest_infeasible = (1..=total).rev().find(|&k| !feasible(k));
        Ok(largest_infeasible.map_or(1, |k| k + 1))
    }

    /// Exact equitable chromatic number: the least colorable `k`.
    pub fn chi_eq(&self, parts: &[u64]) -> Result<u64, Error> {
        let total = checked_total(parts, self.max_total)?;
        let mut cache = HashMap::new();
        let states = reachable_combinations(parts, &mut cache);
        let first = (1..=total).find(|&k| states.iter().any(|&stat| accepts(stat, k)));
        Ok(first.expect("k = N is always colorable"))
    }
}

/// [`Budget::k_colorable`] with the default budget.
pub fn k_colorable(parts: &[u64], k: u64) -> Result<bool, Error> {
    Budget::default().k_colorable(parts, k)
}

/// [`Budget::vertex_level_k_colorable`] with the default budget.
pub fn vertex_level_k_colorable(parts: &[u64], k: u64) -> Result<bool, Error> {
    Budget::default().vertex_level_k_colorable(parts, k)
}

/// [`Budget::chi_star`] with the default budget.
pub fn chi_star(parts: &[u64]) -> Result<u64, Error> {
    Budget::default().chi_star(parts)
}

/// [`Budget::chi_eq`] with the default budget.
pub fn chi_eq(parts: &[u64]) -> Result<u64, Error> {
    Budget::default().chi_eq(parts)
}
