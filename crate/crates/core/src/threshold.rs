//! The equitable chromatic threshold of a complete multipartite graph.
//!
//! For `K_{n_1,...,n_l}` the threshold equals `sum_i ceil(n_i / h)` where
//! `h` is the least level `q` at which either some part admits no
//! q-partition, or two distinct parts are both nondivisible by `q`. This
//! module computes `h` twice — by a definitional scan from `q = 1` and by
//! the fast walk that starts at the least non-divisor `s*` — and exposes
//! the threshold itself through [`chi_star`].

use std::fmt;

use crate::error::Error;
use crate::parts::PartSizes;
use crate::qpartition::{self, QPartition};

/// Why the level scan stopped at `h`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StopReason {
    /// Part `witness` has no h-partition: `n > (h+1) * floor(n/h)`.
    NoQPartition { witness: usize },
    /// Parts `first` and `second` are both nondivisible by `h`.
    TwoNondivisible { first: usize, second: usize },
}

impl StopReason {
    pub fn kind(&self) -> &'static str {
        match self {
            StopReason::NoQPartition { .. } => "NO_Q_PARTITION",
            StopReason::TwoNondivisible { .. } => "TWO_NONDIVISIBLE",
        }
    }

    pub fn witnesses(&self) -> Vec<usize> {
        match *self {
            StopReason::NoQPartition { witness } => vec![witness],
            StopReason::TwoNondivisible { first, second } => vec![first, second],
        }
    }
}

impl fmt::Display for StopReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StopReason::NoQPartition { witness } => {
                write!(f, "NO_Q_PARTITION (part {witness})")
            }
            StopReason::TwoNondivisible { first, second } => {
                write!(f, "TWO_NONDIVISIBLE (parts {first}, {second})")
            }
        }
    }
}

/// Everything [`chi_star`] derives for an instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThresholdReport {
    parts: PartSizes,
    s_star: u64,
    h: u64,
    reason: StopReason,
    chi_star: u64,
    initial: Vec<QPartition>,
}

impl ThresholdReport {
    pub fn parts(&self) -> &PartSizes {
        &self.parts
    }

    /// The least integer >= 2 dividing none of... see [`s_star_all`].
    pub fn s_star(&self) -> u64 {
        self.s_star
    }

    /// The critical level at which the scan stopped.
    pub fn h(&self) -> u64 {
        self.h
    }

    pub fn reason(&self) -> StopReason {
        self.reason
    }

    /// The equitable chromatic threshold `sum_i ceil(n_i / h)`.
    pub fn chi_star(&self) -> u64 {
        self.chi_star
    }

    /// Per part, the minimal (h-1)-partition that seeds the threshold
    /// coloring; its addend counts sum to `chi_star`.
    pub fn initial_partitions(&self) -> &[QPartition] {
        &self.initial
    }
}

/// Least `s >= 2` that does not divide `n`.
///
/// Panics if `n` is zero.
pub fn s_star(n: u64) -> u64 {
    assert!(n >= 1, "n must be positive");
    let mut s = 2;
    while n.is_multiple_of(s) {
        s += 1;
    }
    s
}

/// Minimum of [`s_star`] over all parts.
pub fn s_star_all(parts: &PartSizes) -> u64 {
    parts
        .iter()
        .map(|&n| s_star(n))
        .min()
        .expect("nonempty by construction")
}

// Condition A: no q-partition of n, i.e. n > (q+1) * floor(n/q). The
// product is taken in u128 so the comparison stays exact for any u64.
fn has_no_qpartition(n: u64, q: u64) -> bool {
    (n as u128) > (q as u128 + 1) * ((n / q) as u128)
}

/// Definitional scan for the critical level: walks `q = 1, 2, 3, ...` and
/// stops at the first `q` where some part has no q-partition (condition A)
/// or two distinct parts are both nondivisible by `q` (condition B).
///
/// When both conditions hold at the stopping level the reason reports
/// condition B, with the two smallest witness indices; condition A reports
/// the smallest witness index. The scan always terminates by
/// `q = min_i(n_i) + 1`, where the smallest part fails condition A.
pub fn compute_h_scan(parts: &PartSizes) -> (u64, StopReason) {
    for q in 1.. {
        let mut nondivisible = parts
            .iter()
            .enumerate()
            .filter(|&(_, n)| n % q != 0)
            .map(|(i, _)| i);
        let first = nondivisible.next();
        let second = nondivisible.next();
        if let (Some(first), Some(second)) = (first, second) {
            return (q, StopReason::TwoNondivisible { first, second });
        }
        for (i, &n) in parts.iter().enumerate() {
            if has_no_qpartition(n, q) {
                return (q, StopReason::NoQPartition { witness: i });
            }
        }
    }
    unreachable!("the scan stops at min(n_i) + 1 at the latest")
}

/// Fast computation of the critical level.
///
/// Starts at `h = s_star_all(parts)` — no level below it can stop the
/// scan, since every smaller `q >= 2` divides every part — and then
/// repeats: stop if two parts are nondivisible by `h`; stop if the single
/// nondivisible part has no h-partition; otherwise increment `h`. The
/// increment also covers levels dividing every part, where neither
/// condition can hold. Agrees exactly with [`compute_h_scan`].
pub fn compute_h_fast(parts: &PartSizes) -> (u64, StopReason) {
    let mut h = s_star_all(parts);
    loop {
        let mut nondivisible = parts
            .iter()
            .enumerate()
            .filter(|&(_, n)| n % h != 0)
            .map(|(i, _)| i);
        match (nondivisible.next(), nondivisible.next()) {
            (Some(first), Some(second)) => {
                return (h, StopReason::TwoNondivisible { first, second });
            }
            (Some(i), None) => {
                if has_no_qpartition(parts.sizes()[i], h) {
                    return (h, StopReason::NoQPartition { witness: i });
                }
            }
            // Every part divisible by h: neither condition can hold.
            (None, _) => {}
        }
        h += 1;
    }
}

/// Computes the equitable chromatic threshold of `K_{n_1,...,n_l}`.
///
/// Returns [`Error::SinglePart`] for `l = 1`: an edgeless graph has
/// threshold 1, which the formula does not produce, so rather than emit a
/// wrong answer the case is rejected.
pub fn chi_star(parts: &PartSizes) -> Result<ThresholdReport, Error> {
    if parts.len() < 2 {
        return Err(Error::SinglePart);
    }
    let s_star = s_star_all(parts);
    let (h, reason) = compute_h_fast(parts);
    debug_assert!(s_star <= h && h <= parts.min_size() + 1);

    let chi_star: u64 = parts.iter().map(|&n| n.div_ceil(h)).sum();

    // h >= 2 always (q = 1 divides everything), so h - 1 is a valid level,
    // and every part has an (h-1)-partition by minimality of h.
    let initial: Vec<QPartition> = parts
        .iter()
        .map(|&n| {
            qpartition::minimal(n, h - 1)
                .expect("every part has an (h-1)-partition by minimality of h")
        })
        .collect();
    let seeded: u64 = initial.iter().map(|p| p.addend_count()).sum();
    assert_eq!(
        seeded, chi_star,
        "initial partitions must seed chi_star classes"
    );

    Ok(ThresholdReport {
        parts: parts.clone(),
        s_star,
        h,
        reason,
        chi_star,
        initial,
    })
}

/// Threshold of the balanced graph `K_{n,...,n}` with `r` equal parts:
/// `r * ceil(n / s_star(n))`.
///
/// Panics if `n` is zero or `r < 2`.
pub fn chi_star_equal_parts(n: u64, r: u64) -> u64 {
    assert!(n >= 1, "n must be positive");
    assert!(r >= 2, "the equal-parts formula requires r >= 2");
    r * n.div_ceil(s_star(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parts(sizes: &[u64]) -> PartSizes {
        PartSizes::new(sizes.to_vec()).unwrap()
    }

    #[test]
    fn s_star_values() {
        assert_eq!(s_star(1), 2);
        assert_eq!(s_star(6), 4);
        assert_eq!(s_star(12), 5);
        assert_eq!(s_star(2), 3);
        assert_eq!(s_star(720720), 17); // divisible by everything up to 16
    }

    #[test]
    #[should_panic(expected = "positive")]
    fn s_star_rejects_zero() {
        s_star(0);
    }

    #[test]
    fn s_star_all_takes_minimum() {
        assert_eq!(s_star_all(&parts(&[3, 6])), 2);
        assert_eq!(s_star_all(&parts(&[6, 12])), 4);
        assert_eq!(s_star_all(&parts(&[1])), 2);
    }

    #[test]
    fn scan_examples() {
        assert_eq!(
            compute_h_scan(&parts(&[3, 3])),
            (
                2,
                StopReason::TwoNondivisible {
                    first: 0,
                    second: 1
                }
            )
        );
        assert_eq!(
            compute_h_scan(&parts(&[5, 6])),
            (3, StopReason::NoQPartition { witness: 0 })
        );
        assert_eq!(
            compute_h_scan(&parts(&[3, 6])),
            (
                4,
                StopReason::TwoNondivisible {
                    first: 0,
                    second: 1
                }
            )
        );
    }

    #[test]
    fn fast_examples() {
        // Starts at s* = 2, passes the all-divisible level 3, stops at 4.
        assert_eq!(
            compute_h_fast(&parts(&[3, 6])),
            (
                4,
                StopReason::TwoNondivisible {
                    first: 0,
                    second: 1
                }
            )
        );
        assert_eq!(
            compute_h_fast(&parts(&[6, 12])),
            (4, StopReason::NoQPartition { witness: 0 })
        );
        assert_eq!(
            compute_h_fast(&parts(&[1, 1])),
            (
                2,
                StopReason::TwoNondivisible {
                    first: 0,
                    second: 1
                }
            )
        );
    }

    #[test]
    fn chi_star_examples() {
        let report = chi_star(&parts(&[3, 3])).unwrap();
        assert_eq!(report.h(), 2);
        assert_eq!(report.chi_star(), 4);

        let report = chi_star(&parts(&[1, 2, 3])).unwrap();
        assert_eq!(report.h(), 2);
        assert_eq!(report.chi_star(), 4);

        let report = chi_star(&parts(&[5, 6])).unwrap();
        assert_eq!(report.h(), 3);
        assert_eq!(report.chi_star(), 4);
    }

    #[test]
    fn chi_star_report_invariants() {
        let report = chi_star(&parts(&[8, 8])).unwrap();
        assert_eq!(report.s_star(), 3);
        assert_eq!(report.h(), 3);
        assert_eq!(report.chi_star(), 6);
        // Initial minimal 2-partitions of 8 are 2+3+3.
        for p in report.initial_partitions() {
            assert_eq!(p.to_string(), "2+3+3");
        }
        let seeded: u64 = report
            .initial_partitions()
            .iter()
            .map(|p| p.addend_count())
            .sum();
        assert_eq!(seeded, report.chi_star());
    }

    #[test]
    fn chi_star_rejects_single_part() {
        assert_eq!(chi_star(&parts(&[5])), Err(Error::SinglePart));
    }

    #[test]
    fn equal_parts_formula() {
        assert_eq!(chi_star_equal_parts(3, 2), 4);
        assert_eq!(chi_star_equal_parts(4, 3), 6);
        for r in 2..10 {
            assert_eq!(chi_star_equal_parts(1, r), r);
        }
    }

    #[test]
    #[should_panic(expected = "r >= 2")]
    fn equal_parts_rejects_small_r() {
        chi_star_equal_parts(3, 1);
    }

    #[test]
    fn reason_kind_strings() {
        assert_eq!(
            StopReason::NoQPartition { witness: 0 }.kind(),
            "NO_Q_PARTITION"
        );
        assert_eq!(
            StopReason::TwoNondivisible {
                first: 0,
                second: 2
            }
            .kind(),
            "TWO_NONDIVISIBLE"
        );
        assert_eq!(
            StopReason::TwoNondivisible {
                first: 0,
                second: 2
            }
            .witnesses(),
            vec![0, 2]
        );
    }
}
