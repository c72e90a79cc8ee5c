//! Exact integer calculus of q-partitions.
//!
//! A *q-partition* of `n` writes `n` as a sum of addends that are all `q`
//! or `q + 1`, recorded as `n = a*q + b*(q+1)`. Among all q-partitions of
//! a given `n` the one with the fewest addends (the *minimal* one) and the
//! one with the most addends (the *maximal* one) are each unique, and any
//! q-partition can be walked towards the maximal one by repeatedly
//! trading one `q+1`-heavy block for an extra addend ([`QPartition::split_step`]).
//!
//! Everything here is pure integer arithmetic; no floating point is used
//! anywhere, so results are exact for the full `u64` range.

use std::fmt;

use crate::error::Error;

/// A q-partition `n = a*q + b*(q+1)`: `a` addends equal to `q` and `b`
/// addends equal to `q + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QPartition {
    n: u64,
    q: u64,
    a: u64,
    b: u64,
}

/// Whether a q-partition has the fewest or the most addends possible.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Classification {
    pub is_minimal: bool,
    pub is_maximal: bool,
}

/// Result of [`demote_level`]: the maximal q-partition next to the minimal
/// (q-1)-partition of the same `n`, and the addend-count gap between them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Demotion {
    pub upper: QPartition,
    pub lower: QPartition,
    /// `lower.addend_count() - upper.addend_count()`; 0 iff `q` divides `n`,
    /// 1 otherwise.
    pub delta: u64,
}

impl QPartition {
    /// Builds a q-partition, checking the defining identity.
    ///
    /// Panics if `n = a*q + b*(q+1)` fails to hold exactly, if `n` or `q`
    /// is zero, or if the addend count falls outside `1..=n`.
    pub fn new(n: u64, q: u64, a: u64, b: u64) -> Self {
        assert!(n >= 1 && q >= 1, "n and q must be positive");
        let sum = a
            .checked_mul(q)
            .and_then(|aq| b.checked_mul(q + 1).and_then(|bq| aq.checked_add(bq)))
            .expect("a*q + b*(q+1) overflows u64");
        assert_eq!(sum, n, "a*q + b*(q+1) = {sum} does not equal n = {n}");
        let t = a + b;
        assert!(1 <= t && t <= n, "addend count {t} outside 1..={n}");
        Self { n, q, a, b }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Count of addends equal to `q`.
    pub fn a(&self) -> u64 {
        self.a
    }

    /// Count of addends equal to `q + 1`.
    pub fn b(&self) -> u64 {
        self.b
    }

    pub fn addend_count(&self) -> u64 {
        self.a + self.b
    }

    /// The addends in ascending order: `a` copies of `q`, then `b` copies
    /// of `q + 1`.
    pub fn addends(&self) -> impl Iterator<Item = u64> + '_ {
        std::iter::repeat_n(self.q, self.a as usize)
            .chain(std::iter::repeat_n(self.q + 1, self.b as usize))
    }

    /// A partition is maximal iff `b < q` and minimal iff `a < q + 1`.
    pub fn classify(&self) -> Classification {
        Classification {
            is_minimal: self.a < self.q + 1,
            is_maximal: self.b < self.q,
        }
    }

    /// Trades `q` of the `q+1`-addends for `q + 1` of the `q`-addends,
    /// increasing the addend count by exactly one.
    ///
    /// Panics if the partition is maximal (`b < q`), in which case no such
    /// trade exists.
    pub fn split_step(&self) -> QPartition {
        assert!(
            self.b >= self.q,
            "cannot split a maximal {}-partition of {}",
            self.q,
            self.n
        );
        QPartition::new(self.n, self.q, self.a + self.q + 1, self.b - self.q)
    }
}

impl fmt::Display for QPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for addend in self.addends() {
            if !first {
                write!(f, "+")?;
            }
            write!(f, "{addend}")?;
            first = false;
        }
        Ok(())
    }
}

/// Whether any q-partition of `n` exists.
///
/// With `n = k*q + r`, `0 <= r < q`, one exists iff `r <= k`. Values of
/// `q` larger than `n` are allowed and simply yield `false` (except the
/// trivial `q = n` single-addend case handled by the same arithmetic).
///
/// Panics if `n` or `q` is zero.
pub fn exists(n: u64, q: u64) -> bool {
    assert!(n >= 1 && q >= 1, "n and q must be positive");
    let k = n / q;
    let r = n % q;
    r <= k
}

/// The unique minimal q-partition of `n`, or `None` if no q-partition
/// exists. Its addend count is `ceil(n / (q+1))` and it satisfies
/// `a < q + 1`.
///
/// Panics if `n` or `q` is zero.
pub fn minimal(n: u64, q: u64) -> Option<QPartition> {
    if !exists(n, q) {
        return None;
    }
    let t = n.div_ceil(q + 1);
    let b = n - q * t;
    let a = t - b;
    Some(QPartition::new(n, q, a, b))
}

/// The unique maximal q-partition of `n`, or `None` if no q-partition
/// exists. Its addend count is `floor(n / q)` and it satisfies `b < q`.
///
/// Panics if `n` or `q` is zero.
pub fn maximal(n: u64, q: u64) -> Option<QPartition> {
    if !exists(n, q) {
        return None;
    }
    let t = n / q;
    let b = n % q;
    let a = t - b;
    Some(QPartition::new(n, q, a, b))
}

/// Pairs the maximal q-partition of `n` with the minimal (q-1)-partition
/// of `n`. Their addend counts agree exactly when `q` divides `n` and
/// differ by one otherwise.
///
/// Returns [`Error::NoPartition`] if either partition fails to exist.
/// Panics if `n` is zero or `q < 2`.
pub fn demote_level(n: u64, q: u64) -> Result<Demotion, Error> {
    assert!(n >= 1, "n must be positive");
    assert!(
        q >= 2,
        "demotion needs q >= 2 so that q - 1 is a valid level"
    );
    let upper = maximal(n, q).ok_or(Error::NoPartition { n, q })?;
    let lower = minimal(n, q - 1).ok_or(Error::NoPartition { n, q: q - 1 })?;
    let delta = lower.addend_count() - upper.addend_count();
    debug_assert_eq!(delta == 0, n.is_multiple_of(q));
    Ok(Demotion {
        upper,
        lower,
        delta,
    })
}
