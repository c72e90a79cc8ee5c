//! Shared brute-force helpers for the integration tests.
//!
//! Each test binary compiles this module separately and uses a subset.
#![allow(dead_code)]

/// Every `(a, b)` with `a*q + b*(q+1) == n`, found by trying all addend
/// counts within the trivial bounds. This is the independent ground truth
/// the q-partition arithmetic is checked against.
pub fn enumerate_qpartitions(n: u64, q: u64) -> Vec<(u64, u64)> {
    let mut found = Vec::new();
    for a in 0..=n / q {
        let rest = n - a * q;
        if rest.is_multiple_of(q + 1) {
            found.push((a, rest / (q + 1)));
        }
    }
    found
}

/// Calls `f` with every sequence of `len` part sizes drawn from
/// `1..=max_size`.
pub fn for_each_instance<F: FnMut(&[u64])>(len: usize, max_size: u64, f: &mut F) {
    let mut sizes = vec![1u64; len];
    loop {
        f(&sizes);
        // Odometer increment.
        let mut position = len;
        loop {
            if position == 0 {
                return;
            }
            position -= 1;
            if sizes[position] < max_size {
                sizes[position] += 1;
                break;
            }
            sizes[position] = 1;
        }
    }
}

/// Calls `f` with every sequence of positive sizes whose length is in
/// `lengths` and whose total is at most `max_total`.
pub fn for_each_bounded_instance<F: FnMut(&[u64])>(
    lengths: std::ops::RangeInclusive<usize>,
    max_total: u64,
    f: &mut F,
) {
    for len in lengths {
        for_each_instance(len, max_total, &mut |sizes| {
            if sizes.iter().sum::<u64>() <= max_total {
                f(sizes);
            }
        });
    }
}
