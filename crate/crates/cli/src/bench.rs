use std::time::Instant;

use equipart::threshold;
use equipart::PartSizes;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Instance sizes used by `equipart bench`: part counts doubling from
/// one thousand to just over a million.
pub fn bench_lengths() -> Vec<usize> {
    (0..=10).map(|doubling| 1000usize << doubling).collect()
}

/// Deterministic synthetic instance: `len` part sizes drawn uniformly
/// from `1..=1_000_000`. The same `(seed, len)` always yields the same
/// instance.
pub fn bench_instance(seed: u64, len: usize) -> PartSizes {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(len as u64));
    let sizes = (0..len).map(|_| rng.gen_range(1..=1_000_000u64)).collect();
    PartSizes::new(sizes).expect("generated sizes are positive")
}

#[derive(Debug, Clone)]
pub struct BenchRow {
    pub len: usize,
    pub total: u64,
    pub seconds: f64,
    pub chi_star: u64,
}

/// Median wall time of five full threshold computations, after one
/// warmup run. The median is robust against a single scheduling hiccup
/// in either direction.
pub fn time_chi_star(parts: &PartSizes) -> (f64, u64) {
    let report = threshold::chi_star(parts).expect("bench instances have two or more parts");
    let chi = report.chi_star();
    let mut samples = Vec::with_capacity(5);
    for _ in 0..5 {
        let start = Instant::now();
        let report = threshold::chi_star(parts).unwrap();
        samples.push(start.elapsed().as_secs_f64());
        assert_eq!(report.chi_star(), chi);
    }
    samples.sort_by(f64::total_cmp);
    (samples[samples.len() / 2], chi)
}

pub fn run_bench(seed: u64) -> Vec<BenchRow> {
    bench_lengths()
        .into_iter()
        .map(|len| {
            let parts = bench_instance(seed, len);
            let (seconds, chi_star) = time_chi_star(&parts);
            BenchRow {
                len,
                total: parts.total(),
                seconds,
                chi_star,
            }
        })
        .collect()
}
