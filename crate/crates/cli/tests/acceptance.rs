//! Acceptance suite: one test per claim the project makes, each printing a
//! PASS line when its whole range checks out. The timing claim lives in
//! `acceptance_bench.rs` so it runs in a quiet process.

use std::process::Command;

use equipart::coloring::{initial_plan, plan_for_k, realize, refine, validate};
use equipart::threshold::{chi_star, chi_star_equal_parts, compute_h_fast, compute_h_scan};
use equipart::PartSizes;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn parts(sizes: &[u64]) -> PartSizes {
    PartSizes::new(sizes.to_vec()).unwrap()
}

/// Every sequence of `len` sizes drawn from `1..=max_size`.
fn for_each_tuple<F: FnMut(&[u64])>(len: usize, max_size: u64, f: &mut F) {
    let mut sizes = vec![1u64; len];
    loop {
        f(&sizes);
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

#[test]
fn criterion_1_threshold_equals_the_search_oracle() {
    // Every instance with 2..=4 parts of size 1..=9.
    let mut checked = 0u64;
    for len in 2..=4 {
        for_each_tuple(len, 9, &mut |sizes| {
            let formula = chi_star(&parts(sizes)).unwrap().chi_star();
            let oracle = equipart_oracle::chi_star(sizes).unwrap();
            assert_eq!(formula, oracle, "{sizes:?}");
            checked += 1;
        });
    }
    assert_eq!(checked, 81 + 729 + 6561);
    println!("criterion 1 (threshold formula = oracle on {checked} instances): PASS");
}

#[test]
fn criterion_2_per_k_feasibility_equals_the_search_oracle() {
    let mut checked = 0u64;
    for len in 2..=3 {
        for_each_tuple(len, 13, &mut |sizes| {
            let total: u64 = sizes.iter().sum();
            if total > 14 {
                return;
            }
            let p = parts(sizes);
            for k in 1..=total {
                let plan = plan_for_k(&p, k).is_some();
                let oracle = equipart_oracle::k_colorable(sizes, k).unwrap();
                assert_eq!(plan, oracle, "{sizes:?} at k={k}");
            }
            checked += 1;
        });
    }
    assert_eq!(checked, 91 + 364);
    println!("criterion 2 (per-k feasibility = oracle on {checked} instances): PASS");
}

#[test]
fn criterion_3_partition_oracle_equals_set_partition_oracle() {
    let mut checked = 0u64;
    for len in 1..=3 {
        for_each_tuple(len, 10, &mut |sizes| {
            let total: u64 = sizes.iter().sum();
            if total > 10 {
                return;
            }
            for k in 1..=total {
                assert_eq!(
                    equipart_oracle::k_colorable(sizes, k).unwrap(),
                    equipart_oracle::vertex_level_k_colorable(sizes, k).unwrap(),
                    "{sizes:?} at k={k}"
                );
            }
            checked += 1;
        });
    }
    assert_eq!(checked, 10 + 45 + 120);
    println!("criterion 3 (two oracle levels agree on {checked} instances): PASS");
}

#[test]
fn criterion_4_equal_parts_formula_reproduced() {
    for n in 1..=50u64 {
        for r in 2..=6u64 {
            assert_eq!(
                chi_star_equal_parts(n, r),
                chi_star(&parts(&vec![n; r as usize])).unwrap().chi_star(),
                "n={n}, r={r}"
            );
        }
    }
    println!("criterion 4 (balanced-instance shortcut formula, n <= 50, r <= 6): PASS");
}

#[test]
fn criterion_5_threshold_semantics_on_random_instances() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xE9_01);
    for _ in 0..500 {
        let len = rng.gen_range(2..=5usize);
        let sizes: Vec<u64> = (0..len).map(|_| rng.gen_range(1..=40u64)).collect();
        let p = parts(&sizes);
        let report = chi_star(&p).unwrap();
        let threshold = report.chi_star();
        for k in threshold..=p.total() + 3 {
            let plan = plan_for_k(&p, k)
                .unwrap_or_else(|| panic!("{sizes:?} infeasible at k={k} >= threshold"));
            let verdict = validate(&realize(&plan));
            assert!(verdict.ok(), "{sizes:?} at k={k}: {:?}", verdict.violations);
        }
        if threshold >= 2 {
            assert!(
                plan_for_k(&p, threshold - 1).is_none(),
                "{sizes:?} must be infeasible just below the threshold"
            );
        }
    }
    println!("criterion 5 (threshold semantics on 500 random instances): PASS");
}

#[test]
fn criterion_6_refinement_chain_validates_at_every_k() {
    for len in 2..=4 {
        for_each_tuple(len, 9, &mut |sizes| {
            let p = parts(sizes);
            let report = chi_star(&p).unwrap();
            let total = p.total();
            let mut plan = initial_plan(&report);
            for k in report.chi_star()..=total {
                assert_eq!(plan.color_count(), k, "{sizes:?}");
                let verdict = validate(&realize(&plan));
                assert!(verdict.ok(), "{sizes:?} at k={k}: {:?}", verdict.violations);
                if k < total {
                    plan = refine(&plan);
                }
            }
        });
    }
    println!("criterion 6 (refinement chain, 2..=4 parts of size <= 9): PASS");
}

#[test]
fn criterion_7_fast_level_walk_agrees_with_the_scan() {
    for len in 2..=4 {
        for_each_tuple(len, 9, &mut |sizes| {
            let p = parts(sizes);
            assert_eq!(compute_h_fast(&p), compute_h_scan(&p), "{sizes:?}");
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0xE9_07);
    for _ in 0..10_000 {
        let len = rng.gen_range(2..=6usize);
        let sizes: Vec<u64> = (0..len).map(|_| rng.gen_range(1..=1_000_000u64)).collect();
        let p = parts(&sizes);
        assert_eq!(compute_h_fast(&p), compute_h_scan(&p), "{sizes:?}");
    }
    println!("criterion 7 (fast level walk = scan, exhaustive small + 10000 random): PASS");
}

#[test]
fn criterion_8_worked_partitions_appear_verbatim_in_cli_output() {
    let run = |args: &[&str]| {
        let output = Command::new(env!("CARGO_BIN_EXE_equipart"))
            .args(args)
            .output()
            .expect("binary runs");
        assert_eq!(output.status.code(), Some(0), "args: {args:?}");
        String::from_utf8(output.stdout).unwrap()
    };

    // The minimal 2-partition of 8, as a 3-class coloring of one part and
    // as the seed partition the threshold command prints for K_{8,8}.
    let text = run(&["color", "8", "--k", "3"]);
    assert!(text.contains("  part 0: 2+3+3\n"), "got:\n{text}");
    let text = run(&["threshold", "8,8"]);
    assert!(text.contains("  part 0: 8 = 2+3+3\n"), "got:\n{text}");

    // The maximal 2-partition of 8, as a 4-class coloring.
    let text = run(&["color", "8", "--k", "4"]);
    assert!(text.contains("  part 0: 2+2+2+2\n"), "got:\n{text}");

    println!("criterion 8 (2+3+3 and 2+2+2+2 verbatim in CLI output): PASS");
}
