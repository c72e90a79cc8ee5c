//! Equitable colorings of complete multipartite graphs.
//!
//! Because every color class of a proper coloring of `K_{n_1,...,n_l}`
//! lies inside a single part, an equitable coloring is determined by its
//! arithmetic skeleton: a choice of class sizes per part, all within one
//! of each other. [`ColorPlan`] is that skeleton; [`realize`] turns it
//! into an explicit vertex assignment and [`validate`] checks any
//! assignment against the definition from scratch.
//!
//! Plans come from three constructors: [`initial_plan`] seeds the minimal
//! equitable coloring with the threshold's class count, [`refine`] adds
//! one class to an existing plan, and [`plan_for_k`] builds a plan for an
//! arbitrary feasible `k` directly.

use std::collections::HashMap;

use crate::parts::PartSizes;
use crate::qpartition::{self, QPartition};
use crate::threshold::ThresholdReport;

/// Per-part class-size counts at a common level `q`: each part carries
/// `a` classes of size `q` and `b` of size `q + 1`.
///
/// When the requested color count exceeds the vertex count the plan lists
/// one singleton class per vertex and leaves the remaining colors as
/// implicit empty classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorPlan {
    parts: PartSizes,
    level: u64,
    counts: Vec<(u64, u64)>,
    color_count: u64,
}

impl ColorPlan {
    fn assemble(parts: PartSizes, level: u64, counts: Vec<(u64, u64)>, color_count: u64) -> Self {
        assert!(level >= 1, "class size level must be positive");
        assert_eq!(counts.len(), parts.len());
        let mut listed: u64 = 0;
        for (&n, &(a, b)) in parts.iter().zip(&counts) {
            assert_eq!(
                a * level + b * (level + 1),
                n,
                "class sizes must tile the part"
            );
            listed += a + b;
        }
        let expected = color_count.min(parts.total());
        assert_eq!(
            listed, expected,
            "listed class count must match the color count"
        );
        assert!(color_count >= parts.len() as u64);
        Self {
            parts,
            level,
            counts,
            color_count,
        }
    }

    pub fn parts(&self) -> &PartSizes {
        &self.parts
    }

    /// The common level `q`: every listed class has size `q` or `q + 1`.
    pub fn level(&self) -> u64 {
        self.level
    }

    /// Total color count `k`, including implicit empty classes when
    /// `k > N`.
    pub fn color_count(&self) -> u64 {
        self.color_count
    }

    /// `(a, b)` class counts for one part.
    pub fn part_counts(&self, part: usize) -> (u64, u64) {
        self.counts[part]
    }

    /// Listed class sizes of one part, ascending.
    pub fn class_sizes(&self, part: usize) -> Vec<u64> {
        let (a, b) = self.counts[part];
        let mut sizes = vec![self.level; a as usize];
        sizes.extend(std::iter::repeat_n(self.level + 1, b as usize));
        sizes
    }

    /// Number of classes actually listed (equals `color_count` unless the
    /// plan is in the all-singletons regime).
    pub fn listed_classes(&self) -> u64 {
        self.counts.iter().map(|&(a, b)| a + b).sum()
    }
}

/// Explicit vertex-to-color assignment. Vertices are addressed as
/// `(part, offset)` pairs; colors run from 1 to `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexColoring {
    parts: PartSizes,
    colors: Vec<Vec<u64>>,
    color_count: u64,
}

impl VertexColoring {
    /// Builds a coloring from per-part color vectors.
    ///
    /// Panics unless the vectors match the part sizes exactly and
    /// `color_count >= 1`; the color *values* are not checked here, so
    /// improper or inequitable assignments can be constructed and fed to
    /// [`validate`].
    pub fn new(parts: PartSizes, colors: Vec<Vec<u64>>, color_count: u64) -> Self {
        assert!(color_count >= 1, "color count must be positive");
        assert_eq!(colors.len(), parts.len(), "one color vector per part");
        for (&n, c) in parts.iter().zip(&colors) {
            assert_eq!(c.len() as u64, n, "one color per vertex");
        }
        Self {
            parts,
            colors,
            color_count,
        }
    }

    pub fn parts(&self) -> &PartSizes {
        &self.parts
    }

    pub fn color_count(&self) -> u64 {
        self.color_count
    }

    pub fn color_of(&self, part: usize, offset: usize) -> u64 {
        self.colors[part][offset]
    }

    pub fn part_colors(&self, part: usize) -> &[u64] {
        &self.colors[part]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ViolationKind {
    Properness,
    Equity,
    Count,
}

#[derive(Debug, Clone)]
pub struct Violation {
    pub kind: ViolationKind,
    pub detail: String,
}

/// Outcome of [`validate`]: `ok()` iff no violations were found.
#[derive(Debug, Clone)]
pub struct Verdict {
    pub violations: Vec<Violation>,
}

impl Verdict {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// The minimal equitable coloring plan: each part is cut according to its
/// minimal (h-1)-partition, giving exactly `chi_star` classes.
pub fn initial_plan(report: &ThresholdReport) -> ColorPlan {
    let level = report.h() - 1;
    let counts = report
        .initial_partitions()
        .iter()
        .map(|p| (p.a(), p.b()))
        .collect();
    ColorPlan::assemble(report.parts().clone(), level, counts, report.chi_star())
}

/// Adds one class to a plan, keeping it equitable.
///
/// If some part's partition is non-maximal, the smallest such part is
/// split at the current level. Otherwise every part is maximal and the
/// whole plan moves down one level: when every part is divisible by the
/// level, the smallest part also divisible by `level - 1` is split after
/// the move; when exactly one part is nondivisible, that part is demoted
/// through [`qpartition::demote_level`], which adds the class.
///
/// Panics if the plan already has one class per vertex, or if no
/// refinement step applies — the latter only happens for plans below the
/// threshold, which never arise on the chain from [`initial_plan`].
pub fn refine(plan: &ColorPlan) -> ColorPlan {
    let n_total = plan.parts.total();
    assert!(
        plan.color_count < n_total,
        "cannot refine: the plan already has {} classes for {} vertices",
        plan.color_count,
        n_total
    );
    let q = plan.level;
    let sizes = plan.parts.sizes();

    // Case 1: some part is non-maximal at the current level.
    let non_maximal = plan.counts.iter().position(|&(_, b)| b >= q);
    if let Some(i) = non_maximal {
        let (a, b) = plan.counts[i];
        let split = QPartition::new(sizes[i], q, a, b).split_step();
        let mut counts = plan.counts.clone();
        counts[i] = (split.a(), split.b());
        return ColorPlan::assemble(plan.parts.clone(), q, counts, plan.color_count + 1);
    }

    // Every part is maximal. At level 1 that would mean all singletons,
    // which the class-count check above already excludes.
    assert!(q >= 2, "all parts maximal at level 1 implies k = N");

    // Maximal partitions satisfy b = n mod q, so the nondivisible parts
    // are exactly those with b > 0.
    let nondivisible: Vec<usize> = (0..sizes.len())
        .filter(|&i| !sizes[i].is_multiple_of(q))
        .collect();

    match nondivisible.as_slice() {
        [] => {
            // Every part is a pure run of q-blocks; reread it one level
            // down as n = 0*(q-1) + a*q and split a part divisible by
            // both q-1 and q.
            let mut counts: Vec<(u64, u64)> = plan.counts.iter().map(|&(a, _)| (0, a)).collect();
            let j = (0..sizes.len())
                .find(|&j| sizes[j].is_multiple_of(q - 1))
                .expect("a part divisible by both q-1 and q exists on the refinement chain");
            let (a, b) = counts[j];
            let split = QPartition::new(sizes[j], q - 1, a, b).split_step();
            counts[j] = (split.a(), split.b());
            ColorPlan::assemble(plan.parts.clone(), q - 1, counts, plan.color_count + 1)
        }
        [i] => {
            let i = *i;
            let demotion = qpartition::demote_level(sizes[i], q)
                .expect("the nondivisible part has a partition one level down");
            assert_eq!(
                (demotion.upper.a(), demotion.upper.b()),
                plan.counts[i],
                "part {i} must hold its maximal partition"
            );
            assert_eq!(
                demotion.delta, 1,
                "demoting a nondivisible part adds one class"
            );
            let counts: Vec<(u64, u64)> = plan
                .counts
                .iter()
                .enumerate()
                .map(|(j, &(a, _))| {
                    if j == i {
                        (demotion.lower.a(), demotion.lower.b())
                    } else {
                        (0, a)
                    }
                })
                .collect();
            ColorPlan::assemble(plan.parts.clone(), q - 1, counts, plan.color_count + 1)
        }
        _ => panic!(
            "plan with {} classes is not refinable: two parts are nondivisible by {} \
             and all partitions are maximal",
            plan.color_count, q
        ),
    }
}

/// Builds the canonical plan with `k` classes, or `None` when no
/// equitable `k`-coloring exists.
///
/// For `k >= N` the plan is all singletons with `k - N` empty classes.
/// Otherwise the size multiset is forced: `k` nonempty sizes within one
/// of each other summing to `N` must be `N mod k` copies of
/// `floor(N/k) + 1` and the rest `floor(N/k)` (if all `k` sizes were
/// equal to some `s`, then `s = N/k`, the `q = floor(N/k)` reading with
/// every class on the large side). So the level is `q = floor(N/k)`,
/// each part must take between `ceil(n_i/(q+1))` and `floor(n_i/q)`
/// classes, and those per-part counts must be able to sum to `k`; the
/// canonical choice starts every part at its lower bound and raises
/// parts in index order.
///
/// Panics if `k` is zero.
pub fn plan_for_k(parts: &PartSizes, k: u64) -> Option<ColorPlan> {
    assert!(k >= 1, "color count must be positive");
    let n_total = parts.total();
    if k >= n_total {
        let counts = parts.iter().map(|&n| (n, 0)).collect();
        return Some(ColorPlan::assemble(parts.clone(), 1, counts, k));
    }

    let q = n_total / k;
    let mut lower = Vec::with_capacity(parts.len());
    let mut upper = Vec::with_capacity(parts.len());
    for &n in parts.iter() {
        let lo = n.div_ceil(q + 1);
        let hi = n / q;
        if lo > hi {
            return None; // this part has no q-partition
        }
        lower.push(lo);
        upper.push(hi);
    }
    let lo_sum: u64 = lower.iter().sum();
    let hi_sum: u64 = upper.iter().sum();
    if k < lo_sum || k > hi_sum {
        return None;
    }

    let mut extra = k - lo_sum;
    let mut counts = Vec::with_capacity(parts.len());
    for (i, &n) in parts.iter().enumerate() {
        let bump = extra.min(upper[i] - lower[i]);
        extra -= bump;
        let t = lower[i] + bump;
        let b = n - q * t;
        let a = t - b;
        counts.push((a, b));
    }
    debug_assert_eq!(extra, 0);
    Some(ColorPlan::assemble(parts.clone(), q, counts, k))
}

/// Unfolds a plan into an explicit coloring: colors are numbered 1..k in
/// (part, class) order and each part's vertices fill its classes in
/// offset order.
pub fn realize(plan: &ColorPlan) -> VertexColoring {
    let mut colors = Vec::with_capacity(plan.parts.len());
    let mut next_color = 1u64;
    for part in 0..plan.parts.len() {
        let mut assigned = Vec::with_capacity(plan.parts.sizes()[part] as usize);
        for size in plan.class_sizes(part) {
            for _ in 0..size {
                assigned.push(next_color);
            }
            next_color += 1;
        }
        colors.push(assigned);
    }
    VertexColoring::new(plan.parts.clone(), colors, plan.color_count)
}

/// Checks a coloring against the definition, from scratch.
///
/// Properness: no color may appear in two distinct parts. Equity: with
/// `q = floor(N/k)` and `r = N mod k`, exactly `r` classes must have size
/// `q + 1` and `k - r` size `q`, where colors without vertices count as
/// size-0 classes. Count: every assigned color must lie in `1..=k`.
pub fn validate(coloring: &VertexColoring) -> Verdict {
    let mut violations = Vec::new();
    let k = coloring.color_count();
    let n_total = coloring.parts().total();
    let q = n_total / k;
    let r = n_total % k;

    let mut class_size: HashMap<u64, u64> = HashMap::new();
    let mut class_part: HashMap<u64, usize> = HashMap::new();
    let mut flagged_improper: Vec<u64> = Vec::new();
    let mut flagged_range: Vec<u64> = Vec::new();

    for part in 0..coloring.parts().len() {
        for (offset, &color) in coloring.part_colors(part).iter().enumerate() {
            if color < 1 || color > k {
                if !flagged_range.contains(&color) {
                    flagged_range.push(color);
                    violations.push(Violation {
                        kind: ViolationKind::Count,
                        detail: format!(
                            "vertex ({part}, {offset}) has color {color} outside 1..={k}"
                        ),
                    });
                }
                continue;
            }
            *class_size.entry(color).or_insert(0) += 1;
            match class_part.get(&color) {
                None => {
                    class_part.insert(color, part);
                }
                Some(&first) if first != part => {
                    if !flagged_improper.contains(&color) {
                        flagged_improper.push(color);
                        violations.push(Violation {
                            kind: ViolationKind::Properness,
                            detail: format!(
                                "color {color} appears in parts {first} and {part}, \
                                 which are completely joined"
                            ),
                        });
                    }
                }
                Some(_) => {}
            }
        }
    }

    let mut of_size_q = 0u64;
    let mut of_size_q1 = 0u64;
    let mut sizes_sorted: Vec<(&u64, &u64)> = class_size.iter().collect();
    sizes_sorted.sort();
    for (&color, &size) in sizes_sorted {
        if size == q + 1 {
            of_size_q1 += 1;
        } else if size == q {
            of_size_q += 1;
        } else {
            violations.push(Violation {
                kind: ViolationKind::Equity,
                detail: format!(
                    "color {color} has {size} vertices, expected {q} or {}",
                    q + 1
                ),
            });
        }
    }
    let absent = k - class_size.len() as u64;
    if q == 0 {
        of_size_q += absent; // empty classes have the small size when k > N
    } else if absent > 0 {
        violations.push(Violation {
            kind: ViolationKind::Equity,
            detail: format!("{absent} colors in 1..={k} have no vertices but size {q} is required"),
        });
    }
    if of_size_q1 != r || of_size_q != k - r {
        violations.push(Violation {
            kind: ViolationKind::Equity,
            detail: format!(
                "need {r} classes of size {} and {} of size {q}, found {of_size_q1} and {of_size_q}",
                q + 1,
                k - r
            ),
        });
    }

    Verdict { violations }
}
