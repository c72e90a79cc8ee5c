use equipart::coloring::{ColorPlan, VertexColoring};
use equipart::threshold::ThresholdReport;
use serde_json::{json, Value};

use crate::bench::BenchRow;

fn parts_json(report_parts: &equipart::PartSizes) -> Value {
    Value::from(report_parts.sizes().to_vec())
}

pub fn threshold_text(report: &ThresholdReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("parts: {}\n", report.parts()));
    out.push_str(&format!("s_star: {}\n", report.s_star()));
    out.push_str(&format!("h: {}\n", report.h()));
    out.push_str(&format!("reason: {}\n", report.reason()));
    out.push_str(&format!("chi_star: {}\n", report.chi_star()));
    out.push_str(&format!(
        "threshold coloring seed ({}-partitions):\n",
        report.h() - 1
    ));
    for (i, partition) in report.initial_partitions().iter().enumerate() {
        out.push_str(&format!("  part {i}: {} = {partition}\n", partition.n()));
    }
    out
}

pub fn threshold_json(report: &ThresholdReport) -> String {
    let value = json!({
        "parts": parts_json(report.parts()),
        "s_star": report.s_star(),
        "h": report.h(),
        "reason": {
            "kind": report.reason().kind(),
            "witnesses": report.reason().witnesses(),
        },
        "chi_star": report.chi_star(),
    });
    format!("{value}\n")
}

/// Groups one part's colors into `(color, first offset, last offset)`
/// runs; realized classes are always contiguous.
fn color_runs(coloring: &VertexColoring, part: usize) -> Vec<(u64, usize, usize)> {
    let mut runs: Vec<(u64, usize, usize)> = Vec::new();
    for (offset, &color) in coloring.part_colors(part).iter().enumerate() {
        match runs.last_mut() {
            Some((last, _, end)) if *last == color => *end = offset,
            _ => runs.push((color, offset, offset)),
        }
    }
    runs
}

pub fn color_text(plan: &ColorPlan, coloring: &VertexColoring) -> String {
    let mut out = String::new();
    out.push_str(&format!("parts: {}\n", plan.parts()));
    out.push_str(&format!("k: {}\n", plan.color_count()));
    out.push_str(&format!("class sizes (level {}):\n", plan.level()));
    for part in 0..plan.parts().len() {
        let sizes: Vec<String> = plan.class_sizes(part).iter().map(u64::to_string).collect();
        out.push_str(&format!("  part {part}: {}\n", sizes.join("+")));
    }
    out.push_str("coloring:\n");
    let mut runs: Vec<(u64, usize, usize, usize)> = Vec::new();
    for part in 0..plan.parts().len() {
        for (color, start, end) in color_runs(coloring, part) {
            runs.push((color, part, start, end));
        }
    }
    runs.sort_unstable();
    for (color, part, start, end) in runs {
        if start == end {
            out.push_str(&format!("  color {color}: part {part}, vertex {start}\n"));
        } else {
            out.push_str(&format!(
                "  color {color}: part {part}, vertices {start}-{end}\n"
            ));
        }
    }
    let listed = plan.listed_classes();
    if listed < plan.color_count() {
        out.push_str(&format!(
            "  colors {}..={}: empty\n",
            listed + 1,
            plan.color_count()
        ));
    }
    out
}

pub fn color_json(plan: &ColorPlan, coloring: &VertexColoring) -> String {
    let classes: Vec<Vec<u64>> = (0..plan.parts().len())
        .map(|part| plan.class_sizes(part))
        .collect();
    let colors: Vec<Vec<u64>> = (0..plan.parts().len())
        .map(|part| coloring.part_colors(part).to_vec())
        .collect();
    let value = json!({
        "parts": parts_json(plan.parts()),
        "k": plan.color_count(),
        "feasible": true,
        "level": plan.level(),
        "classes": classes,
        "coloring": colors,
    });
    format!("{value}\n")
}

pub fn infeasible_text(parts: &equipart::PartSizes, k: u64) -> String {
    format!("infeasible: no equitable {k}-coloring of K_{{{parts}}} exists\n")
}

pub fn infeasible_json(parts: &equipart::PartSizes, k: u64) -> String {
    let value = json!({
        "parts": parts_json(parts),
        "k": k,
        "feasible": false,
    });
    format!("{value}\n")
}

pub fn sweep_text(parts: &equipart::PartSizes, rows: &[(u64, bool)]) -> String {
    let mut out = format!("parts: {parts}\n");
    for &(k, feasible) in rows {
        out.push_str(&format!(
            "k={k}: {}\n",
            if feasible { "feasible" } else { "infeasible" }
        ));
    }
    out
}

pub fn sweep_json(parts: &equipart::PartSizes, rows: &[(u64, bool)]) -> String {
    let rows: Vec<Value> = rows
        .iter()
        .map(|&(k, feasible)| json!({"k": k, "feasible": feasible}))
        .collect();
    let value = json!({
        "parts": parts_json(parts),
        "rows": rows,
    });
    format!("{value}\n")
}

pub struct VerifySummary {
    pub formula_chi_star: u64,
    pub oracle_chi_star: u64,
    pub rows: Vec<(u64, bool, bool)>,
}

impl VerifySummary {
    pub fn agrees(&self) -> bool {
        self.formula_chi_star == self.oracle_chi_star
            && self.rows.iter().all(|&(_, plan, oracle)| plan == oracle)
    }
}

pub fn verify_text(parts: &equipart::PartSizes, summary: &VerifySummary) -> String {
    let mut out = format!("parts: {parts}\n");
    let chi_ok = summary.formula_chi_star == summary.oracle_chi_star;
    out.push_str(&format!(
        "chi_star: formula={} oracle={} {}\n",
        summary.formula_chi_star,
        summary.oracle_chi_star,
        if chi_ok { "ok" } else { "DISAGREEMENT" }
    ));
    for &(k, plan, oracle) in &summary.rows {
        let word = |feasible| if feasible { "feasible" } else { "infeasible" };
        out.push_str(&format!(
            "k={k}: plan={} oracle={} {}\n",
            word(plan),
            word(oracle),
            if plan == oracle { "ok" } else { "DISAGREEMENT" }
        ));
    }
    if summary.agrees() {
        out.push_str("agreement for all k\n");
    } else {
        out.push_str("disagreement found\n");
    }
    out
}

pub fn verify_json(parts: &equipart::PartSizes, summary: &VerifySummary) -> String {
    let rows: Vec<Value> = summary
        .rows
        .iter()
        .map(|&(k, plan, oracle)| {
            json!({"k": k, "plan_feasible": plan, "oracle_feasible": oracle, "agree": plan == oracle})
        })
        .collect();
    let value = json!({
        "parts": parts_json(parts),
        "chi_star": {
            "formula": summary.formula_chi_star,
            "oracle": summary.oracle_chi_star,
            "agree": summary.formula_chi_star == summary.oracle_chi_star,
        },
        "rows": rows,
        "agree": summary.agrees(),
    });
    format!("{value}\n")
}

pub fn bench_text(seed: u64, rows: &[BenchRow]) -> String {
    let mut out = format!("seed: {seed}\n");
    for row in rows {
        out.push_str(&format!(
            "l={:<8} n_total={:<14} time_s={:<12.6} chi_star={}\n",
            row.len, row.total, row.seconds, row.chi_star
        ));
    }
    out
}

pub fn bench_json(seed: u64, rows: &[BenchRow]) -> String {
    let rows: Vec<Value> = rows
        .iter()
        .map(|row| {
            json!({
                "l": row.len,
                "n_total": row.total,
                "time_s": row.seconds,
                "chi_star": row.chi_star,
            })
        })
        .collect();
    let value = json!({"seed": seed, "rows": rows});
    format!("{value}\n")
}
