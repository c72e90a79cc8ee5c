use equipart::coloring::{plan_for_k, realize};
use equipart::threshold;
use equipart::PartSizes;

use crate::args::{Cli, Command, Format};
use crate::bench::run_bench;
use crate::parse_parts;
use crate::render;

/// Process exit codes: 0 success/agreement, 1 infeasible coloring,
/// 2 oracle disagreement, 64 usage errors.
pub const EXIT_OK: i32 = 0;
pub const EXIT_INFEASIBLE: i32 = 1;
pub const EXIT_DISAGREEMENT: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

/// What a command run produced; `main` prints both streams and exits with
/// `code`.
#[derive(Debug)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(message: impl std::fmt::Display) -> Self {
        Self {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

pub fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Threshold { parts } => threshold_command(parts, cli.format),
        Command::Color { parts, k } => color_command(parts, *k, cli.format),
        Command::Sweep { parts, max_k } => sweep_command(parts, *max_k, cli.format),
        Command::Verify { parts, max_k } => verify_command(parts, *max_k, cli.format),
        Command::Bench { seed } => bench_command(*seed, cli.format),
    }
}

fn parse_or_usage(input: &str) -> Result<PartSizes, Outcome> {
    parse_parts(input).map_err(Outcome::usage)
}

fn threshold_command(parts: &str, format: Format) -> Outcome {
    let parts = match parse_or_usage(parts) {
        Ok(parts) => parts,
        Err(outcome) => return outcome,
    };
    match threshold::chi_star(&parts) {
        Ok(report) => Outcome::ok(match format {
            Format::Text => render::threshold_text(&report),
            Format::Json => render::threshold_json(&report),
        }),
        Err(err) => Outcome::usage(err),
    }
}

fn color_command(parts: &str, k: u64, format: Format) -> Outcome {
    let parts = match parse_or_usage(parts) {
        Ok(parts) => parts,
        Err(outcome) => return outcome,
    };
    match plan_for_k(&parts, k) {
        Some(plan) => {
            let coloring = realize(&plan);
            Outcome::ok(match format {
                Format::Text => render::color_text(&plan, &coloring),
                Format::Json => render::color_json(&plan, &coloring),
            })
        }
        None => Outcome {
            code: EXIT_INFEASIBLE,
            stdout: match format {
                Format::Text => render::infeasible_text(&parts, k),
                Format::Json => render::infeasible_json(&parts, k),
            },
            stderr: String::new(),
        },
    }
}

fn sweep_command(parts: &str, max_k: Option<u64>, format: Format) -> Outcome {
    let parts = match parse_or_usage(parts) {
        Ok(parts) => parts,
        Err(outcome) => return outcome,
    };
    let max_k = max_k.unwrap_or(parts.total());
    let rows: Vec<(u64, bool)> = (1..=max_k)
        .map(|k| (k, plan_for_k(&parts, k).is_some()))
        .collect();
    Outcome::ok(match format {
        Format::Text => render::sweep_text(&parts, &rows),
        Format::Json => render::sweep_json(&parts, &rows),
    })
}

fn verify_command(parts: &str, max_k: Option<u64>, format: Format) -> Outcome {
    let parts = match parse_or_usage(parts) {
        Ok(parts) => parts,
        Err(outcome) => return outcome,
    };
    let report = match threshold::chi_star(&parts) {
        Ok(report) => report,
        Err(err) => return Outcome::usage(err),
    };
    let oracle_chi_star = match equipart_oracle::chi_star(parts.sizes()) {
        Ok(value) => value,
        Err(err) => return Outcome::usage(err),
    };
    let max_k = max_k.unwrap_or(parts.total());
    let rows: Vec<(u64, bool, bool)> = (1..=max_k)
        .map(|k| {
            let plan = plan_for_k(&parts, k).is_some();
            let oracle =
                equipart_oracle::k_colorable(parts.sizes(), k).expect("budget already checked");
            (k, plan, oracle)
        })
        .collect();
    let summary = render::VerifySummary {
        formula_chi_star: report.chi_star(),
        oracle_chi_star,
        rows,
    };
    let code = if summary.agrees() {
        EXIT_OK
    } else {
        EXIT_DISAGREEMENT
    };
    Outcome {
        code,
        stdout: match format {
            Format::Text => render::verify_text(&parts, &summary),
            Format::Json => render::verify_json(&parts, &summary),
        },
        stderr: String::new(),
    }
}

fn bench_command(seed: u64, format: Format) -> Outcome {
    let rows = run_bench(seed);
    Outcome::ok(match format {
        Format::Text => render::bench_text(seed, &rows),
        Format::Json => render::bench_json(seed, &rows),
    })
}
