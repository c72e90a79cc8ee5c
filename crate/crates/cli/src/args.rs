use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "equipart",
    version,
    about = "Equitable colorings of complete multipartite graphs",
    long_about = "Computes the equitable chromatic threshold of K_{n1,...,nl}, builds \
                  explicit equitable k-colorings, and cross-checks everything against \
                  brute-force search."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute the equitable chromatic threshold of K_{n1,...,nl}
    Threshold {
        /// Comma-separated part sizes, e.g. "3,5,6"
        parts: String,
    },
    /// Build an explicit equitable k-coloring, if one exists
    Color {
        /// Comma-separated part sizes
        parts: String,
        /// Number of color classes
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        k: u64,
    },
    /// Report k-colorability for every k up to a bound
    Sweep {
        /// Comma-separated part sizes
        parts: String,
        /// Largest k to test (default: the vertex count)
        #[arg(long = "max-k", value_parser = clap::value_parser!(u64).range(1..))]
        max_k: Option<u64>,
    },
    /// Cross-check the threshold and per-k feasibility against brute force
    Verify {
        /// Comma-separated part sizes
        parts: String,
        /// Largest k to cross-check (default: the vertex count)
        #[arg(long = "max-k", value_parser = clap::value_parser!(u64).range(1..))]
        max_k: Option<u64>,
    },
    /// Time the threshold computation on synthetic instances of doubling size
    Bench {
        /// Seed for the deterministic instance generator
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}
