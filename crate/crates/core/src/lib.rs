//! Equitable colorings of complete multipartite graphs.
//!
//! An equitable k-coloring is a proper coloring whose color classes
//! differ in size by at most one. For complete multipartite graphs
//! `K_{n_1,...,n_l}` this crate computes the *equitable chromatic
//! threshold* — the least `t` such that equitable k-colorings exist for
//! every `k >= t` — in time linear in the number of parts, and constructs
//! an explicit witness coloring for any feasible `k`.
//!
//! Colorability is not monotone in `k` for these graphs (`K_{5,7}` has an
//! equitable 5-coloring but no 6-coloring), which is what makes the
//! threshold interesting and slightly subtle to compute.
//!
//! ```
//! use equipart::{coloring, threshold, PartSizes};
//!
//! let parts = PartSizes::new(vec![3, 3]).unwrap();
//! let report = threshold::chi_star(&parts).unwrap();
//! assert_eq!(report.chi_star(), 4);
//!
//! // A witness coloring with exactly the threshold class count:
//! let plan = coloring::initial_plan(&report);
//! let coloring = coloring::realize(&plan);
//! assert!(coloring::validate(&coloring).ok());
//!
//! // ...and none exists one color below it.
//! assert!(coloring::plan_for_k(&parts, 3).is_none());
//! ```

pub mod coloring;
mod error;
mod parts;
pub mod qpartition;
pub mod threshold;

pub use error::Error;
pub use parts::PartSizes;
