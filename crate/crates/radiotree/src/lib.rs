//! Radio labelling of trees, with a focus on two-branch trees.
//!
//! A radio labelling of a tree of diameter `d` assigns non-negative integers to
//! the vertices so that `|f(u) - f(v)| >= d + 1 - d(u, v)` for every pair of
//! distinct vertices. The crate computes the level-based lower bounds for trees
//! rooted at their weight centers, certifies tightness of a bound through a
//! linear order of the vertices, generates several families of two-branch trees
//! together with optimal orders, and includes an exact search for small trees.

pub mod bounds;
pub mod error;
pub mod families;
pub mod labelling;
pub mod metrics;
pub mod order;
pub mod report;
pub mod solver;
pub mod tree;

pub use bounds::{
    certify_tightness, comparison_bound, lower_bound_basic, lower_bound_improved, strict_gap_predicate,
    BoundReport, Certification, CertificationFailure, ComparisonBound, Stage,
};
pub use error::{Error, Result};
pub use families::{rn_formula, Family, FamilyInstance};
pub use labelling::{greedy_label_from_order, label_from_order, verify_labelling, RadioLabelling};
pub use metrics::TreeMetrics;
pub use order::{ASequence, LinearOrder};
pub use report::Report;
pub use solver::{exact_rn, Limits, SolveResult};
pub use tree::Tree;
