//! Exact Sombor index and coindex computations over two-trees.
//!
//! The crate covers bitset graphs with canonical labeling, exact radical
//! arithmetic, the named extremal families, closed forms and lemma checks,
//! exhaustive enumeration of two-trees by order, and the ranking harness that
//! checks extremal claims against the enumeration.

pub mod canon;
pub mod enumerate;
pub mod error;
pub mod extremal;
pub mod families;
pub mod format;
pub mod formulas;
pub mod graph;
pub mod indices;
pub mod lemmas;
pub mod radical;

pub use canon::{are_isomorphic, canonical_form, canonical_key, CanonicalKey};
pub use enumerate::{
    count_two_trees, enumerate_two_trees, oracle_filter_count, EnumLevel, Enumerator, Manifest,
};
pub use error::{Error, Result};
pub use extremal::{
    conjecture_report, rank_by, verify_claims, verify_theorems, ConjectureReport, Direction,
    ExtremalReport,
};
pub use families::{
    complete, complete_bipartite, from_recipe, l_graph, linear_two_tree, x_graph, Family,
    TwoTreeRecipe,
};
pub use format::{export_graph, from_graph6, to_dot, to_graph6, ExportFormat};
pub use formulas::ConjectureReading;
pub use graph::Graph;
pub use indices::{
    edge_weight, sombor_coindex, sombor_index, total_pair_sum, IndexKind, IndexValue,
};
pub use radical::RadicalSum;
