//! Strong edge colorings: constructions for unitary Cayley graphs and Cartesian products
//! with trees, lower bounds, a verifier, and an exact branch-and-bound solver.

mod bitset;
pub mod cayley;
pub mod coloring;
pub mod constructors;
pub mod error;
pub mod exact;
pub mod graph;
pub mod product;

pub use cayley::{
    cayley_strong_coloring, chi_s_formula, max_induced_matching_size, MatchingFamilyKey,
};
pub use coloring::{
    verify_proper, verify_strong, Color, ColorClassPartition, ColoringJson, EdgeColoring,
    VerificationReport, Violation, ViolationKind,
};
pub use constructors::{
    cartesian_product, categorical_product, cycle, factorize, hypercube, jellyfish, path,
    random_tree, random_tree_corpus, signature, star, tree_from_edges, unitary_cayley,
    Factorization, ProductLabel, ResidueSignature,
};
pub use error::{Error, Result};
pub use exact::{
    conflict_graph, counting_lower_bound, exact_chi_s, greedy_strong_coloring, ConflictGraph,
    SolveResult, DEFAULT_BUDGET,
};
pub use graph::{Distance, Edge, Graph};
pub use product::{
    bounds_table, jellyfish_lower_bound, star_product_class_census, star_product_coloring,
    tree_cycle_budget, tree_cycle_coloring, tree_cycle_lower_bound, tree_product_coloring,
    tree_product_lower_bound, BoundsReport, CycleFiberMatchings, PaletteTuple, RootedTreeView,
};
