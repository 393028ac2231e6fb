//! Constructive colorings and bounds for Cartesian products with trees.

pub mod bounds;
pub mod cycle;
mod fiber;
pub mod star;
pub mod tree;

pub use bounds::{
    bounds_table, jellyfish_lower_bound, tree_cycle_budget, tree_cycle_lower_bound,
    tree_product_lower_bound, Bound, BoundsReport, LengthClass,
};
pub use cycle::{palette_tuples, tree_cycle_coloring, CycleFiberMatchings, PaletteTuple};
pub use star::{star_product_class_census, star_product_coloring, ClassKind, StarCensus};
pub use tree::{tree_product_coloring, LayerColoring, RootedTreeView};
