//! Polyomino tilings by translation-only tile sets.
//!
//! The crate enumerates tilings of finite lattice regions by translated
//! copies of a fixed tile set (no rotations or reflections), extracts
//! boundary-word presentations of tile sets, computes tile counting groups
//! as integer-lattice quotients via Smith normal form, verifies linear tile
//! invariants and coloring-induced invariants over exhaustive region
//! corpora, decides signed tileability over a padded window, analyzes
//! two-tile local-move connectivity of tiling spaces, and classifies which
//! modified rectangles are tileable by the skew tetromino set.

pub mod flips;
pub mod grid;
pub mod invariant;
pub mod lattice;
pub mod mab;
pub mod regions;
pub mod signed;
pub mod solver;
pub mod word;

mod error;

pub use error::{Error, Result};
pub use grid::{normalize, placements, ribbon_set, ribbon_tile, Cell, Placement, Region, Tile, TileSet, Tiling};
pub use lattice::{quotient_shape, smith_normal_form, solve_linear_integer, GroupShape, IntMatrix};
pub use solver::{count_vector, enumerate_tilings, is_tileable, parity_search, EnumerationBudget};
pub use word::{boundary_word, cyclically_equal, presentation, Presentation, Word};
