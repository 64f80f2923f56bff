//! Eternal distance-k domination on trees.
//!
//! The crate computes the eternal distance-2 domination number of a tree in
//! linear time, cross-checks it against an exact game solver that works for
//! any distance `k`, and provides the classic domination parameters together
//! with generators and recognizers for the tree families that govern when
//! these parameters coincide.
//!
//! ```
//! use eternal_domination::{eternal, graph::Tree};
//!
//! let path = Tree::path(7);
//! assert_eq!(eternal::eternal2_algorithm1(&path, 0).unwrap().value, 3);
//! ```

pub mod domination;
pub mod error;
pub mod eternal;
pub mod families;
pub mod graph;
pub mod harness;
pub mod oracle;

pub use error::{GraphError, ParseError};
pub use graph::{Graph, Tree};
