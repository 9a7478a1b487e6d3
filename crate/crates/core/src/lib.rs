//! Polygon tilings, the Scott permutation, flip classes, strand diagrams and
//! rhombic plabic graphs.
//!
//! A [`Tiling`] of the `n`-gon is a set of non-crossing diagonals. Each tiling
//! carries a strand diagram whose boundary permutation is the Scott
//! permutation ([`scott::scott_perm`]); two tilings share a Scott permutation
//! exactly when they are flip equivalent ([`flipclasses`]).

pub mod enumerate;
pub mod error;
pub mod flipclasses;
pub mod perm;
pub mod plabic;
pub mod scott;
pub mod strandmap;
pub mod tiling;
pub mod verify;

pub use error::{Error, Result};
pub use perm::Permutation;
pub use tiling::{Diagonal, DualTree, Tile, Tiling, Vertex};
