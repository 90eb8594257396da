//! Long-square-free words and long-repetition-free 2-colorings of trees.
//!
//! A word is *long-square-free* when it has no factor `uu` with `|u| >= 3`.
//! A vertex coloring of a tree is *long-repetition-free* when the color word
//! of every path is long-square-free. The crate provides:
//!
//! - [`words`]: binary words, long squares and long palindromes, and the
//!   exhaustive word-level sweeps;
//! - [`trees`]: rooted trees, centers and radii, and Tyler trees;
//! - [`coloring`]: generation colorings, certificate-producing verification
//!   and the finite turn-word reduction for small radius;
//! - [`pigeonhole`]: monochromatic binary subtree extraction and the
//!   palindrome reflection that refutes 2-colorings;
//! - [`search`]: exact backtracking search with a brute-force census oracle;
//! - [`format`]: the text file formats for trees, colorings and certificates.

pub mod coloring;
pub mod format;
pub mod pigeonhole;
pub mod random;
pub mod search;
pub mod trees;
pub mod words;

pub use coloring::{Coloring, LrfCertificate, Violation};
pub use trees::{RootedTree, TylerSpec, Vertex};
pub use words::{PalindromeWitness, SquareWitness, Word};
