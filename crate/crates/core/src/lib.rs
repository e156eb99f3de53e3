//! Inverse braid monoids of type B and their finite shadows.
//!
//! * [`perm`]: signed partial permutations, the monoid `I(B_n)`, with the rook
//!   monoid `I_n` as its unsigned part; enumeration and counting.
//! * [`word`] and [`presentation`]: the partial-braid alphabets, words and
//!   every relation table, plus the normal-form word builders.
//! * [`eval`]: the evaluation maps `IB(B_n) → I(B_n)` and `IB_n → I_n`,
//!   relation checking, Weyl lifts and surjectivity witnesses.
//! * [`free`]: the monoid `EF_n` of partial conjugating isomorphisms of a
//!   free group and its splitting over `I_n`.
//! * [`abelian`]: the abelianization map.
//! * [`render`]: text, Graphviz and SVG strand diagrams.
//!
//! Products are read left to right: the word `s1 t` first swaps strands
//! 1 and 2, then negates strand 1.
//!
//! ```
//! use invbraid::{eval::rho_b, word::Word};
//!
//! let w = Word::parse("s1 t", 2).unwrap();
//! assert_eq!(rho_b(&w).unwrap().to_string(), "[1->+2, 2->-1]");
//! ```

pub mod abelian;
pub mod error;
pub mod eval;
pub mod free;
pub mod perm;
pub mod presentation;
pub mod render;
pub mod word;

pub use error::{Error, Result};
pub use perm::{Arrow, EnumerationCaps, Sign, SignedPartialPerm};
pub use word::{Generator, Word};
