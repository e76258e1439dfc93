//! Over-under matrices of braid diagrams.
//!
//! A braid diagram on `n` strands, given as a word in the Artin generators
//! σ_i^{±1}, determines an n × n *OU matrix* whose (i, j) entry counts the
//! crossings where strand i passes over strand j. This crate computes that
//! matrix together with everything it carries:
//!
//! - permutation-independent invariants — determinant, rank, characteristic
//!   polynomial, and the over/under crossing multisets — over exact
//!   arbitrary-precision integers ([`matrix`], [`invariants`]);
//! - the *warping degree*: the minimum, over all strand orders, of the sum
//!   of OU entries below the diagonal, solved exactly as a linear ordering
//!   problem by branch and bound ([`warping`]);
//! - *layered decompositions* of diagrams, where earlier strand groups are
//!   never under later ones, including the determinant product rule across
//!   layers ([`layers`]);
//! - generators for the standard families (weaving braids, fundamental
//!   braids, positive permutation braids) and seeded random words
//!   ([`families`]).
//!
//! Strand labels are assigned by top position, left to right, and stay
//! 1-based throughout, as do permutation images; matrix row/column indices
//! are 0-based. The crossing convention is fixed in [`word`].
//!
//! ```
//! use ou_braid::{BraidWord, Permutation};
//!
//! let braid = BraidWord::parse("1 2^4 1 2", None).unwrap();
//! let ou = braid.ou_matrix(&Permutation::identity(3)).unwrap();
//! assert_eq!(ou.det(), 2.into());
//! assert_eq!(ou_braid::warping::wd_exact(&braid, None).value, 3);
//! ```

pub mod error;
pub mod families;
pub mod invariants;
pub mod layers;
pub mod matrix;
pub mod perm;
pub mod warping;
pub mod word;

pub use error::{Error, Result};
pub use invariants::{CrossingMultiset, InvariantReport};
pub use layers::{BlockView, LayerDecomposition, UnderDigraph};
pub use matrix::{CharPoly, IntMatrix};
pub use perm::Permutation;
pub use warping::WdResult;
pub use word::{BraidMove, BraidWord, CrossingEvent};
