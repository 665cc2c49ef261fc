//! Finite skew braces, their Yang–Baxter solutions, and the enumeration of
//! regular subgroups of holomorphs.

pub mod brace;
pub mod catalogue;
pub mod constructions;
pub mod equivalences;
pub mod enumeration;
pub mod error;
pub mod gallery;
pub mod group;
pub mod io;
pub mod perm;
pub mod rings;
pub mod structure;
pub mod ybe;

pub use brace::{brace_isomorphism, verify_skew_brace, SkewBrace};
pub use error::{BraceError, ConstructionError, EnumerationError, EquivalenceError, Error, GroupError, ParseError, RingError};
pub use group::{FiniteGroup, GroupMorphism, Subgroup};
