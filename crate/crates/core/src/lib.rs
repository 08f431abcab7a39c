//! Domain-structured chaos on symbolic cylinder structures.
//!
//! The crate models sets whose points carry labels `F_{i_1 i_2 …}` over the
//! symbols `1..=m`, the shift map acting on those labels, and the geometry
//! (distances, cylinder diameters) that decides whether the shift is chaotic.
//! On top of that it offers finite-horizon checks of the diameter and
//! separation conditions, witness constructions for the Devaney ingredients,
//! Li-Yorke pairs and cylinder returns, and seeded finite-state random
//! processes whose realizations are read as symbolic points.
//!
//! All arithmetic on distances is exact ([`rational::Rational`]).

pub mod cli;
pub mod error;
pub mod limits;
pub mod process;
pub mod rational;
pub mod render;
pub mod structures;
pub mod symbolic;
pub mod verification;

pub use error::{Error, Result};
pub use limits::Limits;
pub use rational::{Interval, Rational};
pub use structures::{
    load_structure, load_structure_str, CantorStructure, Capabilities, ChaoticStructure,
    FiniteStateStructure, MAdicIntervalStructure,
};
pub use symbolic::{
    concat_point, enumerate_words, periodic_point, transitive_prefix, Alphabet, SymbolicPoint, Word,
};
pub use verification::{Verdict, VerificationReport};
