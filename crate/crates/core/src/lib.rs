//! Combinatorial classification of spherical, toric and wonderful Schubert
//! and Bott-Samelson-Demazure-Hansen (BSDH) varieties over finite Weyl groups.

pub mod cli;
pub mod decomp;
pub mod error;
pub mod oracle;
pub mod posets;
pub mod rootsys;
pub mod schubert;
pub mod spherical;
pub mod subset;
pub mod weyl;
pub mod word;

pub use error::{Error, Result};
pub use rootsys::{CartanType, RootSystem, RootVector, TypeSpec};
pub use subset::SimpleSubset;
pub use weyl::{enumerate_group, longest_element, WeylElt};
pub use word::Word;
