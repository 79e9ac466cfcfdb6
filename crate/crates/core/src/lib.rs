//! Temperley-Lieb diagrams of type A.
//!
//! Diagrams are non-crossing perfect matchings multiplied with the loop relation
//! `loop = δ`. Words over `s_1..s_n` map to diagrams by multiplying simple
//! diagrams, and [`factorize::factor`] inverts that map: given a loop-free
//! diagram it returns the Cartier-Foata normal form of the fully commutative
//! element indexing it.

pub mod algebra;
pub mod cli;
pub mod diagram;
pub mod enumerate;
pub mod error;
pub mod factorize;
pub mod heaps;
pub mod render;
pub mod words;

pub use algebra::{DeltaPoly, TLElement};
pub use diagram::{Chord, Diagram, Endpoint, Face};
pub use enumerate::{catalan, enumerate_diagrams, enumerate_fc, FcCatalog};
pub use error::{Error, Result};
pub use factorize::{factor, factor_multiplicities, region_graph, RegionGraph, RegionId};
pub use heaps::Heap;
pub use words::Word;
