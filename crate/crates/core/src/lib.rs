//! Finite shelves, racks, quandles and multi-shelves, and exact integral
//! homology of their chain complexes and shelf complexes.

pub mod chain;
pub mod constructions;
pub mod error;
pub mod explore;
pub mod families;
pub mod io;
pub mod iso;
pub mod orbits;
pub mod simplicial;
pub mod table;

pub use error::{Error, Result};
pub use table::{validate_multishelf, validate_shelf, BinaryOpTable, MultiShelf, Shelf};
