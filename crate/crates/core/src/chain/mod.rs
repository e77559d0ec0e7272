//! Tuple chain complexes, their boundary matrices and integral homology.

pub mod basis;
pub mod complex;
pub mod maps;
pub mod snf;
pub mod sparse;

pub use basis::{basis_index, index_tuple};
pub use complex::{
    boundary_matrix, build_complex, preset_complex, preset_homology, quandle_quotient_complex,
    ChainComplex, CoefficientVector, HomologyGroup, HomologyKind,
};
pub use maps::{f_chain_map, suffix_product_map};
pub use snf::{smith_normal_form, SmithForm};
pub use sparse::SparseIntMatrix;
