//! Exact construction and manipulation of indices and Q-linear combinations
//! of indices: weights, depths, Hoffman's dual, the phi-map, star expansion,
//! and the F/G/H operator constructions.

mod combination;
mod index;
mod operators;

pub use combination::IndexCombination;
pub use index::{
    compositions, indices_of_weight, indices_up_to_weight, weak_compositions, Index, NonNegSeq,
};
pub use operators::{
    build_f, build_g, build_g1, build_g2, build_h, hoffman_dual, phi, phi_combination, star_expand,
};

pub(crate) use operators::check_triple;
