//! Iterated wreath products `C_i1 ≀ C_i2 ≀ ... ≀ C_im` of finite cyclic groups,
//! acting on a truncated rooted tree with `i_l` children per level-`(l-1)` vertex.

mod element;
mod generators;
mod signature;

pub use element::{closure, LeafWord, TreeElement, WreathGroup};
pub use generators::{
    canonical_extraction, canonical_generators, directed_generator, lcm_except, rooted_generator,
    spine_states, standard_directed_generator, two_generator_direct_product, verify_generation,
    CanonicalExtraction, DirectProduct, Pairing, ProductElement, SpinePath, StateRecursion,
};
pub use signature::{Signature, MAX_LABELS};
