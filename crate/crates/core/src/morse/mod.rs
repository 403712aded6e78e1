//! The group `H = Z ⋉_φ Z^n` generated by `ρ` and `τ1, ..., τn`, where
//! conjugation by `ρ` shifts the `τ` indices up by one, with or without a
//! sign change at the wrap from `τn` to `τ1`.

mod element;
mod phi;
mod word;

pub use element::{HElement, MorseGroup};
pub use phi::{
    phi_apply, phi_inverse_apply, phi_matrix, phi_pow_apply, phi_power, phi_power_closed_form,
    ClosedForm, PhiMatrix, Variant,
};
pub use word::{
    check_relations, fold_word, is_trivial_word, normalize, presentation_relators, random_word,
    Generator, HWord, Letter, RelationCheck,
};
