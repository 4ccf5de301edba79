//! Bondy and non-Bondy set systems on finite ground sets.
//!
//! A system `𝒜 ⊆ P(S)` is *Bondy* when some element `a` has no pair
//! `A, A ∪ {a} ∈ 𝒜` with `a ∉ A`. This crate provides
//!
//! * the value types ([`SetSystem`], [`SubsetMask`], ...) and the λ, λ₁, ϰ
//!   operators with the Bondy, inclusion-minimality and slenderness predicates
//!   ([`operators`]);
//! * constructive builders with replayable derivation traces ([`builders`]);
//! * exhaustive classification for `s <= 5` and constructive spectrum
//!   certificates for `6 <= s <= 12` ([`enumerate`]);
//! * the document formats and command implementations behind the `bondy`
//!   binary ([`cli`]).

pub mod builders;
pub mod cli;
pub mod enumerate;
pub mod error;
pub mod operators;
pub mod system;

pub use error::{Error, Result};
pub use operators::{
    complement_system, extract_witness_pairs, is_bondy, is_inclusion_minimal_non_bondy, is_slender,
    kappa, lambda, lambda1, minimize, BondyVerdict,
};
pub use system::{ElementSet, GroundSet, SetSystem, SubsetMask, MAX_GROUND};
