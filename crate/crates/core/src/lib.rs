//! Symbolic algebra for the lifted Artin representation of the extended loop
//! braid group `LBE_n` into automorphisms of the free abelian group–group pair
//! `M_n = (F_n, Z[F_n]{K1..Kn}, ▷)`.
//!
//! The representation is faithful, so comparing images decides equality of
//! braid words exactly. Coefficient arithmetic is generic over [`Coefficient`];
//! the aliases below fix it to arbitrary-precision integers.

pub mod aggmorph;
pub mod artin;
pub mod braid;
pub mod coeff;
pub mod error;
pub mod freewords;
pub mod golden;
pub mod membership;
pub mod modring;
pub mod relations;

pub use num_bigint::BigInt;

pub use aggmorph::{Automorphism, Morphism};
pub use artin::{dahm, equal_in_group, evaluate, evaluate_morphism, gen_rho, gen_sigma, gen_tau};
pub use braid::{BraidToken, BraidWord, GenKind};
pub use coeff::Coefficient;
pub use error::{Error, Result};
pub use freewords::{FreeGroupEndo, Letter, Word};
pub use membership::{artin_conditions, conserves_flux, goldsmith_form, ConjugacyForm};
pub use modring::{GroupRing, Module};
pub use relations::{verify_relations, RelationReport, Schema};

/// Element of `Z[F_n]{K1..Kn}` with big-integer coefficients.
pub type ModuleElt = Module<BigInt>;
/// Element of `Z[F_n]` with big-integer coefficients.
pub type GroupRingElt = GroupRing<BigInt>;
pub type AggMorphism = Morphism<BigInt>;
pub type AggAutomorphism = Automorphism<BigInt>;

/// Machine-integer variants; faster, but may overflow on long words.
pub type ModuleElt64 = Module<i64>;
pub type AggMorphism64 = Morphism<i64>;
pub type AggAutomorphism64 = Automorphism<i64>;
