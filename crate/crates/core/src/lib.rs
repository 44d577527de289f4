//! Computing with the local dimension of finite posets.
//!
//! The crate builds the Boolean lattice, the singleton poset and bounded
//! multiset lattices ([`poset`]); checks local realizers and assembles them
//! from smaller ones ([`realizer`], [`singleton`]); encodes "local dimension at
//! most `d`" as CNF for an external SAT solver ([`sat`]); and evaluates the
//! conflict-graph and multiset lower bounds ([`bounds`]).

pub mod bounds;
pub mod error;
pub mod fixtures;
pub mod poset;
pub mod realizer;
pub mod sat;
pub mod singleton;

pub use error::{Error, Result};
pub use poset::{ElementId, MultisetElement, Poset, PosetKind, PosetSpec};
pub use realizer::{
    build_bn_realizer, build_standard_realizer, lift_product, validate_ple, verify_local_realizer,
    PartialLinearExtension, RealizerFamily, VerificationReport, Violation, ViolationKind,
};
