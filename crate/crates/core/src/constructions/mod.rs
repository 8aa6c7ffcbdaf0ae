//! Concrete groups: permutations, matrices over GF(p), affine groups
//! `GF(p)^n ⋊ M`, the order-150 and order-199650 examples, and the twisted
//! polynomial ring family.

mod matrix;
mod named;
mod perm;
mod spec;
mod twisted;

pub use matrix::{AffineElem, MatrixElem};
pub use named::{
    g150_action, h199650_action, make_g150, make_h199650, make_matrix_group, make_named,
    make_semidirect, quaternion_generators, semidirect_generators, NAMED_FAMILIES,
};
pub use perm::{DihedralElem, PermElem};
pub use spec::{catalog, concrete_elements, CatalogEntry, GroupSpec};
pub use twisted::{
    make_s, make_su, make_twisted_group, psi_u, sample_ring_identities,
    sample_ring_identities_seeded, sylow_scalar, tn_sequence,
    twisted_generators, twisted_mul, twisted_parts, PrincipalUnit, SampledIdentity,
    TwistedGroupElem, TwistedParts, TwistedRing, TwistedRingElem, MAX_ENUMERATED_DEGREE,
    MAX_RING_DEGREE,
};
