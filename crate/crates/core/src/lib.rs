//! Finite groups given by multiplication tables, Todd–Coxeter coset
//! enumeration, nonabelian tensor and exterior squares, Schur multipliers,
//! and the enumeration and classification of multiplicative Lie algebra
//! structures on a group.

pub mod abelian;
pub mod coset;
pub mod error;
pub mod families;
pub mod group;
pub mod hom;
pub mod iso;
pub mod mla;
pub mod perm;
pub mod presentation;
pub mod wedge;

pub use abelian::{abelian_invariants, divisor_count, AbelianInvariants};
pub use coset::{group_from_cosets, todd_coxeter, todd_coxeter_with, CosetTable, EnumerationLimits, Strategy};
pub use error::{Error, Result};
pub use families::{builtin_family, Family};
pub use group::{CayleyTree, FiniteGroup, Subgroup};
pub use hom::{enumerate_homs, hom_from_generator_images, GroupHom};
pub use iso::{are_isomorphic, are_isomorphic_bounded};
pub use perm::{group_from_permutations, parse_generator_list, Permutation};
pub use presentation::{eliminate_short_relators, parse_presentation, Presentation, Word};
pub use wedge::{
    commutator_hom, conjugation_action, exterior_square, square_presentation, tensor_square, SchurData,
    SquareKind, WedgeConfig, WedgeSquare,
};
pub use mla::{
    check_wedge_conditions, classes_are_lie_simple, classify_structures, enumerate_equivariant_homs,
    enumerate_structures_direct, enumerate_structures_direct_with, enumerate_structures_via_wedge,
    induced_hom_from_structure, is_lie_simple, is_valid_structure, star_ideal, structure_from_hom,
    verify_axioms, AxiomReport, EquivariantHoms, IdealDescriptor, MlaStructure, StructureClass, Violation,
    WedgeEnumeration,
};
