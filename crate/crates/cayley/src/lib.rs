//! Finite groups as multiplication tables.
//!
//! The crate builds the standard small-group families, counts their cyclic
//! subgroups (the census and the deficiency |G| - |C(G)|), exposes
//! subgroup-level structure (center, lattice, Frattini and Sylow subgroups,
//! isomorphism testing), and enumerates all groups of a small order up to
//! isomorphism. A thin CLI fronts the same functionality; see the crate
//! examples for the library surface, one per capability:
//!
//! ```sh
//! cargo run --example census_basics
//! cargo run --example deficiency_scan
//! ```

pub mod census;
pub mod cli;
pub mod construct;
pub mod corpus;
pub mod enumerate;
pub mod expr;
pub mod group;
pub mod structure;
pub mod verify;

pub use census::{census, count_of_order, cyclic_subgroups, is_elementary_abelian_2,
    prime_factorization, totient, CyclicCensus};
pub use construct::{alternating, automorphism_from_images, central_product, cyclic, dicyclic,
    dihedral, direct_product, elementary_abelian, ext16, extraspecial, from_permutations,
    quotient, semidirect_product, symmetric, ConstructError, Morphism, Sign};
pub use enumerate::{count_groups, enumerate_groups, enumerate_groups_with, identify,
    scan_enumerated, scan_groups, EnumerationError, IsoClassReport, ScanHit, SearchOptions};
pub use expr::{parse_spec, GroupSpec, ParseError};
pub use group::{ElementSet, Group, GroupError, MAX_ORDER};
pub use structure::{are_isomorphic, automorphisms, center, centralizer, commutator_subgroup,
    frattini, is_normal, isomorphism, minimal_generating_set, normalizer, subgroup_as_group,
    subgroup_lattice, sylow, StructureError, SubgroupLattice};
