//! Counting branched covers of the sphere over three points.
//!
//! A cover of degree `d` branched over three points is encoded by its
//! monodromy, a [`ConstellationPair`] `(alpha, beta)` with
//! `gamma = (alpha ∘ beta)⁻¹`, or equivalently by a dessin d'enfant. For a
//! [`BranchDatum`] the crate enumerates the rigid classes (pairs up to
//! simultaneous conjugation), then quotients them by the dessin moves to get
//! the flexible and very flexible counts, from which all twelve classical
//! counting conventions follow.
//!
//! ```
//! use hurwitz_core::{count, BranchDatum};
//!
//! let datum: BranchDatum = "7; 3,2,1,1; 3,2,1,1; 7".parse().unwrap();
//! let report = count(&datum, 1).unwrap();
//! assert_eq!(report.triple(), (9, 6, 4));
//! ```

pub mod datum;
pub mod dessin;
pub mod error;
pub mod moves;
pub mod oracle;
pub mod perm;
pub mod report;
pub mod rigid;

/// Largest supported degree.
pub const MAX_DEGREE: usize = 16;

pub use datum::{
    check_compatibility, check_compatibility_with_genus, enumerate_compatible_data, BaseSurface,
    BranchDatum,
};
pub use dessin::{emit_dot, emit_json, parse_json, to_map, CombinatorialMap};
pub use error::{Error, Result};
pub use moves::{
    count_flexible, count_very_flexible, mirror, rotate_roles, stabilizer_moves, swap_colours,
    MoveElement, OrbitPartition,
};
pub use oracle::brute_force_counts;
pub use perm::{canonical_class_rep, centralizer_elements, Centralizer, Partition, Permutation};
pub use report::{count, scan, twelve_table, CountReport, ScanEntry, ScanReport};
pub use rigid::{
    class_key, enumerate_rigid_classes, enumerate_rigid_classes_with_jobs, is_transitive,
    ConstellationPair, RigidClassKey,
};
