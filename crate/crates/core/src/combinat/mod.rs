//! Partitions, compositions, permutations and standard tableaux.

mod partition;
mod perm;
mod tableau;

pub use partition::{
    dominance_le, dual_partition, enumerate_compositions, parse_parts, partitions_of, Composition, Partition,
};
pub use perm::{longest_element, young_subgroup, Permutation};
pub use tableau::{d_of, residue, std_tableaux, superstandard_tableau, StdTableau};
