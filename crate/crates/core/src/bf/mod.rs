//! Explicit truth tables, variable permutations and symmetry partitions.

mod partition;
mod perm;
mod table;

pub use partition::SymmetryPartition;
pub use perm::Permutation;
pub use table::{Restriction, TruthTable};
