//! Nested canalyzing functions and their symmetry structure.
//!
//! - [`bf`]: explicit truth tables, permutations and symmetry partitions.
//! - [`ncf`]: rule-list representations, normalization, layers and the
//!   structural symmetry results (pairs, partition, level, strong asymmetry).
//! - [`symtable`]: count tables of `r`-symmetric functions and linear-time
//!   NCF recognition over them.
//! - [`oracle`]: brute-force checks over truth tables and exhaustive
//!   enumeration of NCFs.
//! - [`hardness`]: DIMACS CNF handling and gap instances for the symmetry
//!   level of CNF formulas.

pub mod bf;
mod error;
pub mod hardness;
pub mod ncf;
pub mod oracle;
pub mod symtable;

pub use bf::{Permutation, Restriction, SymmetryPartition, TruthTable};
pub use error::{Error, Result};
pub use hardness::{reduce, verify_claims, ClaimVerdict, CnfFormula, ReductionInstance};
pub use ncf::{Layer, LayerDecomposition, NcfRepr, Rule};
pub use oracle::{EnumerationReport, Limits, Oracle};
pub use symtable::{CanalyzingFinding, NotNcfReason, Recognition, SymTable, Verdict};
