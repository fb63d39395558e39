//! Brute-force ground truth over explicit truth tables.
//!
//! Nothing here looks at rule lists or layers: every answer comes from
//! evaluating the table on all assignments, so these routines serve as an
//! independent check on the structural results in [`crate::ncf`] and
//! [`crate::symtable`].

mod enumerate;

use itertools::Itertools;

use crate::bf::{Permutation, SymmetryPartition, TruthTable};
use crate::error::{Error, Result};
use crate::ncf::{NcfRepr, Rule};

pub use enumerate::{enumerate_ncfs, EnumerationReport};

/// Size caps for the exponential searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Pairwise symmetry and partitions, `O(n^2 2^n)`. Default 16.
    pub partition_max_vars: usize,
    /// Canalyzing-triple search, `O(n 2^n)`. Default 16.
    pub canalyzing_max_vars: usize,
    /// Recursive NCF recognition. Default 12.
    pub ncf_max_vars: usize,
    /// Permutation search, `O(n! 2^n)`. Default 8.
    pub permutation_max_vars: usize,
    /// Exhaustive representation enumeration, `n! 4^n` items. Default 6.
    pub enumeration_max_vars: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            partition_max_vars: 16,
            canalyzing_max_vars: 16,
            ncf_max_vars: 12,
            permutation_max_vars: 8,
            enumeration_max_vars: 6,
        }
    }
}

fn cap(what: &'static str, max: usize, actual: usize) -> Result<()> {
    if actual > max {
        return Err(Error::Capacity { what, max, actual });
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Oracle {
    pub limits: Limits,
}

impl Oracle {
    pub fn new(limits: Limits) -> Self {
        Oracle { limits }
    }

    /// Whether swapping the values of `x_i` and `x_j` never changes `tt`.
    pub fn pairwise_symmetric(&self, tt: &TruthTable, i: usize, j: usize) -> Result<bool> {
        cap(
            "pairwise symmetry",
            self.limits.partition_max_vars,
            tt.num_vars(),
        )?;
        let n = tt.num_vars();
        for v in [i, j] {
            if v == 0 || v > n {
                return Err(Error::VariableOutOfRange {
                    var: v,
                    num_vars: n,
                });
            }
        }
        Ok(swap_invariant(tt, i, j))
    }

    /// Classes of the pairwise-symmetry relation, which is an equivalence:
    /// `(i k) = (i j)(j k)(i j)`, so invariance under two transpositions
    /// sharing `j` gives invariance under the third.
    pub fn symmetry_partition(&self, tt: &TruthTable) -> Result<SymmetryPartition> {
        cap(
            "symmetry partition",
            self.limits.partition_max_vars,
            tt.num_vars(),
        )?;
        let mut groups: Vec<Vec<usize>> = Vec::new();
        for v in 1..=tt.num_vars() {
            match groups.iter_mut().find(|g| swap_invariant(tt, g[0], v)) {
                Some(g) => g.push(v),
                None => groups.push(vec![v]),
            }
        }
        SymmetryPartition::new(tt.num_vars(), groups)
    }

    /// Every `(x, a, b)` with `tt` constantly `b` once `x = a`, ordered by
    /// variable and then `a = 1` before `a = 0`.
    pub fn canalyzing_rules(&self, tt: &TruthTable) -> Result<Vec<Rule>> {
        cap(
            "canalyzing search",
            self.limits.canalyzing_max_vars,
            tt.num_vars(),
        )?;
        Ok(canalyzing_rules(tt))
    }

    /// Recursive recognition: if `tt` is nested canalyzing, returns a
    /// representation whose truth table equals `tt`.
    pub fn ncf(&self, tt: &TruthTable) -> Result<Option<NcfRepr>> {
        cap("NCF recognition", self.limits.ncf_max_vars, tt.num_vars())?;
        Ok(recognize(tt).map(NcfRepr::from_parts_unchecked))
    }

    /// First non-identity permutation (lexicographic order) leaving `tt`
    /// invariant, if any.
    pub fn invariant_permutation(&self, tt: &TruthTable) -> Result<Option<Permutation>> {
        cap(
            "permutation search",
            self.limits.permutation_max_vars,
            tt.num_vars(),
        )?;
        let n = tt.num_vars();
        Ok((0..n)
            .permutations(n)
            .skip(1)
            .map(|p| Permutation::from_zero_based(&p))
            .find(|p| tt.is_invariant_under(p).expect("sizes match")))
    }

    /// True iff no non-identity permutation leaves `tt` invariant.
    pub fn is_strongly_asymmetric(&self, tt: &TruthTable) -> Result<bool> {
        Ok(self.invariant_permutation(tt)?.is_none())
    }
}

fn swap_invariant(tt: &TruthTable, i: usize, j: usize) -> bool {
    if i == j {
        return true;
    }
    let (bi, bj) = (1u64 << (i - 1), 1u64 << (j - 1));
    (0..tt.len())
        .filter(|a| a & bi != 0 && a & bj == 0)
        .all(|a| tt.get(a) == tt.get(a ^ bi ^ bj))
}

fn canalyzing_rules(tt: &TruthTable) -> Vec<Rule> {
    let n = tt.num_vars();
    let mut out = Vec::new();
    for var in 1..=n {
        for a in [true, false] {
            let forced = if n == 1 {
                Some(tt.get(u64::from(a)))
            } else {
                tt.restrict(var, a).expect("valid variable").is_constant()
            };
            if let Some(b) = forced {
                out.push(Rule::new(var, a, b));
            }
        }
    }
    out
}

/// For `n >= 2`, every canalyzing variable of an NCF leads some rule list
/// for it, and fixing that variable to the other value leaves an NCF on the
/// rest. Taking the first triple found is therefore enough.
fn recognize(tt: &TruthTable) -> Option<Vec<Rule>> {
    if tt.is_constant().is_some() {
        return None;
    }
    if tt.num_vars() == 1 {
        return Some(vec![Rule::new(1, true, tt.get(1))]);
    }
    let first = *canalyzing_rules(tt).first()?;
    let sub = tt
        .restrict_with_map(first.variable, !first.canalyzing)
        .ok()?;
    let rest = recognize(&sub.table)?;
    let mut rules = Vec::with_capacity(tt.num_vars());
    rules.push(first);
    rules.extend(rest.into_iter().map(|r| Rule {
        variable: sub.original_var(r.variable),
        ..r
    }));
    Some(rules)
}

pub fn pairwise_symmetric_bf(tt: &TruthTable, i: usize, j: usize) -> Result<bool> {
    Oracle::default().pairwise_symmetric(tt, i, j)
}

pub fn symmetry_partition_bf(tt: &TruthTable) -> Result<SymmetryPartition> {
    Oracle::default().symmetry_partition(tt)
}

pub fn canalyzing_rules_bf(tt: &TruthTable) -> Result<Vec<Rule>> {
    Oracle::default().canalyzing_rules(tt)
}

pub fn ncf_bf(tt: &TruthTable) -> Result<Option<NcfRepr>> {
    Oracle::default().ncf(tt)
}

pub fn is_strongly_asymmetric_bf(tt: &TruthTable) -> Result<bool> {
    Oracle::default().is_strongly_asymmetric(tt)
}

pub fn invariant_permutation_bf(tt: &TruthTable) -> Result<Option<Permutation>> {
    Oracle::default().invariant_permutation(tt)
}
