//! Count tables for `r`-symmetric functions and NCF recognition over them.
//!
//! An `r`-symmetric function depends only on how many variables of each
//! symmetry group are 1. Its count table has one row per tuple
//! `(c_1, ..., c_r)` with `0 <= c_i <= m_i`, so `μ = Π (m_i + 1)` rows.
//! Rows are stored densely in mixed-radix order with `c_1` as the least
//! significant digit, matching the truth-table convention that `x_1` is the
//! least significant input.

mod recognize;
mod text;

use crate::bf::{SymmetryPartition, TruthTable};
use crate::error::{Error, Result};

pub use recognize::{NotNcfReason, Recognition, Verdict};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SymTable {
    group_sizes: Vec<usize>,
    values: Vec<bool>,
}

/// A canalyzing group located by [`SymTable::find_canalyzing`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CanalyzingFinding {
    /// 0-based index into the table's groups.
    pub group_index: usize,
    pub canalyzing: bool,
    pub canalyzed: bool,
}

pub(crate) fn row_count(sizes: &[usize]) -> usize {
    sizes.iter().map(|m| m + 1).product()
}

pub(crate) fn strides(sizes: &[usize]) -> Vec<usize> {
    let mut stride = 1;
    sizes
        .iter()
        .map(|m| {
            let s = stride;
            stride *= m + 1;
            s
        })
        .collect()
}

impl SymTable {
    pub fn new(group_sizes: Vec<usize>, values: Vec<bool>) -> Result<Self> {
        if group_sizes.is_empty() {
            return Err(Error::Domain(
                "a count table needs at least one group".into(),
            ));
        }
        if group_sizes.contains(&0) {
            return Err(Error::Domain("group sizes must be positive".into()));
        }
        let n: usize = group_sizes.iter().sum();
        if n > TruthTable::MAX_VARS {
            return Err(Error::Capacity {
                what: "count table",
                max: TruthTable::MAX_VARS,
                actual: n,
            });
        }
        let mu = row_count(&group_sizes);
        if values.len() != mu {
            return Err(Error::Dimension {
                expected: mu,
                actual: values.len(),
            });
        }
        Ok(SymTable {
            group_sizes,
            values,
        })
    }

    /// Builds a table by evaluating `f` on every count tuple.
    pub fn from_fn(group_sizes: Vec<usize>, mut f: impl FnMut(&[usize]) -> bool) -> Result<Self> {
        let mu = row_count(&group_sizes);
        let values = (0..mu)
            .map(|row| f(&Self::decode(&group_sizes, row)))
            .collect();
        Self::new(group_sizes, values)
    }

    fn decode(sizes: &[usize], mut row: usize) -> Vec<usize> {
        sizes
            .iter()
            .map(|m| {
                let c = row % (m + 1);
                row /= m + 1;
                c
            })
            .collect()
    }

    pub fn group_sizes(&self) -> &[usize] {
        &self.group_sizes
    }

    /// Symmetry level `r` of the table.
    pub fn level(&self) -> usize {
        self.group_sizes.len()
    }

    pub fn num_vars(&self) -> usize {
        self.group_sizes.iter().sum()
    }

    /// Row count `μ`.
    pub fn row_count(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[bool] {
        &self.values
    }

    /// Row index of a count tuple, or `None` if a count is out of range.
    pub fn row_index(&self, counts: &[usize]) -> Option<usize> {
        if counts.len() != self.group_sizes.len() {
            return None;
        }
        let mut idx = 0;
        for ((&c, &m), s) in counts
            .iter()
            .zip(&self.group_sizes)
            .zip(strides(&self.group_sizes))
        {
            if c > m {
                return None;
            }
            idx += c * s;
        }
        Some(idx)
    }

    pub fn get(&self, counts: &[usize]) -> Option<bool> {
        self.row_index(counts).map(|i| self.values[i])
    }

    /// `(counts, value)` for every row in storage order.
    pub fn rows(&self) -> impl Iterator<Item = (Vec<usize>, bool)> + '_ {
        self.values
            .iter()
            .enumerate()
            .map(|(i, &v)| (Self::decode(&self.group_sizes, i), v))
    }

    fn check_partition(sizes: &[usize], partition: &SymmetryPartition) -> Result<()> {
        let theirs = partition.group_sizes();
        if theirs.len() != sizes.len() {
            return Err(Error::Dimension {
                expected: sizes.len(),
                actual: theirs.len(),
            });
        }
        if theirs != sizes {
            return Err(Error::Domain(format!(
                "partition group sizes {theirs:?} do not match table groups {sizes:?}"
            )));
        }
        Ok(())
    }

    /// Builds the count table of `tt` under `partition`, failing with a
    /// witness pair if `tt` is not symmetric within every group.
    pub fn from_truth_table(tt: &TruthTable, partition: &SymmetryPartition) -> Result<SymTable> {
        if partition.num_vars() != tt.num_vars() {
            return Err(Error::Dimension {
                expected: tt.num_vars(),
                actual: partition.num_vars(),
            });
        }
        let sizes = partition.group_sizes();
        let strides = strides(&sizes);
        let masks: Vec<u64> = partition
            .groups()
            .iter()
            .map(|g| g.iter().fold(0u64, |m, &v| m | (1 << (v - 1))))
            .collect();
        let mut first_seen: Vec<Option<u64>> = vec![None; row_count(&sizes)];
        let mut values = vec![false; first_seen.len()];
        for a in 0..tt.len() {
            let row: usize = masks
                .iter()
                .zip(&strides)
                .map(|(m, s)| (a & m).count_ones() as usize * s)
                .sum();
            let v = tt.get(a);
            match first_seen[row] {
                None => {
                    first_seen[row] = Some(a);
                    values[row] = v;
                }
                Some(b) if values[row] != v => {
                    return Err(Error::NotSymmetricUnderPartition {
                        first: b,
                        second: a,
                    });
                }
                Some(_) => {}
            }
        }
        SymTable::new(sizes, values)
    }

    /// Expands the table over the variables of `partition`.
    pub fn to_truth_table(&self, partition: &SymmetryPartition) -> Result<TruthTable> {
        Self::check_partition(&self.group_sizes, partition)?;
        let strides = strides(&self.group_sizes);
        let masks: Vec<u64> = partition
            .groups()
            .iter()
            .map(|g| g.iter().fold(0u64, |m, &v| m | (1 << (v - 1))))
            .collect();
        TruthTable::from_fn(partition.num_vars(), |a| {
            let row: usize = masks
                .iter()
                .zip(&strides)
                .map(|(m, s)| (a & m).count_ones() as usize * s)
                .sum();
            self.values[row]
        })
    }

    /// The first group (ascending) holding a canalyzing variable, trying
    /// canalyzing value 1 before 0.
    pub fn find_canalyzing(&self) -> Option<CanalyzingFinding> {
        let mut visits = 0;
        find_canalyzing_in(&self.group_sizes, &self.values, &mut visits)
    }
}

/// Canalyzing test on a raw table. Group `p` is canalyzing with value 1
/// when every row with `c_p >= 1` agrees, and with value 0 when every row
/// with `c_p < m_p` agrees. Each scanned row adds one to `visits`.
pub(crate) fn find_canalyzing_in(
    sizes: &[usize],
    values: &[bool],
    visits: &mut u64,
) -> Option<CanalyzingFinding> {
    let strides = strides(sizes);
    for (p, (&m, &stride)) in sizes.iter().zip(&strides).enumerate() {
        for canalyzing in [true, false] {
            let selected = |row: usize| {
                let c = (row / stride) % (m + 1);
                if canalyzing {
                    c >= 1
                } else {
                    c < m
                }
            };
            let mut forced: Option<bool> = None;
            let mut agree = true;
            for (row, &v) in values.iter().enumerate() {
                *visits += 1;
                if !selected(row) {
                    continue;
                }
                match forced {
                    None => forced = Some(v),
                    Some(b) if b != v => {
                        agree = false;
                        break;
                    }
                    Some(_) => {}
                }
            }
            if agree {
                if let Some(canalyzed) = forced {
                    return Some(CanalyzingFinding {
                        group_index: p,
                        canalyzing,
                        canalyzed,
                    });
                }
            }
        }
    }
    None
}
