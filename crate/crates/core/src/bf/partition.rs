use std::fmt;

use crate::error::{Error, Result};

/// A partition of the variables `1..=n` into symmetry groups.
///
/// Stored canonically: each group ascending, groups ordered by their
/// smallest member, so structural equality is equality of set partitions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SymmetryPartition {
    num_vars: usize,
    groups: Vec<Vec<usize>>,
}

impl SymmetryPartition {
    pub fn new(num_vars: usize, groups: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; num_vars];
        for g in &groups {
            if g.is_empty() {
                return Err(Error::InvalidPartition("empty group".into()));
            }
            for &v in g {
                if v == 0 || v > num_vars {
                    return Err(Error::InvalidPartition(format!(
                        "variable x{v} outside 1..={num_vars}"
                    )));
                }
                if std::mem::replace(&mut seen[v - 1], true) {
                    return Err(Error::InvalidPartition(format!("x{v} in two groups")));
                }
            }
        }
        if let Some(missing) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidPartition(format!(
                "x{} not covered",
                missing + 1
            )));
        }
        let mut groups = groups;
        groups.iter_mut().for_each(|g| g.sort_unstable());
        groups.sort_unstable_by_key(|g| g[0]);
        Ok(SymmetryPartition { num_vars, groups })
    }

    /// Every variable in its own group.
    pub fn singletons(num_vars: usize) -> Self {
        SymmetryPartition {
            num_vars,
            groups: (1..=num_vars).map(|v| vec![v]).collect(),
        }
    }

    /// All variables in one group.
    pub fn whole(num_vars: usize) -> Self {
        SymmetryPartition {
            num_vars,
            groups: vec![(1..=num_vars).collect()],
        }
    }

    /// Consecutive blocks: the first `sizes[0]` variables form group 1, the
    /// next `sizes[1]` group 2, and so on.
    pub fn contiguous(sizes: &[usize]) -> Result<Self> {
        let mut next = 1;
        let mut groups = Vec::with_capacity(sizes.len());
        for &m in sizes {
            if m == 0 {
                return Err(Error::InvalidPartition("empty group".into()));
            }
            groups.push((next..next + m).collect());
            next += m;
        }
        Self::new(next - 1, groups)
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    /// The symmetry level `r`: the number of groups.
    pub fn level(&self) -> usize {
        self.groups.len()
    }

    pub fn groups(&self) -> &[Vec<usize>] {
        &self.groups
    }

    pub fn group_sizes(&self) -> Vec<usize> {
        self.groups.iter().map(Vec::len).collect()
    }

    /// Index into [`groups`](Self::groups) of the group holding `var`.
    pub fn group_of(&self, var: usize) -> Option<usize> {
        self.groups.iter().position(|g| g.contains(&var))
    }

    pub fn same_group(&self, a: usize, b: usize) -> bool {
        matches!((self.group_of(a), self.group_of(b)), (Some(x), Some(y)) if x == y)
    }
}

impl fmt::Display for SymmetryPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, g) in self.groups.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{{")?;
            for (i, v) in g.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "x{v}")?;
            }
            write!(f, "}}")?;
        }
        Ok(())
    }
}
