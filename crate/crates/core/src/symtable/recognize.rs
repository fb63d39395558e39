use std::fmt;

use crate::bf::SymmetryPartition;
use crate::error::Result;
use crate::ncf::{NcfRepr, Rule};
use crate::symtable::{find_canalyzing_in, strides, SymTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NotNcfReason {
    /// No remaining group holds a canalyzing variable.
    NoCanalyzingGroup { remaining_groups: usize },
    /// Every group canalyzed but the final row repeats the last canalyzed
    /// value, so the function ignores some variable (or is constant).
    MissingDependence,
}

impl fmt::Display for NotNcfReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NotNcfReason::NoCanalyzingGroup { remaining_groups } => write!(
                f,
                "no canalyzing variable among {remaining_groups} remaining group(s)"
            ),
            NotNcfReason::MissingDependence => write!(f, "does not depend on all variables"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Ncf(NcfRepr),
    NotNcf(NotNcfReason),
}

/// Outcome of [`SymTable::recognize_ncf`] with per-iteration bookkeeping.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Recognition {
    pub verdict: Verdict,
    /// Row count of the working table at the start of each iteration,
    /// followed by the final row count when all groups were consumed.
    pub mu_trace: Vec<usize>,
    /// Rows scanned by the canalyzing tests and restrictions.
    pub row_visits: u64,
}

impl Recognition {
    pub fn ncf(&self) -> Option<&NcfRepr> {
        match &self.verdict {
            Verdict::Ncf(f) => Some(f),
            Verdict::NotNcf(_) => None,
        }
    }

    /// True iff every iteration at least halved the working table.
    pub fn halving_holds(&self) -> bool {
        self.mu_trace.windows(2).all(|w| 2 * w[1] <= w[0])
    }
}

/// Keeps the rows whose digit for group `p` equals `count`, dropping that digit.
fn restrict_group(
    sizes: &[usize],
    values: &[bool],
    p: usize,
    count: usize,
    visits: &mut u64,
) -> Vec<bool> {
    let stride = strides(sizes)[p];
    let radix = sizes[p] + 1;
    values
        .iter()
        .enumerate()
        .filter(|(row, _)| {
            *visits += 1;
            (row / stride) % radix == count
        })
        .map(|(_, &v)| v)
        .collect()
}

impl SymTable {
    /// Decides whether the function given by this table under `partition`
    /// is nested canalyzing, and if so rebuilds a representation of it.
    ///
    /// Each iteration finds a canalyzing group, emits one rule per variable
    /// of that group (ascending), then keeps only the rows where the whole
    /// group takes the complement of the canalyzing value.
    pub fn recognize_ncf(&self, partition: &SymmetryPartition) -> Result<Recognition> {
        Self::check_partition(&self.group_sizes, partition)?;
        let mut sizes = self.group_sizes.clone();
        let mut values = self.values.clone();
        // Original group index of each remaining group.
        let mut origin: Vec<usize> = (0..sizes.len()).collect();
        let mut rules = Vec::with_capacity(self.num_vars());
        let mut mu_trace = vec![values.len()];
        let mut row_visits = 0;
        let done = |verdict, mu_trace, row_visits| Recognition {
            verdict,
            mu_trace,
            row_visits,
        };

        while !sizes.is_empty() {
            let Some(found) = find_canalyzing_in(&sizes, &values, &mut row_visits) else {
                let reason = NotNcfReason::NoCanalyzingGroup {
                    remaining_groups: sizes.len(),
                };
                return Ok(done(Verdict::NotNcf(reason), mu_trace, row_visits));
            };
            let p = found.group_index;
            for &var in &partition.groups()[origin[p]] {
                rules.push(Rule::new(var, found.canalyzing, found.canalyzed));
            }
            let keep = if found.canalyzing { 0 } else { sizes[p] };
            let before = values.len();
            values = restrict_group(&sizes, &values, p, keep, &mut row_visits);
            debug_assert!(2 * values.len() <= before, "row count did not halve");
            sizes.remove(p);
            origin.remove(p);
            mu_trace.push(values.len());
        }

        debug_assert_eq!(values.len(), 1);
        let last = rules.last().expect("at least one group").canalyzed;
        if values[0] == last {
            return Ok(done(
                Verdict::NotNcf(NotNcfReason::MissingDependence),
                mu_trace,
                row_visits,
            ));
        }
        let ncf = NcfRepr::new(rules, values[0])?;
        Ok(done(Verdict::Ncf(ncf), mu_trace, row_visits))
    }
}
