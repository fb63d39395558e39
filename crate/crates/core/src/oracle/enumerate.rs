use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use itertools::Itertools;
use rayon::prelude::*;

use crate::bf::TruthTable;
use crate::error::{Error, Result};
use crate::ncf::{cascade_words, NcfRepr, Rule};
use crate::oracle::{cap, Oracle};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationReport {
    pub n: usize,
    pub distinct_ncf_count: u64,
    pub strongly_asymmetric_count: u64,
    /// Symmetry level to number of distinct NCFs with that level.
    pub level_histogram: BTreeMap<usize, u64>,
}

impl EnumerationReport {
    /// `n=<n> ncfs=<c1> strong=<c2> levels=<l:k,...>`
    pub fn machine_line(&self) -> String {
        let levels = self
            .level_histogram
            .iter()
            .map(|(l, k)| format!("{l}:{k}"))
            .join(",");
        format!(
            "n={} ncfs={} strong={} levels={}",
            self.n, self.distinct_ncf_count, self.strongly_asymmetric_count, levels
        )
    }
}

impl fmt::Display for EnumerationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "variables:            {}", self.n)?;
        writeln!(f, "representations:      {}", representation_count(self.n))?;
        writeln!(f, "distinct NCFs:        {}", self.distinct_ncf_count)?;
        writeln!(
            f,
            "strongly asymmetric:  {}",
            self.strongly_asymmetric_count
        )?;
        writeln!(f, "by symmetry level:")?;
        for (level, count) in &self.level_histogram {
            writeln!(f, "  {level:>2}: {count}")?;
        }
        Ok(())
    }
}

/// `n! · 2^n · 2^n`
fn representation_count(n: usize) -> u128 {
    (1..=n as u128).product::<u128>() << (2 * n)
}

type Shard = Vec<(Vec<u64>, NcfRepr)>;

/// All representations sharing one variable order, first occurrence of
/// each truth table kept, in generation order.
fn shard(order: &[usize]) -> Shard {
    let n = order.len();
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    let mut out = Vec::new();
    let mut rules: Vec<Rule> = order
        .iter()
        .map(|&v| Rule::new(v + 1, false, false))
        .collect();
    for a_bits in 0u32..1 << n {
        for b_bits in 0u32..1 << n {
            for (k, r) in rules.iter_mut().enumerate() {
                r.canalyzing = (a_bits >> k) & 1 == 1;
                r.canalyzed = (b_bits >> k) & 1 == 1;
            }
            let default = !rules[n - 1].canalyzed;
            let key = cascade_words(n, &rules, default);
            if seen.insert(key.clone()) {
                out.push((key, NcfRepr::from_parts_unchecked(rules.clone())));
            }
        }
    }
    out
}

impl Oracle {
    /// Every distinct NCF on `n` variables, produced by expanding all
    /// `n! 4^n` representations and deduplicating by truth table. Ordered
    /// by truth table.
    pub fn distinct_ncfs(&self, n: usize) -> Result<Vec<(TruthTable, NcfRepr)>> {
        if n < 2 {
            return Err(Error::Domain(format!("enumeration needs n >= 2, got {n}")));
        }
        cap("enumeration", self.limits.enumeration_max_vars, n)?;
        let orders: Vec<Vec<usize>> = (0..n).permutations(n).collect();
        let shards: Vec<Shard> = orders.par_iter().map(|o| shard(o)).collect();
        let mut merged: HashMap<Vec<u64>, NcfRepr> = HashMap::new();
        for (key, repr) in shards.into_iter().flatten() {
            merged.entry(key).or_insert(repr);
        }
        let mut out: Vec<(TruthTable, NcfRepr)> = merged
            .into_iter()
            .map(|(words, repr)| (TruthTable::from_words(n, words).expect("valid words"), repr))
            .collect();
        out.sort_unstable_by(|x, y| x.0.cmp(&y.0));
        Ok(out)
    }

    /// Counts distinct NCFs, strongly asymmetric ones and the level
    /// histogram. Levels come from the layer structure of each function's
    /// normalized representation.
    pub fn enumerate_ncfs(&self, n: usize) -> Result<EnumerationReport> {
        let all = self.distinct_ncfs(n)?;
        let mut level_histogram = BTreeMap::new();
        let mut strong = 0;
        for (_, repr) in &all {
            let level = repr.normalize().symmetry_partition()?.level();
            *level_histogram.entry(level).or_insert(0) += 1;
            if level == n {
                strong += 1;
            }
        }
        Ok(EnumerationReport {
            n,
            distinct_ncf_count: all.len() as u64,
            strongly_asymmetric_count: strong,
            level_histogram,
        })
    }
}

pub fn enumerate_ncfs(n: usize) -> Result<EnumerationReport> {
    Oracle::default().enumerate_ncfs(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::ncf_bf;
    use crate::oracle::Limits;

    #[test]
    fn two_variables_against_all_tables() {
        let report = enumerate_ncfs(2).unwrap();
        assert_eq!(report.distinct_ncf_count, 8);
        assert_eq!(report.strongly_asymmetric_count, 4);
        let by_oracle = (0u64..16)
            .filter(|&w| {
                let t = TruthTable::from_words(2, vec![w]).unwrap();
                ncf_bf(&t).unwrap().is_some()
            })
            .count();
        assert_eq!(by_oracle, 8);
        assert_eq!(report.machine_line(), "n=2 ncfs=8 strong=4 levels=1:4,2:4");
    }

    #[test]
    fn three_variables() {
        let report = enumerate_ncfs(3).unwrap();
        assert_eq!(report.strongly_asymmetric_count, 24);
        assert_eq!(report.distinct_ncf_count, 64);
        assert_eq!(
            report.machine_line(),
            "n=3 ncfs=64 strong=24 levels=1:4,2:36,3:24"
        );
    }

    #[test]
    fn four_variables_match_exhaustive_table_scan() {
        // Frozen from a scan of all 65536 four-variable tables with an
        // independent recursive recognizer, level search and permutation search.
        let report = enumerate_ncfs(4).unwrap();
        assert_eq!(report.distinct_ncf_count, 736);
        assert_eq!(report.strongly_asymmetric_count, 240);
        assert_eq!(
            report.machine_line(),
            "n=4 ncfs=736 strong=240 levels=1:4,2:108,3:384,4:240"
        );
    }

    #[test]
    fn distinct_list_is_sorted_and_faithful() {
        let all = Oracle::default().distinct_ncfs(3).unwrap();
        assert!(all.windows(2).all(|w| w[0].0 < w[1].0));
        for (tt, repr) in &all {
            assert_eq!(&repr.to_truth_table(), tt);
        }
    }

    #[test]
    fn canonical_form_is_unique_per_function() {
        // Every representation of the same function canonicalizes to the
        // same rule list, so normalized forms differ only by order inside
        // layers.
        for n in 2..=4 {
            let mut canon: HashMap<Vec<u64>, NcfRepr> = HashMap::new();
            for order in (0..n).permutations(n) {
                let mut rules: Vec<Rule> = order
                    .iter()
                    .map(|&v| Rule::new(v + 1, false, false))
                    .collect();
                for bits in 0u32..1 << (2 * n) {
                    for (k, r) in rules.iter_mut().enumerate() {
                        r.canalyzing = (bits >> k) & 1 == 1;
                        r.canalyzed = (bits >> (n + k)) & 1 == 1;
                    }
                    let f = NcfRepr::from_parts_unchecked(rules.clone());
                    let c = f.canonicalize();
                    let key = f.to_truth_table().words().to_vec();
                    assert_eq!(canon.entry(key).or_insert_with(|| c.clone()), &c);
                }
            }
            assert_eq!(
                canon.len(),
                Oracle::default().distinct_ncfs(n).unwrap().len()
            );
        }
    }

    #[test]
    fn caps() {
        assert!(enumerate_ncfs(1).is_err());
        assert!(matches!(
            enumerate_ncfs(7),
            Err(Error::Capacity { max: 6, .. })
        ));
        let tight = Oracle::new(Limits {
            enumeration_max_vars: 3,
            ..Limits::default()
        });
        assert!(tight.enumerate_ncfs(4).is_err());
    }

    #[test]
    fn report_text() {
        let text = enumerate_ncfs(2).unwrap().to_string();
        assert!(text.contains("representations:      32"));
        assert!(text.contains("strongly asymmetric:  4"));
    }
}
