//! Nested canalyzing functions in their rule-list ("simplified") form.
//!
//! A representation is an ordered list of rules `x_i: a -> b`, one per
//! variable, followed by a default value. Evaluation scans the rules top
//! down and returns the canalyzed value `b` of the first rule whose variable
//! equals its canalyzing value `a`; if none fires the default is returned.
//! The default is always the complement of the last canalyzed value.

mod layers;
mod symmetry;
mod text;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::bf::TruthTable;
use crate::error::{Error, Result};

pub use layers::{Layer, LayerDecomposition};
pub use symmetry::{count_strongly_asymmetric, count_strongly_asymmetric_by_layers};

/// One line `x_variable: canalyzing -> canalyzed`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rule {
    /// 1-based variable index.
    pub variable: usize,
    pub canalyzing: bool,
    pub canalyzed: bool,
}

impl Rule {
    pub fn new(variable: usize, canalyzing: bool, canalyzed: bool) -> Self {
        Rule {
            variable,
            canalyzing,
            canalyzed,
        }
    }

    /// True if this rule fires on `assignment`.
    #[inline]
    pub fn fires(&self, assignment: u64) -> bool {
        ((assignment >> (self.variable - 1)) & 1 == 1) == self.canalyzing
    }
}

/// A nested canalyzing function as an ordered rule list plus default value.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NcfRepr {
    rules: Vec<Rule>,
    default_value: bool,
}

impl NcfRepr {
    /// Validates that every variable `1..=n` appears in exactly one rule and
    /// that `default_value` is the complement of the last canalyzed value.
    pub fn new(rules: Vec<Rule>, default_value: bool) -> Result<Self> {
        let n = rules.len();
        if n == 0 {
            return Err(Error::Domain("an NCF needs at least one rule".into()));
        }
        let mut seen = vec![false; n];
        for (pos, rule) in rules.iter().enumerate() {
            if rule.variable == 0 || rule.variable > n {
                return Err(Error::VariableOutOfRange {
                    var: rule.variable,
                    num_vars: n,
                });
            }
            if std::mem::replace(&mut seen[rule.variable - 1], true) {
                return Err(Error::DuplicateVariable {
                    line: pos + 1,
                    var: rule.variable,
                });
            }
        }
        if default_value == rules[n - 1].canalyzed {
            return Err(Error::InconsistentDefault {
                found: default_value,
            });
        }
        Ok(NcfRepr {
            rules,
            default_value,
        })
    }

    /// Like [`new`](Self::new) with the default derived from the last rule.
    pub fn from_rules(rules: Vec<Rule>) -> Result<Self> {
        let default_value = !rules
            .last()
            .ok_or_else(|| Error::Domain("an NCF needs at least one rule".into()))?
            .canalyzed;
        Self::new(rules, default_value)
    }

    /// Caller guarantees the invariants.
    pub(crate) fn from_parts_unchecked(rules: Vec<Rule>) -> Self {
        let default_value = !rules.last().expect("nonempty").canalyzed;
        NcfRepr {
            rules,
            default_value,
        }
    }

    pub fn num_vars(&self) -> usize {
        self.rules.len()
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn default_value(&self) -> bool {
        self.default_value
    }

    /// Position in the rule list of the rule testing `var`.
    pub fn position_of(&self, var: usize) -> Option<usize> {
        self.rules.iter().position(|r| r.variable == var)
    }

    /// Value of the function on `assignment` (bit `j - 1` holds `x_j`).
    pub fn evaluate(&self, assignment: u64) -> bool {
        self.rules
            .iter()
            .find(|r| r.fires(assignment))
            .map_or(self.default_value, |r| r.canalyzed)
    }

    /// Expands the representation into its truth table.
    pub fn to_truth_table(&self) -> TruthTable {
        let n = self.num_vars();
        let words = cascade_words(n, &self.rules, self.default_value);
        TruthTable::from_words(n, words).expect("NCF variable count within table capacity")
    }

    /// True iff the last two rules share a canalyzed value (always true for `n = 1`).
    pub fn is_normalized(&self) -> bool {
        match self.rules.as_slice() {
            [.., before, last] => before.canalyzed == last.canalyzed,
            _ => true,
        }
    }

    /// Returns the default-normalized equivalent: when the last two rules
    /// disagree on the canalyzed value, the last rule's canalyzing and
    /// canalyzed values and the default are all complemented.
    pub fn normalize(&self) -> NcfRepr {
        let mut out = self.clone();
        if !self.is_normalized() {
            let last = out.rules.last_mut().unwrap();
            last.canalyzing = !last.canalyzing;
            last.canalyzed = !last.canalyzed;
            out.default_value = !out.default_value;
        }
        out
    }

    /// Normalized form with rules inside each layer sorted by variable index.
    pub fn canonicalize(&self) -> NcfRepr {
        let mut out = self.normalize();
        for layer in out.layers().layers {
            out.rules[layer.rules].sort_by_key(|r| r.variable);
        }
        out
    }

    /// The alternating family `x_1 ∨ (¬x_2 ∧ (x_3 ∨ (¬x_4 ∧ ...)))`:
    /// every rule has canalyzing value 1 and canalyzed values alternate
    /// starting from 1. Not normalized.
    pub fn alternating(n: usize) -> Result<NcfRepr> {
        if n < 2 {
            return Err(Error::Domain(format!(
                "alternating family needs n >= 2, got {n}"
            )));
        }
        let rules = (1..=n).map(|i| Rule::new(i, true, i % 2 == 1)).collect();
        Ok(Self::from_parts_unchecked(rules))
    }

    /// A uniformly random representation over `n` variables: random variable
    /// order, canalyzing values and canalyzed values.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Result<NcfRepr> {
        if n == 0 || n > TruthTable::MAX_VARS {
            return Err(Error::Domain(format!(
                "cannot build an NCF on {n} variables"
            )));
        }
        let mut order: Vec<usize> = (1..=n).collect();
        order.shuffle(rng);
        let rules = order
            .into_iter()
            .map(|v| Rule::new(v, rng.random(), rng.random()))
            .collect();
        Ok(Self::from_parts_unchecked(rules))
    }
}

/// Bit pattern of `x_{var+1}` within a single 64-bit word, for `var < 6`.
const LOW_VAR_MASKS: [u64; 6] = [
    0xAAAA_AAAA_AAAA_AAAA,
    0xCCCC_CCCC_CCCC_CCCC,
    0xF0F0_F0F0_F0F0_F0F0,
    0xFF00_FF00_FF00_FF00,
    0xFFFF_0000_FFFF_0000,
    0xFFFF_FFFF_0000_0000,
];

fn var_word(var0: usize, word: usize) -> u64 {
    if var0 < 6 {
        LOW_VAR_MASKS[var0]
    } else if (word >> (var0 - 6)) & 1 == 1 {
        u64::MAX
    } else {
        0
    }
}

/// Packed truth-table words of a rule cascade, folded from the last rule up.
pub(crate) fn cascade_words(num_vars: usize, rules: &[Rule], default_value: bool) -> Vec<u64> {
    let word_count = if num_vars >= 6 {
        1 << (num_vars - 6)
    } else {
        1
    };
    let fill = |b: bool| if b { u64::MAX } else { 0 };
    (0..word_count)
        .map(|w| {
            rules.iter().rev().fold(fill(default_value), |acc, rule| {
                let x = var_word(rule.variable - 1, w);
                let fires = if rule.canalyzing { x } else { !x };
                (fires & fill(rule.canalyzed)) | (!fires & acc)
            })
        })
        .collect()
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    pub fn mixed3() -> NcfRepr {
        "x1: 1 -> 0\nx2: 1 -> 1\nx3: 0 -> 1\ndefault: 0\n"
            .parse()
            .unwrap()
    }

    pub fn layered6() -> NcfRepr {
        "x1: 1 -> 0\nx2: 0 -> 0\nx3: 0 -> 0\nx4: 1 -> 1\nx5: 1 -> 1\nx6: 1 -> 0\ndefault: 1\n"
            .parse()
            .unwrap()
    }

    pub fn or3() -> NcfRepr {
        "x1: 1 -> 1\nx2: 1 -> 1\nx3: 1 -> 1\ndefault: 0\n"
            .parse()
            .unwrap()
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::fixtures::*;
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn evaluate_examples() {
        let m3 = mixed3();
        for rest in 0..4u64 {
            assert!(!m3.evaluate(1 | (rest << 1)));
        }
        // x1=0, x2=0, x3=1: the default fires.
        assert!(!m3.evaluate(0b100));
        // layered6 on all zeros: x1 misses, x2 fires with value 0.
        assert!(!layered6().evaluate(0));
    }

    #[test]
    fn truth_tables() {
        assert_eq!(mixed3().to_truth_table().to_string(), "n=3 tt=45");
        assert_eq!(or3().to_truth_table().to_string(), "n=3 tt=FE");
        let f6 = NcfRepr::alternating(6).unwrap().to_truth_table();
        assert!(f6.get(0));
        let f7 = NcfRepr::alternating(7).unwrap().to_truth_table();
        assert!(!f7.get(0));
    }

    #[test]
    fn alternating_matches_formula() {
        let f6 = NcfRepr::alternating(6).unwrap().to_truth_table();
        let f7 = NcfRepr::alternating(7).unwrap().to_truth_table();
        for i in 0..128u64 {
            let x = |j: u32| (i >> (j - 1)) & 1 == 1;
            if i < 64 {
                let want = x(1) || (!x(2) && (x(3) || (!x(4) && (x(5) || !x(6)))));
                assert_eq!(f6.get(i), want, "f6 at {i}");
            }
            let want = x(1) || (!x(2) && (x(3) || (!x(4) && (x(5) || (!x(6) && x(7))))));
            assert_eq!(f7.get(i), want, "f7 at {i}");
        }
        assert!(NcfRepr::alternating(1).is_err());
    }

    #[test]
    fn normalize_layered6() {
        let norm = layered6().normalize();
        assert_eq!(norm.rules()[5], Rule::new(6, false, true));
        assert!(!norm.default_value());
        assert!(norm.is_normalized());
        assert_eq!(norm.normalize(), norm);
        assert_eq!(norm.to_truth_table(), layered6().to_truth_table());
    }

    #[test]
    fn normalize_f7() {
        let f7 = NcfRepr::alternating(7).unwrap();
        assert_eq!(f7.rules()[6], Rule::new(7, true, true));
        assert_eq!(f7.rules()[5], Rule::new(6, true, false));
        let norm = f7.normalize();
        assert_eq!(norm.rules()[6], Rule::new(7, false, false));
        assert!(norm.default_value());
        assert_eq!(norm.to_truth_table(), f7.to_truth_table());
    }

    #[test]
    fn single_variable_is_fixed_point() {
        let id: NcfRepr = "x1: 1 -> 1\ndefault: 0".parse().unwrap();
        assert!(id.is_normalized());
        assert_eq!(id.normalize(), id);
        assert_eq!(id.to_truth_table().to_string(), "n=1 tt=2");
    }

    #[test]
    fn constructor_validation() {
        let r = |v, a, b| Rule::new(v, a, b);
        assert!(matches!(
            NcfRepr::new(vec![r(1, true, true), r(1, false, true)], false),
            Err(Error::DuplicateVariable { var: 1, .. })
        ));
        assert!(matches!(
            NcfRepr::new(vec![r(1, true, true)], true),
            Err(Error::InconsistentDefault { found: true })
        ));
        assert!(matches!(
            NcfRepr::new(vec![r(3, true, true)], false),
            Err(Error::VariableOutOfRange { var: 3, .. })
        ));
        assert!(NcfRepr::from_rules(vec![]).is_err());
    }

    #[test]
    fn canonicalize_sorts_within_layers() {
        let f: NcfRepr = "x3: 1 -> 1\nx1: 0 -> 1\nx2: 1 -> 0\ndefault: 1"
            .parse()
            .unwrap();
        let c = f.canonicalize();
        assert_eq!(
            c.to_string(),
            "x1: 0 -> 1\nx2: 0 -> 1\nx3: 1 -> 1\ndefault: 0\n"
        );
        assert_eq!(c.to_truth_table(), f.to_truth_table());
    }

    pub(crate) fn arb_ncf(max_n: usize) -> impl Strategy<Value = NcfRepr> {
        (1..=max_n).prop_flat_map(|n| {
            (
                Just((1..=n).collect::<Vec<_>>()).prop_shuffle(),
                proptest::collection::vec(any::<(bool, bool)>(), n),
            )
                .prop_map(|(order, values)| {
                    let rules = order
                        .into_iter()
                        .zip(values)
                        .map(|(v, (a, b))| Rule::new(v, a, b))
                        .collect();
                    NcfRepr::from_rules(rules).unwrap()
                })
        })
    }

    proptest! {
        #[test]
        fn packed_table_matches_scan(f in arb_ncf(10)) {
            let tt = f.to_truth_table();
            for i in 0..tt.len() {
                prop_assert_eq!(tt.get(i), f.evaluate(i));
            }
        }

        #[test]
        fn normalization_preserves_function(f in arb_ncf(10)) {
            let norm = f.normalize();
            prop_assert_eq!(norm.to_truth_table(), f.to_truth_table());
            prop_assert!(norm.is_normalized());
            prop_assert_eq!(norm.normalize(), norm.clone());
            prop_assert_eq!(norm.canonicalize().to_truth_table(), f.to_truth_table());
        }
    }
}
