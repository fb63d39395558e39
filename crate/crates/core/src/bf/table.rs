use std::fmt;
use std::str::FromStr;

use crate::bf::Permutation;
use crate::error::{Error, Result};

/// An explicit Boolean function of `n` variables stored as `2^n` packed bits.
///
/// Bit `j - 1` of an assignment index holds the value of variable `x_j`, so
/// `x_1` is the least significant input. Bits of the last word beyond `2^n`
/// are always zero, which keeps the derived equality and hashing exact.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TruthTable {
    num_vars: usize,
    words: Vec<u64>,
}

/// Result of [`TruthTable::restrict_with_map`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Restriction {
    pub table: TruthTable,
    /// `var_map[old - 1]` is the new 1-based index of old variable `old`,
    /// or `None` for the fixed variable.
    pub var_map: Vec<Option<usize>>,
}

impl Restriction {
    /// Inverse of `var_map`: old 1-based index of new variable `new`.
    pub fn original_var(&self, new: usize) -> usize {
        self.var_map
            .iter()
            .position(|m| *m == Some(new))
            .map(|p| p + 1)
            .expect("new variable index out of range")
    }
}

fn word_count(num_vars: usize) -> usize {
    if num_vars >= 6 {
        1 << (num_vars - 6)
    } else {
        1
    }
}

fn tail_mask(num_vars: usize) -> u64 {
    if num_vars >= 6 {
        u64::MAX
    } else {
        (1u64 << (1u32 << num_vars)) - 1
    }
}

impl TruthTable {
    /// Largest supported variable count for explicit tables.
    pub const MAX_VARS: usize = 24;

    fn check_vars(num_vars: usize) -> Result<()> {
        if num_vars == 0 {
            return Err(Error::Domain(
                "a truth table needs at least one variable".into(),
            ));
        }
        if num_vars > Self::MAX_VARS {
            return Err(Error::Capacity {
                what: "truth table",
                max: Self::MAX_VARS,
                actual: num_vars,
            });
        }
        Ok(())
    }

    /// The constant-0 function of `num_vars` variables.
    pub fn zeros(num_vars: usize) -> Result<Self> {
        Self::check_vars(num_vars)?;
        Ok(TruthTable {
            num_vars,
            words: vec![0; word_count(num_vars)],
        })
    }

    /// The constant-1 function of `num_vars` variables.
    pub fn ones(num_vars: usize) -> Result<Self> {
        let mut tt = Self::zeros(num_vars)?;
        tt.words.iter_mut().for_each(|w| *w = u64::MAX);
        tt.clear_tail();
        Ok(tt)
    }

    /// Builds a table by evaluating `f` on every assignment index.
    pub fn from_fn(num_vars: usize, mut f: impl FnMut(u64) -> bool) -> Result<Self> {
        let mut tt = Self::zeros(num_vars)?;
        for i in 0..tt.len() {
            if f(i) {
                tt.set(i, true);
            }
        }
        Ok(tt)
    }

    /// Builds a table from one Boolean per assignment, index 0 first.
    pub fn from_bits(bits: &[bool]) -> Result<Self> {
        let num_vars = bits.len().trailing_zeros() as usize;
        if !bits.len().is_power_of_two() || num_vars == 0 {
            return Err(Error::Domain(format!(
                "bit count {} is not 2^n for some n >= 1",
                bits.len()
            )));
        }
        Self::from_fn(num_vars, |i| bits[i as usize])
    }

    /// Builds a table from packed words in the internal layout.
    pub fn from_words(num_vars: usize, words: Vec<u64>) -> Result<Self> {
        Self::check_vars(num_vars)?;
        if words.len() != word_count(num_vars) {
            return Err(Error::Dimension {
                expected: word_count(num_vars),
                actual: words.len(),
            });
        }
        let mut tt = TruthTable { num_vars, words };
        tt.clear_tail();
        Ok(tt)
    }

    fn clear_tail(&mut self) {
        let mask = tail_mask(self.num_vars);
        if let Some(last) = self.words.last_mut() {
            *last &= mask;
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    /// Number of assignments, `2^n`.
    pub fn len(&self) -> u64 {
        1u64 << self.num_vars
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// Value at `index`. Panics if `index >= 2^n`.
    #[inline]
    pub fn get(&self, index: u64) -> bool {
        assert!(index < self.len(), "assignment index out of range");
        (self.words[(index >> 6) as usize] >> (index & 63)) & 1 == 1
    }

    #[inline]
    pub(crate) fn set(&mut self, index: u64, value: bool) {
        let w = &mut self.words[(index >> 6) as usize];
        let bit = 1u64 << (index & 63);
        if value {
            *w |= bit;
        } else {
            *w &= !bit;
        }
    }

    /// Value at `assignment`, or a range error.
    pub fn evaluate(&self, assignment: u64) -> Result<bool> {
        if assignment >= self.len() {
            return Err(Error::IndexOutOfRange {
                index: assignment,
                num_vars: self.num_vars,
            });
        }
        Ok(self.get(assignment))
    }

    /// Iterator over all values in assignment order.
    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len()).map(move |i| self.get(i))
    }

    pub fn count_ones(&self) -> u64 {
        self.words.iter().map(|w| u64::from(w.count_ones())).sum()
    }

    /// The constant value, if the function is constant.
    pub fn is_constant(&self) -> Option<bool> {
        match self.count_ones() {
            0 => Some(false),
            c if c == self.len() => Some(true),
            _ => None,
        }
    }

    fn check_var(&self, var: usize) -> Result<()> {
        if var == 0 || var > self.num_vars {
            return Err(Error::VariableOutOfRange {
                var,
                num_vars: self.num_vars,
            });
        }
        Ok(())
    }

    /// Fixes `x_var = value`; the remaining variables keep their order and
    /// are renumbered `1..n-1`.
    pub fn restrict(&self, var: usize, value: bool) -> Result<TruthTable> {
        self.restrict_with_map(var, value).map(|r| r.table)
    }

    /// Like [`restrict`](Self::restrict), also returning the old-to-new
    /// variable mapping.
    pub fn restrict_with_map(&self, var: usize, value: bool) -> Result<Restriction> {
        if self.num_vars < 2 {
            return Err(Error::DegenerateRestriction);
        }
        self.check_var(var)?;
        let pos = var - 1;
        let low_mask = (1u64 << pos) - 1;
        let fixed = u64::from(value) << pos;
        let table = TruthTable::from_fn(self.num_vars - 1, |i| {
            let old = (i & low_mask) | fixed | ((i & !low_mask) << 1);
            self.get(old)
        })?;
        let var_map = (1..=self.num_vars)
            .map(|old| match old.cmp(&var) {
                std::cmp::Ordering::Less => Some(old),
                std::cmp::Ordering::Equal => None,
                std::cmp::Ordering::Greater => Some(old - 1),
            })
            .collect();
        Ok(Restriction { table, var_map })
    }

    /// True iff the function changes with `x_var` for some assignment of the rest.
    pub fn depends_on(&self, var: usize) -> Result<bool> {
        self.check_var(var)?;
        let bit = 1u64 << (var - 1);
        Ok((0..self.len())
            .filter(|i| i & bit == 0)
            .any(|i| self.get(i) != self.get(i | bit)))
    }

    /// Returns `g` with `g(a_1, ..., a_n) = f(a_{π(1)}, ..., a_{π(n)})`.
    pub fn apply_permutation(&self, perm: &Permutation) -> Result<TruthTable> {
        self.check_perm(perm)?;
        TruthTable::from_fn(self.num_vars, |i| self.get(perm.permute_index(i)))
    }

    /// True iff `f ∘ π = f`, with early exit on the first differing assignment.
    pub fn is_invariant_under(&self, perm: &Permutation) -> Result<bool> {
        self.check_perm(perm)?;
        Ok((0..self.len()).all(|i| self.get(i) == self.get(perm.permute_index(i))))
    }

    fn check_perm(&self, perm: &Permutation) -> Result<()> {
        if perm.len() != self.num_vars {
            return Err(Error::Dimension {
                expected: self.num_vars,
                actual: perm.len(),
            });
        }
        Ok(())
    }

    /// Hex digits with assignment 0 in the least significant bit of the last digit.
    pub fn to_hex(&self) -> String {
        let digits = hex_digits(self.num_vars);
        (0..digits)
            .rev()
            .map(|k| {
                let nibble = (self.words[k / 16] >> ((k % 16) * 4)) & 0xF;
                char::from_digit(nibble as u32, 16)
                    .unwrap()
                    .to_ascii_uppercase()
            })
            .collect()
    }

    /// Parses the hex body produced by [`to_hex`](Self::to_hex). The digit
    /// count must be exactly `ceil(2^n / 4)`.
    pub fn from_hex(num_vars: usize, hex: &str) -> Result<TruthTable> {
        let mut tt = TruthTable::zeros(num_vars)?;
        let digits = hex_digits(num_vars);
        if hex.len() != digits {
            return Err(Error::parse(
                1,
                format!(
                    "expected {digits} hex digits for n={num_vars}, got {}",
                    hex.len()
                ),
            ));
        }
        for (k, c) in hex.chars().rev().enumerate() {
            let nibble = c
                .to_digit(16)
                .ok_or_else(|| Error::parse(1, format!("invalid hex digit {c:?}")))?
                as u64;
            tt.words[k / 16] |= nibble << ((k % 16) * 4);
        }
        if tt.words.last().copied().unwrap_or(0) & !tail_mask(num_vars) != 0 {
            return Err(Error::parse(1, "hex value has bits beyond 2^n"));
        }
        Ok(tt)
    }
}

fn hex_digits(num_vars: usize) -> usize {
    (1usize << num_vars).div_ceil(4)
}

impl fmt::Debug for TruthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruthTable({self})")
    }
}

/// Text form `n=<k> tt=<hex>`.
impl fmt::Display for TruthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} tt={}", self.num_vars, self.to_hex())
    }
}

impl FromStr for TruthTable {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        // Accept the first non-blank, non-comment line.
        let (line_no, line) = s
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .find(|(_, l)| !l.is_empty())
            .ok_or_else(|| Error::parse(1, "empty truth-table input"))?;
        let mut n = None;
        let mut hex = None;
        for token in line.split_whitespace() {
            if let Some(v) = token.strip_prefix("n=") {
                n = Some(
                    v.parse::<usize>()
                        .map_err(|_| Error::parse(line_no, format!("bad variable count {v:?}")))?,
                );
            } else if let Some(v) = token.strip_prefix("tt=") {
                hex = Some(v);
            } else {
                return Err(Error::parse(line_no, format!("unexpected token {token:?}")));
            }
        }
        match (n, hex) {
            (Some(n), Some(hex)) => TruthTable::from_hex(n, hex).map_err(|e| match e {
                Error::Parse { message, .. } => Error::parse(line_no, message),
                other => other,
            }),
            _ => Err(Error::parse(line_no, "expected `n=<k> tt=<hex>`")),
        }
    }
}
