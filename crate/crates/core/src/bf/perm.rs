use std::fmt;

use crate::error::{Error, Result};

/// A permutation `π` of `{1, ..., n}`; position `i` (1-based) holds `π(i)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    mapping: Vec<usize>,
}

impl Permutation {
    pub fn new(mapping: Vec<usize>) -> Result<Self> {
        let n = mapping.len();
        let mut seen = vec![false; n];
        for &m in &mapping {
            if m == 0 || m > n {
                return Err(Error::InvalidPermutation(format!(
                    "image {m} outside 1..={n}"
                )));
            }
            if std::mem::replace(&mut seen[m - 1], true) {
                return Err(Error::InvalidPermutation(format!("image {m} repeated")));
            }
        }
        Ok(Permutation { mapping })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            mapping: (1..=n).collect(),
        }
    }

    /// Builds a permutation from 0-based images without validation.
    pub(crate) fn from_zero_based(images: &[usize]) -> Self {
        Permutation {
            mapping: images.iter().map(|i| i + 1).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.mapping.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mapping.is_empty()
    }

    /// `π(i)` for 1-based `i`.
    pub fn image(&self, i: usize) -> usize {
        self.mapping[i - 1]
    }

    pub fn mapping(&self) -> &[usize] {
        &self.mapping
    }

    pub fn is_identity(&self) -> bool {
        self.mapping.iter().enumerate().all(|(i, &m)| m == i + 1)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (i, &m) in self.mapping.iter().enumerate() {
            inv[m - 1] = i + 1;
        }
        Permutation { mapping: inv }
    }

    /// Index of the assignment `(a_{π(1)}, ..., a_{π(n)})` when `index`
    /// encodes `(a_1, ..., a_n)`.
    #[inline]
    pub fn permute_index(&self, index: u64) -> u64 {
        self.mapping
            .iter()
            .enumerate()
            .fold(0, |acc, (k, &m)| acc | (((index >> (m - 1)) & 1) << k))
    }

    /// Reorders `items` so that position `k` receives `items[π(k) - 1]`.
    pub fn reorder<T: Clone>(&self, items: &[T]) -> Result<Vec<T>> {
        if items.len() != self.len() {
            return Err(Error::Dimension {
                expected: items.len(),
                actual: self.len(),
            });
        }
        Ok(self.mapping.iter().map(|&m| items[m - 1].clone()).collect())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, m) in self.mapping.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, ")")
    }
}
