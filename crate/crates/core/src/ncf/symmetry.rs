use num_bigint::BigUint;

use crate::bf::SymmetryPartition;
use crate::error::{Error, Result};
use crate::ncf::NcfRepr;

impl NcfRepr {
    fn require_normalized(&self) -> Result<()> {
        if self.is_normalized() {
            Ok(())
        } else {
            Err(Error::NormalizationRequired)
        }
    }

    fn check_var(&self, var: usize) -> Result<()> {
        if var == 0 || var > self.num_vars() {
            return Err(Error::VariableOutOfRange {
                var,
                num_vars: self.num_vars(),
            });
        }
        Ok(())
    }

    /// Whether `x_i` and `x_j` are symmetric: on a default-normalized
    /// representation this holds exactly when their rules sit in the same
    /// layer with the same canalyzing value.
    pub fn symmetric_pair(&self, i: usize, j: usize) -> Result<bool> {
        self.require_normalized()?;
        self.check_var(i)?;
        self.check_var(j)?;
        if i == j {
            return Err(Error::Domain(format!(
                "pair must be two distinct variables, got x{i} twice"
            )));
        }
        let (pi, pj) = (self.position_of(i).unwrap(), self.position_of(j).unwrap());
        let layers = self.layers();
        Ok(layers.layer_of(pi) == layers.layer_of(pj)
            && self.rules()[pi].canalyzing == self.rules()[pj].canalyzing)
    }

    /// The proper symmetry partition: inside every layer, the variables
    /// sharing a canalyzing value form one group.
    pub fn symmetry_partition(&self) -> Result<SymmetryPartition> {
        self.require_normalized()?;
        let mut groups = Vec::new();
        for layer in self.layers().layers {
            let rules = &self.rules()[layer.rules];
            for value in [true, false] {
                let group: Vec<usize> = rules
                    .iter()
                    .filter(|r| r.canalyzing == value)
                    .map(|r| r.variable)
                    .collect();
                if !group.is_empty() {
                    groups.push(group);
                }
            }
        }
        SymmetryPartition::new(self.num_vars(), groups)
    }

    /// Symmetry level `r1 + 2 r2` read off the layers.
    pub fn symmetry_level(&self) -> Result<usize> {
        self.require_normalized()?;
        let d = self.layers();
        Ok(d.r1() + 2 * d.r2())
    }

    /// An NCF is strongly asymmetric exactly when its symmetry level is `n`.
    pub fn is_strongly_asymmetric(&self) -> Result<bool> {
        Ok(self.symmetry_level()? == self.num_vars())
    }
}

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::from(1u32), |acc, k| acc * BigUint::from(k))
}

/// The closed form `n! 2^(n-1)` for the number of strongly asymmetric NCFs.
///
/// This expression only counts normalized representations whose first
/// `n - 2` layers are single lines. Exhaustive enumeration agrees for
/// `n <= 3` and exceeds it from `n = 4` on; see
/// [`count_strongly_asymmetric_by_layers`] for the count that matches.
pub fn count_strongly_asymmetric(n: usize) -> Result<BigUint> {
    if n < 2 {
        return Err(Error::Domain(format!("count requires n >= 2, got {n}")));
    }
    Ok(factorial(n) << (n - 1))
}

/// Number of strongly asymmetric NCFs on `n` variables, summed over every
/// layer shape a level-`n` normalized representation can take.
///
/// Such a representation is a sequence of one-line layers and two-line
/// layers whose two canalyzing values differ, ending in a two-line layer.
/// Each function is fixed by the ordered layer contents (`n! / 2^p` ways
/// for `p` two-line layers), the first canalyzed value (2 ways) and one
/// binary choice per layer. Writing `s` for the number of one-line layers,
/// the count is `2 n! · Σ 2^s`, where the sum runs over compositions of
/// `n - 2` into parts 1 and 2. That sum obeys `S(m) = 2 S(m-1) + S(m-2)`.
pub fn count_strongly_asymmetric_by_layers(n: usize) -> Result<BigUint> {
    if n < 2 {
        return Err(Error::Domain(format!("count requires n >= 2, got {n}")));
    }
    let (mut prev, mut cur) = (BigUint::from(0u32), BigUint::from(1u32));
    for _ in 0..n - 2 {
        let next = &cur * 2u32 + &prev;
        prev = cur;
        cur = next;
    }
    Ok(factorial(n) * 2u32 * cur)
}
