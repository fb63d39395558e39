//! Gap instances for the symmetry level of CNF formulas.
//!
//! Given a CNF formula `g` over `x_1..x_n` and `ρ >= 1`, the reduced formula
//! is `g ∧ (y_1 ∨ ¬z_1) ∧ ... ∧ (y_{ρ+1} ∨ ¬z_{ρ+1})` over `n + 2ρ + 2`
//! variables. If `g` is unsatisfiable the result is constant 0 (level 1);
//! otherwise no two `y` variables are symmetric, so the level is at
//! least `ρ + 1`.

mod dimacs;

use std::fmt;
use std::ops::RangeInclusive;

use crate::bf::TruthTable;
use crate::error::{Error, Result};
use crate::oracle::Oracle;

/// CNF over `num_vars` variables; literals are DIMACS-style nonzero integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CnfFormula {
    num_vars: usize,
    clauses: Vec<Vec<i32>>,
}

impl CnfFormula {
    /// An empty clause is allowed and makes the formula unsatisfiable.
    pub fn new(num_vars: usize, clauses: Vec<Vec<i32>>) -> Result<Self> {
        for lit in clauses.iter().flatten() {
            let var = lit.unsigned_abs() as usize;
            if *lit == 0 || var > num_vars {
                return Err(Error::Domain(format!(
                    "literal {lit} outside variables 1..={num_vars}"
                )));
            }
        }
        Ok(CnfFormula { num_vars, clauses })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[Vec<i32>] {
        &self.clauses
    }

    /// Value under `assignment`, with bit `j - 1` holding `x_j`.
    pub fn evaluate(&self, assignment: u64) -> bool {
        self.clauses.iter().all(|clause| {
            clause.iter().any(|&lit| {
                let bit = (assignment >> (lit.unsigned_abs() - 1)) & 1 == 1;
                bit == (lit > 0)
            })
        })
    }

    pub fn to_truth_table(&self) -> Result<TruthTable> {
        TruthTable::from_fn(self.num_vars, |a| self.evaluate(a))
    }

    /// Exhaustive satisfiability check.
    pub fn is_satisfiable(&self) -> Result<bool> {
        if self.num_vars > TruthTable::MAX_VARS {
            return Err(Error::Capacity {
                what: "exhaustive satisfiability",
                max: TruthTable::MAX_VARS,
                actual: self.num_vars,
            });
        }
        Ok((0..1u64 << self.num_vars).any(|a| self.evaluate(a)))
    }
}

/// A reduced formula with its variable blocks: `X` first, then `Y`, then `Z`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionInstance {
    pub base: CnfFormula,
    pub rho: usize,
    pub result: CnfFormula,
}

impl ReductionInstance {
    pub fn x_block(&self) -> RangeInclusive<usize> {
        1..=self.base.num_vars()
    }

    pub fn y_block(&self) -> RangeInclusive<usize> {
        let n = self.base.num_vars();
        n + 1..=n + self.rho + 1
    }

    pub fn z_block(&self) -> RangeInclusive<usize> {
        let n = self.base.num_vars();
        n + self.rho + 2..=n + 2 * self.rho + 2
    }
}

/// Appends the `ρ + 1` clauses `(y_i ∨ ¬z_i)` over fresh `Y` and `Z` blocks.
pub fn reduce(g: &CnfFormula, rho: usize) -> Result<ReductionInstance> {
    if rho < 1 {
        return Err(Error::Domain(format!("rho must be at least 1, got {rho}")));
    }
    let n = g.num_vars();
    let total = n + 2 * rho + 2;
    if total > i32::MAX as usize {
        return Err(Error::Domain(
            "reduced formula too large for DIMACS literals".into(),
        ));
    }
    let mut clauses = g.clauses().to_vec();
    for i in 1..=rho + 1 {
        let y = (n + i) as i32;
        let z = (n + rho + 1 + i) as i32;
        clauses.push(vec![y, -z]);
    }
    Ok(ReductionInstance {
        base: g.clone(),
        rho,
        result: CnfFormula::new(total, clauses)?,
    })
}

/// Outcome of checking both gap claims on one instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClaimVerdict {
    pub g_satisfiable: bool,
    pub level_of_f: usize,
    pub rho: usize,
    /// `unsat ⇒ level = 1` and `sat ⇒ level >= ρ + 1`.
    pub claims_hold: bool,
}

impl fmt::Display for ClaimVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "sat={} level={} rho={} ok={}",
            u8::from(self.g_satisfiable),
            self.level_of_f,
            self.rho,
            u8::from(self.claims_hold)
        )
    }
}

/// Computes the oracle symmetry level of the reduced formula and checks it
/// against the satisfiability of the base formula.
pub fn verify_claims(inst: &ReductionInstance) -> Result<ClaimVerdict> {
    verify_claims_with(inst, &Oracle::default())
}

pub fn verify_claims_with(inst: &ReductionInstance, oracle: &Oracle) -> Result<ClaimVerdict> {
    let total = inst.result.num_vars();
    let max = oracle.limits.partition_max_vars;
    if total > max {
        return Err(Error::Capacity {
            what: "claim verification",
            max,
            actual: total,
        });
    }
    let g_satisfiable = inst.base.is_satisfiable()?;
    let level_of_f = oracle
        .symmetry_partition(&inst.result.to_truth_table()?)?
        .level();
    let claims_hold = if g_satisfiable {
        level_of_f > inst.rho
    } else {
        level_of_f == 1
    };
    Ok(ClaimVerdict {
        g_satisfiable,
        level_of_f,
        rho: inst.rho,
        claims_hold,
    })
}
