use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::hardness::CnfFormula;

/// DIMACS CNF: `c` comment lines, a `p cnf <vars> <clauses>` header, then
/// 0-terminated clauses that may span lines.
impl FromStr for CnfFormula {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut header: Option<(usize, usize, usize)> = None;
        let mut clauses: Vec<Vec<i32>> = Vec::new();
        let mut current: Vec<i32> = Vec::new();
        let mut last_line = 1;

        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('c') {
                continue;
            }
            last_line = line_no;
            if line == "%" {
                break;
            }
            if line.starts_with('p') {
                if header.is_some() {
                    return Err(Error::parse(line_no, "duplicate problem line"));
                }
                let fields: Vec<&str> = line.split_whitespace().collect();
                let parsed = match fields.as_slice() {
                    ["p", "cnf", v, c] => v.parse().ok().zip(c.parse().ok()),
                    _ => None,
                };
                let (vars, count) = parsed
                    .ok_or_else(|| Error::parse(line_no, "expected `p cnf <vars> <clauses>`"))?;
                header = Some((line_no, vars, count));
                continue;
            }
            let Some((_, vars, _)) = header else {
                return Err(Error::parse(line_no, "clause before the `p cnf` header"));
            };
            for token in line.split_whitespace() {
                let lit: i64 = token
                    .parse()
                    .map_err(|_| Error::parse(line_no, format!("invalid literal {token:?}")))?;
                if lit == 0 {
                    clauses.push(std::mem::take(&mut current));
                } else if lit.unsigned_abs() as usize > vars {
                    return Err(Error::parse(
                        line_no,
                        format!("literal {lit} outside variables 1..={vars}"),
                    ));
                } else {
                    current.push(lit as i32);
                }
            }
        }

        let (header_line, vars, count) =
            header.ok_or_else(|| Error::parse(last_line, "missing `p cnf` header"))?;
        if !current.is_empty() {
            return Err(Error::parse(
                last_line,
                "last clause is missing its terminating 0",
            ));
        }
        if clauses.len() != count {
            return Err(Error::parse(
                header_line,
                format!("header declares {count} clauses, found {}", clauses.len()),
            ));
        }
        CnfFormula::new(vars, clauses)
    }
}

impl fmt::Display for CnfFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "p cnf {} {}", self.num_vars(), self.clauses().len())?;
        for clause in self.clauses() {
            for lit in clause {
                write!(f, "{lit} ")?;
            }
            writeln!(f, "0")?;
        }
        Ok(())
    }
}
