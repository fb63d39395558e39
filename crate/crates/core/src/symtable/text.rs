use std::fmt;
use std::str::FromStr;

use crate::bf::TruthTable;
use crate::error::{Error, Result};
use crate::symtable::SymTable;

fn parse_list(text: &str, line: usize) -> Result<Vec<usize>> {
    text.split(',')
        .map(|t| {
            t.trim().parse::<usize>().map_err(|_| {
                Error::parse(
                    line,
                    format!("expected a non-negative integer, found {:?}", t.trim()),
                )
            })
        })
        .collect()
}

/// Header `groups: m1,...,mr`, then one `c1,...,cr: v` line per row.
impl FromStr for SymTable {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());

        let (header_line, header) = lines
            .next()
            .ok_or_else(|| Error::parse(1, "missing `groups:` header"))?;
        let sizes_text = header
            .strip_prefix("groups")
            .and_then(|rest| rest.trim_start().strip_prefix(':'))
            .ok_or_else(|| Error::parse(header_line, "expected `groups: m1,m2,...`"))?;
        let sizes = parse_list(sizes_text, header_line)?;
        if sizes.contains(&0) {
            return Err(Error::parse(header_line, "group sizes must be positive"));
        }
        let n: usize = sizes.iter().sum();
        if n > TruthTable::MAX_VARS {
            return Err(Error::Capacity {
                what: "count table",
                max: TruthTable::MAX_VARS,
                actual: n,
            });
        }
        let mut table = SymTable {
            values: vec![false; super::row_count(&sizes)],
            group_sizes: sizes,
        };
        let mut filled = vec![false; table.values.len()];
        let mut last_line = header_line;

        for (line_no, line) in lines {
            last_line = line_no;
            let (tuple, value) = line
                .split_once(':')
                .ok_or_else(|| Error::parse(line_no, "expected `c1,...,cr: v`"))?;
            let counts = parse_list(tuple, line_no)?;
            let row = table.row_index(&counts).ok_or_else(|| {
                Error::parse(
                    line_no,
                    format!(
                        "count tuple {counts:?} does not fit groups {:?}",
                        table.group_sizes
                    ),
                )
            })?;
            let v = match value.trim() {
                "0" => false,
                "1" => true,
                other => {
                    return Err(Error::parse(
                        line_no,
                        format!("expected 0 or 1, found {other:?}"),
                    ))
                }
            };
            if std::mem::replace(&mut filled[row], true) {
                return Err(Error::parse(line_no, format!("duplicate row {counts:?}")));
            }
            table.values[row] = v;
        }
        if let Some(missing) = filled.iter().position(|f| !f) {
            let counts = SymTable::decode(&table.group_sizes, missing);
            return Err(Error::parse(last_line, format!("missing row {counts:?}")));
        }
        Ok(table)
    }
}

impl fmt::Display for SymTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |xs: &[usize]| {
            xs.iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(",")
        };
        writeln!(f, "groups: {}", join(&self.group_sizes))?;
        for (counts, v) in self.rows() {
            writeln!(f, "{}: {}", join(&counts), u8::from(v))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_render() {
        let text = "# OR of three\ngroups: 3\n0: 0\n1: 1\n2: 1\n3: 1\n";
        let st: SymTable = text.parse().unwrap();
        assert_eq!(st.values(), &[false, true, true, true]);
        assert_eq!(st.to_string(), "groups: 3\n0: 0\n1: 1\n2: 1\n3: 1\n");
    }

    #[test]
    fn rows_may_arrive_in_any_order() {
        let st: SymTable = "groups: 1, 1\n1,1: 0\n0,0: 0\n0,1: 1\n1,0: 1\n"
            .parse()
            .unwrap();
        assert_eq!(st.values(), &[false, true, true, false]);
        assert_eq!(
            st.to_string(),
            "groups: 1,1\n0,0: 0\n1,0: 1\n0,1: 1\n1,1: 0\n"
        );
    }

    #[test]
    fn malformed_tables() {
        let line_of = |s: &str| match s.parse::<SymTable>() {
            Err(Error::Parse { line, message }) => (line, message),
            other => panic!("expected parse error, got {other:?}"),
        };
        let (line, msg) = line_of("groups: 2\n0: 0\n1: 1\n1: 0\n2: 1\n");
        assert_eq!(line, 4);
        assert!(msg.contains("duplicate"));
        let (line, msg) = line_of("groups: 2\n0: 0\n2: 1\n");
        assert_eq!(line, 3);
        assert!(msg.contains("missing row [1]"));
        assert_eq!(line_of("groups: 2\n3: 0\n").0, 2);
        assert_eq!(line_of("groups: 2\n0,0: 0\n").0, 2);
        assert_eq!(line_of("groups: 2\n0: x\n").0, 2);
        assert_eq!(line_of("group 2\n").0, 1);
        assert_eq!(line_of("groups: 0\n").0, 1);
        assert_eq!(line_of("").0, 1);
        assert!(matches!(
            "groups: 20,20\n".parse::<SymTable>(),
            Err(Error::Capacity { .. })
        ));
    }
}
