use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::ncf::{NcfRepr, Rule};

fn parse_bit(token: &str, line: usize) -> Result<bool> {
    match token.trim() {
        "0" => Ok(false),
        "1" => Ok(true),
        other => Err(Error::parse(
            line,
            format!("expected 0 or 1, found {other:?}"),
        )),
    }
}

fn parse_rule(line_no: usize, head: &str, body: &str) -> Result<Rule> {
    let var = head
        .strip_prefix('x')
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&v| v > 0)
        .ok_or_else(|| {
            Error::parse(
                line_no,
                format!("expected a variable like x1, found {head:?}"),
            )
        })?;
    let (a, b) = body
        .split_once("->")
        .ok_or_else(|| Error::parse(line_no, "expected `<0|1> -> <0|1>`"))?;
    Ok(Rule::new(
        var,
        parse_bit(a, line_no)?,
        parse_bit(b, line_no)?,
    ))
}

/// Parses the line format: one `x<i>: <a> -> <b>` rule per line, then a
/// final `default: <v>` line. `#` starts a comment; blank lines are skipped.
impl FromStr for NcfRepr {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut rules: Vec<(usize, Rule)> = Vec::new();
        let mut default: Option<(usize, bool)> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if default.is_some() {
                return Err(Error::parse(line_no, "content after the default line"));
            }
            let (head, body) = line
                .split_once(':')
                .ok_or_else(|| Error::parse(line_no, "expected `x<i>: a -> b` or `default: v`"))?;
            let head = head.trim();
            if head.eq_ignore_ascii_case("default") {
                default = Some((line_no, parse_bit(body, line_no)?));
            } else {
                rules.push((line_no, parse_rule(line_no, head, body)?));
            }
        }
        let (default_line, default_value) = default
            .ok_or_else(|| Error::parse(text.lines().count().max(1), "missing `default:` line"))?;
        if rules.is_empty() {
            return Err(Error::parse(
                default_line,
                "no rules before the default line",
            ));
        }
        let n = rules.len();
        let mut seen = vec![false; n];
        for &(line_no, rule) in &rules {
            if rule.variable > n {
                return Err(Error::parse(
                    line_no,
                    format!(
                        "variable x{} out of range: {n} rules cover x1..x{n}",
                        rule.variable
                    ),
                ));
            }
            if std::mem::replace(&mut seen[rule.variable - 1], true) {
                return Err(Error::DuplicateVariable {
                    line: line_no,
                    var: rule.variable,
                });
            }
        }
        NcfRepr::new(rules.into_iter().map(|(_, r)| r).collect(), default_value)
    }
}

impl fmt::Display for NcfRepr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in self.rules() {
            writeln!(
                f,
                "x{}: {} -> {}",
                r.variable,
                u8::from(r.canalyzing),
                u8::from(r.canalyzed)
            )?;
        }
        writeln!(f, "default: {}", u8::from(self.default_value()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncf::tests::arb_ncf;
    use proptest::prelude::*;

    #[test]
    fn parses_mixed3() {
        let f: NcfRepr = "x1: 1 -> 0\nx2: 1 -> 1\nx3: 0 -> 1\ndefault: 0\n"
            .parse()
            .unwrap();
        assert_eq!(
            f.rules(),
            &[
                Rule::new(1, true, false),
                Rule::new(2, true, true),
                Rule::new(3, false, true)
            ]
        );
        assert!(!f.default_value());
    }

    #[test]
    fn flexible_whitespace_and_comments() {
        let text = "# example\n\n  x2 :1->1   # trailing\nx1:   0 ->   0\n\nDefault : 1\n";
        let f: NcfRepr = text.parse().unwrap();
        assert_eq!(f.to_string(), "x2: 1 -> 1\nx1: 0 -> 0\ndefault: 1\n");
    }

    #[test]
    fn single_rule_identity() {
        let f: NcfRepr = "x1: 1 -> 1\ndefault: 0".parse().unwrap();
        assert_eq!(f.to_truth_table().to_string(), "n=1 tt=2");
    }

    #[test]
    fn parse_errors() {
        assert_eq!(
            "x1: 1 -> 0\nx2: 1 -> 1\nx3: 0 -> 1\ndefault: 1".parse::<NcfRepr>(),
            Err(Error::InconsistentDefault { found: true })
        );
        assert_eq!(
            "x1: 1 -> 0\n# c\nx1: 1 -> 1\ndefault: 0".parse::<NcfRepr>(),
            Err(Error::DuplicateVariable { line: 3, var: 1 })
        );
        let line_of = |s: &str| match s.parse::<NcfRepr>() {
            Err(Error::Parse { line, .. }) => line,
            other => panic!("expected parse error, got {other:?}"),
        };
        assert_eq!(line_of("x1: 1 -> 0\ndefault: 2"), 2);
        assert_eq!(line_of("x1: 1 => 0\ndefault: 1"), 1);
        assert_eq!(line_of("x1: 1 -> 0\nx3: 1 -> 1\ndefault: 0"), 2);
        assert_eq!(line_of("x1: 1 -> 0\n"), 1);
        assert_eq!(line_of("x1: 1 -> 0\ndefault: 1\nx2: 1 -> 1"), 3);
        assert_eq!(line_of("default: 1"), 1);
        assert_eq!(line_of("y1: 1 -> 0\ndefault: 1"), 1);
    }

    proptest! {
        #[test]
        fn render_parse_round_trip(f in arb_ncf(12)) {
            let text = f.to_string();
            let back: NcfRepr = text.parse().unwrap();
            prop_assert_eq!(back.to_string(), text);
            prop_assert_eq!(back, f);
        }
    }
}
