use std::io::Write;

use super::encode::{CnfFormula, VarMap};
use crate::error::{Error, Result};

/// Writes `cnf` in DIMACS format and, one line per variable, the map file
/// `x|y|z <a> <b|-> <order> <var>` with orders numbered from 1.
pub fn write_dimacs(
    cnf: &CnfFormula,
    map: Option<&VarMap>,
    out: &mut impl Write,
    map_out: Option<&mut dyn Write>,
) -> Result<()> {
    write_cnf(cnf, out)?;
    if let (Some(map), Some(sink)) = (map, map_out) {
        write_var_map(map, sink)?;
    }
    Ok(())
}

pub fn write_cnf(cnf: &CnfFormula, out: &mut impl Write) -> Result<()> {
    let mut buf = std::io::BufWriter::new(out);
    writeln!(buf, "p cnf {} {}", cnf.variable_count, cnf.clauses.len())?;
    let mut line = String::new();
    for clause in &cnf.clauses {
        line.clear();
        for lit in clause {
            line.push_str(&lit.to_string());
            line.push(' ');
        }
        line.push('0');
        writeln!(buf, "{line}")?;
    }
    buf.flush()?;
    Ok(())
}

pub fn write_var_map(map: &VarMap, out: &mut dyn Write) -> Result<()> {
    let mut buf = std::io::BufWriter::new(out);
    for var in 1..=map.variable_count() as i32 {
        let role = map.role(var).expect("variable in range");
        writeln!(buf, "{role} {var}")?;
    }
    buf.flush()?;
    Ok(())
}

/// Reads a DIMACS CNF file. Comment lines are skipped and clauses may span
/// lines.
pub fn parse_dimacs(text: &str) -> Result<CnfFormula> {
    let bad = |detail: String| Error::Parse {
        what: "DIMACS CNF",
        detail,
    };
    let mut header: Option<(usize, usize)> = None;
    let mut clauses = Vec::new();
    let mut current = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') || line.starts_with('%') {
            continue;
        }
        if line.starts_with('p') {
            let parts: Vec<&str> = line.split_whitespace().collect();
            match parts.as_slice() {
                ["p", "cnf", v, c] => {
                    let v = v.parse().map_err(|_| bad(format!("bad header {line:?}")))?;
                    let c = c.parse().map_err(|_| bad(format!("bad header {line:?}")))?;
                    header = Some((v, c));
                }
                _ => return Err(bad(format!("bad header {line:?}"))),
            }
            continue;
        }
        let (vars, _) = header.ok_or_else(|| bad("clause before header".into()))?;
        for tok in line.split_whitespace() {
            let lit: i32 = tok
                .parse()
                .map_err(|_| bad(format!("bad literal {tok:?}")))?;
            if lit == 0 {
                clauses.push(std::mem::take(&mut current));
            } else if lit.unsigned_abs() as usize > vars {
                return Err(bad(format!("literal {lit} exceeds {vars} variables")));
            } else {
                current.push(lit);
            }
        }
    }
    let (variable_count, expected) = header.ok_or_else(|| bad("missing header".into()))?;
    if !current.is_empty() {
        clauses.push(current);
    }
    if clauses.len() != expected {
        return Err(bad(format!(
            "header announces {expected} clauses, found {}",
            clauses.len()
        )));
    }
    Ok(CnfFormula {
        variable_count,
        clauses,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::Poset;
    use crate::sat::encode::encode;

    #[test]
    fn empty_formula() {
        let mut out = Vec::new();
        write_cnf(&CnfFormula::default(), &mut out).unwrap();
        assert_eq!(out, b"p cnf 0 0\n");
    }

    #[test]
    fn header_matches_body() {
        let (cnf, map) = encode(&Poset::boolean(2).unwrap(), 2, 2);
        let mut out = Vec::new();
        let mut map_out = Vec::new();
        write_dimacs(&cnf, Some(&map), &mut out, Some(&mut map_out)).unwrap();
        let text = String::from_utf8(out).unwrap();
        let first = text.lines().next().unwrap();
        assert_eq!(first, format!("p cnf 56 {}", cnf.clauses.len()));
        assert_eq!(text.lines().count(), cnf.clauses.len() + 1);
        assert!(text.lines().skip(1).all(|l| l.ends_with(" 0") || l == "0"));

        let parsed = parse_dimacs(&text).unwrap();
        assert_eq!(parsed, cnf);

        let map_text = String::from_utf8(map_out).unwrap();
        let lines: Vec<&str> = map_text.lines().collect();
        assert_eq!(lines.len(), 56);
        assert_eq!(lines[0], "x 0 1 1 1");
        assert_eq!(lines[1], "y 0 1 1 2");
        assert_eq!(lines[55], "z 3 - 2 56");
    }

    #[test]
    fn parse_tolerates_comments_and_split_clauses() {
        let text = "c hello\np cnf 3 2\n1 -2\n 3 0\n-1 0\n";
        let cnf = parse_dimacs(text).unwrap();
        assert_eq!(cnf.clauses, vec![vec![1, -2, 3], vec![-1]]);
    }

    #[test]
    fn parse_errors() {
        assert!(parse_dimacs("1 2 0\n").is_err());
        assert!(parse_dimacs("p cnf 1 1\n2 0\n").is_err());
        assert!(parse_dimacs("p cnf 2 2\n1 0\n").is_err());
        assert!(parse_dimacs("p dnf 2 2\n").is_err());
    }
}
