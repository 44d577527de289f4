//! Orders files and the two published realizer certificates.
//!
//! An orders file holds one partial linear extension per line as decimal
//! element codes separated by whitespace. Blank lines and runs of spaces are
//! tolerated on input; [`emit_orders`] writes single spaces and one trailing
//! newline per line.

use crate::error::{Error, Result};
use crate::poset::ElementId;
use crate::realizer::{PartialLinearExtension, RealizerFamily};

/// Realizer of `boolean(4)` with frequency 3.
pub const ORDERS4_RAW: &str = include_str!("../fixtures/orders4.in");

/// Realizer of `boolean(7)` with frequency 5, kept verbatim
/// (leading spaces and whitespace-only separator lines included).
pub const ORDERS7_RAW: &str = include_str!("../fixtures/orders7.in");

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Table {
    B4,
    B7,
}

impl Table {
    pub fn raw(self) -> &'static str {
        match self {
            Table::B4 => ORDERS4_RAW,
            Table::B7 => ORDERS7_RAW,
        }
    }

    pub fn family(self) -> RealizerFamily {
        parse_orders(self.raw()).expect("embedded table parses")
    }

    /// Lattice order `n` the table realizes.
    pub fn order(self) -> usize {
        match self {
            Table::B4 => 4,
            Table::B7 => 7,
        }
    }
}

pub fn orders4() -> RealizerFamily {
    Table::B4.family()
}

pub fn orders7() -> RealizerFamily {
    Table::B7.family()
}

pub fn parse_orders(text: &str) -> Result<RealizerFamily> {
    let mut ples = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let ids = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<ElementId>().map_err(|_| Error::Parse {
                    what: "orders file",
                    detail: format!("line {}: {tok:?} is not an element code", lineno + 1),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        ples.push(PartialLinearExtension::new(ids));
    }
    Ok(RealizerFamily::new(ples))
}

pub fn emit_orders(family: &RealizerFamily) -> String {
    let mut out = String::new();
    for ple in family.ples() {
        let line: Vec<String> = ple.elements().iter().map(u32::to_string).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn b4_table_lines() {
        let text = emit_orders(&orders4());
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 4);
        assert_eq!(lines[0], "0 8 1 9 2 3 11 4 6 7 12 14 13 15");
        assert_eq!(lines[3], "4 2 6 1 3 5 7 8 9 10");
    }

    #[test]
    fn b7_table_is_irregular_but_parses() {
        assert!(ORDERS7_RAW.starts_with(' '));
        assert!(ORDERS7_RAW.lines().any(|l| l == " "));
        let f = orders7();
        assert_eq!(f.size(), 7);
        let text = emit_orders(&f);
        assert!(text
            .lines()
            .all(|l| !l.starts_with(' ') && !l.contains("  ")));
        assert!(text.starts_with("32 1 33 8 40 "));
    }

    #[test]
    fn normalization_is_idempotent() {
        let messy = "  3 1\t\t2 \n\n   \n0   5\n";
        let once = emit_orders(&parse_orders(messy).unwrap());
        assert_eq!(once, "3 1 2\n0 5\n");
        assert_eq!(emit_orders(&parse_orders(&once).unwrap()), once);
    }

    #[test]
    fn rejects_garbage() {
        let err = parse_orders("1 2\n3 x\n").unwrap_err();
        assert!(err.to_string().contains("line 2"));
        assert!(parse_orders("-1").is_err());
    }
}
