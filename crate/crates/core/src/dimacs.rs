//! DIMACS CNF reading and writing.
//!
//! Parsing normalizes every clause: duplicate literals are collapsed (first
//! occurrence wins) and tautologies are dropped. A header whose clause count
//! disagrees with the body is accepted and reported through
//! [`ParsedCnf::header_mismatch`].

use std::fmt::Write as _;
use std::io;

use thiserror::Error;

use crate::lit::Lit;

/// A normalized CNF formula.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CnfFormula {
    pub num_vars: usize,
    pub clauses: Vec<Vec<Lit>>,
}

impl CnfFormula {
    pub fn new(num_vars: usize) -> Self {
        CnfFormula {
            num_vars,
            clauses: Vec::new(),
        }
    }

    /// Builds a formula from DIMACS-style integer clauses, normalizing each one.
    ///
    /// Panics on a zero literal or a variable above `num_vars`.
    pub fn from_dimacs_clauses(num_vars: usize, clauses: &[&[i64]]) -> Self {
        let mut f = CnfFormula::new(num_vars);
        for c in clauses {
            let lits: Vec<Lit> = c
                .iter()
                .map(|&v| {
                    let lit = Lit::from_dimacs(v).expect("zero literal in clause");
                    assert!(lit.var().index() < num_vars, "variable {v} out of range");
                    lit
                })
                .collect();
            f.add_clause(&lits);
        }
        f
    }

    /// Adds a clause after normalization. Returns `false` if it was a tautology
    /// and therefore dropped.
    pub fn add_clause(&mut self, lits: &[Lit]) -> bool {
        match normalize_clause(lits) {
            Some(c) => {
                self.clauses.push(c);
                true
            }
            None => false,
        }
    }

    /// Whether `model` (indexed by variable) satisfies every clause.
    pub fn is_satisfied_by(&self, model: &[bool]) -> bool {
        self.clauses.iter().all(|c| {
            c.iter()
                .any(|l| model.get(l.var().index()).copied() == Some(l.is_positive()))
        })
    }

    pub fn num_clauses(&self) -> usize {
        self.clauses.len()
    }
}

/// Deduplicates literals in first-occurrence order. `None` for a tautology.
pub(crate) fn normalize_clause(lits: &[Lit]) -> Option<Vec<Lit>> {
    let mut out: Vec<Lit> = Vec::with_capacity(lits.len());
    for &l in lits {
        if out.contains(&!l) {
            return None;
        }
        if !out.contains(&l) {
            out.push(l);
        }
    }
    Some(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    BadHeader,
    BadToken,
    VarOutOfRange,
    Truncated,
}

impl ParseErrorKind {
    fn describe(self) -> &'static str {
        match self {
            ParseErrorKind::BadHeader => "malformed or missing `p cnf` header",
            ParseErrorKind::BadToken => "expected a signed integer",
            ParseErrorKind::VarOutOfRange => "variable index exceeds header variable count",
            ParseErrorKind::Truncated => "last clause is missing its terminating 0",
        }
    }
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
#[error("line {line}, column {column}: {}", kind.describe())]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

/// Parse result together with header bookkeeping.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedCnf {
    pub formula: CnfFormula,
    /// Clause count declared in the header.
    pub declared_clauses: usize,
    /// Clauses read from the body, including dropped tautologies.
    pub clauses_read: usize,
}

impl ParsedCnf {
    pub fn header_mismatch(&self) -> bool {
        self.declared_clauses != self.clauses_read
    }
}

/// Parses DIMACS CNF text into a normalized formula.
pub fn parse_dimacs(input: &[u8]) -> Result<CnfFormula, ParseError> {
    parse_dimacs_detailed(input).map(|p| p.formula)
}

/// Like [`parse_dimacs`], also reporting the declared and actual clause counts.
pub fn parse_dimacs_detailed(input: &[u8]) -> Result<ParsedCnf, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut formula = CnfFormula::default();
    let mut clauses_read = 0usize;
    let mut current: Vec<Lit> = Vec::new();
    let mut last_pos = (1, 1);

    for (line_idx, line) in input.split(|&b| b == b'\n').enumerate() {
        let line_no = line_idx + 1;
        let mut tokens = Tokens::new(line).peekable();
        let Some(&(first_col, first)) = tokens.peek() else {
            continue;
        };
        match first.first() {
            Some(b'c') => continue,
            // SATLIB files end with a `%` line followed by a stray `0`.
            Some(b'%') => break,
            Some(b'p') => {
                let err = |column| ParseError {
                    line: line_no,
                    column,
                    kind: ParseErrorKind::BadHeader,
                };
                if header.is_some() || first != b"p" {
                    return Err(err(first_col));
                }
                tokens.next();
                match tokens.next() {
                    Some((_, b"cnf")) => {}
                    Some((col, _)) => return Err(err(col)),
                    None => return Err(err(line.len() + 1)),
                }
                let mut number = || match tokens.next() {
                    Some((col, tok)) => parse_unsigned(tok).ok_or(err(col)),
                    None => Err(err(line.len() + 1)),
                };
                let vars = number()?;
                let count = number()?;
                if let Some((col, _)) = tokens.next() {
                    return Err(err(col));
                }
                formula.num_vars = vars;
                header = Some((vars, count));
            }
            _ => {
                let Some((num_vars, _)) = header else {
                    return Err(ParseError {
                        line: line_no,
                        column: first_col,
                        kind: ParseErrorKind::BadHeader,
                    });
                };
                for (col, tok) in tokens {
                    last_pos = (line_no, col);
                    let value = parse_signed(tok).ok_or(ParseError {
                        line: line_no,
                        column: col,
                        kind: ParseErrorKind::BadToken,
                    })?;
                    if value == 0 {
                        clauses_read += 1;
                        formula.add_clause(&current);
                        current.clear();
                        continue;
                    }
                    if value.unsigned_abs() > num_vars as u64 {
                        return Err(ParseError {
                            line: line_no,
                            column: col,
                            kind: ParseErrorKind::VarOutOfRange,
                        });
                    }
                    // In range, so the conversion cannot fail.
                    current.push(Lit::from_dimacs(value).expect("non-zero literal"));
                }
            }
        }
    }

    let Some((_, declared_clauses)) = header else {
        return Err(ParseError {
            line: 1,
            column: 1,
            kind: ParseErrorKind::BadHeader,
        });
    };
    if !current.is_empty() {
        return Err(ParseError {
            line: last_pos.0,
            column: last_pos.1,
            kind: ParseErrorKind::Truncated,
        });
    }
    Ok(ParsedCnf {
        formula,
        declared_clauses,
        clauses_read,
    })
}

fn parse_unsigned(tok: &[u8]) -> Option<usize> {
    std::str::from_utf8(tok).ok()?.parse().ok()
}

fn parse_signed(tok: &[u8]) -> Option<i64> {
    std::str::from_utf8(tok).ok()?.parse().ok()
}

/// Whitespace-separated tokens of one line with their 1-based columns.
struct Tokens<'a> {
    line: &'a [u8],
    pos: usize,
}

impl<'a> Tokens<'a> {
    fn new(line: &'a [u8]) -> Self {
        Tokens { line, pos: 0 }
    }
}

impl<'a> Iterator for Tokens<'a> {
    type Item = (usize, &'a [u8]);

    fn next(&mut self) -> Option<Self::Item> {
        let rest = &self.line[self.pos..];
        let start = self.pos + rest.iter().position(|b| !b.is_ascii_whitespace())?;
        let len = self.line[start..]
            .iter()
            .position(|b| b.is_ascii_whitespace())
            .unwrap_or(self.line.len() - start);
        self.pos = start + len;
        Some((start + 1, &self.line[start..start + len]))
    }
}

/// Renders a formula as DIMACS CNF text.
pub fn write_dimacs(formula: &CnfFormula) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "p cnf {} {}", formula.num_vars, formula.clauses.len());
    for clause in &formula.clauses {
        for lit in clause {
            let _ = write!(out, "{} ", lit.to_dimacs());
        }
        out.push_str("0\n");
    }
    out
}

/// Streams a formula as DIMACS CNF text to `w`.
pub fn write_dimacs_to<W: io::Write>(formula: &CnfFormula, mut w: W) -> io::Result<()> {
    w.write_all(write_dimacs(formula).as_bytes())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn clauses(f: &CnfFormula) -> Vec<Vec<i64>> {
        f.clauses
            .iter()
            .map(|c| c.iter().map(|l| l.to_dimacs()).collect())
            .collect()
    }

    fn kind(input: &str) -> ParseErrorKind {
        parse_dimacs(input.as_bytes()).unwrap_err().kind
    }

    #[test]
    fn parses_simple_formula() {
        let f = parse_dimacs(b"p cnf 2 2\n1 -2 0\n2 0\n").unwrap();
        assert_eq!(f.num_vars, 2);
        assert_eq!(clauses(&f), vec![vec![1, -2], vec![2]]);
    }

    #[test]
    fn drops_tautologies() {
        let p = parse_dimacs_detailed(b"p cnf 1 1\n1 -1 0\n").unwrap();
        assert_eq!(p.formula.num_vars, 1);
        assert!(p.formula.clauses.is_empty());
        assert!(!p.header_mismatch());
    }

    #[test]
    fn deduplicates_literals() {
        let f = parse_dimacs(b"p cnf 3 1\n3 1 3 -2 1 0\n").unwrap();
        assert_eq!(clauses(&f), vec![vec![3, 1, -2]]);
    }

    #[test]
    fn rejects_out_of_range_variable() {
        let err = parse_dimacs(b"p cnf 1 1\n2 0\n").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::VarOutOfRange);
        assert_eq!((err.line, err.column), (2, 1));
        assert_eq!(kind("p cnf 3 1\n1 -4 0\n"), ParseErrorKind::VarOutOfRange);
    }

    #[test]
    fn header_errors() {
        assert_eq!(kind(""), ParseErrorKind::BadHeader);
        assert_eq!(kind("1 2 0\n"), ParseErrorKind::BadHeader);
        assert_eq!(kind("p cnf 2\n"), ParseErrorKind::BadHeader);
        assert_eq!(kind("p dnf 2 1\n"), ParseErrorKind::BadHeader);
        assert_eq!(kind("p cnf -2 1\n"), ParseErrorKind::BadHeader);
        assert_eq!(kind("p cnf 2 1 7\n"), ParseErrorKind::BadHeader);
        assert_eq!(kind("p cnf 2 1\np cnf 2 1\n"), ParseErrorKind::BadHeader);
    }

    #[test]
    fn token_and_truncation_errors() {
        let err = parse_dimacs(b"p cnf 2 1\n1 x 0\n").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::BadToken);
        assert_eq!((err.line, err.column), (2, 3));
        assert_eq!(kind("p cnf 2 1\n1 2\n"), ParseErrorKind::Truncated);
        assert_eq!(kind("p cnf 2 1\n1 2.5 0\n"), ParseErrorKind::BadToken);
    }

    #[test]
    fn tolerates_count_mismatch_and_comments() {
        let text = "c hello\nc p cnf 9 9\np cnf 3 5\n  1 2\n -3 0 c\n";
        // a `c` after clause data on the same line is not a comment
        assert_eq!(kind(text), ParseErrorKind::BadToken);
        let p = parse_dimacs_detailed(b"c hello\np cnf 3 5\n  1 2\n -3 0\n\n").unwrap();
        assert!(p.header_mismatch());
        assert_eq!(clauses(&p.formula), vec![vec![1, 2, -3]]);
    }

    #[test]
    fn empty_clause_and_satlib_trailer() {
        let f = parse_dimacs(b"p cnf 2 2\n0\n1 2 0\n").unwrap();
        assert_eq!(clauses(&f), vec![vec![], vec![1, 2]]);
        let f = parse_dimacs(b"p cnf 2 1\n1 2 0\n%\n0\n\n").unwrap();
        assert_eq!(clauses(&f), vec![vec![1, 2]]);
    }

    #[test]
    fn writes_dimacs() {
        let f = CnfFormula::from_dimacs_clauses(2, &[&[1, -2]]);
        assert_eq!(write_dimacs(&f), "p cnf 2 1\n1 -2 0\n");
        assert_eq!(write_dimacs(&CnfFormula::default()), "p cnf 0 0\n");
    }
}
