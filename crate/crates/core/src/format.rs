//! Text formats: algebra files, carrier subsets, and set expressions over
//! the naturals. The exact grammars live in `docs/formats.md`; every error
//! carries a line and column.

use crate::algebra::{FiniteAlgebra, Operation, SubsetMask};
use crate::nat::UpSet;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

impl ParseError {
    fn at(line: usize, col: usize, msg: impl Into<String>) -> Self {
        ParseError { line, col, msg: msg.into() }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.col, self.msg)
    }
}

impl std::error::Error for ParseError {}

/// Parses the algebra file format:
///
/// ```text
/// carrier 4
/// op suc 1
/// 1 2 3 0
/// op add 2
/// 0 1 2 3 1 2 3 0 2 3 0 1 3 0 1 2
/// ```
///
/// Tables are row-major with the last argument varying fastest. Blank
/// lines and `#` comments are allowed between entries.
pub fn parse_algebra(input: &str) -> Result<FiniteAlgebra, ParseError> {
    let mut lines = input
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'));
    let (line_no, header) = lines.next().ok_or_else(|| ParseError::at(1, 1, "empty input"))?;
    let carrier = match header.trim().strip_prefix("carrier") {
        Some(rest) => rest.trim().parse::<usize>().map_err(|e| {
            ParseError::at(line_no, header.find(char::is_numeric).map_or(1, |c| c + 1), format!("bad carrier size: {e}"))
        })?,
        None => return Err(ParseError::at(line_no, 1, "expected `carrier <n>`")),
    };
    let mut ops = Vec::new();
    while let Some((line_no, line)) = lines.next() {
        let trimmed = line.trim();
        let mut parts = trimmed.split_whitespace();
        if parts.next() != Some("op") {
            return Err(ParseError::at(line_no, 1, "expected `op <name> <arity>`"));
        }
        let name = parts
            .next()
            .ok_or_else(|| ParseError::at(line_no, trimmed.len(), "missing operation name"))?;
        let arity: usize = parts
            .next()
            .ok_or_else(|| ParseError::at(line_no, trimmed.len(), "missing arity"))?
            .parse()
            .map_err(|e| ParseError::at(line_no, trimmed.len(), format!("bad arity: {e}")))?;
        if parts.next().is_some() {
            return Err(ParseError::at(line_no, trimmed.len(), "trailing tokens after arity"));
        }
        let expected = carrier.pow(arity as u32);
        let (table_line_no, table_line) = lines
            .next()
            .ok_or_else(|| ParseError::at(line_no + 1, 1, "missing table line"))?;
        let mut table = Vec::with_capacity(expected);
        let mut col = 1;
        for tok in table_line.split_whitespace() {
            col = table_line[..table_line.find(tok).unwrap_or(0)].chars().count() + 1;
            let v: usize = tok.parse().map_err(|e| {
                ParseError::at(table_line_no, col, format!("bad table entry `{tok}`: {e}"))
            })?;
            table.push(v);
        }
        if table.len() != expected {
            return Err(ParseError::at(
                table_line_no,
                col,
                format!("table for {name} has {} entries, expected {expected}", table.len()),
            ));
        }
        ops.push(Operation::new(name, arity, table));
    }
    FiniteAlgebra::new(carrier, ops).map_err(|e| ParseError::at(1, 1, e.to_string()))
}

/// Comma-separated element list over a carrier, e.g. `0,3,5`. An empty
/// string is the empty subset.
pub fn parse_subset(input: &str, carrier: usize) -> Result<SubsetMask, ParseError> {
    let trimmed = input.trim();
    if trimmed.is_empty() {
        return Ok(SubsetMask::empty(carrier));
    }
    let mut elements = Vec::new();
    let mut col = 1;
    for tok in trimmed.split(',') {
        let v: usize = tok
            .trim()
            .parse()
            .map_err(|e| ParseError::at(1, col, format!("bad element `{}`: {e}", tok.trim())))?;
        elements.push(v);
        col += tok.len() + 1;
    }
    SubsetMask::from_elements(carrier, &elements).map_err(|e| ParseError::at(1, 1, e.to_string()))
}

/// Parses a set expression over the naturals:
///
/// * `N` — the whole carrier,
/// * `finite{e1,e2,...}` — a finite set (`finite{}` is empty),
/// * `q+rN` — the arithmetic progression with start `q`, step `r >= 1`,
/// * `{e1,...}+U(a)` — a finite part joined with the final segment `a+N`,
/// * `up(a=A,k=K,F={...},D={...})` — the canonical quadruple, which is
///   also what sets print as; parsing a printed form is bit-exact.
pub fn parse_upset(input: &str) -> Result<UpSet, ParseError> {
    let s = input.trim();
    if s == "N" {
        return Ok(UpSet::naturals());
    }
    if let Some(body) = s.strip_prefix("finite{").and_then(|r| r.strip_suffix('}')) {
        return Ok(UpSet::finite_set(parse_u64_list(body)?));
    }
    if let Some(rest) = s.strip_prefix("up(").and_then(|r| r.strip_suffix(')')) {
        return parse_quadruple(rest);
    }
    if let Some((finite_part, tail)) = s.split_once("+U(") {
        let finite_body = finite_part
            .trim()
            .strip_prefix('{')
            .and_then(|r| r.strip_suffix('}'))
            .ok_or_else(|| ParseError::at(1, 1, "expected `{e1,...}+U(a)`"))?;
        let start: u64 = tail
            .strip_suffix(')')
            .ok_or_else(|| ParseError::at(1, s.len(), "missing `)`"))?
            .trim()
            .parse()
            .map_err(|e| ParseError::at(1, 1, format!("bad segment start: {e}")))?;
        let finite = UpSet::finite_set(parse_u64_list(finite_body)?);
        return Ok(finite.union(&UpSet::final_segment(start)));
    }
    if let Some((start, step)) = s.split_once('+') {
        let step = step
            .strip_suffix('N')
            .ok_or_else(|| ParseError::at(1, s.len(), "expected `q+rN`"))?;
        let q: u64 = start
            .trim()
            .parse()
            .map_err(|e| ParseError::at(1, 1, format!("bad progression start: {e}")))?;
        let r: u64 = step
            .trim()
            .parse()
            .map_err(|e| ParseError::at(1, start.len() + 2, format!("bad progression step: {e}")))?;
        if r == 0 {
            return Err(ParseError::at(1, start.len() + 2, "progression step must be positive"));
        }
        return Ok(UpSet::progression(q, r));
    }
    Err(ParseError::at(1, 1, format!("unrecognized set expression `{s}`")))
}

fn parse_u64_list(body: &str) -> Result<Vec<u64>, ParseError> {
    let trimmed = body.trim();
    if trimmed.is_empty() {
        return Ok(Vec::new());
    }
    trimmed
        .split(',')
        .map(|tok| {
            tok.trim()
                .parse()
                .map_err(|e| ParseError::at(1, 1, format!("bad element `{}`: {e}", tok.trim())))
        })
        .collect()
}

fn parse_quadruple(body: &str) -> Result<UpSet, ParseError> {
    // a=A,k=K,F={...},D={...} — split on the commas outside braces
    let mut fields = Vec::new();
    let mut depth = 0usize;
    let mut start = 0;
    for (i, c) in body.char_indices() {
        match c {
            '{' => depth += 1,
            '}' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                fields.push(&body[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    fields.push(&body[start..]);
    if fields.len() != 4 {
        return Err(ParseError::at(1, 1, "expected `up(a=A,k=K,F={...},D={...})`"));
    }
    let field = |prefix: &str, raw: &str| -> Result<String, ParseError> {
        raw.trim()
            .strip_prefix(prefix)
            .map(str::to_string)
            .ok_or_else(|| ParseError::at(1, 1, format!("expected `{prefix}...` in quadruple")))
    };
    let a: u64 = field("a=", fields[0])?
        .parse()
        .map_err(|e| ParseError::at(1, 1, format!("bad threshold: {e}")))?;
    let k: u64 = field("k=", fields[1])?
        .parse()
        .map_err(|e| ParseError::at(1, 1, format!("bad period: {e}")))?;
    if k == 0 {
        return Err(ParseError::at(1, 1, "period must be positive"));
    }
    let braces = |s: String| -> Result<Vec<u64>, ParseError> {
        let inner = s
            .trim()
            .strip_prefix('{')
            .and_then(|r| r.strip_suffix('}'))
            .ok_or_else(|| ParseError::at(1, 1, "expected `{...}`"))?;
        parse_u64_list(inner)
    };
    let finite = braces(field("F=", fields[2])?)?;
    let residues = braces(field("D=", fields[3])?)?;
    if finite.iter().any(|&x| x >= a) {
        return Err(ParseError::at(1, 1, "finite part must lie below the threshold"));
    }
    if residues.iter().any(|&r| r >= k) {
        return Err(ParseError::at(1, 1, "residues must lie below the period"));
    }
    Ok(UpSet::new(a, k, finite, residues))
}
