//! Text formats for matrices.
//!
//! FSM: a header line `FSM 1 <p> <rows> <cols>` followed by one line per row,
//! base-10 residues separated by single spaces, every line newline-terminated.
//! CSV: the same rows, comma-separated, no header.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::field::{is_prime, PrimeField};
use crate::matrix::Matrix;

pub const FSM_MAGIC: &str = "FSM";
pub const FSM_VERSION: u32 = 1;

pub fn to_fsm(m: &Matrix) -> String {
    let mut out = String::with_capacity(16 + m.rows() * m.cols() * 2);
    let _ = writeln!(
        out,
        "{FSM_MAGIC} {FSM_VERSION} {} {} {}",
        m.field().modulus(),
        m.rows(),
        m.cols()
    );
    write_rows(&mut out, m, ' ');
    out
}

pub fn to_csv(m: &Matrix) -> String {
    let mut out = String::with_capacity(m.rows() * m.cols() * 2);
    write_rows(&mut out, m, ',');
    out
}

fn write_rows(out: &mut String, m: &Matrix, sep: char) {
    for i in 0..m.rows() {
        for (j, v) in m.row(i).iter().enumerate() {
            if j > 0 {
                out.push(sep);
            }
            let _ = write!(out, "{v}");
        }
        out.push('\n');
    }
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn parse_header_field(tok: Option<&str>, name: &str) -> Result<u64> {
    let tok = tok.ok_or_else(|| parse_err(1, format!("missing {name} in header")))?;
    tok.parse::<u64>()
        .map_err(|_| parse_err(1, format!("bad {name} '{tok}' in header")))
}

pub fn parse_fsm(text: &str) -> Result<Matrix> {
    let mut lines = text.lines();
    let header = lines.next().ok_or_else(|| parse_err(1, "empty input"))?;
    let mut toks = header.split_whitespace();
    if toks.next() != Some(FSM_MAGIC) {
        return Err(parse_err(1, "missing FSM header"));
    }
    let version = parse_header_field(toks.next(), "version")?;
    if version != FSM_VERSION as u64 {
        return Err(parse_err(1, format!("unsupported FSM version {version}")));
    }
    let p = parse_header_field(toks.next(), "modulus")?;
    let rows = parse_header_field(toks.next(), "row count")? as usize;
    let cols = parse_header_field(toks.next(), "column count")? as usize;
    if toks.next().is_some() {
        return Err(parse_err(1, "trailing tokens in header"));
    }
    let field = PrimeField::new(p)?;
    let mut entries = Vec::with_capacity(rows.saturating_mul(cols).min(1 << 24));
    let mut seen_rows = 0;
    for (idx, line) in lines.enumerate() {
        let lineno = idx + 2;
        if line.trim().is_empty() {
            continue;
        }
        if seen_rows == rows {
            return Err(parse_err(lineno, "more rows than declared"));
        }
        let row = parse_row(line, None, lineno)?;
        if row.len() != cols {
            return Err(parse_err(lineno, format!("expected {cols} values, found {}", row.len())));
        }
        entries.extend(row);
        seen_rows += 1;
    }
    if seen_rows != rows {
        return Err(parse_err(seen_rows + 2, format!("expected {rows} rows, found {seen_rows}")));
    }
    check_residues(&entries, cols, p)?;
    Matrix::new(field, rows, cols, entries.into_iter().map(|v| v as u32).collect())
}

/// Parses CSV. When `p` is `None` the modulus is the smallest prime exceeding
/// every entry, which preserves the zero/nonzero pattern.
pub fn parse_csv(text: &str, p: Option<u64>) -> Result<Matrix> {
    let mut entries = Vec::new();
    let mut cols = None;
    let mut rows = 0;
    for (idx, line) in text.lines().enumerate() {
        let lineno = idx + 1;
        if line.trim().is_empty() {
            continue;
        }
        let row = parse_row(line, Some(','), lineno)?;
        match cols {
            None => cols = Some(row.len()),
            Some(c) if c != row.len() => {
                return Err(parse_err(lineno, format!("expected {c} values, found {}", row.len())))
            }
            _ => {}
        }
        entries.extend(row);
        rows += 1;
    }
    let cols = cols.ok_or_else(|| parse_err(1, "empty input"))?;
    let p = match p {
        Some(p) => p,
        None => {
            let max = entries.iter().copied().max().unwrap_or(0);
            (max + 1..).find(|&q| is_prime(q)).expect("primes are unbounded")
        }
    };
    let field = PrimeField::new(p)?;
    check_residues(&entries, cols, p)?;
    Matrix::new(field, rows, cols, entries.into_iter().map(|v| v as u32).collect())
}

/// FSM if the text starts with the FSM header, CSV otherwise.
pub fn parse_matrix(text: &str, p: Option<u64>) -> Result<Matrix> {
    if text.trim_start().starts_with(FSM_MAGIC) {
        let m = parse_fsm(text)?;
        match p {
            Some(q) if q != m.field().modulus() as u64 => Ok(m.reduce_into(PrimeField::new(q)?)),
            _ => Ok(m),
        }
    } else {
        parse_csv(text, p)
    }
}

fn parse_row(line: &str, sep: Option<char>, lineno: usize) -> Result<Vec<u64>> {
    let toks: Vec<&str> = match sep {
        Some(c) => line.split(c).map(str::trim).collect(),
        None => line.split_whitespace().collect(),
    };
    toks.into_iter()
        .map(|t| t.parse::<u64>().map_err(|_| parse_err(lineno, format!("bad value '{t}'"))))
        .collect()
}

fn check_residues(entries: &[u64], cols: usize, p: u64) -> Result<()> {
    if let Some(pos) = entries.iter().position(|&v| v >= p) {
        return Err(Error::InvalidMatrix(format!(
            "entry {} at ({}, {}) is not a residue mod {p}",
            entries[pos],
            pos / cols,
            pos % cols
        )));
    }
    Ok(())
}
