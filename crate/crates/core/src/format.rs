//! Text formats.
//!
//! `.trn` (tournament): line 1 is the decimal vertex count `n`, followed by
//! `n` lines of `n` characters `0`/`1`; character `j` of row `i` is `1` iff
//! `i -> j`. Every line ends with LF and nothing follows the last row.
//!
//! Matrix (skew-Hadamard): line 1 is the order `m`, followed by `m` lines of
//! `m` space-separated entries `+1` / `-1`, each line LF-terminated.

use std::fmt;

use crate::constructions::SkewHadamard;
use crate::tournament::Tournament;

/// A parse failure with a 1-based position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

fn err(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, column, message: message.into() }
}

pub fn to_trn(t: &Tournament) -> String {
    let n = t.n();
    let mut s = String::with_capacity((n + 1) * (n + 1) + 4);
    s.push_str(&n.to_string());
    s.push('\n');
    for i in 0..n {
        for j in 0..n {
            s.push(if t.dominates(i, j) { '1' } else { '0' });
        }
        s.push('\n');
    }
    s
}

/// Splits into LF-terminated lines, rejecting CR and unterminated tails.
fn lines(text: &str) -> Result<Vec<&str>, ParseError> {
    if text.is_empty() {
        return Err(err(1, 1, "empty input"));
    }
    let mut out: Vec<&str> = text.split('\n').collect();
    let tail = out.pop().unwrap();
    if !tail.is_empty() {
        return Err(err(out.len() + 1, tail.len() + 1, "missing final line feed"));
    }
    for (i, line) in out.iter().enumerate() {
        if let Some(col) = line.find('\r') {
            return Err(err(i + 1, col + 1, "carriage return; LF line endings required"));
        }
    }
    Ok(out)
}

fn parse_order(line: &str) -> Result<usize, ParseError> {
    if line.is_empty() || !line.bytes().all(|b| b.is_ascii_digit()) {
        let col = line.bytes().position(|b| !b.is_ascii_digit()).unwrap_or(0) + 1;
        return Err(err(1, col, "expected a decimal count"));
    }
    line.parse().map_err(|_| err(1, 1, "count out of range"))
}

pub fn parse_trn(text: &str) -> Result<Tournament, ParseError> {
    let lines = lines(text)?;
    let n = parse_order(lines[0])?;
    if n == 0 {
        return Err(err(1, 1, "tournament needs at least one vertex"));
    }
    if n > crate::MAX_VERTICES {
        return Err(err(1, 1, format!("at most {} vertices supported", crate::MAX_VERTICES)));
    }
    if lines.len() != n + 1 {
        let line = lines.len().min(n + 1) + 1;
        let what = if lines.len() < n + 1 { "missing rows" } else { "trailing content" };
        return Err(err(line, 1, format!("{what}: expected {n} rows")));
    }
    let mut rows = vec![vec![false; n]; n];
    for i in 0..n {
        let line = lines[i + 1].as_bytes();
        for (j, &b) in line.iter().enumerate() {
            if j >= n {
                return Err(err(i + 2, j + 1, format!("row longer than {n}")));
            }
            rows[i][j] = match b {
                b'0' => false,
                b'1' => true,
                _ => return Err(err(i + 2, j + 1, "expected '0' or '1'")),
            };
        }
        if line.len() < n {
            return Err(err(i + 2, line.len() + 1, format!("row shorter than {n}")));
        }
    }
    for i in 0..n {
        if rows[i][i] {
            return Err(err(i + 2, i + 1, "diagonal entry must be '0'"));
        }
        for j in i + 1..n {
            if rows[i][j] == rows[j][i] {
                return Err(err(
                    j + 2,
                    i + 1,
                    format!("entries ({i},{j}) and ({j},{i}) must differ"),
                ));
            }
        }
    }
    Ok(Tournament::from_matrix(&rows).expect("validated above"))
}

pub fn to_matrix_text(h: &SkewHadamard) -> String {
    let mut s = format!("{}\n", h.order());
    for row in h.entries() {
        let cells: Vec<&str> = row.iter().map(|&e| if e > 0 { "+1" } else { "-1" }).collect();
        s.push_str(&cells.join(" "));
        s.push('\n');
    }
    s
}

/// Parses the entries of a matrix file. Invariants are checked separately
/// by [`SkewHadamard::new`].
pub fn parse_matrix_text(text: &str) -> Result<Vec<Vec<i8>>, ParseError> {
    let lines = lines(text)?;
    let m = parse_order(lines[0])?;
    if m == 0 {
        return Err(err(1, 1, "order must be positive"));
    }
    if lines.len() != m + 1 {
        let line = lines.len().min(m + 1) + 1;
        return Err(err(line, 1, format!("expected {m} rows")));
    }
    let mut entries = Vec::with_capacity(m);
    for (i, line) in lines[1..].iter().enumerate() {
        let mut row = Vec::with_capacity(m);
        let mut col = 1;
        for cell in line.split(' ') {
            let v = match cell {
                "+1" | "1" => 1,
                "-1" => -1,
                _ => return Err(err(i + 2, col, format!("expected +1 or -1, found {cell:?}"))),
            };
            row.push(v);
            col += cell.len() + 1;
        }
        if row.len() != m {
            return Err(err(i + 2, 1, format!("expected {m} entries, found {}", row.len())));
        }
        entries.push(row);
    }
    Ok(entries)
}
