//! Plain-text matrix format: a `dim=<d>` header followed by `d` lines of
//! `d` space-separated entries, zeros included below the diagonal.

use std::fmt;
use std::str::FromStr;

use super::{MatrixError, UpperTriMatrix};

impl fmt::Display for UpperTriMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "dim={}", self.dim())?;
        for row in self.dense_rows() {
            let line: Vec<String> = row.iter().map(u32::to_string).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

impl UpperTriMatrix {
    pub fn to_text(&self) -> String {
        self.to_string()
    }

    /// Parses one matrix in text format. Blank lines and lines starting with
    /// `#` are ignored.
    pub fn parse_text(s: &str) -> Result<Self, MatrixError> {
        let mut all = parse_many(s)?;
        match all.len() {
            1 => Ok(all.remove(0)),
            0 => Err(perr(1, "no matrix found")),
            k => Err(perr(1, &format!("expected one matrix, found {k}"))),
        }
    }

    /// Parses a sequence of matrix blocks.
    pub fn parse_text_many(s: &str) -> Result<Vec<Self>, MatrixError> {
        parse_many(s)
    }
}

impl FromStr for UpperTriMatrix {
    type Err = MatrixError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse_text(s)
    }
}

fn perr(line: usize, message: &str) -> MatrixError {
    MatrixError::Parse {
        line,
        message: message.to_string(),
    }
}

fn parse_many(s: &str) -> Result<Vec<UpperTriMatrix>, MatrixError> {
    let mut lines = s
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let mut out = Vec::new();
    while let Some((no, header)) = lines.next() {
        let dim: usize = header
            .strip_prefix("dim=")
            .ok_or_else(|| perr(no, "expected `dim=<d>` header"))?
            .trim()
            .parse()
            .map_err(|_| perr(no, "invalid dimension"))?;
        let mut rows = Vec::with_capacity(dim);
        for r in 0..dim {
            let (no, line) = lines
                .next()
                .ok_or_else(|| perr(no + r + 1, "missing matrix row"))?;
            let mut row = Vec::with_capacity(dim);
            for tok in line.split_whitespace() {
                let v: i64 = tok
                    .parse()
                    .map_err(|_| perr(no, &format!("invalid entry `{tok}`")))?;
                if v < 0 {
                    return Err(perr(no, &format!("negative entry {v}")));
                }
                let v = u32::try_from(v).map_err(|_| perr(no, &format!("entry {v} too large")))?;
                row.push(v);
            }
            if row.len() != dim {
                return Err(perr(
                    no,
                    &format!("expected {dim} entries, found {}", row.len()),
                ));
            }
            if let Some(col) = row[..r].iter().position(|&v| v != 0) {
                return Err(perr(
                    no,
                    &format!(
                        "nonzero entry below the diagonal at ({}, {})",
                        r + 1,
                        col + 1
                    ),
                ));
            }
            rows.push(row);
        }
        out.push(UpperTriMatrix::from_rows(&rows)?);
    }
    Ok(out)
}
