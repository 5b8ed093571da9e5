//! Text formats: code files, algebra files and Hasse diagram output.
//!
//! A code file holds one codeword per line; `#` starts a comment and blank
//! lines are ignored.
//!
//! An algebra file has a header followed by `n` rows of `n` whitespace
//! separated element indices, row `x` column `y` holding `x ∘ y`:
//!
//! ```text
//! kind star
//! n 3
//! theta 0
//! labels θ a b
//! 0 0 0
//! 1 0 0
//! 2 2 0
//! ```
//!
//! `labels` is optional. Any `theta` is accepted; the table is renumbered
//! on load so θ becomes element 0.

use std::fmt::Write as _;

use crate::algebra::{OpTable, TableKind, THETA};
use crate::error::{Error, Result};
use crate::order::{hasse_covers, BlockCode, Codeword, Poset};

/// Non-empty lines with comments stripped, paired with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let body = line.split('#').next().unwrap_or("").trim();
        (!body.is_empty()).then_some((i + 1, body))
    })
}

pub fn parse_code_file(text: &str) -> Result<BlockCode> {
    let mut words: Vec<Codeword> = Vec::new();
    for (line, body) in content_lines(text) {
        if let Some(c) = body.chars().find(|c| !matches!(c, '0' | '1')) {
            return Err(Error::format(
                line,
                format!("invalid character {c:?} in codeword"),
            ));
        }
        let word: Codeword = body
            .parse()
            .map_err(|_| Error::format(line, "invalid codeword"))?;
        if let Some(first) = words.first() {
            if first.len() != word.len() {
                return Err(Error::format(
                    line,
                    format!(
                        "codeword has length {}, expected {}",
                        word.len(),
                        first.len()
                    ),
                ));
            }
        }
        if words.contains(&word) {
            return Err(Error::format(line, format!("duplicate codeword {word}")));
        }
        words.push(word);
    }
    BlockCode::new(words).map_err(|e| Error::format(0, e.to_string()))
}

pub fn write_code_file(code: &BlockCode) -> String {
    let mut out = String::new();
    for w in code.words() {
        let _ = writeln!(out, "{w}");
    }
    out
}

/// Whether `text` looks like an algebra file (its first content line is a
/// `kind` header).
pub fn is_algebra_text(text: &str) -> bool {
    content_lines(text)
        .next()
        .is_some_and(|(_, body)| body.split_whitespace().next() == Some("kind"))
}

pub fn parse_algebra_file(text: &str) -> Result<OpTable> {
    let mut kind = None;
    let mut n: Option<usize> = None;
    let mut theta: Option<usize> = None;
    let mut labels: Option<Vec<String>> = None;
    let mut rows: Vec<Vec<usize>> = Vec::new();
    let mut last_line = 0;

    for (line, body) in content_lines(text) {
        last_line = line;
        let mut tokens = body.split_whitespace();
        let head = tokens.next().expect("non-empty line");
        let header_value = |tokens: &mut std::str::SplitWhitespace<'_>| -> Result<usize> {
            let value = tokens
                .next()
                .ok_or_else(|| Error::format(line, format!("`{head}` needs a value")))?;
            if tokens.next().is_some() {
                return Err(Error::format(line, format!("`{head}` takes one value")));
            }
            value
                .parse()
                .map_err(|_| Error::format(line, format!("invalid `{head}` value {value:?}")))
        };
        match head {
            "kind" | "n" | "theta" | "labels" if !rows.is_empty() => {
                return Err(Error::format(line, "header line after table rows"));
            }
            "kind" => {
                kind = Some(match (tokens.next(), tokens.next()) {
                    (Some("star"), None) => TableKind::Star,
                    (Some("dot"), None) => TableKind::Dot,
                    _ => return Err(Error::format(line, "`kind` must be `star` or `dot`")),
                });
            }
            "n" => {
                let value = header_value(&mut tokens)?;
                if value == 0 {
                    return Err(Error::format(line, "`n` must be positive"));
                }
                n = Some(value);
            }
            "theta" => theta = Some(header_value(&mut tokens)?),
            "labels" => labels = Some(tokens.map(str::to_string).collect()),
            _ => {
                let size = n.ok_or_else(|| Error::format(line, "table row before `n` header"))?;
                if rows.len() == size {
                    return Err(Error::format(line, format!("more than {size} table rows")));
                }
                let row = body
                    .split_whitespace()
                    .map(|tok| match tok.parse::<usize>() {
                        Ok(v) if v < size => Ok(v),
                        Ok(v) => Err(Error::format(
                            line,
                            format!("entry {v} is out of range for n = {size}"),
                        )),
                        Err(_) => Err(Error::format(line, format!("invalid entry {tok:?}"))),
                    })
                    .collect::<Result<Vec<_>>>()?;
                if row.len() != size {
                    return Err(Error::format(
                        line,
                        format!("row has {} entries, expected {size}", row.len()),
                    ));
                }
                rows.push(row);
            }
        }
    }

    let kind = kind.ok_or_else(|| Error::format(1, "missing `kind` header"))?;
    let n = n.ok_or_else(|| Error::format(1, "missing `n` header"))?;
    let theta = theta.ok_or_else(|| Error::format(1, "missing `theta` header"))?;
    if theta >= n {
        return Err(Error::format(
            1,
            format!("theta {theta} is out of range for n = {n}"),
        ));
    }
    if rows.len() != n {
        return Err(Error::format(
            last_line,
            format!("expected {n} table rows, got {}", rows.len()),
        ));
    }
    if let Some(l) = &labels {
        if l.len() != n {
            return Err(Error::format(
                1,
                format!("expected {n} labels, got {}", l.len()),
            ));
        }
    }
    OpTable::with_theta(kind, theta, rows, labels).map_err(|e| Error::format(1, e.to_string()))
}

pub fn write_algebra_file(t: &OpTable) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "kind {}", t.kind());
    let _ = writeln!(out, "n {}", t.n());
    let _ = writeln!(out, "theta {THETA}");
    if let Some(labels) = t.labels() {
        let _ = writeln!(out, "labels {}", labels.join(" "));
    }
    let width = (t.n() - 1).to_string().len();
    for x in 0..t.n() {
        let row: Vec<String> = t.row(x).iter().map(|v| format!("{v:>width$}")).collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
    out
}

/// Hasse diagram in DOT: nodes in index order, edges (lower → upper) in
/// the order of [`hasse_covers`].
pub fn hasse_dot(p: &Poset) -> String {
    let mut out = String::from("digraph hasse {\n  rankdir=BT;\n");
    for i in 0..p.n() {
        let label = p.label(i).replace('\\', "\\\\").replace('"', "\\\"");
        let _ = writeln!(out, "  n{i} [label=\"{label}\"];");
    }
    for (lo, hi) in hasse_covers(p) {
        let _ = writeln!(out, "  n{lo} -> n{hi};");
    }
    out.push_str("}\n");
    out
}

/// One `lower < upper` line per covering pair.
pub fn hasse_text(p: &Poset) -> String {
    let mut out = String::new();
    for (lo, hi) in hasse_covers(p) {
        let _ = writeln!(out, "{} < {}", p.label(lo), p.label(hi));
    }
    out
}
