//! Plain-text formats for groups, braces, solutions and algebra specifications.
//!
//! All element indices are 0-based. Blank lines separate sections; lines starting
//! with `#` are comments except where noted.

use std::fmt::Write as _;

use crate::brace::SkewBrace;
use crate::error::ParseError;
use crate::group::FiniteGroup;
use crate::ybe::Solution;

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Lines { inner: text.lines().enumerate() }
    }

    /// Next line that is neither blank nor a comment, with its 1-based number.
    fn next_content(&mut self) -> Option<(usize, &'a str)> {
        for (i, l) in self.inner.by_ref() {
            let t = l.trim();
            if !t.is_empty() && !t.starts_with('#') {
                return Some((i + 1, t));
            }
        }
        None
    }

    fn expect(&mut self, what: &str) -> Result<(usize, &'a str), ParseError> {
        self.next_content().ok_or_else(|| ParseError::Syntax { line: 0, msg: format!("unexpected end of input, expected {what}") })
    }
}

fn numbers(line: usize, text: &str) -> Result<Vec<usize>, ParseError> {
    text.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().map_err(|_| ParseError::Syntax { line, msg: format!("not a number: {s:?}") }))
        .collect()
}

fn read_size(lines: &mut Lines) -> Result<usize, ParseError> {
    let (l, t) = lines.expect("size")?;
    match numbers(l, t)?.as_slice() {
        [n] if *n > 0 => Ok(*n),
        _ => Err(ParseError::Syntax { line: l, msg: "expected a single positive size".into() }),
    }
}

fn read_rows(lines: &mut Lines, rows: usize, width: usize) -> Result<Vec<Vec<usize>>, ParseError> {
    (0..rows)
        .map(|_| {
            let (l, t) = lines.expect("table row")?;
            let row = numbers(l, t)?;
            if row.len() != width {
                return Err(ParseError::Syntax { line: l, msg: format!("expected {width} entries, found {}", row.len()) });
            }
            if let Some(&v) = row.iter().find(|&&v| v >= width) {
                return Err(ParseError::BadPoint(v.to_string()));
            }
            Ok(row)
        })
        .collect()
}

fn write_rows(out: &mut String, rows: impl Iterator<Item = Vec<usize>>) {
    for r in rows {
        let cells: Vec<String> = r.iter().map(|x| x.to_string()).collect();
        let _ = writeln!(out, "{}", cells.join(" "));
    }
}

/// `n` followed by `n` rows of the Cayley table. Comment lines `# i label`
/// name element `i`.
pub fn parse_group(text: &str) -> Result<FiniteGroup, ParseError> {
    let mut lines = Lines::new(text);
    let n = read_size(&mut lines)?;
    let rows = read_rows(&mut lines, n, n)?;
    let mut labels: Vec<Option<String>> = vec![None; n];
    for l in text.lines() {
        if let Some(rest) = l.trim().strip_prefix('#') {
            let mut parts = rest.split_whitespace();
            if let (Some(i), Some(name)) = (parts.next().and_then(|s| s.parse::<usize>().ok()), parts.next()) {
                if i < n {
                    labels[i] = Some(name.to_string());
                }
            }
        }
    }
    let g = FiniteGroup::from_table(&rows).map_err(|e| ParseError::Syntax { line: 0, msg: e.to_string() })?;
    if labels.iter().all(|l| l.is_some()) && rows[0] == (0..n).collect::<Vec<_>>() {
        return Ok(g.with_labels(labels.into_iter().map(|l| l.unwrap()).collect()));
    }
    Ok(g)
}

pub fn format_group(g: &FiniteGroup) -> String {
    let mut out = format!("{}\n", g.order());
    write_rows(&mut out, g.table_rows().into_iter());
    if let Some(labels) = g.labels() {
        for (i, l) in labels.iter().enumerate() {
            let _ = writeln!(out, "# {i} {l}");
        }
    }
    out
}

/// Several named groups: each block starts with a line `group <name>`.
pub fn parse_group_collection(text: &str) -> Result<Vec<(String, FiniteGroup)>, ParseError> {
    let mut out = Vec::new();
    let mut current: Option<(String, String)> = None;
    for l in text.lines() {
        if let Some(name) = l.trim().strip_prefix("group ") {
            if let Some((n, body)) = current.take() {
                out.push((n, parse_group(&body)?));
            }
            current = Some((name.trim().to_string(), String::new()));
        } else if let Some((_, body)) = current.as_mut() {
            body.push_str(l);
            body.push('\n');
        }
    }
    if let Some((n, body)) = current {
        out.push((n, parse_group(&body)?));
    }
    Ok(out)
}

/// `n`, the additive table, a blank line, the multiplicative table.
pub fn parse_brace(text: &str) -> Result<(Vec<Vec<usize>>, Vec<Vec<usize>>), ParseError> {
    let mut lines = Lines::new(text);
    let n = read_size(&mut lines)?;
    let add = read_rows(&mut lines, n, n)?;
    let mul = read_rows(&mut lines, n, n)?;
    if lines.next_content().is_some() {
        return Err(ParseError::Syntax { line: 0, msg: "trailing data after the multiplicative table".into() });
    }
    Ok((add, mul))
}

pub fn format_brace(b: &SkewBrace) -> String {
    let mut out = format!("{}\n", b.order());
    write_rows(&mut out, b.add_group().table_rows().into_iter());
    out.push('\n');
    write_rows(&mut out, b.mul_group().table_rows().into_iter());
    out
}

/// `n`, then `n` lines with the images of `σ_x`, then `n` lines with `τ_y`.
pub fn parse_solution(text: &str) -> Result<Solution, ParseError> {
    let mut lines = Lines::new(text);
    let n = read_size(&mut lines)?;
    let sigma = read_rows(&mut lines, n, n)?;
    let tau = read_rows(&mut lines, n, n)?;
    Solution::new(sigma, tau).map_err(|msg| ParseError::Syntax { line: 0, msg })
}

pub fn format_solution(s: &Solution) -> String {
    let n = s.size();
    let mut out = format!("{n}\n");
    write_rows(&mut out, (0..n).map(|x| s.sigma(x).to_vec()));
    out.push('\n');
    write_rows(&mut out, (0..n).map(|y| s.tau(y).to_vec()));
    out
}

/// Nilpotent algebra specification: `q d` then lines `i j k [c]` (1-based basis
/// indices) meaning `e_i e_j` has coefficient `c` (default 1) on `e_k`.
pub struct AlgebraSpec {
    pub q: usize,
    pub dim: usize,
    pub triples: Vec<(usize, usize, usize, usize)>,
}

pub fn parse_algebra(text: &str) -> Result<AlgebraSpec, ParseError> {
    let mut lines = Lines::new(text);
    let (l, t) = lines.expect("field size and dimension")?;
    let (q, dim) = match numbers(l, t)?.as_slice() {
        [q, d] => (*q, *d),
        _ => return Err(ParseError::Syntax { line: l, msg: "expected `q d`".into() }),
    };
    let mut triples = Vec::new();
    while let Some((l, t)) = lines.next_content() {
        let v = numbers(l, t)?;
        let (i, j, k, c) = match v.as_slice() {
            [i, j, k] => (*i, *j, *k, 1),
            [i, j, k, c] => (*i, *j, *k, *c),
            _ => return Err(ParseError::Syntax { line: l, msg: "expected `i j k [c]`".into() }),
        };
        if i == 0 || j == 0 || k == 0 || i > dim || j > dim || k > dim {
            return Err(ParseError::Syntax { line: l, msg: format!("basis index out of range 1..={dim}") });
        }
        triples.push((i - 1, j - 1, k - 1, c));
    }
    Ok(AlgebraSpec { q, dim, triples })
}
