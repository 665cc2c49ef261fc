//! Small permutation helpers on `0..n`.
//!
//! Permutations are image arrays: `p[x]` is the image of `x`. Composition
//! follows the left-to-right convention used by cycle-notation data
//! (`compose(p, q)` applies `p` first, then `q`), unless the function name
//! says otherwise.

use crate::error::ParseError;

pub fn identity(n: usize) -> Vec<usize> {
    (0..n).collect()
}

/// `x -> q[p[x]]`.
pub fn compose(p: &[usize], q: &[usize]) -> Vec<usize> {
    p.iter().map(|&x| q[x]).collect()
}

/// `x -> p[q[x]]`, i.e. ordinary function composition `p ∘ q`.
pub fn after(p: &[usize], q: &[usize]) -> Vec<usize> {
    q.iter().map(|&x| p[x]).collect()
}

pub fn inverse(p: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; p.len()];
    for (x, &y) in p.iter().enumerate() {
        inv[y] = x;
    }
    inv
}

pub fn is_permutation(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    for &y in p {
        if y >= p.len() || seen[y] {
            return false;
        }
        seen[y] = true;
    }
    true
}

/// Lengths of all cycles, fixed points included.
pub fn cycle_lengths(p: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; p.len()];
    let mut lengths = Vec::new();
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = p[x];
            len += 1;
        }
        lengths.push(len);
    }
    lengths
}

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: usize, b: usize) -> usize {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

/// Order of a permutation as the lcm of its cycle lengths.
pub fn order(p: &[usize]) -> usize {
    cycle_lengths(p).into_iter().fold(1, lcm)
}

/// Parses cycle notation such as `(1263)(48ba)(57c9)` or `(1,2)(3,4)`.
///
/// Points are read through `symbols`: the i-th character of `symbols` is
/// point `i`. When the text contains commas, points are decimal numbers
/// starting at 1. `()` and `id` denote the identity.
pub fn parse_cycles(text: &str, degree: usize, symbols: &str) -> Result<Vec<usize>, ParseError> {
    let mut p = identity(degree);
    let trimmed = text.trim();
    if trimmed.is_empty() || trimmed == "id" || trimmed == "()" {
        return Ok(p);
    }
    let comma = trimmed.contains(',');
    let point = |tok: &str| -> Result<usize, ParseError> {
        let idx = if comma {
            tok.trim()
                .parse::<usize>()
                .ok()
                .and_then(|v| v.checked_sub(1))
        } else {
            symbols.find(tok)
        };
        match idx {
            Some(i) if i < degree => Ok(i),
            _ => Err(ParseError::BadPoint(tok.to_string())),
        }
    };
    let mut rest = trimmed;
    while !rest.is_empty() {
        let open = rest.find('(').ok_or_else(|| ParseError::BadCycle(text.to_string()))?;
        let close = rest.find(')').ok_or_else(|| ParseError::BadCycle(text.to_string()))?;
        if close < open {
            return Err(ParseError::BadCycle(text.to_string()));
        }
        let body = &rest[open + 1..close];
        let points: Vec<usize> = if comma {
            body.split(',').filter(|s| !s.trim().is_empty()).map(point).collect::<Result<_, _>>()?
        } else {
            body.chars()
                .filter(|c| !c.is_whitespace())
                .map(|c| point(&c.to_string()))
                .collect::<Result<_, _>>()?
        };
        // the cycle (x0 x1 ... xk) maps x_i -> x_{i+1}; apply it after what we have
        let mut cyc = identity(degree);
        for (i, &x) in points.iter().enumerate() {
            cyc[x] = points[(i + 1) % points.len()];
        }
        p = compose(&p, &cyc);
        rest = rest[close + 1..].trim_start();
    }
    Ok(p)
}

/// Cycle notation with 1-based decimal points, fixed points omitted; `()` for the identity.
pub fn format_cycles(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cycle = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            cycle.push((x + 1).to_string());
            x = p[x];
        }
        out.push('(');
        out.push_str(&cycle.join(","));
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycles_roundtrip() {
        let p = parse_cycles("(1263)(48ba)(57c9)", 12, "123456789abc").unwrap();
        assert_eq!(order(&p), 4);
        assert_eq!(p[0], 1);
        assert_eq!(p[5], 2);
        let q = parse_cycles(&format_cycles(&p), 12, "").unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn composition_is_left_to_right() {
        let a = parse_cycles("(12)", 3, "123").unwrap();
        let b = parse_cycles("(23)", 3, "123").unwrap();
        // 1 -a-> 2 -b-> 3
        assert_eq!(compose(&a, &b)[0], 2);
        assert_eq!(parse_cycles("(12)(23)", 3, "123").unwrap(), compose(&a, &b));
        assert_eq!(after(&b, &a), compose(&a, &b));
    }

    #[test]
    fn bad_input() {
        assert!(parse_cycles("(12", 3, "123").is_err());
        assert!(parse_cycles("(19)", 3, "123").is_err());
    }

    #[test]
    fn order_is_lcm_of_cycles() {
        let p = parse_cycles("(12)(345)", 5, "12345").unwrap();
        assert_eq!(order(&p), 6);
        assert_eq!(inverse(&p), parse_cycles("(12)(354)", 5, "12345").unwrap());
    }
}
