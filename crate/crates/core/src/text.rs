//! Text formats: hex truth tables, ANF strings and subspace bases.
//!
//! Truth table: a header line `n=<k>` followed by `2^k / 4` hex digits. Digit
//! `j` (left to right) holds points `4j..4j+3`, point `4j` in its
//! least-significant bit.

use crate::anf::AnfPolynomial;
use crate::boolean::BooleanFunction;
use crate::error::{Error, Result};
use crate::subspace::Subspace;

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Hex digits of the table, without header.
pub fn table_hex(f: &BooleanFunction) -> String {
    let digits = (f.size() as usize).div_ceil(4);
    (0..digits)
        .map(|j| {
            let x = 4 * j as u32;
            let nibble = (f.words()[(x >> 6) as usize] >> (x & 63)) & 0xF;
            char::from_digit(nibble as u32, 16).unwrap()
        })
        .collect()
}

pub fn format_table(f: &BooleanFunction) -> String {
    format!("n={}\n{}\n", f.n_vars(), table_hex(f))
}

/// Parses the hex body for a function of `n_vars` variables (`n_vars >= 2`).
pub fn parse_table_hex(n_vars: usize, hex: &str, line: usize) -> Result<BooleanFunction> {
    if !(2..=crate::boolean::MAX_VARS).contains(&n_vars) {
        return Err(parse_err(1, 1, format!("unsupported variable count {n_vars}")));
    }
    let expected = (1usize << n_vars) / 4;
    let digits: Vec<(usize, char)> = hex.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
    let mut nibbles = Vec::with_capacity(expected);
    for &(col, c) in &digits {
        let d = c
            .to_digit(16)
            .ok_or_else(|| parse_err(line, col + 1, format!("invalid hex digit {c:?}")))?;
        nibbles.push(d as u64);
    }
    if nibbles.len() != expected {
        let col = digits.get(expected).map_or(hex.len() + 1, |d| d.0 + 1);
        return Err(parse_err(
            line,
            col,
            format!("expected {expected} hex digits, found {}", nibbles.len()),
        ));
    }
    let mut words = vec![0u64; crate::boolean::word_count(n_vars)];
    for (j, d) in nibbles.into_iter().enumerate() {
        let x = 4 * j;
        words[x >> 6] |= d << (x & 63);
    }
    BooleanFunction::from_words(n_vars, words)
}

/// Parses a truth-table document (`n=<k>` header then hex, possibly wrapped).
pub fn parse_table(text: &str) -> Result<BooleanFunction> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, 1, "empty input"))?;
    let n_vars = parse_header(header, hline + 1)?;
    let body_line = lines.clone().next().map_or(hline + 2, |(i, _)| i + 1);
    let body: String = lines.map(|(_, l)| l.trim()).collect();
    parse_table_hex(n_vars, &body, body_line)
}

fn parse_header(header: &str, line: usize) -> Result<usize> {
    let trimmed = header.trim();
    let rest = trimmed
        .strip_prefix("n=")
        .ok_or_else(|| parse_err(line, 1, "expected header `n=<k>`"))?;
    rest.trim()
        .parse::<usize>()
        .map_err(|_| parse_err(line, 3, format!("invalid variable count {rest:?}")))
}

pub fn format_anf(p: &AnfPolynomial) -> String {
    if p.monomials().is_empty() {
        return "0".into();
    }
    p.monomials()
        .iter()
        .map(|&m| {
            if m == 0 {
                "1".to_string()
            } else {
                (0..32)
                    .filter(|j| m >> j & 1 == 1)
                    .map(|j| format!("x{}", j + 1))
                    .collect::<Vec<_>>()
                    .join("*")
            }
        })
        .collect::<Vec<_>>()
        .join("+")
}

/// Parses `x1*x3*x4+x2+1` (`0` for the zero polynomial) on one line.
pub fn parse_anf(n_vars: usize, text: &str) -> Result<AnfPolynomial> {
    parse_anf_at(n_vars, text, 1)
}

fn parse_anf_at(n_vars: usize, text: &str, line: usize) -> Result<AnfPolynomial> {
    let mut monomials = Vec::new();
    let mut offset = 0;
    for term in text.split('+') {
        let col = offset + 1 + (term.len() - term.trim_start().len());
        offset += term.len() + 1;
        let term = term.trim();
        match term {
            "" => return Err(parse_err(line, col, "empty term")),
            "0" => continue,
            "1" => {
                monomials.push(0);
                continue;
            }
            _ => {}
        }
        let mut mask = 0u32;
        let mut fcol = col;
        for factor in term.split('*') {
            let f = factor.trim();
            let idx = f
                .strip_prefix('x')
                .and_then(|d| d.parse::<usize>().ok())
                .filter(|&i| (1..=n_vars).contains(&i))
                .ok_or_else(|| parse_err(line, fcol, format!("invalid variable {f:?}")))?;
            mask |= 1 << (idx - 1);
            fcol += factor.len() + 1;
        }
        monomials.push(mask);
    }
    AnfPolynomial::new(n_vars, monomials)
}

/// Parses either format. ANF documents are `n=<k>` followed by an ANF line
/// containing an `x`, `+`, or being a lone `0`/`1` when `k < 2`.
pub fn parse_function(text: &str) -> Result<BooleanFunction> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, 1, "empty input"))?;
    let n_vars = parse_header(header, hline + 1)?;
    let rest: Vec<(usize, &str)> = lines.collect();
    let is_anf = rest.iter().any(|(_, l)| l.contains('x') || l.contains('+'));
    if is_anf {
        let (line, body) = rest.first().copied().unwrap_or((hline + 1, ""));
        parse_anf_at(n_vars, body, line + 1)?.to_function()
    } else {
        parse_table(text)
    }
}

/// One basis row per line as a hex vector.
pub fn format_subspace(v: &Subspace) -> String {
    v.basis().iter().map(|r| format!("{r:x}\n")).collect()
}

pub fn parse_subspace(ambient_n: usize, text: &str) -> Result<Subspace> {
    let mut rows = Vec::new();
    for (i, l) in text.lines().enumerate() {
        let l = l.trim();
        if l.is_empty() {
            continue;
        }
        let v = u32::from_str_radix(l, 16)
            .map_err(|_| parse_err(i + 1, 1, format!("invalid hex vector {l:?}")))?;
        if ambient_n < 32 && v >> ambient_n != 0 {
            return Err(parse_err(i + 1, 1, "vector exceeds ambient dimension"));
        }
        rows.push(v);
    }
    Ok(Subspace::span(&rows, ambient_n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hex_digit_order() {
        // f = x1x2 on two variables: only point 3 is set, digit 0 = 0b1000
        let f = parse_anf(2, "x1*x2").unwrap().to_function().unwrap();
        assert_eq!(format_table(&f), "n=2\n8\n");
        let g = parse_table("n=3\n01\n").unwrap();
        assert!(g.get(4) && (0..8).filter(|&x| g.get(x)).count() == 1);
    }

    #[test]
    fn table_round_trip() {
        let f = parse_anf(9, "x1*x2*x9+x3+x4*x8+1").unwrap().to_function().unwrap();
        assert_eq!(parse_table(&format_table(&f)).unwrap(), f);
        assert_eq!(parse_function(&format_table(&f)).unwrap(), f);
    }

    #[test]
    fn anf_text() {
        let p = parse_anf(4, "x1*x3*x4 + x2 + 1").unwrap();
        assert_eq!(format_anf(&p), "1+x2+x1*x3*x4");
        assert_eq!(format_anf(&parse_anf(3, "0").unwrap()), "0");
        assert_eq!(parse_function("n=4\nx1*x2+x3*x4\n").unwrap().weight(), 6);
    }

    #[test]
    fn malformed_inputs_report_position() {
        match parse_table("n=3\n0g\n") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (2, 2)),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_table("n=3\n012\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_table("m=3\n01\n"), Err(Error::Parse { line: 1, .. })));
        match parse_anf(3, "x1+x4") {
            Err(Error::Parse { column, .. }) => assert_eq!(column, 4),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_anf(3, "x1++x2").is_err());
    }

    #[test]
    fn subspace_text() {
        let v = Subspace::span(&[0b0011, 0b0100], 4);
        let s = format_subspace(&v);
        assert_eq!(s, "4\n3\n");
        assert_eq!(parse_subspace(4, &s).unwrap(), v);
    }
}
