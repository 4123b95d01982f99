//! Parsing of elements, lists and matrices given on the command line.

use std::fs;
use std::path::Path;

use serde_json::Value;
use zelisko_core::{Domain, Error, Matrix, Result};

/// One element from a JSON value: a string in the domain's own syntax,
/// a number, or an ascending coefficient array.
pub fn elem_from_json<D: Domain>(d: &D, v: &Value) -> Result<D::Elem> {
    match v {
        Value::String(s) => d.parse_elem(s),
        Value::Number(n) => d.parse_elem(&n.to_string()),
        Value::Array(items) => {
            let coeffs = items
                .iter()
                .map(|c| match c {
                    Value::Number(n) => Ok(n.to_string()),
                    Value::String(s) => Ok(s.trim().to_string()),
                    other => Err(Error::Parse(format!("bad coefficient {other}"))),
                })
                .collect::<Result<Vec<_>>>()?;
            d.parse_elem(&format!("[{}]", coeffs.join(",")))
        }
        other => Err(Error::Parse(format!("bad element {other}"))),
    }
}

fn parse_json(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("{e}: `{}`", text.trim())))
}

/// A comma separated list, or a JSON array of elements.
pub fn parse_list<D: Domain>(d: &D, text: &str) -> Result<Vec<D::Elem>> {
    let text = text.trim();
    if text.starts_with('[') {
        match parse_json(text)? {
            Value::Array(items) => items.iter().map(|v| elem_from_json(d, v)).collect(),
            _ => unreachable!("text starts with ["),
        }
    } else {
        text.split(',').map(|s| d.parse_elem(s.trim())).collect()
    }
}

/// A matrix as a JSON array of equally long rows.
pub fn parse_matrix<D: Domain>(d: &D, text: &str) -> Result<Matrix<D::Elem>> {
    let rows = match parse_json(text)? {
        Value::Array(rows) => rows,
        other => return Err(Error::Parse(format!("expected an array of rows, got {other}"))),
    };
    let rows = rows
        .iter()
        .map(|row| match row {
            Value::Array(cells) => cells.iter().map(|v| elem_from_json(d, v)).collect(),
            other => Err(Error::Parse(format!("expected a row, got {other}"))),
        })
        .collect::<Result<Vec<Vec<_>>>>()?;
    Matrix::from_rows(rows)
}

/// Reads a matrix from inline text or a file; exactly one must be given.
pub fn matrix_source<D: Domain>(
    d: &D,
    inline: Option<&str>,
    file: Option<&Path>,
    flag: &str,
) -> Result<Matrix<D::Elem>> {
    match (inline, file) {
        (Some(text), None) => parse_matrix(d, text),
        (None, Some(path)) => {
            let text = fs::read_to_string(path)
                .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
            parse_matrix(d, &text)
        }
        _ => Err(Error::Parse(format!("give exactly one of --{flag} and --{flag}-file"))),
    }
}

/// A permutation in one-line notation on `1..n`, returned zero-based.
pub fn parse_permutation(text: &str) -> Result<Vec<usize>> {
    let text = text.trim().trim_start_matches('[').trim_end_matches(']');
    text.split(',')
        .map(|s| {
            let k: usize = s
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad permutation entry `{}`", s.trim())))?;
            k.checked_sub(1)
                .ok_or_else(|| Error::InvalidPermutation("entries start at 1".into()))
        })
        .collect()
}

/// `lo..hi` or `lo..=hi` over unsigned integers.
pub fn parse_range(text: &str) -> Result<std::ops::RangeInclusive<u64>> {
    let bad = || Error::Parse(format!("bad range `{text}`; use lo..hi or lo..=hi"));
    let (lo, hi) = text.split_once("..").ok_or_else(bad)?;
    let lo: u64 = lo.trim().parse().map_err(|_| bad())?;
    let (hi, inclusive) = match hi.strip_prefix('=') {
        Some(h) => (h, true),
        None => (hi, false),
    };
    let hi: u64 = hi.trim().parse().map_err(|_| bad())?;
    if inclusive {
        Ok(lo..=hi)
    } else if hi == 0 {
        Err(bad())
    } else {
        Ok(lo..=hi - 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use zelisko_core::{Integers, PolysOverFp};

    #[test]
    fn integer_inputs() {
        let z = Integers;
        assert_eq!(parse_list(&z, "4, 8,24").unwrap(), vec![4.into(), 8.into(), 24.into()]);
        assert_eq!(parse_list(&z, "[4,\"8\"]").unwrap(), vec![4.into(), 8.into()]);
        let m = parse_matrix(&z, "[[1,0],[2,1]]").unwrap();
        assert_eq!(m.get(1, 0), &2.into());
        let big = "123456789012345678901234567890";
        let m = parse_matrix(&z, &format!("[[{big}]]")).unwrap();
        assert_eq!(m.get(0, 0).to_string(), big);
        assert!(parse_matrix(&z, "[[1,0],[2]]").is_err());
        assert!(parse_matrix(&z, "[[1,[0]]]").is_err());
    }

    #[test]
    fn polynomial_inputs() {
        let f = PolysOverFp::new(3).unwrap();
        assert_eq!(parse_list(&f, "[[1,1],[0,1]]").unwrap(), vec![f.poly(&[1, 1]), f.poly(&[0, 1])]);
        assert_eq!(parse_list(&f, "2,1").unwrap(), vec![f.poly(&[2]), f.poly(&[1])]);
        let m = parse_matrix(&f, "[[[1,1],\"[0,2]\"],[0,[1]]]").unwrap();
        assert_eq!(m.get(0, 1), &f.poly(&[0, 2]));
        assert_eq!(m.get(1, 0), &f.poly(&[]));
    }

    #[test]
    fn permutations_and_ranges() {
        assert_eq!(parse_permutation("3,1,2").unwrap(), vec![2, 0, 1]);
        assert!(parse_permutation("0,1").is_err());
        assert_eq!(parse_range("4..200").unwrap(), 4..=199);
        assert_eq!(parse_range("4..=6").unwrap(), 4..=6);
        assert!(parse_range("4-6").is_err());
    }
}
