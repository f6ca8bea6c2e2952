//! Plain-text formats: point sets, integer sets, set families and rational
//! lists. All readers skip blank lines and lines starting with `#`.

use std::io::{BufRead, Write};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exponents::format_rational;
use crate::lattice::PointSet;
use crate::shadows::SetFamily;

/// Data lines with their 1-based line numbers.
fn data_lines<R: BufRead>(input: R) -> impl Iterator<Item = Result<(usize, String)>> {
    input
        .lines()
        .enumerate()
        .filter_map(|(idx, line)| match line {
            Err(e) => Some(Err(Error::Io(e))),
            Ok(l) => {
                let t = l.trim();
                if t.is_empty() || t.starts_with('#') {
                    None
                } else {
                    Some(Ok((idx + 1, t.to_string())))
                }
            }
        })
}

fn parse_tokens<T: FromStr>(line: usize, text: &str) -> Result<Vec<T>> {
    text.split_whitespace()
        .map(|tok| {
            tok.parse().map_err(|_| Error::Parse {
                line,
                message: format!("cannot parse {tok:?}"),
            })
        })
        .collect()
}

/// One point per line, coordinates separated by whitespace. The dimension is
/// fixed by the first data line. An input without data lines is an error.
pub fn read_point_set<R: BufRead>(input: R) -> Result<PointSet> {
    let mut dim = None;
    let mut flat = Vec::new();
    for item in data_lines(input) {
        let (line, text) = item?;
        let coords: Vec<i64> = parse_tokens(line, &text)?;
        let d = *dim.get_or_insert(coords.len());
        if coords.len() != d {
            return Err(Error::Parse {
                line,
                message: format!("expected {d} coordinates, found {}", coords.len()),
            });
        }
        flat.extend(coords);
    }
    let dim = dim.ok_or(Error::Parse {
        line: 0,
        message: "no points".into(),
    })?;
    PointSet::from_flat(dim, flat)
}

pub fn write_point_set<W: Write>(set: &PointSet, mut out: W) -> Result<()> {
    for p in set.iter() {
        let line: Vec<String> = p.iter().map(i64::to_string).collect();
        writeln!(out, "{}", line.join(" "))?;
    }
    Ok(())
}

/// One integer per line; returned sorted and deduplicated.
pub fn read_integer_set<R: BufRead>(input: R) -> Result<Vec<i64>> {
    let mut out = Vec::new();
    for item in data_lines(input) {
        let (line, text) = item?;
        let vals: Vec<i64> = parse_tokens(line, &text)?;
        if vals.len() != 1 {
            return Err(Error::Parse {
                line,
                message: format!("expected one integer, found {}", vals.len()),
            });
        }
        out.push(vals[0]);
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

pub fn write_integer_set<W: Write>(values: &[i64], mut out: W) -> Result<()> {
    for v in values {
        writeln!(out, "{v}")?;
    }
    Ok(())
}

/// One member per line. The arity comes from the first member and the ground
/// set is the largest element seen.
pub fn read_family<R: BufRead>(input: R) -> Result<SetFamily> {
    let mut members: Vec<Vec<u32>> = Vec::new();
    for item in data_lines(input) {
        let (line, text) = item?;
        let m: Vec<u32> = parse_tokens(line, &text)?;
        if m.windows(2).any(|w| w[0] >= w[1]) || m.first() == Some(&0) {
            return Err(Error::Parse {
                line,
                message: "members must be strictly increasing positive integers".into(),
            });
        }
        if let Some(first) = members.first() {
            if first.len() != m.len() {
                return Err(Error::Parse {
                    line,
                    message: format!("expected {} elements, found {}", first.len(), m.len()),
                });
            }
        }
        members.push(m);
    }
    let arity = members.first().map_or(0, Vec::len);
    let ground = members.iter().flatten().copied().max().unwrap_or(0);
    SetFamily::new(ground, arity, members)
}

pub fn write_family<W: Write>(family: &SetFamily, mut out: W) -> Result<()> {
    for m in family.members() {
        let line: Vec<String> = m.iter().map(u32::to_string).collect();
        writeln!(out, "{}", line.join(" "))?;
    }
    Ok(())
}

/// `p/q` or a bare integer.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let bad = || Error::invalid(format!("cannot parse rational {text:?}"));
    let (num, den) = match text.trim().split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (text.trim(), "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

/// One rational per line; order is kept.
pub fn read_rationals<R: BufRead>(input: R) -> Result<Vec<BigRational>> {
    data_lines(input)
        .map(|item| {
            let (line, text) = item?;
            parse_rational(&text).map_err(|e| Error::Parse {
                line,
                message: e.to_string(),
            })
        })
        .collect()
}

pub fn write_rationals<W: Write>(values: &[BigRational], mut out: W) -> Result<()> {
    for v in values {
        writeln!(out, "{}", format_rational(v))?;
    }
    Ok(())
}
