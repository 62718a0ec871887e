//! Shared rendering and parsing of integer linear combinations such as
//! `+1 M[2] -3 M[1,1]`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Renders `(coefficient, term)` pairs as `+c term +c term ...`, or `0` when
/// there are none.
pub(crate) fn render<'a, I>(terms: I) -> String
where
    I: IntoIterator<Item = (&'a BigInt, String)>,
{
    let parts: Vec<String> = terms
        .into_iter()
        .map(|(c, t)| {
            let sign = if c.is_negative() { '-' } else { '+' };
            format!("{sign}{} {t}", c.abs())
        })
        .collect();
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" ")
    }
}

/// Splits a rendered combination into `(coefficient, term)` pairs. A term
/// without a preceding coefficient gets coefficient one, and a lone `+` or
/// `-` stands for `±1`. `0` alone is the empty combination.
pub(crate) fn tokenize(text: &str) -> Result<Vec<(BigInt, String)>, String> {
    let text = text.trim();
    if text == "0" || text.is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut pending: Option<BigInt> = None;
    for tok in text.split_whitespace() {
        let first = tok.chars().next().expect("non-empty token");
        if first == '+' || first == '-' || first.is_ascii_digit() {
            if pending.is_some() {
                return Err(format!("two coefficients in a row near {tok:?}"));
            }
            let c: BigInt = match tok {
                "+" => BigInt::one(),
                "-" => -BigInt::one(),
                _ => tok
                    .strip_prefix('+')
                    .unwrap_or(tok)
                    .parse()
                    .map_err(|_| format!("bad coefficient {tok:?}"))?,
            };
            pending = Some(c);
        } else {
            let c = pending.take().unwrap_or_else(BigInt::one);
            out.push((c, tok.to_string()));
        }
    }
    if pending.is_some() {
        return Err("trailing coefficient without a term".into());
    }
    Ok(out)
}

/// Parses the comma-separated list between `prefix[` and `]`.
pub(crate) fn bracket_list<'a>(term: &'a str, prefix: &str) -> Option<&'a str> {
    term.strip_prefix(prefix)?.strip_prefix('[')?.strip_suffix(']')
}

pub(crate) fn parse_usizes(list: &str) -> Result<Vec<usize>, String> {
    if list.trim().is_empty() {
        return Ok(Vec::new());
    }
    list.split(',')
        .map(|p| p.trim().parse::<usize>().map_err(|_| format!("bad part {p:?}")))
        .collect()
}

pub(crate) fn add_into<K: Ord>(map: &mut std::collections::BTreeMap<K, BigInt>, key: K, c: BigInt) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match map.entry(key) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}
