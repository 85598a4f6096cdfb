//! Line-oriented word format: one word per line, entries as space-separated
//! decimal integers.

use crate::error::{Error, Result};

pub fn format_word<T: std::fmt::Display>(x: &[T]) -> String {
    let mut out = String::new();
    for (i, v) in x.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        out.push_str(&v.to_string());
    }
    out
}

pub fn parse_word(line: &str) -> Result<Vec<u32>> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse::<u32>()
                .map_err(|_| Error::invalid(format!("'{}' is not a nonnegative integer", tok)))
        })
        .collect()
}

/// Parses every nonblank line; lines starting with `#` are skipped.
pub fn parse_words(input: &str) -> Result<Vec<Vec<u32>>> {
    input
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(parse_word)
        .collect()
}
