//! The graph6 text format (McKay's `showg` conventions).
//!
//! A line is `N(n)` followed by the upper triangle of the adjacency matrix in
//! column order, packed six bits per printable byte (`value + 63`). An
//! optional `>>graph6<<` header is accepted on input and never written.

use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";
/// Largest order representable by the format's 36-bit size field.
pub const MAX_ORDER: usize = (1 << 36) - 1;

fn push_order(out: &mut String, n: usize) {
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else if n <= 258_047 {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    } else {
        out.push_str("~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    }
}

pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > MAX_ORDER {
        return Err(Error::TooLarge { n, cap: MAX_ORDER });
    }
    let pairs = n * n.saturating_sub(1) / 2;
    let mut out = String::with_capacity(8 + pairs.div_ceil(6));
    push_order(&mut out, n);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    Ok(out)
}

fn sextet(bytes: &[u8], offset: usize) -> Result<u8> {
    match bytes.get(offset) {
        Some(&b) if (63..=126).contains(&b) => Ok(b - 63),
        Some(&b) => Err(Error::Graph6 {
            offset,
            message: format!("byte 0x{b:02x} is outside the printable range 63..=126"),
        }),
        None => Err(Error::Graph6 {
            offset,
            message: "unexpected end of input".into(),
        }),
    }
}

/// Parses one graph6 line. Surrounding whitespace and the optional header
/// are ignored; byte offsets in errors refer to the trimmed text.
pub fn from_graph6(text: &str) -> Result<Graph> {
    let line = text.trim();
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6 {
            offset: 0,
            message: "empty input".into(),
        });
    }

    let (n, mut pos) = if bytes[0] != b'~' {
        (sextet(bytes, 0)? as usize, 1)
    } else if bytes.get(1) != Some(&b'~') {
        let mut n = 0usize;
        for p in 1..4 {
            n = (n << 6) | sextet(bytes, p)? as usize;
        }
        (n, 4)
    } else {
        let mut n = 0usize;
        for p in 2..8 {
            n = (n << 6) | sextet(bytes, p)? as usize;
        }
        (n, 8)
    };

    let pairs = n * n.saturating_sub(1) / 2;
    let expected = pos + pairs.div_ceil(6);
    if bytes.len() != expected {
        return Err(Error::Graph6 {
            offset: bytes.len().min(expected),
            message: format!(
                "order {n} needs {expected} bytes, found {}",
                bytes.len()
            ),
        });
    }

    let mut g = Graph::empty(n);
    let mut bit = 0usize;
    let mut current = 0u8;
    let mut left = 0;
    for j in 1..n {
        for i in 0..j {
            if left == 0 {
                current = sextet(bytes, pos)?;
                pos += 1;
                left = 6;
            }
            left -= 1;
            if current >> left & 1 == 1 {
                g.set_edge(i, j);
            }
            bit += 1;
        }
    }
    debug_assert_eq!(bit, pairs);
    if left > 0 && current & ((1 << left) - 1) != 0 {
        return Err(Error::Graph6 {
            offset: pos - 1,
            message: "non-zero padding bits".into(),
        });
    }
    Ok(g)
}

/// One parsed line of a newline-delimited graph6 stream.
#[derive(Debug)]
pub struct StreamItem {
    /// 1-based line number in the input.
    pub line: usize,
    pub graph: Result<Graph>,
}

/// Parses a newline-delimited stream, skipping blank lines and a bare header.
pub fn parse_stream(text: &str) -> Vec<StreamItem> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| {
            let t = l.trim();
            !t.is_empty() && t != HEADER
        })
        .map(|(i, l)| StreamItem {
            line: i + 1,
            graph: from_graph6(l),
        })
        .collect()
}

/// Newline-terminated graph6 lines.
pub fn write_stream<'a, I>(graphs: I) -> Result<String>
where
    I: IntoIterator<Item = &'a Graph>,
{
    let mut out = String::new();
    for g in graphs {
        out.push_str(&to_graph6(g)?);
        out.push('\n');
    }
    Ok(out)
}
