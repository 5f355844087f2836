//! graph6 text encoding (nauty): vertex count header followed by the upper
//! triangle of the adjacency matrix in column order, six bits per printable
//! byte offset by 63.

use crate::error::{Error, Result};

use super::{Graph, MAX_VERTICES};

const HEADER: &str = ">>graph6<<";

fn push_size(out: &mut String, n: usize) {
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

/// Encodes `g` without the optional `>>graph6<<` header.
pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::with_capacity(8 + n * n / 12);
    push_size(&mut out, n);
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
    out
}

fn sextet(b: u8) -> Result<u8> {
    if (63..=126).contains(&b) {
        Ok(b - 63)
    } else {
        Err(Error::Graph6(format!("byte {b:#x} outside the printable range 63..=126")))
    }
}

fn parse_size(bytes: &[u8]) -> Result<(usize, usize)> {
    match bytes {
        [] => Err(Error::Graph6("empty input".into())),
        [b'~', b'~', rest @ ..] => {
            if rest.len() < 6 {
                return Err(Error::Graph6("truncated 8-byte size header".into()));
            }
            let mut n = 0usize;
            for &b in &rest[..6] {
                n = (n << 6) | sextet(b)? as usize;
            }
            Ok((n, 8))
        }
        [b'~', rest @ ..] => {
            if rest.len() < 3 {
                return Err(Error::Graph6("truncated 4-byte size header".into()));
            }
            let mut n = 0usize;
            for &b in &rest[..3] {
                n = (n << 6) | sextet(b)? as usize;
            }
            Ok((n, 4))
        }
        [b, ..] => Ok((sextet(*b)? as usize, 1)),
    }
}

/// Decodes one graph6 line; a leading `>>graph6<<` header and surrounding
/// whitespace are accepted.
pub fn decode(text: &str) -> Result<Graph> {
    let line = text.trim();
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    let (n, offset) = parse_size(bytes)?;
    if n == 0 || n > MAX_VERTICES {
        return Err(Error::Graph6(format!("unsupported vertex count {n}")));
    }
    let body = &bytes[offset..];
    let bits = n * (n - 1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Graph6(format!(
            "length mismatch: {} data bytes for n = {n}, expected {expected}",
            body.len()
        )));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = sextet(body[k / 6])?;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let last = sextet(body[expected - 1])?;
        let pad = 6 - bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Error::Graph6("nonzero padding bits".into()));
        }
    }
    Ok(g)
}

/// Decodes every non-empty line of a graph6 file.
pub fn decode_all(text: &str) -> Result<Vec<Graph>> {
    text.lines().filter(|l| !l.trim().is_empty()).map(decode).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge() {
        let k2 = Graph::complete(2).unwrap();
        assert_eq!(encode(&k2), "A_");
        assert_eq!(decode("A?").unwrap(), Graph::empty(2).unwrap());
        assert_eq!(decode(">>graph6<<A_\n").unwrap(), k2);
    }

    #[test]
    fn petgraph_reference_string() {
        // a-c, a-e, b-d, d-e on five vertices
        let g = Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode(&g), "DQc");
    }

    #[test]
    fn large_header() {
        let g = Graph::path(100).unwrap();
        let s = encode(&g);
        assert!(s.starts_with('~'));
        assert_eq!(decode(&s).unwrap(), g);
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(decode(""), Err(Error::Graph6(_))));
        assert!(matches!(decode("A"), Err(Error::Graph6(_))));
        assert!(matches!(decode("A__"), Err(Error::Graph6(_))));
        // n = 2 has one data bit; padding bits must be zero
        assert!(matches!(decode("A`"), Err(Error::Graph6(_))));
        assert!(matches!(decode("~A"), Err(Error::Graph6(_))));
        assert!(matches!(decode("A\u{7f}"), Err(Error::Graph6(_))));
    }
}
