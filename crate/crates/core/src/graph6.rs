//! graph6 encoding.
//!
//! Order header: one byte `n + 63` for `n <= 62`, otherwise `~` followed by
//! three bytes carrying `n` as an 18-bit big-endian value. The body packs the
//! upper triangle column by column (`(0,1), (0,2), (1,2), (0,3), …`) into
//! 6-bit big-endian groups offset by 63, zero-padded at the end.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

fn bad(msg: impl Into<String>) -> Error {
    Error::Graph6(msg.into())
}

pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + (n * (n - 1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }

    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = (chunk << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(chunk + 63);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((chunk << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

pub fn decode(text: &str) -> Result<Graph> {
    let bytes = text.as_bytes();
    if let Some(&b) = bytes.iter().find(|b| !(63..=126).contains(*b)) {
        return Err(bad(format!("byte {b:#04x} outside the printable range")));
    }
    let (n, body) = match bytes {
        [] => return Err(bad("empty input")),
        [126, 126, ..] => return Err(Error::Order(usize::MAX)),
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(bad("truncated order header"));
            }
            let n = rest[..3]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            (n, &rest[3..])
        }
        [first, rest @ ..] => ((first - 63) as usize, rest),
    };
    if n == 0 || n > MAX_ORDER {
        return Err(Error::Order(n));
    }

    let nbits = n * (n - 1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(bad(format!(
            "expected {expected} body bytes for order {n}, found {}",
            body.len()
        )));
    }

    let bit = |k: usize| ((body[k / 6] - 63) >> (5 - k % 6)) & 1 == 1;
    let mut adj = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                adj[i] |= 1u64 << j;
                adj[j] |= 1u64 << i;
            }
            k += 1;
        }
    }
    if (nbits..expected * 6).any(bit) {
        return Err(bad("nonzero padding bits"));
    }
    Graph::from_adjacency(adj)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_strings() {
        assert_eq!(decode("A_").unwrap(), Graph::complete(2).unwrap());
        assert_eq!(encode(&Graph::empty(1).unwrap()), "@");
        assert_eq!(encode(&Graph::complete(2).unwrap()), "A_");
        assert_eq!(encode(&Graph::empty(2).unwrap()), "A?");
        // the five-vertex graph with edges ac, ae, bd, de
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode(&g), "DQc");
        assert_eq!(encode(&Graph::complete(4).unwrap()), "C~");
    }

    #[test]
    fn long_header() {
        for n in [63, 64] {
            let g = Graph::complete(n).unwrap();
            let s = encode(&g);
            assert!(s.starts_with('~'));
            assert_eq!(decode(&s).unwrap(), g);
        }
        let s = encode(&Graph::empty(63).unwrap());
        assert_eq!(&s[..4], "~??~");
    }

    #[test]
    fn rejects_malformed() {
        assert!(matches!(decode(""), Err(Error::Graph6(_))));
        assert!(matches!(decode("?"), Err(Error::Order(0))));
        assert!(matches!(decode("A"), Err(Error::Graph6(_))));
        assert!(matches!(decode("A__"), Err(Error::Graph6(_))));
        // K_2 with a padding bit set
        assert!(matches!(decode("A`"), Err(Error::Graph6(_))));
        assert!(matches!(decode("A\u{7f}"), Err(Error::Graph6(_))));
        assert!(matches!(decode("~~??????"), Err(Error::Order(_))));
        assert!(matches!(decode("~?@@"), Err(Error::Order(65))));
        assert!(matches!(decode("~?"), Err(Error::Graph6(_))));
    }
}
