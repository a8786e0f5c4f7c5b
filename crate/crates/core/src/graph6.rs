//! graph6 text codec.
//!
//! One graph per line: a length header (one byte for orders up to 62, `~`
//! plus three bytes up to the 64-vertex capacity here), then the upper
//! triangle of the adjacency matrix in column order, packed big-endian into
//! 6-bit groups offset by 63 into printable ASCII. Padding bits must be zero.
//!
//! Decode errors carry the byte offset within the line.

use alloc::string::String;
use core::fmt;

use crate::bitset::MAX_VERTICES;
use crate::graph::Graph;

const OFFSET: u8 = 63;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Graph6ErrorKind {
    EmptyInput,
    /// Byte outside the printable graph6 range 63..=126.
    InvalidCharacter(u8),
    /// Long-form header cut off before its three size bytes.
    TruncatedHeader,
    /// Declared order exceeds the 64-vertex capacity.
    OrderTooLarge(usize),
    /// Body length disagrees with the declared order.
    WrongLength { expected: usize, got: usize },
    /// Nonzero bit in the padding after the adjacency bits.
    TrailingBits,
}

/// A graph6 parse failure at a byte offset within the line.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Graph6Error {
    pub offset: usize,
    pub kind: Graph6ErrorKind,
}

impl fmt::Display for Graph6Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "byte {}: ", self.offset)?;
        match self.kind {
            Graph6ErrorKind::EmptyInput => write!(f, "empty graph6 line"),
            Graph6ErrorKind::InvalidCharacter(b) => {
                write!(f, "byte 0x{b:02x} outside the graph6 range 63..=126")
            }
            Graph6ErrorKind::TruncatedHeader => write!(f, "truncated long-form header"),
            Graph6ErrorKind::OrderTooLarge(n) => {
                write!(f, "order {n} exceeds the capacity of {MAX_VERTICES}")
            }
            Graph6ErrorKind::WrongLength { expected, got } => {
                write!(f, "expected {expected} body bytes, found {got}")
            }
            Graph6ErrorKind::TrailingBits => write!(f, "nonzero padding bits"),
        }
    }
}

impl core::error::Error for Graph6Error {}

fn err<T>(offset: usize, kind: Graph6ErrorKind) -> Result<T, Graph6Error> {
    Err(Graph6Error { offset, kind })
}

fn data_value(bytes: &[u8], offset: usize) -> Result<u64, Graph6Error> {
    let b = bytes[offset];
    if !(OFFSET..=126).contains(&b) {
        return err(offset, Graph6ErrorKind::InvalidCharacter(b));
    }
    Ok(u64::from(b - OFFSET))
}

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Parses one graph6 line.
pub fn graph6_decode(line: &str) -> Result<Graph, Graph6Error> {
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return err(0, Graph6ErrorKind::EmptyInput);
    }
    let (n, header_len) = if bytes[0] == b'~' {
        if bytes.len() < 4 {
            return err(bytes.len(), Graph6ErrorKind::TruncatedHeader);
        }
        let mut n = 0u64;
        for i in 1..4 {
            n = n << 6 | data_value(bytes, i)?;
        }
        (n as usize, 4)
    } else {
        (data_value(bytes, 0)? as usize, 1)
    };
    if n > MAX_VERTICES {
        return err(0, Graph6ErrorKind::OrderTooLarge(n));
    }

    let expected = body_len(n);
    let got = bytes.len() - header_len;
    if got != expected {
        let offset = if got < expected {
            bytes.len()
        } else {
            header_len + expected
        };
        return err(offset, Graph6ErrorKind::WrongLength { expected, got });
    }

    let mut g = Graph::edgeless(n).expect("order within capacity");
    let mut k = 0usize; // bit cursor over the packed upper triangle
    for j in 1..n {
        for i in 0..j {
            let offset = header_len + k / 6;
            let bit = data_value(bytes, offset)? >> (5 - k % 6) & 1;
            if bit == 1 {
                g.add_edge(i, j).expect("upper-triangle order");
            }
            k += 1;
        }
    }
    for pad in k..expected * 6 {
        let offset = header_len + pad / 6;
        if data_value(bytes, offset)? >> (5 - pad % 6) & 1 != 0 {
            return err(offset, Graph6ErrorKind::TrailingBits);
        }
    }
    Ok(g)
}

/// Emits the canonical graph6 line for a labeled graph: minimal header form
/// and zero padding, so `graph6_decode` inverts it exactly.
pub fn graph6_encode(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::new();
    if n <= 62 {
        out.push((n as u8 + OFFSET) as char);
    } else {
        out.push('~');
        for shift in [12u32, 6, 0] {
            out.push(((n >> shift & 0x3f) as u8 + OFFSET) as char);
        }
    }
    let mut group = 0u8;
    let mut filled = 0u8;
    for j in 1..n {
        for i in 0..j {
            group = group << 1 | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push((group + OFFSET) as char);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((group << (6 - filled)) + OFFSET) as char);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path, Graph};

    #[test]
    fn known_encodings() {
        assert_eq!(graph6_encode(&Graph::edgeless(0).unwrap()), "?");
        assert_eq!(graph6_encode(&Graph::edgeless(1).unwrap()), "@");
        assert_eq!(graph6_encode(&complete(2)), "A_");
        assert_eq!(graph6_encode(&Graph::edgeless(2).unwrap()), "A?");
        assert_eq!(graph6_encode(&cycle(5)), "Dhc");
        // 5 vertices, edges 0-2, 0-4, 1-3, 3-4.
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(graph6_encode(&g), "DQc");
    }

    #[test]
    fn decode_inverts_encode() {
        for g in [
            Graph::edgeless(0).unwrap(),
            Graph::edgeless(1).unwrap(),
            complete(2),
            cycle(5),
            path(7),
            complete(7),
            Graph::from_edges(6, &[(0, 3), (1, 4), (2, 5)]).unwrap(),
        ] {
            let line = graph6_encode(&g);
            assert_eq!(graph6_decode(&line).unwrap(), g);
        }
    }

    #[test]
    fn long_form_header_for_63_and_64() {
        for n in [63usize, 64] {
            let g = path(n);
            let line = graph6_encode(&g);
            assert!(line.starts_with('~'));
            assert_eq!(graph6_decode(&line).unwrap(), g);
        }
    }

    #[test]
    fn decode_errors_carry_offsets() {
        let e = graph6_decode("").unwrap_err();
        assert_eq!((e.offset, e.kind), (0, Graph6ErrorKind::EmptyInput));

        let e = graph6_decode("\u{20}").unwrap_err();
        assert_eq!(e.kind, Graph6ErrorKind::InvalidCharacter(0x20));
        assert_eq!(e.offset, 0);

        let e = graph6_decode("D").unwrap_err();
        assert_eq!(
            e.kind,
            Graph6ErrorKind::WrongLength {
                expected: 2,
                got: 0
            }
        );

        let e = graph6_decode("Dhc?").unwrap_err();
        assert_eq!(
            (e.offset, e.kind),
            (
                3,
                Graph6ErrorKind::WrongLength {
                    expected: 2,
                    got: 3
                }
            )
        );

        let e = graph6_decode("Dh\u{20}").unwrap_err();
        assert_eq!((e.offset, e.kind), (2, Graph6ErrorKind::InvalidCharacter(0x20)));

        // Order 2 has one adjacency bit; 'o' sets a padding bit as well.
        let e = graph6_decode("Ao").unwrap_err();
        assert_eq!((e.offset, e.kind), (1, Graph6ErrorKind::TrailingBits));

        let e = graph6_decode("~~?????????").unwrap_err();
        assert_eq!(e.kind, Graph6ErrorKind::OrderTooLarge(63 << 12));

        let e = graph6_decode("~?").unwrap_err();
        assert_eq!((e.offset, e.kind), (2, Graph6ErrorKind::TruncatedHeader));
    }
}
