//! graph6 encoding: printable bytes offset by 63, order header, then the
//! upper triangle of the adjacency matrix in column-major order
//! (`(0,1),(0,2),(1,2),(0,3),...`) packed six bits per byte, zero padded.

use super::{Graph, MAX_ORDER};
use crate::error::{Error, Result};

const OFFSET: u8 = 63;
const LONG_HEADER: u8 = 126;

fn err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

/// Parses one graph6 line. A trailing newline and an optional `>>graph6<<`
/// prefix are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.strip_suffix('\n').unwrap_or(text);
    let line = line.strip_suffix('\r').unwrap_or(line);
    let (bytes, base) = match line.strip_prefix(">>graph6<<") {
        Some(rest) => (rest.as_bytes(), ">>graph6<<".len()),
        None => (line.as_bytes(), 0),
    };
    if bytes.is_empty() {
        return Err(err(base, "empty input"));
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(OFFSET..=LONG_HEADER).contains(&b) {
            return Err(err(
                base + i,
                format!("byte {b:#04x} outside the printable range 63..=126"),
            ));
        }
    }

    let (n, body_start) = if bytes[0] == LONG_HEADER {
        if bytes.len() < 4 {
            return Err(err(base + bytes.len(), "truncated order header"));
        }
        if bytes[1] == LONG_HEADER {
            return Err(err(base + 1, "orders above 258047 are not supported"));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - OFFSET) as usize);
        (n, 4)
    } else {
        ((bytes[0] - OFFSET) as usize, 1)
    };
    if n > MAX_ORDER {
        return Err(Error::UnsupportedOrder {
            n,
            max: MAX_ORDER,
            what: "graphs",
        });
    }

    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    let body = &bytes[body_start..];
    if body.len() < nbytes {
        return Err(err(
            base + bytes.len(),
            format!("truncated bit field: expected {nbytes} bytes, found {}", body.len()),
        ));
    }
    if body.len() > nbytes {
        return Err(err(base + body_start + nbytes, "unexpected trailing bytes"));
    }

    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - OFFSET;
            if byte & (0x20 >> (k % 6)) != 0 {
                g.insert_edge(i, j);
            }
            k += 1;
        }
    }
    if nbits % 6 != 0 {
        let last = body[nbytes - 1] - OFFSET;
        let pad = 6 - nbits % 6;
        if last & ((1u8 << pad) - 1) != 0 {
            return Err(err(base + body_start + nbytes - 1, "nonzero padding bits"));
        }
    }
    Ok(g)
}

/// Encodes `g` as a graph6 line (no trailing newline).
pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + (n * n) / 12 + 1);
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else {
        out.push(LONG_HEADER);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
    }
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc <<= 1;
            if g.has_edge(i, j) {
                acc |= 1;
            }
            k += 1;
            if k % 6 == 0 {
                out.push(acc + OFFSET);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        acc <<= 6 - k % 6;
        out.push(acc + OFFSET);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}
