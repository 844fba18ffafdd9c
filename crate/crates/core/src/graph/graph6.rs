//! graph6 codec, restricted to the one-byte order header (n <= 62).
//!
//! The payload lists the upper triangle column by column: (0,1), (0,2),
//! (1,2), (0,3), ... packed six bits per byte, most significant bit first,
//! each byte offset by 63.

use super::{Graph, GraphError};

pub const GRAPH6_MAX_ORDER: usize = 62;

fn err(offset: usize, reason: impl Into<String>) -> GraphError {
    GraphError::Graph6 {
        offset,
        reason: reason.into(),
    }
}

pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let Some(&head) = bytes.first() else {
        return Err(err(0, "empty input"));
    };
    if !(63..=126).contains(&head) {
        return Err(err(0, format!("invalid header byte 0x{head:02x}")));
    }
    if head == 126 {
        return Err(GraphError::Graph6Unsupported(GRAPH6_MAX_ORDER + 1));
    }
    let n = (head - 63) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    let body = &bytes[1..];
    if body.len() < nbytes {
        return Err(err(
            bytes.len(),
            format!("truncated: expected {} payload bytes, found {}", nbytes, body.len()),
        ));
    }
    if body.len() > nbytes {
        return Err(err(1 + nbytes, "trailing bytes after payload"));
    }
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(1 + i, format!("byte 0x{b:02x} outside the printable range")));
        }
    }

    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    if nbits % 6 != 0 {
        let last = body[nbytes - 1] - 63;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(err(nbytes, "nonzero padding bits"));
        }
    }
    Ok(g)
}

pub fn to_graph6(g: &Graph) -> Result<String, GraphError> {
    let n = g.order();
    if n > GRAPH6_MAX_ORDER {
        return Err(GraphError::Graph6Unsupported(n));
    }
    let mut out = Vec::with_capacity(1 + (n * n / 12) + 1);
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}
