//! The graph6 text format (header optional on input, never written).

use mforge_core::Graph;
use thiserror::Error;

const HEADER: &[u8] = b">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("graph6 parse error at byte {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

fn err(offset: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        offset,
        message: message.into(),
    }
}

fn push_n(out: &mut Vec<u8>, n: usize) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    }
}

pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    push_n(&mut out, n);
    let mut acc = 0u8;
    let mut used = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            used += 1;
            if used == 6 {
                out.push(acc + 63);
                acc = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        out.push((acc << (6 - used)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

pub fn decode(text: &str) -> Result<Graph, ParseError> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let start = if bytes.starts_with(HEADER) {
        HEADER.len()
    } else {
        0
    };
    let body = &bytes[start..];
    let at = |i: usize| start + i;
    for (i, &c) in body.iter().enumerate() {
        if !(63..=126).contains(&c) {
            return Err(err(
                at(i),
                format!("byte 0x{c:02x} is outside the graph6 range"),
            ));
        }
    }
    let digits = |from: usize, count: usize| -> Result<usize, ParseError> {
        if body.len() < from + count {
            return Err(err(at(body.len()), "truncated vertex count"));
        }
        Ok(body[from..from + count]
            .iter()
            .fold(0, |acc, &c| acc << 6 | (c - 63) as usize))
    };
    let (n, pos) = match body {
        [] => return Err(err(at(0), "empty input")),
        [126, 126, ..] => (digits(2, 6)?, 8),
        [126, ..] => (digits(1, 3)?, 4),
        [c, ..] => ((c - 63) as usize, 1),
    };
    let need = (n * n.saturating_sub(1) / 2).div_ceil(6);
    let rest = &body[pos..];
    if rest.len() != need {
        let offset = at(pos + rest.len().min(need));
        return Err(err(
            offset,
            format!(
                "expected {need} adjacency bytes for {n} vertices, found {}",
                rest.len()
            ),
        ));
    }
    let mut g = Graph::new(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if (rest[k / 6] - 63) >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    if k % 6 != 0 && (rest[k / 6] - 63) & ((1 << (6 - k % 6)) - 1) != 0 {
        return Err(err(at(pos + k / 6), "nonzero padding bits"));
    }
    Ok(g)
}
