//! graph6 encoding.
//!
//! The order is written as one byte `n + 63` for `n <= 62`, otherwise as
//! `~` followed by three 6-bit bytes. The upper triangle is read column by
//! column (`(0,1), (0,2), (1,2), (0,3), ...`), packed into 6-bit groups
//! most significant bit first and padded with zeros, each group offset by 63.

use crate::bits::bit;
use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + (n * (n - 1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(b'~');
        out.push(((n >> 12) & 63) as u8 + 63);
        out.push(((n >> 6) & 63) as u8 + 63);
        out.push((n & 63) as u8 + 63);
    }
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        let col = g.nbrs(j);
        for i in 0..j {
            acc = (acc << 1) | ((col >> i) & 1) as u8;
            k += 1;
            if k == 6 {
                out.push(acc + 63);
                acc = 0;
                k = 0;
            }
        }
    }
    if k > 0 {
        out.push((acc << (6 - k)) + 63);
    }
    // every byte lies in 63..=126
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

pub fn decode(s: &str) -> Result<Graph> {
    let s = s.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Parse("empty graph6 string".into()));
    }
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(Error::Parse(format!("byte {b:#04x} is not a graph6 character")));
        }
    }
    let (n, body) = if bytes[0] == b'~' {
        if bytes.get(1) == Some(&b'~') {
            return Err(Error::Capacity(format!("graph6 orders above {MAX_ORDER} are not supported")));
        }
        if bytes.len() < 4 {
            return Err(Error::Parse("truncated graph6 order".into()));
        }
        let n = bytes[1..4].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, &bytes[4..])
    } else {
        ((bytes[0] - 63) as usize, &bytes[1..])
    };
    if n == 0 {
        return Err(Error::Parse("graph6 order 0".into()));
    }
    if n > MAX_ORDER {
        return Err(Error::Capacity(format!("order {n} exceeds the {MAX_ORDER}-vertex limit")));
    }
    let pairs = n * (n - 1) / 2;
    let need = pairs.div_ceil(6);
    if body.len() != need {
        return Err(Error::Parse(format!(
            "graph6 body has {} bytes, expected {need} for order {n}",
            body.len()
        )));
    }
    let mut rows = vec![0u64; n];
    let mut idx = 0;
    'outer: for j in 1..n {
        for i in 0..j {
            let byte = body[idx / 6] - 63;
            if (byte >> (5 - idx % 6)) & 1 == 1 {
                rows[i] |= bit(j);
                rows[j] |= bit(i);
            }
            idx += 1;
            if idx == pairs {
                break 'outer;
            }
        }
    }
    if pairs % 6 != 0 {
        let pad = body[need - 1] - 63;
        if pad & ((1u8 << (6 - pairs % 6)) - 1) != 0 {
            return Err(Error::Parse("nonzero padding bits in graph6 string".into()));
        }
    }
    Graph::from_rows(&rows)
}

/// Decodes a file with one graph6 string per line, skipping blank lines.
pub fn decode_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(decode)
        .collect()
}
