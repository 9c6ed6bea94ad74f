//! graph6 and edge-list text formats.
//!
//! graph6 here covers orders up to 62: one byte `n + 63`, then the upper
//! triangle column by column, `(0,1), (0,2), (1,2), (0,3), ...`, six bits per
//! byte, most significant first, each byte offset by 63 and the tail padded
//! with zeros.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const GRAPH6_CAP: usize = 62;

pub fn write_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > GRAPH6_CAP {
        return Err(Error::TooLarge {
            what: "graph6",
            n,
            cap: GRAPH6_CAP,
        });
    }
    let mut out = String::with_capacity(1 + (n * n / 2).div_ceil(6));
    out.push((n as u8 + 63) as char);
    let (mut acc, mut k) = (0u8, 0);
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            k += 1;
            if k == 6 {
                out.push((acc + 63) as char);
                (acc, k) = (0, 0);
            }
        }
    }
    if k > 0 {
        out.push(((acc << (6 - k)) + 63) as char);
    }
    Ok(out)
}

pub fn parse_graph6(line: &str) -> Result<Graph> {
    let bytes = line.trim_end_matches(['\n', '\r']).as_bytes();
    let bad = |msg: String| Error::MalformedGraph6(msg);
    let (&head, body) = bytes.split_first().ok_or_else(|| bad("empty line".into()))?;
    if !(63..=125).contains(&head) {
        return Err(bad(format!("order byte {head} outside 63..=125")));
    }
    let n = (head - 63) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    if body.len() != bits.div_ceil(6) {
        return Err(bad(format!(
            "expected {} data bytes for order {n}, found {}",
            bits.div_ceil(6),
            body.len()
        )));
    }
    if let Some(&b) = body.iter().find(|b| !(63..=126).contains(*b)) {
        return Err(bad(format!("byte {b} outside 63..=126")));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edge_list(n, edges).map_err(|e| bad(e.to_string()))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SourceFormat {
    Graph6,
    EdgeList,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GraphDocument {
    pub graph: Graph,
    pub source_format: SourceFormat,
    pub label: Option<String>,
}

/// Parses `n <count>` followed by one `u v` pair per line. Blank lines and
/// `#` comments are skipped.
pub fn parse_edge_list(text: &str) -> Result<GraphDocument> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap().trim()))
        .filter(|(_, l)| !l.is_empty());
    let malformed = |line, msg: &str| Error::MalformedLine {
        line,
        msg: msg.to_string(),
    };
    let (line, header) = lines.next().ok_or_else(|| malformed(1, "missing `n <count>` header"))?;
    let n = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["n", count] => count
            .parse::<usize>()
            .map_err(|_| malformed(line, "vertex count is not a number"))?,
        _ => return Err(malformed(line, "expected `n <count>`")),
    };
    let mut edges = Vec::new();
    for (line, l) in lines {
        let nums: Vec<usize> = l
            .split_whitespace()
            .map(str::parse)
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| malformed(line, "expected two vertex indices"))?;
        match nums[..] {
            [u, v] => edges.push((u, v)),
            _ => return Err(malformed(line, "expected two vertex indices")),
        }
    }
    Ok(GraphDocument {
        graph: Graph::from_edge_list(n, edges)?,
        source_format: SourceFormat::EdgeList,
        label: None,
    })
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.order());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// One graph6 document per non-blank line.
pub fn parse_graph6_stream(text: &str) -> Result<Vec<GraphDocument>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(|l| {
            Ok(GraphDocument {
                graph: parse_graph6(l)?,
                source_format: SourceFormat::Graph6,
                label: Some(l.to_string()),
            })
        })
        .collect()
}
