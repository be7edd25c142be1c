//! graph6 and edge-list encodings.

use super::Graph;
use crate::error::{Error, Result};

/// Largest order expressible with the four-byte graph6 header.
const GRAPH6_MAX_ORDER: usize = 258_047;

impl Graph {
    /// Decodes a graph6 string. An optional `>>graph6<<` header and
    /// surrounding whitespace are accepted.
    pub fn from_graph6(text: &str) -> Result<Graph> {
        let text = text.trim();
        let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
        let bytes = text.as_bytes();
        if bytes.is_empty() {
            return Err(Error::Graph6("empty input".into()));
        }
        if let Some((i, &b)) = bytes.iter().enumerate().find(|(_, &b)| !(63..=126).contains(&b)) {
            return Err(Error::Graph6(format!("invalid character {:?} at offset {i}", b as char)));
        }
        let (n, body) = if bytes[0] != 126 {
            (usize::from(bytes[0] - 63), &bytes[1..])
        } else if bytes.len() >= 2 && bytes[1] == 126 {
            return Err(Error::Graph6(format!(
                "eight-byte order header unsupported (orders above {GRAPH6_MAX_ORDER})"
            )));
        } else if bytes.len() < 4 {
            return Err(Error::Graph6("truncated order header".into()));
        } else {
            let n = bytes[1..4]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | usize::from(b - 63));
            (n, &bytes[4..])
        };
        let bits = n * n.saturating_sub(1) / 2;
        let expected = bits.div_ceil(6);
        if body.len() != expected {
            return Err(Error::Graph6(format!(
                "order {n} needs {expected} data bytes, found {}",
                body.len()
            )));
        }
        let mut edges = Vec::new();
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                let byte = body[k / 6] - 63;
                if byte >> (5 - k % 6) & 1 == 1 {
                    edges.push((i, j));
                }
                k += 1;
            }
        }
        Ok(Graph::from_edges_unchecked(n, edges))
    }

    /// Encodes as graph6 (no header). Orders above 258047 are rejected.
    pub fn to_graph6(&self) -> Result<String> {
        let n = self.order();
        let mut out = Vec::new();
        if n <= 62 {
            out.push(n as u8 + 63);
        } else if n <= GRAPH6_MAX_ORDER {
            out.push(126);
            out.extend((0..3).rev().map(|s| ((n >> (6 * s)) & 63) as u8 + 63));
        } else {
            return Err(Error::Graph6(format!("order {n} exceeds {GRAPH6_MAX_ORDER}")));
        }
        let mut acc = 0u8;
        let mut filled = 0;
        for j in 1..n {
            for i in 0..j {
                acc = (acc << 1) | u8::from(self.has_edge(i, j));
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

    /// Parses the edge-list format: a first line holding `n`, then one
    /// `u v` pair per line. Blank lines and `#` comments are ignored;
    /// self-loops and duplicate edges are errors.
    pub fn from_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let err = |line, msg: String| Error::EdgeList { line, msg };
        let (first, header) = lines.next().ok_or_else(|| err(0, "missing vertex count".into()))?;
        let n: usize = header
            .parse()
            .map_err(|_| err(first, format!("expected vertex count, found {header:?}")))?;
        let mut g = Graph::empty(n);
        for (line, body) in lines {
            let fields: Vec<&str> = body.split_whitespace().collect();
            let [u, v] = fields[..] else {
                return Err(err(line, format!("expected two labels, found {}", fields.len())));
            };
            let parse = |s: &str| s.parse::<usize>().map_err(|_| err(line, format!("bad label {s:?}")));
            let (u, v) = (parse(u)?, parse(v)?);
            if u >= n || v >= n {
                return Err(err(line, Error::VertexOutOfRange { vertex: u.max(v), order: n }.to_string()));
            }
            if u == v {
                return Err(err(line, Error::SelfLoop(u).to_string()));
            }
            if g.has_edge(u, v) {
                return Err(err(line, Error::DuplicateEdge(u.min(v), u.max(v)).to_string()));
            }
            for (a, b) in [(u, v), (v, u)] {
                let list = &mut g.adj[a];
                let pos = list.binary_search(&b).unwrap_err();
                list.insert(pos, b);
            }
        }
        Ok(g)
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{}\n", self.order());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}
