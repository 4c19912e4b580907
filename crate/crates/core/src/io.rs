//! Plain-text edge lists.
//!
//! One edge per line, `u v` or `u v w`, whitespace separated. Blank lines and
//! lines starting with `#` are skipped. The node count is `max id + 1`,
//! unless a `# nodes: N` comment asks for more (this is how isolated
//! trailing nodes survive a round trip).

use std::io::BufRead;

use crate::{Error, Graph, NodeId, Result};

/// Parses an edge list held in memory.
pub fn load_edge_list(text: &str) -> Result<Graph> {
    read_edge_list(text.as_bytes())
}

/// Parses an edge list from any buffered reader.
pub fn read_edge_list<R: BufRead>(reader: R) -> Result<Graph> {
    let mut edges: Vec<(NodeId, NodeId, f64)> = Vec::new();
    let mut node_count = 0usize;
    for (index, line) in reader.lines().enumerate() {
        let line_no = index + 1;
        let line = line.map_err(|e| Error::Parse {
            line: line_no,
            message: e.to_string(),
        })?;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(comment) = trimmed.strip_prefix('#') {
            if let Some(n) = comment.trim().strip_prefix("nodes:") {
                let n: usize = n.trim().parse().map_err(|_| Error::Parse {
                    line: line_no,
                    message: format!("bad node count directive {trimmed:?}"),
                })?;
                node_count = node_count.max(n);
            }
            continue;
        }
        let fields: Vec<&str> = trimmed.split_whitespace().collect();
        if fields.len() != 2 && fields.len() != 3 {
            return Err(Error::Parse {
                line: line_no,
                message: format!("expected `u v` or `u v w`, got {} fields", fields.len()),
            });
        }
        let node = |s: &str| {
            s.parse::<NodeId>().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("bad node id {s:?}"),
            })
        };
        let (u, v) = (node(fields[0])?, node(fields[1])?);
        let weight = match fields.get(2) {
            Some(s) => s.parse::<f64>().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("bad weight {s:?}"),
            })?,
            None => 1.0,
        };
        if !(weight > 0.0 && weight.is_finite()) {
            return Err(Error::InvalidGraph(format!(
                "line {line_no}: weight must be positive, got {weight}"
            )));
        }
        node_count = node_count.max(u.max(v) + 1);
        edges.push((u, v, weight));
    }
    Graph::new(node_count, edges)
}

/// Writes `g` in the format [`load_edge_list`] reads. Unit weights are
/// omitted; other weights use the shortest representation that parses back
/// to the same `f64`.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("# nodes: {}\n", g.node_count());
    for e in g.edges() {
        if e.weight == 1.0 {
            out.push_str(&format!("{} {}\n", e.u, e.v));
        } else {
            out.push_str(&format!("{} {} {}\n", e.u, e.v, e.weight));
        }
    }
    out
}
