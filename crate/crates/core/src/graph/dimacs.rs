//! The `p edge` text format.
//!
//! ```text
//! c optional comment lines
//! p edge <n> <m>
//! e <u> <v>
//! ```

use std::fmt::Write;

use super::{Graph, Vertex};
use crate::error::{Error, Result};

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    let err = |line: usize, msg: &str| Error::Parse {
        line,
        msg: msg.to_string(),
    };

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields[0] {
            "p" => {
                if header.is_some() {
                    return Err(err(line_no, "duplicate header"));
                }
                if fields.len() != 4 || fields[1] != "edge" {
                    return Err(err(line_no, "malformed header, expected `p edge <n> <m>`"));
                }
                let n = fields[2].parse().map_err(|_| err(line_no, "malformed vertex count"))?;
                let m = fields[3].parse().map_err(|_| err(line_no, "malformed edge count"))?;
                header = Some((n, m));
            }
            "e" => {
                let (n, _) = header.ok_or_else(|| err(line_no, "edge before header"))?;
                if fields.len() != 3 {
                    return Err(err(line_no, "malformed edge, expected `e <u> <v>`"));
                }
                let u: Vertex = fields[1].parse().map_err(|_| err(line_no, "malformed endpoint"))?;
                let v: Vertex = fields[2].parse().map_err(|_| err(line_no, "malformed endpoint"))?;
                for w in [u, v] {
                    if w == 0 || w > n {
                        return Err(err(line_no, &format!("endpoint {w} out of range 1..={n}")));
                    }
                }
                edges.push((u, v));
            }
            other => return Err(err(line_no, &format!("unknown line type `{other}`"))),
        }
    }

    let (n, m) = header.ok_or_else(|| err(0, "missing header"))?;
    if edges.len() != m {
        return Err(err(0, &format!("header declares {m} edges, found {}", edges.len())));
    }
    Graph::from_edge_list(n, &edges)
}

/// Canonical form: header, then edges with ascending endpoints in
/// lexicographic order.
pub fn serialize_graph(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        writeln!(out, "e {u} {v}").unwrap();
    }
    out
}
