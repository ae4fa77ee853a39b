//! The exact text interchange format for graphs: a version header line
//! followed by a JSON body with the ring header `d`, vertex count, charge
//! array and upper-triangle entries as `[x, y]` pairs (absent edges as
//! null). `s` is derived from `d`, never stored.

use super::{GraphError, LGraph};
use crate::quadint::{ring_make, QuadInt};
use serde::{Deserialize, Serialize};
use std::io::{BufReader, Read, Write};

pub(crate) const GRAPH_FORMAT: &str = "lgraph/1";

#[derive(Serialize, Deserialize)]
struct GraphBody {
    d: i64,
    n: usize,
    charges: Vec<i64>,
    upper: Vec<Vec<Option<(i64, i64)>>>,
}

/// Serializes a graph to the versioned text format.
pub fn write_graph_string(g: &LGraph) -> String {
    let n = g.n();
    let mut upper = Vec::with_capacity(n.saturating_sub(1));
    for i in 0..n {
        let mut row = Vec::new();
        for j in (i + 1)..n {
            let e = g.upper_entry(i, j);
            row.push(if e.is_zero() { None } else { Some((e.x, e.y)) });
        }
        if i + 1 < n {
            upper.push(row);
        }
    }
    let body = GraphBody { d: g.ring().d, n, charges: g.charges().to_vec(), upper };
    format!("{}\n{}\n", GRAPH_FORMAT, serde_json::to_string(&body).expect("serialize"))
}

pub fn write_graph<W: Write>(g: &LGraph, w: &mut W) -> std::io::Result<()> {
    w.write_all(write_graph_string(g).as_bytes())
}

/// Parses the versioned text format.
pub fn read_graph_str(text: &str) -> Result<LGraph, GraphError> {
    let mut lines = text.lines();
    let header = lines.next().ok_or_else(|| GraphError::Parse("empty input".into()))?;
    if header.trim() != GRAPH_FORMAT {
        return Err(GraphError::Parse(format!(
            "unsupported format header {header:?}, expected {GRAPH_FORMAT:?}"
        )));
    }
    let body_text: String = lines.collect::<Vec<_>>().join("\n");
    let body: GraphBody =
        serde_json::from_str(&body_text).map_err(|e| GraphError::Parse(e.to_string()))?;
    let ring = ring_make(body.d).map_err(|e| GraphError::Parse(e.to_string()))?;
    if body.charges.len() != body.n {
        return Err(GraphError::LengthMismatch { expected: body.n, got: body.charges.len() });
    }
    let mut edges = Vec::new();
    for (i, row) in body.upper.iter().enumerate() {
        if row.len() != body.n - i - 1 {
            return Err(GraphError::LengthMismatch { expected: body.n - i - 1, got: row.len() });
        }
        for (off, cell) in row.iter().enumerate() {
            if let Some((x, y)) = cell {
                let j = i + 1 + off;
                let q = QuadInt::new(ring, *x, *y).map_err(|e| GraphError::Parse(e.to_string()))?;
                edges.push((i, j, q));
            }
        }
    }
    LGraph::new(ring, body.charges, &edges)
}

pub fn read_graph<R: Read>(r: &mut R) -> Result<LGraph, GraphError> {
    let mut buf = String::new();
    BufReader::new(r)
        .read_to_string(&mut buf)
        .map_err(|e| GraphError::Parse(e.to_string()))?;
    read_graph_str(&buf)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadint::ring_make;

    #[test]
    fn round_trip_preserves_canonical_key() {
        let r = ring_make(-7).unwrap();
        let w = QuadInt::new(r, 1, 1).unwrap();
        let g = LGraph::new(r, vec![1, 0, -1], &[(0, 1, w), (1, 2, r.integer(-1))]).unwrap();
        let text = write_graph_string(&g);
        let h = read_graph_str(&text).unwrap();
        assert_eq!(g, h);
        assert_eq!(g.canonical_key(), h.canonical_key());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(read_graph_str("").is_err());
        assert!(read_graph_str("wrong/9\n{}").is_err());
        // parity-violating label for d = -7
        let bad = "lgraph/1\n{\"d\":-7,\"n\":2,\"charges\":[0,0],\"upper\":[[[1,0]]]}";
        assert!(read_graph_str(bad).is_err());
        // non-squarefree ring
        let bad = "lgraph/1\n{\"d\":-4,\"n\":1,\"charges\":[0],\"upper\":[]}";
        assert!(read_graph_str(bad).is_err());
    }
}
