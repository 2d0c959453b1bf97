//! Tile and graph files: JSON objects with a fixed key order.
//!
//! ```text
//! {"vertices":3,"edges":[[0,1],[1,2]],"A":[0],"B":[2]}
//! {"vertices":4,"edges":[[0,1],[1,2]],"internal":[true,false]}
//! ```
//!
//! The canonical form is exactly what [`tile_to_string`] and
//! [`graph_to_string`] write: one line, no spaces, trailing newline.

use std::fmt;

use serde::{Deserialize, Serialize};
use tilecross::multigraph::MultiGraph;
use tilecross::tile::Tile;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "line {}, column {}: {}",
            self.line, self.column, self.message
        )
    }
}

impl std::error::Error for ParseError {}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TileFile {
    vertices: usize,
    edges: Vec<(usize, usize)>,
    #[serde(rename = "A")]
    a: Vec<usize>,
    #[serde(rename = "B")]
    b: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphFile {
    vertices: usize,
    edges: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    internal: Option<Vec<bool>>,
}

/// A graph with optional internal/external labels, as read from a file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelledGraph {
    pub graph: MultiGraph,
    pub internal: Option<Vec<bool>>,
}

fn json_error(e: serde_json::Error) -> ParseError {
    ParseError {
        line: e.line(),
        column: e.column(),
        message: e
            .to_string()
            .split(" at line")
            .next()
            .unwrap_or_default()
            .to_string(),
    }
}

/// Line and column (1-based) of element `index` of the array under `key`,
/// or of the key itself when `index` is `None`. Falls back to 1:1.
fn locate(text: &str, key: &str, index: Option<usize>) -> (usize, usize) {
    let needle = format!("\"{key}\"");
    let Some(start) = text.find(&needle) else {
        return (1, 1);
    };
    let mut pos = start;
    if let Some(index) = index {
        let bytes = text.as_bytes();
        let Some(open) = text[start..].find('[').map(|o| start + o) else {
            return line_col(text, start);
        };
        let (mut depth, mut count) = (0usize, 0usize);
        pos = open + 1;
        let mut i = open;
        while i < bytes.len() {
            match bytes[i] {
                b'[' => depth += 1,
                b']' => {
                    depth -= 1;
                    if depth == 0 {
                        break;
                    }
                }
                b',' if depth == 1 => {
                    count += 1;
                    if count == index {
                        pos = i + 1;
                        break;
                    }
                }
                _ => {}
            }
            i += 1;
        }
        while pos < bytes.len() && bytes[pos].is_ascii_whitespace() {
            pos += 1;
        }
    }
    line_col(text, pos)
}

fn line_col(text: &str, pos: usize) -> (usize, usize) {
    let before = &text[..pos];
    let line = before.matches('\n').count() + 1;
    let column = before.len() - before.rfind('\n').map_or(0, |i| i + 1) + 1;
    (line, column)
}

fn at(text: &str, key: &str, index: Option<usize>, message: String) -> ParseError {
    let (line, column) = locate(text, key, index);
    ParseError {
        line,
        column,
        message,
    }
}

fn check_edges(
    text: &str,
    vertices: usize,
    edges: &[(usize, usize)],
) -> Result<MultiGraph, ParseError> {
    for (i, &(u, v)) in edges.iter().enumerate() {
        if u >= vertices || v >= vertices {
            return Err(at(
                text,
                "edges",
                Some(i),
                format!("edges[{i}] = [{u}, {v}] has an endpoint outside 0..{vertices}"),
            ));
        }
    }
    Ok(MultiGraph::from_edges(vertices, edges.iter().copied()).expect("endpoints checked"))
}

pub fn parse_tile(text: &str) -> Result<Tile, ParseError> {
    let f: TileFile = serde_json::from_str(text).map_err(json_error)?;
    let graph = check_edges(text, f.vertices, &f.edges)?;
    for (key, seq) in [("A", &f.a), ("B", &f.b)] {
        if let Some(i) = seq.iter().position(|&x| x >= f.vertices) {
            return Err(at(
                text,
                key,
                Some(i),
                format!(
                    "{key}[{i}] = {} is not a vertex (vertices: {})",
                    seq[i], f.vertices
                ),
            ));
        }
    }
    if f.a.len() != f.b.len() {
        return Err(at(
            text,
            "B",
            None,
            format!("A has {} entries but B has {}", f.a.len(), f.b.len()),
        ));
    }
    Ok(Tile::new(graph, f.a, f.b).expect("tile checked"))
}

pub fn parse_graph(text: &str) -> Result<LabelledGraph, ParseError> {
    let f: GraphFile = serde_json::from_str(text).map_err(json_error)?;
    let graph = check_edges(text, f.vertices, &f.edges)?;
    if let Some(labels) = &f.internal {
        if labels.len() != f.edges.len() {
            return Err(at(
                text,
                "internal",
                None,
                format!("{} labels for {} edges", labels.len(), f.edges.len()),
            ));
        }
    }
    Ok(LabelledGraph {
        graph,
        internal: f.internal,
    })
}

pub fn tile_value(t: &Tile) -> serde_json::Value {
    serde_json::to_value(TileFile {
        vertices: t.graph().vertex_count(),
        edges: t.graph().edges().to_vec(),
        a: t.a().to_vec(),
        b: t.b().to_vec(),
    })
    .expect("plain data")
}

pub fn tile_to_string(t: &Tile) -> String {
    let f = TileFile {
        vertices: t.graph().vertex_count(),
        edges: t.graph().edges().to_vec(),
        a: t.a().to_vec(),
        b: t.b().to_vec(),
    };
    serde_json::to_string(&f).expect("plain data") + "\n"
}

pub fn graph_to_string(g: &MultiGraph, internal: Option<&[bool]>) -> String {
    let f = GraphFile {
        vertices: g.vertex_count(),
        edges: g.edges().to_vec(),
        internal: internal.map(<[bool]>::to_vec),
    };
    serde_json::to_string(&f).expect("plain data") + "\n"
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_tile() {
        let text = "{\"vertices\":1,\"edges\":[],\"A\":[0],\"B\":[0]}\n";
        let t = parse_tile(text).unwrap();
        assert_eq!((t.width(), t.graph().vertex_count()), (1, 1));
        assert_eq!(tile_to_string(&t), text);
    }

    #[test]
    fn out_of_range_boundary_names_the_index() {
        let text =
            "{\n  \"vertices\": 2,\n  \"edges\": [[0, 1]],\n  \"A\": [0, 5],\n  \"B\": [1, 1]\n}";
        let e = parse_tile(text).unwrap_err();
        assert!(e.message.contains("A[1] = 5"), "{e}");
        assert_eq!((e.line, e.column), (4, 12));
    }

    #[test]
    fn edge_endpoint_equal_to_vertex_count() {
        let text = "{\"vertices\":2,\"edges\":[[0,1],[1,2]],\"A\":[0],\"B\":[1]}";
        let e = parse_tile(text).unwrap_err();
        assert!(e.message.contains("edges[1]"), "{e}");
        assert_eq!((e.line, e.column), (1, 30));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let e = parse_graph("{\"vertices\":2,\n\"edges\":[[0,1]],\"oops\":1}").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(parse_tile("{\"vertices\":1,\"edges\":[],\"A\":[0]}").is_err());
    }

    #[test]
    fn labelled_graph_round_trip() {
        let text = "{\"vertices\":2,\"edges\":[[0,1],[0,1]],\"internal\":[true,false]}\n";
        let g = parse_graph(text).unwrap();
        assert_eq!(graph_to_string(&g.graph, g.internal.as_deref()), text);
    }
}
