//! File formats: `fatgraph/1` documents and DOT export.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::analysis::curve_of_dart;
use crate::fatgraph::{rev, FatGraph, GraphError, HalfEdge};

pub const FATGRAPH_FORMAT: &str = "fatgraph/1";

#[derive(Debug, Error)]
pub enum IoError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported format `{0}` (expected `{FATGRAPH_FORMAT}`)")]
    Format(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("names list has {got} entries but the graph has {want} edges")]
    Names { got: usize, want: usize },
}

/// A graph as vertex cycles of signed labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FatGraphFile {
    pub format: String,
    pub vertices: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
}

impl FatGraphFile {
    /// Vertices are written in an order that reading reproduces exactly.
    pub fn from_graph(g: &FatGraph) -> FatGraphFile {
        let g = normalized(g);
        Self::verbatim(&g)
    }

    fn verbatim(g: &FatGraph) -> FatGraphFile {
        FatGraphFile {
            format: FATGRAPH_FORMAT.to_string(),
            vertices: g
                .vertex_cycles()
                .iter()
                .map(|c| c.iter().map(HalfEdge::to_string).collect())
                .collect(),
            names: None,
        }
    }

    pub fn to_graph(&self) -> Result<FatGraph, IoError> {
        if self.format != FATGRAPH_FORMAT {
            return Err(IoError::Format(self.format.clone()));
        }
        let g = FatGraph::from_words(&self.vertices)?;
        match &self.names {
            None => Ok(g),
            Some(n) if n.len() != g.edge_count() => Err(IoError::Names {
                got: n.len(),
                want: g.edge_count(),
            }),
            Some(n) => Ok(g.with_names(n.clone())?),
        }
    }

    pub fn parse(text: &str) -> Result<FatGraphFile, IoError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes") + "\n"
    }
}

pub fn read_graph(text: &str) -> Result<FatGraph, IoError> {
    FatGraphFile::parse(text)?.to_graph()
}

pub fn write_graph(g: &FatGraph) -> String {
    FatGraphFile::from_graph(g).to_json()
}

/// The graph exactly as a reader of its own document would number it.
pub fn normalized(g: &FatGraph) -> FatGraph {
    let mut cur = g.clone();
    // renumbering by first appearance settles after a few rounds
    for _ in 0..64 {
        let file = FatGraphFile::verbatim(&cur);
        let next = file
            .to_graph()
            .expect("documents written from graphs read back");
        if FatGraphFile::verbatim(&next) == file {
            return next;
        }
        cur = next;
    }
    cur
}

const PALETTE: [&str; 10] = [
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf",
    "#bcbd22", "#7f7f7f",
];

/// Graphviz rendering. Each vertex is a record node whose ports `p0..`
/// follow the rotation; edges of one standard cycle share a color.
pub fn to_dot(g: &FatGraph) -> String {
    let vs = g.vertices();
    let vmap = g.vertex_map();
    let mut slot = vec![0; g.dart_count()];
    for v in &vs {
        for (i, &d) in v.iter().enumerate() {
            slot[d] = i;
        }
    }
    let curves = if g.is_decorated() {
        curve_of_dart(g).ok()
    } else {
        None
    };
    let mut out = String::from("graph fatgraph {\n  node [shape=record];\n");
    for (i, v) in vs.iter().enumerate() {
        let ports: Vec<String> = v
            .iter()
            .enumerate()
            .map(|(k, &d)| format!("<p{k}> {}", dot_escape(&g.half_edge(d).to_string())))
            .collect();
        let _ = writeln!(out, "  v{i} [label=\"{{v{i}|{{{}}}}}\"];", ports.join("|"));
    }
    for e in 0..g.edge_count() {
        let (a, b) = (2 * e, rev(2 * e));
        let mut attrs = format!("label=\"{}\"", dot_escape(g.edge_name(e)));
        if let Some(c) = &curves {
            let _ = write!(
                attrs,
                ", color=\"{}\", curve={}",
                PALETTE[c[a] % PALETTE.len()],
                c[a]
            );
        }
        let _ = writeln!(
            out,
            "  v{}:p{} -- v{}:p{} [{attrs}];",
            vmap[a], slot[a], vmap[b], slot[b]
        );
    }
    out.push_str("}\n");
    out
}

fn dot_escape(s: &str) -> String {
    s.chars()
        .flat_map(|c| match c {
            '"' | '{' | '}' | '|' | '<' | '>' | '\\' => vec!['\\', c],
            _ => vec![c],
        })
        .collect()
}
