//! DOT export for visual inspection, with optional highlighting of a cycle
//! or path.

use std::collections::BTreeSet;
use std::fmt::Write;

use crate::graph::{Graph, VertexSequence};

/// Renders the graph as DOT text. When `highlight` is given, its edges are
/// drawn bold red and its vertices filled.
pub fn to_dot(g: &Graph, highlight: Option<&VertexSequence>) -> String {
    let mut marked_edges: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut marked_vertices: BTreeSet<usize> = BTreeSet::new();
    if let Some(seq) = highlight {
        marked_vertices = seq.vertex_set();
        for pair in seq.vertices.windows(2) {
            let (a, b) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
            marked_edges.insert((a, b));
        }
        if seq.closed && seq.len() >= 2 {
            let first = seq.vertices[0];
            let last = *seq.vertices.last().unwrap();
            marked_edges.insert((first.min(last), first.max(last)));
        }
    }

    let mut out = String::from("graph {\n");
    for v in g.vertices() {
        if marked_vertices.contains(&v) {
            let _ = writeln!(out, "  {v} [style=filled, fillcolor=lightgray];");
        } else {
            let _ = writeln!(out, "  {v};");
        }
    }
    for (u, v) in g.edges() {
        if marked_edges.contains(&(u, v)) {
            let _ = writeln!(out, "  {u} -- {v} [color=red, penwidth=2];");
        } else {
            let _ = writeln!(out, "  {u} -- {v};");
        }
    }
    out.push_str("}\n");
    out
}
