//! DOT export. Vertex names are the vertex indices.

use std::fmt::Write;

use mforge_core::Graph;

pub fn to_dot(g: &Graph) -> String {
    let mut s = String::from("graph G {\n");
    for v in 0..g.n() {
        writeln!(s, "  {v};").unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(s, "  {u} -- {v};").unwrap();
    }
    s.push_str("}\n");
    s
}
