//! Graphviz output.

use symlab_core::graph::Label;
use symlab_core::{Error, Graph, Result};

/// Larger graphs are not drawn.
pub const DOT_VERTEX_LIMIT: usize = 500;

fn label_text(l: &Label) -> String {
    match l {
        Label::Vertex(v) => v.to_string(),
        Label::Edge(u, v) => format!("{u}-{v}"),
        Label::Set(s) => {
            let items: Vec<String> = s.iter().map(u32::to_string).collect();
            format!("{{{}}}", items.join(","))
        }
    }
}

pub fn to_dot(g: &Graph, name: &str) -> Result<String> {
    if g.order() > DOT_VERTEX_LIMIT {
        return Err(Error::CapExceeded(format!(
            "DOT output is limited to {DOT_VERTEX_LIMIT} vertices, graph has {}",
            g.order()
        )));
    }
    let id: String = name.chars().map(|c| if c.is_ascii_alphanumeric() { c } else { '_' }).collect();
    let mut out = format!("graph {id} {{\n");
    if let Some(labels) = g.labels() {
        for (v, l) in labels.iter().enumerate() {
            out.push_str(&format!("  {v} [label=\"{}\"];\n", label_text(l)));
        }
    } else {
        for v in 0..g.order() {
            out.push_str(&format!("  {v};\n"));
        }
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use symlab_core::graph::families;

    #[test]
    fn small_graph() {
        let dot = to_dot(&families::cycle(3), "C3").unwrap();
        assert_eq!(dot, "graph C3 {\n  0;\n  1;\n  2;\n  0 -- 1;\n  0 -- 2;\n  1 -- 2;\n}\n");
    }

    #[test]
    fn limit() {
        assert!(to_dot(&families::cycle(500), "c").is_ok());
        assert!(matches!(to_dot(&families::cycle(501), "c"), Err(Error::CapExceeded(_))));
    }
}
