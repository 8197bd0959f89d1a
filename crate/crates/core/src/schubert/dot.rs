//! Graphviz export. Output depends only on the input graph.

use std::fmt::Write;

use super::crystal::{Crystal, CrystalKind};
use super::gk::GkGraph;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

pub fn gk_to_dot(g: &GkGraph) -> String {
    let mut out = String::new();
    let title = format!("G_{} on {}", g.k(), g.diagram());
    writeln!(out, "digraph {} {{", quote(&title)).unwrap();
    for (i, node) in g.nodes().iter().enumerate() {
        let word: Vec<String> = node.word.iter().map(|s| format!("s{s}")).collect();
        let tip = if word.is_empty() { "id".to_string() } else { word.join(" ") };
        writeln!(out, "  n{i} [label={}, tooltip={}];", quote(&node.name), quote(&tip)).unwrap();
    }
    for &(a, b, l) in g.edges() {
        writeln!(out, "  n{a} -> n{b} [label=\"{l}\"];").unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn crystal_to_dot(c: &Crystal) -> String {
    let mut out = String::new();
    let title = match c.kind() {
        CrystalKind::TypeA { k, n } => format!("B(w_{k}) of A{}", n - 1),
        CrystalKind::Spin { n } => format!("B(w_{n}) of D{n}"),
    };
    writeln!(out, "digraph {} {{", quote(&title)).unwrap();
    for (i, el) in c.elements().iter().enumerate() {
        writeln!(out, "  n{i} [label={}];", quote(&el.to_string())).unwrap();
    }
    for &(a, b, l) in c.edges() {
        writeln!(out, "  n{a} -> n{b} [label=\"{l}\"];").unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schubert::{DynkinDiagram, DynkinType};

    fn count(dot: &str, pat: &str) -> usize {
        dot.lines().filter(|l| l.contains(pat)).count()
    }

    #[test]
    fn node_and_edge_counts() {
        let g = GkGraph::build(&DynkinDiagram::new(DynkinType::E, 6).unwrap(), 6).unwrap();
        let dot = gk_to_dot(&g);
        assert!(dot.starts_with("digraph \"G_6 on E6\" {\n") && dot.ends_with("}\n"));
        assert_eq!(count(&dot, "tooltip="), 7);
        assert_eq!(count(&dot, " -> "), 6);
        assert!(dot.contains("n0 [label=\"p_∅\", tooltip=\"id\"];"));
        let spin = crystal_to_dot(&Crystal::spin(4).unwrap());
        assert_eq!(count(&spin, "[label=\"+") + count(&spin, "[label=\"-"), 8);
        let a = crystal_to_dot(&Crystal::type_a(2, 6).unwrap());
        assert_eq!(count(&a, "[label=\"{"), 15);
        assert_eq!(a, crystal_to_dot(&Crystal::type_a(2, 6).unwrap()));
    }
}
