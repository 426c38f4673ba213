//! Hasse diagrams in Graphviz DOT. Only cover edges are emitted, drawn
//! bottom to top.

use std::fmt::Write as _;

use crate::fca::ConceptLattice;
use crate::order::Lattice;

fn escape_record(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        if matches!(c, '{' | '}' | '|' | '<' | '>' | '"' | '\\') {
            out.push('\\');
        }
        out.push(c);
    }
    out
}

fn escape_quoted(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

fn header(out: &mut String, name: &str) {
    writeln!(out, "digraph \"{}\" {{", escape_quoted(name)).unwrap();
    out.push_str("  rankdir=BT;\n");
    out.push_str("  edge [arrowhead=none];\n");
}

fn edges(out: &mut String, l: &Lattice) {
    let mut covers = l.covers();
    covers.sort_unstable();
    for (a, b) in covers {
        writeln!(out, "  n{a} -> n{b};").unwrap();
    }
    out.push_str("}\n");
}

/// One node per element, labelled with the element's label.
pub fn lattice_dot(l: &Lattice, name: &str, highlight: &[usize]) -> String {
    let mut out = String::new();
    header(&mut out, name);
    out.push_str("  node [shape=box, style=rounded];\n");
    for i in 0..l.len() {
        let style = if highlight.contains(&i) { ", style=\"rounded,filled\", fillcolor=lightgrey" } else { "" };
        writeln!(out, "  n{i} [label=\"{}\"{style}];", escape_quoted(l.label(i))).unwrap();
    }
    edges(&mut out, l);
    out
}

/// Reduced labelling: each node is a record with the objects whose object
/// concept it is on top and the attributes whose attribute concept it is
/// below.
pub fn concept_lattice_dot(cl: &ConceptLattice, name: &str, highlight: &[usize]) -> String {
    let k = cl.context();
    let mut out = String::new();
    header(&mut out, name);
    out.push_str("  node [shape=record];\n");
    for i in 0..cl.len() {
        let objs: Vec<String> = cl.objects_at(i).iter().map(|&g| escape_record(&k.objects()[g])).collect();
        let attrs: Vec<String> = cl.attributes_at(i).iter().map(|&m| escape_record(&k.attributes()[m])).collect();
        let style = if highlight.contains(&i) { ", style=filled, fillcolor=lightgrey" } else { "" };
        writeln!(
            out,
            "  n{i} [label=\"{{{}|{}}}\"{style}];",
            objs.join("\\n"),
            attrs.join("\\n")
        )
        .unwrap();
    }
    edges(&mut out, cl.lattice());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::fca::{concept_lattice, standard_context};

    fn edge_count(dot: &str) -> usize {
        dot.lines().filter(|l| l.contains("->")).count()
    }

    #[test]
    fn m3_has_five_nodes_and_six_edges() {
        let dot = lattice_dot(&catalog::m3(), "m3", &[]);
        assert_eq!(dot.lines().filter(|l| l.contains("[label=")).count(), 5);
        assert_eq!(edge_count(&dot), 6);
    }

    #[test]
    fn only_cover_edges_for_a_chain() {
        assert_eq!(edge_count(&lattice_dot(&catalog::chain(5), "c", &[])), 4);
    }

    #[test]
    fn record_labels_put_objects_first() {
        let cl = concept_lattice(&standard_context(&catalog::m3()));
        let dot = concept_lattice_dot(&cl, "m3", &[0]);
        assert!(dot.contains("[label=\"{a|a}\""));
        assert!(dot.contains("fillcolor"));
    }

    #[test]
    fn several_labels_share_a_record_field() {
        let k = crate::fca::FormalContext::from_strs(&["g", "h"], &["m"], &["x", "x"]).unwrap();
        let dot = concept_lattice_dot(&concept_lattice(&k), "k", &[]);
        assert!(dot.contains("[label=\"{g\\nh|m}\"]"), "{dot}");
    }

    #[test]
    fn special_characters_are_escaped() {
        assert_eq!(escape_record("{a|b}"), "\\{a\\|b\\}");
    }
}
