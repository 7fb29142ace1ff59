use std::fmt::Write;

use crate::latfca::FiniteLattice;
use crate::magma::FiniteGroupoid;
use crate::relcore::{classify, FiniteRelationSpace};

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn digraph(name: &str, nodes: &[String], edges: &[(usize, usize)], bottom_up: bool) -> String {
    let mut out = format!("digraph {} {{\n", quote(name));
    if bottom_up {
        out.push_str("  rankdir=BT;\n");
    }
    for node in nodes {
        let _ = writeln!(out, "  {};", quote(node));
    }
    for &(a, b) in edges {
        let _ = writeln!(out, "  {} -> {};", quote(&nodes[a]), quote(&nodes[b]));
    }
    out.push_str("}\n");
    out
}

/// Every pair of the relation, loops included, in index order.
pub fn export_space(space: &FiniteRelationSpace) -> String {
    let edges: Vec<(usize, usize)> = space.pairs().collect();
    digraph("R", space.labels(), &edges, false)
}

/// The induced relation `ab = b`; Hasse edges when it is a partial order.
pub fn export_groupoid_order(g: &FiniteGroupoid) -> String {
    let r = g.induced_relation();
    let profile = classify(&r);
    let hasse = profile.is_partial_order();
    let edges: Vec<(usize, usize)> = r
        .pairs()
        .filter(|&(a, b)| {
            a != b
                && !(hasse
                    && r.successors(a)
                        .iter()
                        .any(|c| c != a && c != b && r.related(c, b)))
        })
        .collect();
    digraph("order", r.labels(), &edges, hasse)
}

/// Hasse diagram, nodes named by their sets.
pub fn export_lattice(space: &FiniteRelationSpace, l: &FiniteLattice) -> String {
    let nodes: Vec<String> = l.elements().iter().map(|&s| space.show(s)).collect();
    digraph("lattice", &nodes, &l.covers(), true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::approx::OperatorId;
    use crate::fixtures;
    use crate::latfca::image_lattice;
    use crate::magma::{directoid_from_poset, Canonical};

    #[test]
    fn space_edges() {
        let dot = export_space(&fixtures::ex1());
        assert!(dot.contains("  \"e\" -> \"f\";\n"));
        assert_eq!(dot.matches("->").count(), 13);
        assert_eq!(dot, export_space(&fixtures::ex1()));
    }

    #[test]
    fn boolean_square_hasse() {
        let id2 = fixtures::id(2);
        let dot = export_lattice(&id2, &image_lattice(&id2, OperatorId::TriUp).unwrap());
        assert_eq!(dot.matches(" -> ").count(), 4);
        assert_eq!(
            dot.lines()
                .filter(|l| l.ends_with(';') && !l.contains("->") && !l.contains('='))
                .count(),
            4
        );
    }

    #[test]
    fn chain_directoid_order_is_a_path() {
        let g = directoid_from_poset(&fixtures::ch3(), &Canonical).unwrap();
        let dot = export_groupoid_order(&g);
        assert!(dot.contains("\"1\" -> \"2\""));
        assert!(dot.contains("\"2\" -> \"3\""));
        assert!(!dot.contains("\"1\" -> \"3\""));
    }
}
