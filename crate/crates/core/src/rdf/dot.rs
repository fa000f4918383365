//! Graphviz DOT export with optional neighborhood focus.

use std::collections::BTreeSet;

use super::graph::Graph;
use super::ntriples::render_term;
use super::term::{Iri, Term};

/// Exports a graph (or the neighborhood of `focus`) as a DOT digraph.
///
/// Nodes are subjects and objects; predicates appear as edge labels. With a
/// focus, the node set is every term within `radius` hops of it, ignoring
/// edge direction, and the exported edges are exactly the triples whose
/// endpoints both lie in that set. A focus term absent from the graph yields
/// an empty digraph with an explanatory comment.
///
/// Output is deterministic: nodes are numbered in N-Triples rendering order
/// and statement lists are sorted.
pub fn export_dot(graph: &Graph, focus: Option<&Iri>, radius: usize) -> String {
    let nodes: BTreeSet<Term> = match focus {
        None => {
            let mut all = BTreeSet::new();
            for triple in graph.iter() {
                all.insert(Term::Iri(triple.subject));
                all.insert(triple.object);
            }
            all
        }
        Some(focus) => {
            let focus_term = Term::Iri(focus.clone());
            if !graph.is_node(&focus_term) {
                return format!("digraph G {{\n  // focus not found: {focus}\n}}\n");
            }
            neighborhood(graph, focus_term, radius)
        }
    };

    let mut ordered: Vec<&Term> = nodes.iter().collect();
    ordered.sort_by_cached_key(|t| render_term(t));
    let index_of = |term: &Term| -> usize {
        ordered
            .iter()
            .position(|t| *t == term)
            .expect("edge endpoints are in the node set")
    };

    let mut out = String::from("digraph G {\n");
    for (i, term) in ordered.iter().enumerate() {
        let label = match term {
            Term::Iri(iri) => iri.local_name().to_string(),
            Term::Literal(lit) => lit.lexical_form().to_string(),
        };
        out.push_str(&format!("  n{i} [label=\"{}\"];\n", escape_dot(&label)));
    }

    let mut edges: Vec<(usize, usize, String)> = Vec::new();
    for triple in graph.iter() {
        let subject = Term::Iri(triple.subject.clone());
        if !nodes.contains(&subject) || !nodes.contains(&triple.object) {
            continue;
        }
        edges.push((
            index_of(&subject),
            index_of(&triple.object),
            triple.predicate.local_name().to_string(),
        ));
    }
    edges.sort();
    edges.dedup();
    for (from, to, label) in edges {
        out.push_str(&format!(
            "  n{from} -> n{to} [label=\"{}\"];\n",
            escape_dot(&label)
        ));
    }
    out.push_str("}\n");
    out
}

/// Terms within `radius` undirected hops of `start` (including `start`).
fn neighborhood(graph: &Graph, start: Term, radius: usize) -> BTreeSet<Term> {
    let mut visited: BTreeSet<Term> = BTreeSet::new();
    visited.insert(start.clone());
    let mut frontier = vec![start];
    for _ in 0..radius {
        let mut next = Vec::new();
        for term in frontier {
            if let Term::Iri(subject) = &term {
                for triple in graph.matching(Some(subject), None, None) {
                    if visited.insert(triple.object.clone()) {
                        next.push(triple.object);
                    }
                }
            }
            for triple in graph.matching(None, None, Some(&term)) {
                let neighbor = Term::Iri(triple.subject);
                if visited.insert(neighbor.clone()) {
                    next.push(neighbor);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    visited
}

fn escape_dot(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for c in text.chars() {
        match c {
            '\\' => out.push_str("\\\\"),
            '"' => out.push_str("\\\""),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c => out.push(c),
        }
    }
    out
}
