//! Query evaluation: selectivity-ordered nested-loop joins over the graph
//! indexes, then filters, projection, dedup, ordering, and limit.
//!
//! The join order is an optimization only; the result set is defined by the
//! relational semantics and does not depend on pattern order. Output rows
//! are always fully ordered: by the `ORDER BY` key when present (ties and
//! the no-`ORDER BY` case fall back to the N-Triples rendering of the whole
//! row), so equal queries over equal graphs print identical bytes.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet};

use crate::rdf::{render_term, Graph, Iri, Term};

use super::ast::{FilterOp, PatternTerm, Projection, Query, TriplePattern};

/// A solved query: a header of variable names and rows of bound terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResultTable {
    pub header: Vec<String>,
    pub rows: Vec<Vec<Term>>,
}

type Bindings = BTreeMap<String, Term>;

/// Evaluates `query` against `graph`.
///
/// Requires the parser-enforced invariant that selected, filtered, and
/// ordering variables appear in some pattern; hand-built queries violating
/// it will panic at projection time.
pub fn evaluate(query: &Query, graph: &Graph) -> ResultTable {
    let mut solutions: Vec<Bindings> = vec![Bindings::new()];
    for index in plan(&query.patterns) {
        let pattern = &query.patterns[index];
        let mut next = Vec::new();
        for solution in &solutions {
            extend_solutions(graph, pattern, solution, &mut next);
        }
        solutions = next;
        if solutions.is_empty() {
            break;
        }
    }

    solutions.retain(|solution| {
        query.filters.iter().all(|filter| {
            let term = bound(solution, &filter.var);
            match &filter.op {
                FilterOp::Eq(constant) => term == constant,
                FilterOp::Ne(constant) => term != constant,
                FilterOp::Contains(needle) => term.string_value().contains(needle.as_str()),
            }
        })
    });

    let header = match &query.projection {
        Projection::All => query.pattern_variables(),
        Projection::Vars(vars) => vars.clone(),
    };

    // Dedup projected rows; when several solutions collapse into one row,
    // the row sorts by the smallest ORDER BY key among them.
    let mut distinct: BTreeMap<Vec<String>, (Option<String>, Vec<Term>)> = BTreeMap::new();
    for solution in &solutions {
        let row: Vec<Term> = header.iter().map(|v| bound(solution, v).clone()).collect();
        let rendered: Vec<String> = row.iter().map(render_term).collect();
        let key = query.order_by.as_ref().map(|v| render_term(bound(solution, v)));
        match distinct.entry(rendered) {
            Entry::Vacant(slot) => {
                slot.insert((key, row));
            }
            Entry::Occupied(mut slot) => {
                if key < slot.get().0 {
                    slot.get_mut().0 = key;
                }
            }
        }
    }

    let mut ordered: Vec<(Option<String>, Vec<String>, Vec<Term>)> = distinct
        .into_iter()
        .map(|(rendered, (key, row))| (key, rendered, row))
        .collect();
    ordered.sort();
    let mut rows: Vec<Vec<Term>> = ordered.into_iter().map(|(_, _, row)| row).collect();
    if let Some(limit) = query.limit {
        rows.truncate(limit);
    }
    ResultTable { header, rows }
}

fn bound<'a>(solution: &'a Bindings, var: &str) -> &'a Term {
    solution
        .get(var)
        .expect("query invariant: referenced variables are bound by some pattern")
}

/// Orders pattern indexes most-selective-first: grounded positions
/// (constants or already-joined variables) count toward selectivity, and
/// ties keep textual order.
fn plan(patterns: &[TriplePattern]) -> Vec<usize> {
    let mut remaining: Vec<usize> = (0..patterns.len()).collect();
    let mut joined_vars: BTreeSet<String> = BTreeSet::new();
    let mut order = Vec::with_capacity(patterns.len());
    while !remaining.is_empty() {
        let best = remaining
            .iter()
            .copied()
            .max_by_key(|&i| {
                let grounded = patterns[i]
                    .positions()
                    .iter()
                    .filter(|position| match position {
                        PatternTerm::Constant(_) => true,
                        PatternTerm::Var(name) => joined_vars.contains(name),
                    })
                    .count();
                // Prefer earlier patterns on ties: max_by_key keeps the
                // last maximum, so invert the index.
                (grounded, usize::MAX - i)
            })
            .expect("remaining is non-empty");
        remaining.retain(|&i| i != best);
        for position in patterns[best].positions() {
            if let Some(name) = position.as_var() {
                joined_vars.insert(name.to_owned());
            }
        }
        order.push(best);
    }
    order
}

/// Joins one pattern against one partial solution, pushing every extension
/// onto `out`.
fn extend_solutions(graph: &Graph, pattern: &TriplePattern, solution: &Bindings, out: &mut Vec<Bindings>) {
    // Resolve each position to a concrete lookup term where possible. A
    // subject or predicate that resolves to a literal can never match.
    let subject = match lookup_iri(&pattern.subject, solution) {
        Ok(subject) => subject,
        Err(NeverMatches) => return,
    };
    let predicate = match lookup_iri(&pattern.predicate, solution) {
        Ok(predicate) => predicate,
        Err(NeverMatches) => return,
    };
    let object: Option<Term> = match &pattern.object {
        PatternTerm::Constant(term) => Some(term.clone()),
        PatternTerm::Var(name) => solution.get(name).cloned(),
    };

    for triple in graph.matching(subject.as_ref(), predicate.as_ref(), object.as_ref()) {
        let mut extended = solution.clone();
        let parts = [
            (&pattern.subject, Term::Iri(triple.subject)),
            (&pattern.predicate, Term::Iri(triple.predicate)),
            (&pattern.object, triple.object),
        ];
        let mut consistent = true;
        for (position, value) in parts {
            if let PatternTerm::Var(name) = position {
                match extended.get(name) {
                    // Covers repeated variables within one pattern.
                    Some(existing) if *existing != value => {
                        consistent = false;
                        break;
                    }
                    Some(_) => {}
                    None => {
                        extended.insert(name.clone(), value);
                    }
                }
            }
        }
        if consistent {
            out.push(extended);
        }
    }
}

struct NeverMatches;

fn lookup_iri(position: &PatternTerm, solution: &Bindings) -> Result<Option<Iri>, NeverMatches> {
    let term = match position {
        PatternTerm::Constant(term) => Some(term),
        PatternTerm::Var(name) => solution.get(name),
    };
    match term {
        None => Ok(None),
        Some(Term::Iri(iri)) => Ok(Some(iri.clone())),
        Some(Term::Literal(_)) => Err(NeverMatches),
    }
}

impl ResultTable {
    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    /// Aligned text table: `?var` headers, a dashed rule, N-Triples cells.
    pub fn to_text(&self) -> String {
        let headers: Vec<String> = self.header.iter().map(|v| format!("?{v}")).collect();
        let rendered: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|row| row.iter().map(render_term).collect())
            .collect();
        let mut widths: Vec<usize> = headers.iter().map(String::len).collect();
        for row in &rendered {
            for (i, cell) in row.iter().enumerate() {
                widths[i] = widths[i].max(cell.len());
            }
        }
        let mut out = String::new();
        push_row(&mut out, &headers, &widths);
        let rule: Vec<String> = widths.iter().map(|w| "-".repeat(*w)).collect();
        push_row(&mut out, &rule, &widths);
        for row in &rendered {
            push_row(&mut out, row, &widths);
        }
        out
    }

    /// Tab-separated values with a bare-name header line. N-Triples
    /// escaping keeps tabs and newlines out of the cells.
    pub fn to_tsv(&self) -> String {
        let mut out = self.header.join("\t");
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(render_term).collect();
            out.push_str(&cells.join("\t"));
            out.push('\n');
        }
        out
    }

    /// Pretty JSON: an array of objects keyed by bare variable names, with
    /// N-Triples term renderings as values.
    pub fn to_json_rows(&self) -> String {
        let rows: Vec<serde_json::Value> = self
            .rows
            .iter()
            .map(|row| {
                let object: serde_json::Map<String, serde_json::Value> = self
                    .header
                    .iter()
                    .zip(row)
                    .map(|(var, term)| (var.clone(), render_term(term).into()))
                    .collect();
                serde_json::Value::Object(object)
            })
            .collect();
        serde_json::to_string_pretty(&rows).expect("rendered rows are serializable")
    }
}

fn push_row(out: &mut String, cells: &[String], widths: &[usize]) {
    for (i, cell) in cells.iter().enumerate() {
        if i > 0 {
            out.push_str("  ");
        }
        if i + 1 == cells.len() {
            out.push_str(cell);
        } else {
            out.push_str(&format!("{cell:<width$}", width = widths[i]));
        }
    }
    out.push('\n');
}
