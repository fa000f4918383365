//! Query AST and its debug printer.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::rdf::{render_iri, render_literal, render_term, Term};

/// One position of a triple pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PatternTerm {
    Var(String),
    Constant(Term),
}

impl PatternTerm {
    pub fn as_var(&self) -> Option<&str> {
        match self {
            PatternTerm::Var(name) => Some(name),
            PatternTerm::Constant(_) => None,
        }
    }
}

/// A basic graph pattern line. Any position may be a variable, including
/// the predicate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriplePattern {
    pub subject: PatternTerm,
    pub predicate: PatternTerm,
    pub object: PatternTerm,
}

impl TriplePattern {
    pub fn positions(&self) -> [&PatternTerm; 3] {
        [&self.subject, &self.predicate, &self.object]
    }
}

/// `SELECT *` or an explicit variable list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Projection {
    All,
    Vars(Vec<String>),
}

/// The three supported filter comparisons.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FilterOp {
    /// Term equality against a constant.
    Eq(Term),
    /// Term inequality against a constant.
    Ne(Term),
    /// Substring test over the bound term's string value.
    Contains(String),
}

/// One `FILTER(...)` clause, applied after the join.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Filter {
    pub var: String,
    pub op: FilterOp,
}

/// A parsed, validated query. Invariant (enforced by the parser): every
/// selected, filtered, or ordering variable appears in some pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Query {
    /// Declared prefixes, kept for printing; pattern IRIs are already
    /// absolute.
    pub prefixes: BTreeMap<String, String>,
    pub projection: Projection,
    pub patterns: Vec<TriplePattern>,
    pub filters: Vec<Filter>,
    pub order_by: Option<String>,
    pub limit: Option<usize>,
}

impl Query {
    /// Variables in first-appearance order (subject, predicate, object
    /// within each pattern). This is the `SELECT *` header order.
    pub fn pattern_variables(&self) -> Vec<String> {
        let mut vars = Vec::new();
        for pattern in &self.patterns {
            for position in pattern.positions() {
                if let Some(name) = position.as_var() {
                    if !vars.iter().any(|v| v == name) {
                        vars.push(name.to_owned());
                    }
                }
            }
        }
        vars
    }

    /// Prints the query back to parseable text. IRIs are emitted in full
    /// `<...>` form, so the output does not depend on the prefixes actually
    /// being used; declared prefixes are reprinted for fidelity.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (prefix, base) in &self.prefixes {
            let _ = writeln!(out, "PREFIX {prefix}: <{base}>");
        }
        match &self.projection {
            Projection::All => out.push_str("SELECT *\n"),
            Projection::Vars(vars) => {
                out.push_str("SELECT");
                for var in vars {
                    let _ = write!(out, " ?{var}");
                }
                out.push('\n');
            }
        }
        out.push_str("WHERE {\n");
        for pattern in &self.patterns {
            let _ = writeln!(
                out,
                "  {} {} {} .",
                print_pattern_term(&pattern.subject),
                print_pattern_term(&pattern.predicate),
                print_pattern_term(&pattern.object),
            );
        }
        for filter in &self.filters {
            let clause = match &filter.op {
                FilterOp::Eq(term) => format!("?{} = {}", filter.var, render_term(term)),
                FilterOp::Ne(term) => format!("?{} != {}", filter.var, render_term(term)),
                FilterOp::Contains(text) => format!(
                    "CONTAINS(?{}, {})",
                    filter.var,
                    render_literal(&crate::rdf::Literal::string(text))
                ),
            };
            let _ = writeln!(out, "  FILTER({clause})");
        }
        out.push_str("}\n");
        if let Some(var) = &self.order_by {
            let _ = writeln!(out, "ORDER BY ?{var}");
        }
        if let Some(limit) = self.limit {
            let _ = writeln!(out, "LIMIT {limit}");
        }
        out
    }
}

fn print_pattern_term(term: &PatternTerm) -> String {
    match term {
        PatternTerm::Var(name) => format!("?{name}"),
        PatternTerm::Constant(Term::Iri(iri)) => render_iri(iri),
        PatternTerm::Constant(Term::Literal(lit)) => render_literal(lit),
    }
}
