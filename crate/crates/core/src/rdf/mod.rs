//! RDF data model and storage.
//!
//! The model is deliberately narrow: subjects and predicates are always IRIs
//! (no blank nodes anywhere), and literal datatypes are restricted to
//! `xsd:string`, `xsd:decimal`, `xsd:dateTime`, `xsd:boolean`, and language
//! tagged strings. Everything downstream (serialization, validation, the
//! query engine) leans on those invariants.

mod dot;
mod graph;
mod ntriples;
mod term;

pub use dot::export_dot;
pub use graph::Graph;
pub use ntriples::{
    parse_ntriples, render_iri, render_literal, render_term, render_triple, serialize_ntriples,
    NtParseError,
};
pub use term::{Iri, Literal, RdfError, Term, Triple};
