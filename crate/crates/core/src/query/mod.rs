//! A small SPARQL subset over [`Graph`](crate::rdf::Graph).
//!
//! The subset covers basic graph patterns, three FILTER forms (`=`, `!=`,
//! `CONTAINS`), `ORDER BY` on one variable, and `LIMIT`. That is enough to
//! express the two shipped use cases (CVEs per service, CVEs grouped by
//! CWE) while staying simple enough to verify against a brute-force oracle.
//!
//! Pipeline: [`parse_query`] (or [`parse_query_with_prefixes`]) builds a
//! validated [`Query`]; [`evaluate`] joins its patterns over a graph and
//! returns a [`ResultTable`] with deterministic row order.

mod ast;
mod canned;
mod eval;
mod parse;

pub use ast::{Filter, FilterOp, PatternTerm, Projection, Query, TriplePattern};
pub use canned::{cves_by_cwe, cves_for_service};
pub use eval::{evaluate, ResultTable};
pub use parse::{parse_query, parse_query_with_prefixes, QueryError};
