//! Knowledge graph toolkit for cloud service security analysis.
//!
//! The crate builds an RDF graph that connects a cloud provider's service
//! catalog (services, stack layers, software components) with published CVE
//! records, then answers questions like "which CVEs impact service X" over
//! that graph.
//!
//! Modules, bottom up:
//!
//! - [`rdf`]: IRI/literal/triple model, an indexed in-memory graph, and
//!   deterministic N-Triples and Graphviz DOT serialization.
//! - [`vocab`]: well-known vocabulary IRIs and the namespace policy used to
//!   mint schema terms and individuals.
//! - [`schema`]: the built-in cloud-stack + CVE ontology (classes, object
//!   properties, data properties) and an instance-data validator.
//! - [`catalog`]: declarative service catalog loaded from JSON and lowered to
//!   instance triples.
//! - [`cve`]: CVE Record Format 5.x JSON parsing and lowering to triples,
//!   plus batch directory ingestion.
//! - [`linker`]: exact-match linking of CVE product entries to catalog
//!   components, emitting `componentImpactedByCVE` edges.
//! - [`query`]: a small SPARQL-style SELECT engine with canned queries for
//!   the two standard use cases.

pub mod catalog;
pub mod cve;
pub mod linker;
pub mod query;
pub mod rdf;
pub mod schema;
pub mod vocab;

pub use rdf::{Graph, Iri, Literal, RdfError, Term, Triple};
pub use vocab::Namespaces;
