//! The two shipped use-case queries, prebuilt as ASTs.

use std::collections::BTreeMap;

use crate::rdf::{Iri, Term};
use crate::vocab::Namespaces;

use super::ast::{PatternTerm, Projection, Query, TriplePattern};

fn var(name: &str) -> PatternTerm {
    PatternTerm::Var(name.to_owned())
}

fn constant(iri: Iri) -> PatternTerm {
    PatternTerm::Constant(Term::Iri(iri))
}

fn pattern(subject: PatternTerm, predicate: Iri, object: PatternTerm) -> TriplePattern {
    TriplePattern {
        subject,
        predicate: constant(predicate),
        object,
    }
}

/// Use case 1: all CVEs linked to a service through its components.
///
/// `service hasComponent ?c . ?c componentImpactedByCVE ?cve . ?cve cveId
/// ?id`, selecting `?c ?cve ?id`.
pub fn cves_for_service(service: &Iri, ns: &Namespaces) -> Query {
    Query {
        prefixes: BTreeMap::new(),
        projection: Projection::Vars(vec!["c".to_owned(), "cve".to_owned(), "id".to_owned()]),
        patterns: vec![
            pattern(
                constant(service.clone()),
                ns.schema_term("hasComponent"),
                var("c"),
            ),
            pattern(var("c"), ns.schema_term("componentImpactedByCVE"), var("cve")),
            pattern(var("cve"), ns.schema_term("cveId"), var("id")),
        ],
        filters: vec![],
        order_by: None,
        limit: None,
    }
}

/// Use case 2: CVEs grouped by their CWE, realized as ordering by CWE id.
///
/// `?cve hasWeakness ?cwe . ?cwe cweId ?wid . ?cve cveId ?id`, selecting
/// `?wid ?id` ordered by `?wid`.
pub fn cves_by_cwe(ns: &Namespaces) -> Query {
    Query {
        prefixes: BTreeMap::new(),
        projection: Projection::Vars(vec!["wid".to_owned(), "id".to_owned()]),
        patterns: vec![
            pattern(var("cve"), ns.schema_term("hasWeakness"), var("cwe")),
            pattern(var("cwe"), ns.schema_term("cweId"), var("wid")),
            pattern(var("cve"), ns.schema_term("cveId"), var("id")),
        ],
        filters: vec![],
        order_by: Some("wid".to_owned()),
        limit: None,
    }
}
